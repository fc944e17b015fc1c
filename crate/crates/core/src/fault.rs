//! Crossings, fault lines and crossing numbers.
//!
//! Grid lines are numbered from 1 at the top (horizontal) and left (vertical)
//! edges, so the internal line between rows `i` and `i + 1` is horizontal line
//! `i + 1`. Only internal lines are analyzed.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::enumeration::{enumerate_tilings, Mode};
use crate::grid::{Rect, Tiling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    Horizontal,
    Vertical,
}

impl Axis {
    fn tag(self) -> &'static str {
        match self {
            Axis::Horizontal => "h",
            Axis::Vertical => "v",
        }
    }
}

/// An internal grid line, numbered as described in the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridLine {
    pub axis: Axis,
    pub line: usize,
}

impl fmt::Display for GridLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.axis.tag(), self.line)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingProfile {
    /// `horizontal[i]`: pieces crossing the line between rows `i + 1` and `i + 2`.
    pub horizontal: Vec<usize>,
    /// `vertical[j]`: pieces crossing the line between columns `j + 1` and `j + 2`.
    pub vertical: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingNumbers {
    pub horizontal_cn: usize,
    pub vertical_cn: usize,
    pub critical_h_line: usize,
    pub critical_v_line: usize,
}

/// Every tromino spans exactly two rows and two columns, so it crosses
/// exactly one horizontal and one vertical internal line: the ones below and
/// right of its anchor.
pub fn crossing_profile(t: &Tiling) -> CrossingProfile {
    let rect = t.rect();
    let mut horizontal = vec![0; rect.rows() - 1];
    let mut vertical = vec![0; rect.cols() - 1];
    for p in t.pieces() {
        horizontal[p.anchor.row - 1] += 1;
        vertical[p.anchor.col - 1] += 1;
    }
    CrossingProfile { horizontal, vertical }
}

/// Internal lines crossed by no piece, horizontal lines first.
pub fn fault_lines(t: &Tiling) -> Vec<GridLine> {
    let profile = crossing_profile(t);
    let zeros = |v: &[usize], axis| {
        v.iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(move |(i, _)| GridLine { axis, line: i + 2 })
            .collect::<Vec<_>>()
    };
    let mut out = zeros(&profile.horizontal, Axis::Horizontal);
    out.extend(zeros(&profile.vertical, Axis::Vertical));
    out
}

pub fn is_faultfree(t: &Tiling) -> bool {
    let p = crossing_profile(t);
    p.horizontal.iter().chain(&p.vertical).all(|&c| c > 0)
}

fn min_with_line(v: &[usize]) -> (usize, usize) {
    // first minimum wins ties
    let (idx, &min) = v
        .iter()
        .enumerate()
        .min_by_key(|&(i, &c)| (c, i))
        .expect("a tileable rectangle has at least one internal line per axis");
    (min, idx + 2)
}

pub fn crossing_numbers(t: &Tiling) -> CrossingNumbers {
    let p = crossing_profile(t);
    let (horizontal_cn, critical_h_line) = min_with_line(&p.horizontal);
    let (vertical_cn, critical_v_line) = min_with_line(&p.vertical);
    CrossingNumbers { horizontal_cn, vertical_cn, critical_h_line, critical_v_line }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    /// min(horizontal_cn, vertical_cn)
    pub k: usize,
    /// Total crossings, 2mn/3.
    pub total: usize,
    /// 2mn/3 - k(m+n-2)
    pub slack: usize,
    /// 2mn/3 - (h_cn(m-1) + v_cn(n-1))
    pub axis_slack: usize,
}

/// Checks `k(m+n-2) <= 2mn/3` and its per-axis refinement for one tiling.
///
/// # Panics
/// If either inequality fails, which can only mean the crossing profile is wrong.
pub fn check_counting_inequality(t: &Tiling) -> InequalityReport {
    let rect = t.rect();
    let (m, n) = (rect.rows(), rect.cols());
    let cn = crossing_numbers(t);
    let total = 2 * m * n / 3;
    let k = cn.horizontal_cn.min(cn.vertical_cn);
    let rhs = k * (m + n - 2);
    let axis_rhs = cn.horizontal_cn * (m - 1) + cn.vertical_cn * (n - 1);
    assert!(rhs <= total, "counting inequality violated on {rect}: {rhs} > {total}");
    assert!(axis_rhs <= total, "per-axis inequality violated on {rect}: {axis_rhs} > {total}");
    InequalityReport { k, total, slack: total - rhs, axis_slack: total - axis_rhs }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("row count {0} is not a multiple of 3 (transpose first)")]
    RowsNotMultipleOfThree(usize),
    #[error("column count must be at least 2, got {0}")]
    TooFewColumns(usize),
}

/// Cap on either crossing number of a tiling of `R(3t, n)`:
/// `min(2t - 1, floor(2n/3))`.
pub fn max_crossing_bound(m: usize, n: usize) -> Result<usize, BoundError> {
    if m == 0 || m % 3 != 0 {
        return Err(BoundError::RowsNotMultipleOfThree(m));
    }
    if n < 2 {
        return Err(BoundError::TooFewColumns(n));
    }
    let t = m / 3;
    Ok((2 * t - 1).min(2 * n / 3))
}

/// Smallest crossing numbers seen over all faultfree tilings of a rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingSurvey {
    pub faultfree_tilings: u64,
    pub min_h_crossing_number: Option<usize>,
    pub min_v_crossing_number: Option<usize>,
}

pub fn survey_crossing_numbers(rect: Rect) -> CrossingSurvey {
    let mut min_h: Option<usize> = None;
    let mut min_v: Option<usize> = None;
    let n = enumerate_tilings(rect, Mode::Faultfree, |t| {
        let cn = crossing_numbers(t);
        min_h = Some(min_h.map_or(cn.horizontal_cn, |h| h.min(cn.horizontal_cn)));
        min_v = Some(min_v.map_or(cn.vertical_cn, |v| v.min(cn.vertical_cn)));
    });
    CrossingSurvey { faultfree_tilings: n, min_h_crossing_number: min_h, min_v_crossing_number: min_v }
}

#[derive(Serialize)]
struct AnalysisDoc<'a> {
    horizontal: &'a [usize],
    vertical: &'a [usize],
    fault_lines: Vec<(&'static str, usize)>,
    h_crossing_number: usize,
    v_crossing_number: usize,
}

/// The `analyze` document:
/// `{"horizontal":[..],"vertical":[..],"fault_lines":[["v",4]],"h_crossing_number":k1,"v_crossing_number":k2}`
pub fn analysis_json(t: &Tiling) -> String {
    let profile = crossing_profile(t);
    let cn = crossing_numbers(t);
    let doc = AnalysisDoc {
        horizontal: &profile.horizontal,
        vertical: &profile.vertical,
        fault_lines: fault_lines(t).iter().map(|l| (l.axis.tag(), l.line)).collect(),
        h_crossing_number: cn.horizontal_cn,
        v_crossing_number: cn.vertical_cn,
    };
    serde_json::to_string(&doc).expect("analysis documents always serialize")
}
