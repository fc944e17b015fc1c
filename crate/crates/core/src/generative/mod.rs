//! Constructions: basis faultfree tilings, extension by six columns or rows,
//! faultfree tilings of every feasible rectangle, and faultfree tilings whose
//! crossing numbers are at most 2.

mod basis;
mod basis_data;
mod search;

use std::fmt;

use thiserror::Error;

use crate::fault::{crossing_numbers, is_faultfree, Axis, GridLine};
use crate::grid::{Rect, Tiling, Tromino};

pub use basis::{basis_catalog, basis_tiling, construction_basis, regenerate_basis, BASIS_COLS, BASIS_ROWS};
use search::{complete, LineTarget};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerativeError {
    #[error("R({0},{1}) is not in the basis catalog")]
    NotInCatalog(usize, usize),
    #[error("R({rows},{cols}): {reason}")]
    Unsupported { rows: usize, cols: usize, reason: &'static str },
    #[error("the tiling to extend is not faultfree")]
    NotFaultfree,
    #[error("seam window width {0} is outside 3..=5")]
    BadWindow(usize),
    #[error("no faultfree extension of R({rows},{cols}) on the {side} side (window {width})")]
    NoExtensionFound { rows: usize, cols: usize, side: Side, width: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    Top,
    Bottom,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Top => "top",
            Side::Bottom => "bottom",
        })
    }
}

/// Columns (or rows) next to the seam whose pieces are torn up and re-tiled
/// together with the six new ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeamWindow {
    pub width: usize,
    pub side: Side,
}

impl SeamWindow {
    pub const DEFAULT_WIDTH: usize = 4;
    pub const WIDEST: usize = 5;

    pub fn new(width: usize, side: Side) -> Result<Self, GenerativeError> {
        if !(3..=Self::WIDEST).contains(&width) {
            return Err(GenerativeError::BadWindow(width));
        }
        Ok(Self { width, side })
    }
}

/// Extends a faultfree tiling by six columns (left/right) or rows
/// (top/bottom), re-tiling the seam window, and returns the canonically first
/// faultfree result.
pub fn extend_six(t: &Tiling, window: SeamWindow) -> Result<Tiling, GenerativeError> {
    extend_with_targets(t, window, &[])
}

/// [`extend_six`] with the default window, widened once before giving up.
pub fn extend_six_auto(t: &Tiling, side: Side) -> Result<Tiling, GenerativeError> {
    extend_auto_with_targets(t, side, &[])
}

fn extend_auto_with_targets(t: &Tiling, side: Side, targets: &[LineTarget]) -> Result<Tiling, GenerativeError> {
    let narrow = SeamWindow::new(SeamWindow::DEFAULT_WIDTH, side)?;
    match extend_with_targets(t, narrow, targets) {
        Err(GenerativeError::NoExtensionFound { .. }) => {
            extend_with_targets(t, SeamWindow::new(SeamWindow::WIDEST, side)?, targets)
        }
        other => other,
    }
}

fn extend_with_targets(t: &Tiling, window: SeamWindow, targets: &[LineTarget]) -> Result<Tiling, GenerativeError> {
    SeamWindow::new(window.width, window.side)?;
    if !is_faultfree(t) {
        return Err(GenerativeError::NotFaultfree);
    }
    // Everything reduces to extending on the right.
    let transpose_line = |l: LineTarget| LineTarget {
        line: GridLine {
            axis: match l.line.axis {
                Axis::Horizontal => Axis::Vertical,
                Axis::Vertical => Axis::Horizontal,
            },
            line: l.line.line,
        },
        ..l
    };
    let rect = t.rect();
    let failure = |e: GenerativeError| match e {
        GenerativeError::NoExtensionFound { width, .. } => {
            GenerativeError::NoExtensionFound { rows: rect.rows(), cols: rect.cols(), side: window.side, width }
        }
        other => other,
    };
    match window.side {
        Side::Right => extend_right(t, window.width, targets),
        Side::Bottom => {
            let moved: Vec<_> = targets.iter().copied().map(transpose_line).collect();
            extend_right(&t.transpose(), window.width, &moved).map(|x| x.transpose()).map_err(failure)
        }
        Side::Left => {
            let moved = mirror_targets(targets, rect.cols() + 6, Axis::Vertical);
            extend_right(&t.mirror(), window.width, &moved).map(|x| x.mirror()).map_err(failure)
        }
        Side::Top => {
            let moved = mirror_targets(targets, rect.rows() + 6, Axis::Horizontal);
            let moved: Vec<_> = moved.into_iter().map(transpose_line).collect();
            extend_right(&t.flip().transpose(), window.width, &moved).map(|x| x.transpose().flip()).map_err(failure)
        }
    }
}

/// Targets are given in the coordinates of the extended rectangle; mirroring
/// along `axis` maps line `l` to `size + 2 - l`.
fn mirror_targets(targets: &[LineTarget], size: usize, axis: Axis) -> Vec<LineTarget> {
    targets
        .iter()
        .map(|&l| {
            if l.line.axis == axis {
                LineTarget { line: GridLine { axis, line: size + 2 - l.line.line }, ..l }
            } else {
                l
            }
        })
        .collect()
}

fn extend_right(t: &Tiling, width: usize, targets: &[LineTarget]) -> Result<Tiling, GenerativeError> {
    let rect = t.rect();
    let (m, n) = (rect.rows(), rect.cols());
    let fail = GenerativeError::NoExtensionFound { rows: m, cols: n, side: Side::Right, width };
    if m < 4 {
        return Err(GenerativeError::Unsupported { rows: m, cols: n, reason: "extension needs at least 4 rows" });
    }
    let seam = n.saturating_sub(width);
    let kept: Vec<Tromino> = t.pieces().iter().copied().filter(|p| p.cells().iter().all(|c| c.col <= seam)).collect();
    let grown = Rect::new(m, n + 6).expect("positive sides");
    let pieces = complete(grown, &kept, targets).ok_or(fail)?;
    Ok(Tiling::from_sorted_unchecked(grown, pieces))
}

fn unsupported(m: usize, n: usize, reason: &'static str) -> GenerativeError {
    GenerativeError::Unsupported { rows: m, cols: n, reason }
}

/// A faultfree tiling of `R(m, n)` for any `m, n >= 4` with `3 | mn`.
///
/// With `3 | n` (after transposing if needed), write `m = i + 6a` with
/// `4 <= i <= 9` and `n = j + 6b` with `j` in `{6, 9}`; start from the basis
/// tiling of `R(i, j)` and extend `a` times at the bottom and `b` times on the
/// right.
pub fn construct_faultfree(m: usize, n: usize) -> Result<Tiling, GenerativeError> {
    if m < 4 || n < 4 {
        return Err(unsupported(m, n, "both sides must be at least 4 (R(3,n) has no faultfree tiling)"));
    }
    if (m * n) % 3 != 0 {
        return Err(unsupported(m, n, "the area must be a multiple of 3"));
    }
    let (transposed, rows, cols) = construction_basis(m, n);
    let (mm, nn) = if transposed { (n, m) } else { (m, n) };
    let mut t = basis_tiling(rows, cols)?;
    for _ in 0..(mm - rows) / 6 {
        t = extend_six_auto(&t, Side::Bottom)?;
    }
    for _ in 0..(nn - cols) / 6 {
        t = extend_six_auto(&t, Side::Right)?;
    }
    let t = if transposed { t.transpose() } else { t };
    assert!(is_faultfree(&t), "construction produced a fault on R({m},{n})");
    Ok(t)
}

/// A faultfree tiling of `R(m, n)` (`m, n >= 10`, `3 | mn`) whose horizontal
/// and vertical crossing numbers are both at most 2.
///
/// Start from a faultfree `R(m - 6, n - 6)`, extend at the bottom so the old
/// bottom edge carries exactly two crossings, then on the right so the old
/// right edge does too while the first line keeps its two.
pub fn construct_min_crossing(m: usize, n: usize) -> Result<Tiling, GenerativeError> {
    if m < 10 || n < 10 {
        return Err(unsupported(m, n, "both sides must be at least 10"));
    }
    if (m * n) % 3 != 0 {
        return Err(unsupported(m, n, "the area must be a multiple of 3"));
    }
    let core = construct_faultfree(m - 6, n - 6)?;
    let h_line = LineTarget { line: GridLine { axis: Axis::Horizontal, line: m - 6 + 1 }, crossings: 2 };
    let v_line = LineTarget { line: GridLine { axis: Axis::Vertical, line: n - 6 + 1 }, crossings: 2 };
    let t = extend_auto_with_targets(&core, Side::Bottom, &[h_line])?;
    let t = extend_auto_with_targets(&t, Side::Right, &[h_line, v_line])?;
    let cn = crossing_numbers(&t);
    assert!(is_faultfree(&t) && cn.horizontal_cn <= 2 && cn.vertical_cn <= 2);
    Ok(t)
}
