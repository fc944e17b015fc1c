//! Ground-truth counting: exhaustive enumeration and profile DP.

mod backtrack;
mod profile;

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::grid::Rect;

pub use backtrack::{
    collect_tilings, count_by_enumeration, count_by_enumeration_parallel, enumerate_tilings, first_tiling,
    for_each_tiling, random_tiling,
};
pub use profile::{count_domino_dp, count_faultfree_dp, count_tromino_dp};

/// Which tilings the enumerator reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    All,
    Faultfree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    AllTromino,
    FaultfreeTromino,
    AllDomino,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Enumerate,
    Dp,
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountKind::AllTromino => "all_tromino",
            CountKind::FaultfreeTromino => "faultfree_tromino",
            CountKind::AllDomino => "all_domino",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub rect: Rect,
    pub kind: CountKind,
    pub count: BigUint,
    pub method: Method,
}

#[derive(Serialize)]
struct CountDoc {
    rows: usize,
    cols: usize,
    kind: CountKind,
    method: Method,
    count: String,
}

impl CountResult {
    /// `{"rows":..,"cols":..,"kind":..,"method":..,"count":"<decimal>"}`
    pub fn to_json(&self) -> String {
        let doc = CountDoc {
            rows: self.rect.rows(),
            cols: self.rect.cols(),
            kind: self.kind,
            method: self.method,
            count: self.count.to_string(),
        };
        serde_json::to_string(&doc).expect("count documents always serialize")
    }
}

/// Counts tilings of `rect` of the given kind with the chosen engine.
pub fn count(rect: Rect, kind: CountKind, method: Method) -> CountResult {
    let count = match (kind, method) {
        (CountKind::AllTromino, Method::Dp) => count_tromino_dp(rect),
        (CountKind::FaultfreeTromino, Method::Dp) => count_faultfree_dp(rect),
        (CountKind::AllDomino, Method::Dp) => count_domino_dp(rect),
        (CountKind::AllTromino, Method::Enumerate) => count_by_enumeration_parallel(rect, Mode::All).into(),
        (CountKind::FaultfreeTromino, Method::Enumerate) => count_by_enumeration_parallel(rect, Mode::Faultfree).into(),
        (CountKind::AllDomino, Method::Enumerate) => count_dominoes_by_enumeration(rect).into(),
    };
    CountResult { rect, kind, count, method }
}

/// Brute-force domino count: cover the first empty cell with a horizontal or
/// a vertical domino.
pub fn count_dominoes_by_enumeration(rect: Rect) -> u64 {
    fn go(filled: &mut [bool], cols: usize, from: usize) -> u64 {
        let Some(i) = (from..filled.len()).find(|&i| !filled[i]) else {
            return 1;
        };
        let mut total = 0;
        if i % cols + 1 < cols && !filled[i + 1] {
            filled[i] = true;
            filled[i + 1] = true;
            total += go(filled, cols, i + 1);
            filled[i + 1] = false;
            filled[i] = false;
        }
        if i + cols < filled.len() {
            filled[i] = true;
            filled[i + cols] = true;
            total += go(filled, cols, i + 1);
            filled[i + cols] = false;
            filled[i] = false;
        }
        total
    }
    if rect.area() % 2 == 1 {
        return 0;
    }
    go(&mut vec![false; rect.area()], rect.cols(), 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_json_uses_decimal_strings() {
        let r = Rect::new(4, 12).unwrap();
        let res = count(r, CountKind::FaultfreeTromino, Method::Dp);
        assert_eq!(res.to_json(), r#"{"rows":4,"cols":12,"kind":"faultfree_tromino","method":"dp","count":"48"}"#);
    }

    #[test]
    fn brute_force_dominoes() {
        for (m, n, expected) in [(2, 2, 2), (2, 3, 3), (1, 2, 1), (3, 4, 11), (4, 4, 36), (3, 3, 0)] {
            let r = Rect::new(m, n).unwrap();
            assert_eq!(count_dominoes_by_enumeration(r), expected, "{r}");
            assert_eq!(count_domino_dp(r), BigUint::from(expected), "{r}");
        }
    }
}
