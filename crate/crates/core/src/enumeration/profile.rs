//! Broken-profile dynamic programming.
//!
//! The rectangle is scanned lane by lane along its longer side; inside a lane
//! cells are visited one at a time. The profile is a bitmask over the current
//! cell and the next `width + 1` cells recording which are already covered by
//! pieces placed earlier. A piece is always placed from its first cell in scan
//! order, so it only ever reaches forward into the profile window.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::grid::Rect;

/// Cell offsets `(lane, pos)` of a piece relative to its first cell.
type Shape = &'static [(usize, isize)];

const TROMINOES: [Shape; 4] =
    [&[(0, 0), (0, 1), (1, 1)], &[(0, 0), (0, 1), (1, 0)], &[(0, 0), (1, 0), (1, 1)], &[(0, 0), (1, -1), (1, 0)]];

const DOMINOES: [Shape; 2] = [&[(0, 0), (0, 1)], &[(0, 0), (1, 0)]];

/// Search state between two cells of the scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct DpState {
    /// Bit `i` set when the cell `i` steps ahead of the scan is covered.
    profile: u64,
    /// Bit `p` set once some piece crosses the line between positions `p` and
    /// `p + 1` of a lane. Only tracked in faultfree mode.
    crossed: u64,
}

struct ProfileDp {
    width: usize,
    length: usize,
    shapes: &'static [Shape],
    faultfree: bool,
}

impl ProfileDp {
    fn for_rect(rect: Rect, shapes: &'static [Shape], faultfree: bool) -> Self {
        let width = rect.rows().min(rect.cols());
        let length = rect.rows().max(rect.cols());
        assert!(width + 2 <= 64, "profile too wide for a 64-bit mask");
        Self { width, length, shapes, faultfree }
    }

    fn run(&self) -> BigUint {
        let w = self.width;
        let all_crossed = (1u64 << (w - 1)) - 1;
        let mut layer: HashMap<DpState, BigUint> = HashMap::new();
        layer.insert(DpState { profile: 0, crossed: 0 }, BigUint::one());

        for lane in 0..self.length {
            for pos in 0..w {
                let mut next: HashMap<DpState, BigUint> = HashMap::with_capacity(layer.len());
                for (state, ways) in layer {
                    if state.profile & 1 == 1 {
                        let s = DpState { profile: state.profile >> 1, ..state };
                        *next.entry(s).or_default() += ways;
                        continue;
                    }
                    for shape in self.shapes {
                        if let Some(s) = self.place(state, shape, lane, pos) {
                            *next.entry(s).or_default() += &ways;
                        }
                    }
                }
                layer = next;
            }
            // Every piece placed from this lane reaches into the next one, so
            // the boundary was crossed exactly when the profile is non-empty.
            if self.faultfree && lane + 1 < self.length {
                layer.retain(|s, _| s.profile != 0);
            }
        }

        layer
            .into_iter()
            .filter(|(s, _)| s.profile == 0 && (!self.faultfree || s.crossed == all_crossed))
            .map(|(_, ways)| ways)
            .fold(BigUint::zero(), |acc, x| acc + x)
    }

    fn place(&self, state: DpState, shape: Shape, lane: usize, pos: usize) -> Option<DpState> {
        let w = self.width as isize;
        let mut profile = state.profile;
        let mut low = usize::MAX;
        for &(dl, dp) in shape {
            let p = pos as isize + dp;
            if lane + dl >= self.length || p < 0 || p >= w {
                return None;
            }
            let bit = 1u64 << (dl as isize * w + dp);
            if profile & bit != 0 {
                return None;
            }
            profile |= bit;
            low = low.min(p as usize);
        }
        let mut crossed = state.crossed;
        if self.faultfree {
            // A piece spanning positions low and low+1 crosses that line.
            crossed |= 1 << low;
        }
        Some(DpState { profile: profile >> 1, crossed })
    }
}

/// Number of tromino tilings of `rect`.
pub fn count_tromino_dp(rect: Rect) -> BigUint {
    if !rect.tromino_tileable() {
        return BigUint::zero();
    }
    ProfileDp::for_rect(rect, &TROMINOES, false).run()
}

/// Number of faultfree tromino tilings of `rect`.
pub fn count_faultfree_dp(rect: Rect) -> BigUint {
    if !rect.tromino_tileable() {
        return BigUint::zero();
    }
    ProfileDp::for_rect(rect, &TROMINOES, true).run()
}

/// Number of domino tilings of `rect`, for any parity of the sides.
pub fn count_domino_dp(rect: Rect) -> BigUint {
    if rect.area() % 2 == 1 {
        return BigUint::zero();
    }
    if rect.rows().min(rect.cols()) == 1 {
        return BigUint::one();
    }
    ProfileDp::for_rect(rect, &DOMINOES, false).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(m: usize, n: usize) -> Rect {
        Rect::new(m, n).unwrap()
    }

    #[test]
    fn tromino_counts() {
        assert_eq!(count_tromino_dp(r(2, 3)), BigUint::from(2u32));
        assert_eq!(count_tromino_dp(r(2, 9)), BigUint::from(8u32));
        assert_eq!(count_tromino_dp(r(1, 3)), BigUint::zero());
        assert_eq!(count_tromino_dp(r(3, 3)), BigUint::zero());
    }

    #[test]
    fn faultfree_counts() {
        assert_eq!(count_faultfree_dp(r(4, 6)), BigUint::from(2u32));
        assert_eq!(count_faultfree_dp(r(4, 12)), BigUint::from(48u32));
        assert_eq!(count_faultfree_dp(r(2, 3)), BigUint::from(2u32));
        assert_eq!(count_faultfree_dp(r(2, 6)), BigUint::zero());
        for n in 3..=12 {
            assert!(count_faultfree_dp(r(3, n)).is_zero(), "R(3,{n})");
        }
    }

    #[test]
    fn domino_counts() {
        assert_eq!(count_domino_dp(r(2, 2)), BigUint::from(2u32));
        assert_eq!(count_domino_dp(r(2, 3)), BigUint::from(3u32));
        assert_eq!(count_domino_dp(r(1, 2)), BigUint::one());
        assert_eq!(count_domino_dp(r(1, 3)), BigUint::zero());
        assert_eq!(count_domino_dp(r(3, 3)), BigUint::zero());
        assert_eq!(count_domino_dp(r(8, 8)), BigUint::from(12_988_816u32));
    }

    #[test]
    fn orientation_does_not_matter() {
        for (m, n) in [(4, 9), (5, 6), (2, 12), (6, 7)] {
            assert_eq!(count_tromino_dp(r(m, n)), count_tromino_dp(r(n, m)));
            assert_eq!(count_faultfree_dp(r(m, n)), count_faultfree_dp(r(n, m)));
            assert_eq!(count_domino_dp(r(m, n)), count_domino_dp(r(n, m)));
        }
    }
}
