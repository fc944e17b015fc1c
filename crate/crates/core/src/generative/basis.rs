//! The basis catalog: one faultfree tiling of `R(i, j)` for `4 <= i <= 9` and
//! `j` in `{6, 9}`, the canonically first one in each case. The tilings are
//! embedded as data; a test regenerates them and compares bit for bit.

use std::collections::BTreeMap;

use super::basis_data::BASIS;
use super::search::complete;
use super::GenerativeError;
use crate::grid::{Cell, Corner, Rect, Tiling, Tromino};

pub const BASIS_ROWS: std::ops::RangeInclusive<usize> = 4..=9;
pub const BASIS_COLS: [usize; 2] = [6, 9];

pub fn basis_tiling(i: usize, j: usize) -> Result<Tiling, GenerativeError> {
    let (_, pieces) = BASIS
        .iter()
        .find(|((r, c), _)| (*r as usize, *c as usize) == (i, j))
        .ok_or(GenerativeError::NotInCatalog(i, j))?;
    let rect = Rect::new(i, j).expect("catalog sizes are positive");
    let pieces = pieces
        .iter()
        .map(|&(r, c, code)| {
            let corner = Corner::from_code(code).expect("catalog corner codes are 0..=3");
            Tromino::new(Cell::new(r as usize, c as usize), corner)
        })
        .collect();
    Ok(Tiling::from_sorted_unchecked(rect, pieces))
}

pub fn basis_catalog() -> BTreeMap<(usize, usize), Tiling> {
    BASIS
        .iter()
        .map(|((r, c), _)| {
            let (r, c) = (*r as usize, *c as usize);
            ((r, c), basis_tiling(r, c).expect("listed entry"))
        })
        .collect()
}

/// Which basis entry builds `R(m, n)` and whether the construction runs on
/// the transpose. Requires `3 | mn`.
///
/// The rectangle is transposed when `3` does not divide `n`, and also when
/// `m = 3 (mod 6)` and `n = 0 (mod 6)`, so `R(9, 6)` is never needed: the
/// construction uses eleven of the twelve catalog entries.
pub fn construction_basis(m: usize, n: usize) -> (bool, usize, usize) {
    let transposed = n % 3 != 0 || (m % 6 == 3 && n % 6 == 0);
    let (m, n) = if transposed { (n, m) } else { (m, n) };
    let i = (m - 4) % 6 + 4;
    let j = if n % 6 == 0 { 6 } else { 9 };
    (transposed, i, j)
}

/// Recomputes a catalog entry from scratch.
pub fn regenerate_basis(i: usize, j: usize) -> Option<Tiling> {
    let rect = Rect::new(i, j).ok()?;
    complete(rect, &[], &[]).map(|p| Tiling::from_sorted_unchecked(rect, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{count_faultfree_dp, first_tiling, Mode};
    use crate::fault::is_faultfree;
    use num_bigint::BigUint;

    #[test]
    fn catalog_has_every_pair_and_is_faultfree() {
        let catalog = basis_catalog();
        assert_eq!(catalog.len(), 12);
        for ((i, j), t) in &catalog {
            assert!(BASIS_ROWS.contains(i) && BASIS_COLS.contains(j));
            assert_eq!(Tiling::new(t.rect(), t.pieces().to_vec()).as_ref(), Ok(t));
            assert!(is_faultfree(t), "R({i},{j})");
        }
        assert_eq!(basis_tiling(3, 6), Err(GenerativeError::NotInCatalog(3, 6)));
    }

    #[test]
    fn catalog_regenerates_bit_exactly() {
        for (i, j) in basis_catalog().keys().copied() {
            assert_eq!(regenerate_basis(i, j).as_ref(), basis_tiling(i, j).as_ref().ok(), "R({i},{j})");
        }
    }

    #[test]
    fn small_entries_are_the_enumerators_first() {
        for (i, j) in [(4, 6), (5, 6), (6, 6), (4, 9), (5, 9)] {
            assert_eq!(first_tiling(Rect::new(i, j).unwrap(), Mode::Faultfree), basis_tiling(i, j).ok());
        }
        assert_eq!(count_faultfree_dp(Rect::new(4, 6).unwrap()), BigUint::from(2u32));
        assert_eq!(count_faultfree_dp(Rect::new(5, 9).unwrap()), BigUint::from(384u32));
    }

    #[test]
    fn eleven_entries_are_used() {
        let mut used = std::collections::BTreeSet::new();
        for m in 4..=40 {
            for n in 4..=40 {
                if (m * n) % 3 == 0 {
                    let (_, i, j) = construction_basis(m, n);
                    used.insert((i, j));
                }
            }
        }
        assert_eq!(used.len(), 11);
        assert!(!used.contains(&(9, 6)));
    }

    /// Prints the data module; run with `--ignored --nocapture` to refresh it.
    #[test]
    #[ignore]
    fn print_basis_data() {
        println!("//! Generated by `print_basis_data`; do not edit by hand.\n");
        println!("/// `((rows, cols), [(anchor row, anchor col, missing corner code)])`");
        println!("#[rustfmt::skip]");
        println!("pub(super) const BASIS: &[((u8, u8), &[(u8, u8, u8)])] = &[");
        for i in BASIS_ROWS {
            for j in BASIS_COLS {
                let t = regenerate_basis(i, j).expect("basis rectangles have faultfree tilings");
                let body: Vec<String> = t
                    .pieces()
                    .iter()
                    .map(|p| format!("({}, {}, {})", p.anchor.row, p.anchor.col, p.missing.code()))
                    .collect();
                println!("    (({i}, {j}), &[{}]),", body.join(", "));
            }
        }
        println!("];");
    }
}
