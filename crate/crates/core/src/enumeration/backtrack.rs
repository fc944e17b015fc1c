//! Exhaustive backtracking over tromino placements.
//!
//! The search always covers the first empty cell in row-major order and tries
//! the (at most four) placements covering it in canonical key order. Placed
//! pieces therefore come out already sorted, and tilings are produced in the
//! lexicographic order of their piece lists.

use std::collections::HashSet;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::grid::{Cell, Corner, Rect, Tiling, Tromino};

use super::Mode;

#[derive(Clone)]
pub(crate) struct Board {
    rect: Rect,
    filled: Vec<bool>,
    pieces: Vec<Tromino>,
    /// Crossings of the line below row `i + 1`.
    hcross: Vec<u32>,
    /// Crossings of the line right of column `j + 1`.
    vcross: Vec<u32>,
    mode: Mode,
}

/// A suspended search: board contents plus the scan position.
#[derive(Clone)]
struct Frame {
    board: Board,
    from: usize,
    checked_rows: usize,
}

impl Board {
    pub(crate) fn new(rect: Rect, mode: Mode) -> Self {
        Self {
            rect,
            filled: vec![false; rect.area()],
            pieces: Vec::with_capacity(rect.area() / 3),
            hcross: vec![0; rect.rows() - 1],
            vcross: vec![0; rect.cols() - 1],
            mode,
        }
    }

    /// Placements covering `cell` as their first row-major cell, in canonical order.
    fn candidates(&self, cell: Cell) -> impl Iterator<Item = Tromino> + '_ {
        let Cell { row, col } = cell;
        let tl = (col >= 2).then(|| Tromino::new(Cell::new(row, col - 1), Corner::TL));
        let rest = [Corner::TR, Corner::BL, Corner::BR].into_iter().map(move |c| Tromino::new(cell, c));
        tl.into_iter().chain(rest).filter(|p| self.can_place(*p))
    }

    fn can_place(&self, p: Tromino) -> bool {
        p.fits_in(self.rect) && p.cells().iter().all(|&c| !self.filled[self.rect.index(c)])
    }

    fn place(&mut self, p: Tromino) {
        for c in p.cells() {
            self.filled[self.rect.index(c)] = true;
        }
        self.hcross[p.anchor.row - 1] += 1;
        self.vcross[p.anchor.col - 1] += 1;
        self.pieces.push(p);
    }

    fn unplace(&mut self) {
        let p = self.pieces.pop().expect("unplace on empty board");
        for c in p.cells() {
            self.filled[self.rect.index(c)] = false;
        }
        self.hcross[p.anchor.row - 1] -= 1;
        self.vcross[p.anchor.col - 1] -= 1;
    }

    fn first_empty(&self, from: usize) -> Option<usize> {
        (from..self.filled.len()).find(|&i| !self.filled[i])
    }

    /// Once the scan reaches row `row` (0-based), every line above it is final.
    fn rows_ok(&self, checked: usize, row: usize) -> bool {
        self.mode == Mode::All || self.hcross[checked..row.min(self.hcross.len())].iter().all(|&h| h > 0)
    }

    fn complete_ok(&self) -> bool {
        self.mode == Mode::All || (self.hcross.iter().all(|&h| h > 0) && self.vcross.iter().all(|&v| v > 0))
    }

    fn dfs<F>(&mut self, from: usize, checked: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Board) -> ControlFlow<()>,
    {
        let Some(idx) = self.first_empty(from) else {
            return if self.complete_ok() { visit(self) } else { ControlFlow::Continue(()) };
        };
        let row = idx / self.rect.cols();
        if !self.rows_ok(checked, row) {
            return ControlFlow::Continue(());
        }
        let cell = self.rect.cell_at(idx);
        let options: Vec<Tromino> = self.candidates(cell).collect();
        for p in options {
            self.place(p);
            let flow = self.dfs(idx + 1, row, visit);
            self.unplace();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Collects suspended searches after `depth` placements (or completed boards).
    fn split(&mut self, from: usize, checked: usize, depth: usize, out: &mut Vec<Frame>) {
        if depth == 0 {
            out.push(Frame { board: self.clone(), from, checked_rows: checked });
            return;
        }
        let Some(idx) = self.first_empty(from) else {
            out.push(Frame { board: self.clone(), from, checked_rows: checked });
            return;
        };
        let row = idx / self.rect.cols();
        if !self.rows_ok(checked, row) {
            return;
        }
        let options: Vec<Tromino> = self.candidates(self.rect.cell_at(idx)).collect();
        for p in options {
            self.place(p);
            self.split(idx + 1, row, depth - 1, out);
            self.unplace();
        }
    }

    fn to_tiling(&self) -> Tiling {
        Tiling::from_sorted_unchecked(self.rect, self.pieces.clone())
    }

    /// Filled bits of the `n + 2` cells starting at `idx`; with `idx` the
    /// first empty cell these decide whether the rest can still be tiled.
    fn frontier(&self, idx: usize) -> (usize, u128) {
        let mut window = 0u128;
        for k in 0..(self.rect.cols() + 2).min(128) {
            if self.filled.get(idx + k).copied().unwrap_or(true) {
                window |= 1 << k;
            }
        }
        (idx, window)
    }

    /// With the scan on the second-to-last row, bottom-row cells left of the
    /// scan column can no longer be reached.
    fn stranded_below(&self, idx: usize) -> bool {
        let (m, n) = (self.rect.rows(), self.rect.cols());
        let (row, col) = (idx / n, idx % n);
        row + 2 == m && (0..col.saturating_sub(1)).any(|k| !self.filled[(m - 1) * n + k])
    }

    fn random_dfs<R: Rng>(&mut self, from: usize, rng: &mut R, dead: &mut HashSet<(usize, u128)>) -> bool {
        let Some(idx) = self.first_empty(from) else {
            return true;
        };
        let key = self.frontier(idx);
        if dead.contains(&key) || self.stranded_below(idx) {
            return false;
        }
        let mut options: Vec<Tromino> = self.candidates(self.rect.cell_at(idx)).collect();
        options.shuffle(rng);
        for p in options {
            self.place(p);
            if self.random_dfs(idx + 1, rng, dead) {
                return true;
            }
            self.unplace();
        }
        dead.insert(key);
        false
    }
}

/// Walks every tiling of `rect` accepted by `mode` in canonical order until
/// the visitor breaks. Returns the number of tilings visited.
pub fn for_each_tiling<F>(rect: Rect, mode: Mode, mut visitor: F) -> u64
where
    F: FnMut(&Tiling) -> ControlFlow<()>,
{
    if !rect.tromino_tileable() {
        return 0;
    }
    let mut board = Board::new(rect, mode);
    let mut visited = 0u64;
    let _ = board.dfs(0, 0, &mut |b: &Board| {
        visited += 1;
        visitor(&b.to_tiling())
    });
    visited
}

/// Invokes `visitor` once per tiling of `rect` (filtered by `mode`) in
/// canonical lexicographic order and returns how many were visited.
/// Rectangles whose area is not a multiple of 3 yield 0.
pub fn enumerate_tilings<F>(rect: Rect, mode: Mode, mut visitor: F) -> u64
where
    F: FnMut(&Tiling),
{
    for_each_tiling(rect, mode, |t| {
        visitor(t);
        ControlFlow::Continue(())
    })
}

pub fn collect_tilings(rect: Rect, mode: Mode) -> Vec<Tiling> {
    let mut out = Vec::new();
    enumerate_tilings(rect, mode, |t| out.push(t.clone()));
    out
}

/// The canonically first tiling accepted by `mode`, if any.
pub fn first_tiling(rect: Rect, mode: Mode) -> Option<Tiling> {
    let mut found = None;
    for_each_tiling(rect, mode, |t| {
        found = Some(t.clone());
        ControlFlow::Break(())
    });
    found
}

/// Sequential count without materializing tilings.
pub fn count_by_enumeration(rect: Rect, mode: Mode) -> u64 {
    if !rect.tromino_tileable() {
        return 0;
    }
    let mut board = Board::new(rect, mode);
    let mut n = 0u64;
    let _ = board.dfs(0, 0, &mut |_: &Board| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

/// Counts by exploring independent subtrees on the current rayon pool.
/// Always equals [`count_by_enumeration`].
pub fn count_by_enumeration_parallel(rect: Rect, mode: Mode) -> u64 {
    if !rect.tromino_tileable() {
        return 0;
    }
    let mut board = Board::new(rect, mode);
    let mut frames = Vec::new();
    let depth = (rect.area() / 3).min(6);
    board.split(0, 0, depth, &mut frames);
    frames
        .into_par_iter()
        .map(|mut f| {
            let mut n = 0u64;
            let _ = f.board.dfs(f.from, f.checked_rows, &mut |_: &Board| {
                n += 1;
                ControlFlow::Continue(())
            });
            n
        })
        .sum()
}

/// A random tiling of `rect`, found by depth-first search with shuffled
/// branch order. Not uniform over tilings.
pub fn random_tiling<R: Rng>(rect: Rect, rng: &mut R) -> Option<Tiling> {
    if !rect.tromino_tileable() {
        return None;
    }
    let mut board = Board::new(rect, Mode::All);
    if board.random_dfs(0, rng, &mut HashSet::new()) {
        let mut pieces = board.pieces;
        pieces.sort();
        Some(Tiling::from_sorted_unchecked(rect, pieces))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rect(m: usize, n: usize) -> Rect {
        Rect::new(m, n).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_by_enumeration(rect(2, 3), Mode::All), 2);
        assert_eq!(count_by_enumeration(rect(3, 3), Mode::All), 0);
        assert_eq!(count_by_enumeration(rect(3, 5), Mode::Faultfree), 0);
        assert_eq!(count_by_enumeration(rect(2, 6), Mode::All), 4);
        assert_eq!(count_by_enumeration(rect(4, 4), Mode::All), 0);
        assert_eq!(count_by_enumeration(rect(1, 3), Mode::All), 0);
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        let all = collect_tilings(rect(4, 6), Mode::All);
        assert_eq!(all.len(), 18);
        for w in all.windows(2) {
            assert!(w[0].pieces() < w[1].pieces());
        }
        for t in &all {
            assert_eq!(crate::grid::validate(t.rect(), t.pieces()), Ok(()));
        }
    }

    #[test]
    fn faultfree_filter_matches_post_filter() {
        let r = rect(5, 6);
        let all = collect_tilings(r, Mode::All);
        let ff = collect_tilings(r, Mode::Faultfree);
        let filtered: Vec<_> = all.into_iter().filter(crate::fault::is_faultfree).collect();
        assert_eq!(ff, filtered);
    }

    #[test]
    fn parallel_count_matches() {
        for (m, n) in [(4, 6), (5, 6), (6, 6), (3, 8)] {
            for mode in [Mode::All, Mode::Faultfree] {
                assert_eq!(count_by_enumeration(rect(m, n), mode), count_by_enumeration_parallel(rect(m, n), mode));
            }
        }
    }

    #[test]
    fn first_tiling_is_first_enumerated() {
        let r = rect(4, 9);
        let all = collect_tilings(r, Mode::Faultfree);
        assert_eq!(first_tiling(r, Mode::Faultfree).as_ref(), all.first());
    }

    #[test]
    fn random_tilings_are_valid() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for (m, n) in [(6, 10), (5, 12), (7, 6)] {
            let t = random_tiling(rect(m, n), &mut rng).unwrap();
            assert_eq!(t.pieces().len(), m * n / 3);
        }
        assert!(random_tiling(rect(3, 3), &mut rng).is_none());
    }
}
