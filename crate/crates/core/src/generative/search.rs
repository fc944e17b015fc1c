//! Completion search: tile the cells of a rectangle not covered by a set of
//! fixed pieces so that the whole tiling is faultfree, optionally with an
//! exact crossing count on chosen lines.
//!
//! The scan is the enumerator's (first empty cell, row-major, candidates in
//! canonical order), so the first completion found is the canonically first
//! one. Failed subtrees are remembered by the part of the state that decides
//! their future, which keeps the search polynomial on the narrow regions the
//! extension step produces.

use std::collections::HashSet;

use crate::fault::{Axis, GridLine};
use crate::grid::{Cell, Corner, Rect, Tromino};

/// A required total crossing count on one internal line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct LineTarget {
    pub line: GridLine,
    pub crossings: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Key {
    pos: u32,
    window: u128,
    uncrossed_v: u64,
    row_line: u8,
    v_targets: [u8; 2],
}

const CAP: u32 = 3;

struct Search<'a> {
    rect: Rect,
    filled: Vec<bool>,
    /// Total crossings (fixed and placed) per horizontal / vertical line.
    h: Vec<u32>,
    v: Vec<u32>,
    /// Target per horizontal line index, if any.
    h_target: Vec<Option<u32>>,
    v_targets: &'a [(usize, u32)],
    placed: Vec<Tromino>,
    dead: HashSet<Key>,
}

/// Canonically first completion of `fixed` to a faultfree tiling of `rect`
/// meeting every target, as the full piece list in canonical order.
pub(crate) fn complete(rect: Rect, fixed: &[Tromino], targets: &[LineTarget]) -> Option<Vec<Tromino>> {
    let (m, n) = (rect.rows(), rect.cols());
    assert!(n + 2 <= 128 && n <= 65, "rectangle too wide for the search state");
    let mut filled = vec![false; rect.area()];
    let mut h = vec![0; m - 1];
    let mut v = vec![0; n - 1];
    for p in fixed {
        for c in p.cells() {
            let i = rect.index(c);
            assert!(!filled[i], "fixed pieces overlap at {c}");
            filled[i] = true;
        }
        h[p.anchor.row - 1] += 1;
        v[p.anchor.col - 1] += 1;
    }
    let mut h_target = vec![None; m - 1];
    let mut v_targets = Vec::new();
    for t in targets {
        match t.line.axis {
            Axis::Horizontal => h_target[t.line.line - 2] = Some(t.crossings),
            Axis::Vertical => v_targets.push((t.line.line - 2, t.crossings)),
        }
    }
    assert!(v_targets.len() <= 2, "at most two vertical targets are supported");
    let mut s =
        Search { rect, filled, h, v, h_target, v_targets: &v_targets, placed: Vec::new(), dead: HashSet::new() };
    let start = s.first_empty(0);
    if !s.lines_ok(0, start.map_or(m, |i| i / n)) {
        return None;
    }
    if s.dfs(start) {
        let mut pieces: Vec<Tromino> = fixed.iter().copied().chain(s.placed).collect();
        pieces.sort();
        Some(pieces)
    } else {
        None
    }
}

impl Search<'_> {
    fn first_empty(&self, from: usize) -> Option<usize> {
        (from..self.filled.len()).find(|&i| !self.filled[i])
    }

    fn h_ok(&self, line: usize) -> bool {
        let c = self.h[line];
        c > 0 && self.h_target[line].is_none_or(|t| t == c)
    }

    /// Horizontal lines below rows `from..to` (0-based) are final.
    fn lines_ok(&self, from: usize, to: usize) -> bool {
        (from..to.min(self.h.len())).all(|i| self.h_ok(i))
    }

    fn complete_ok(&self) -> bool {
        self.v.iter().all(|&c| c > 0) && self.v_targets.iter().all(|&(j, t)| self.v[j] == t)
    }

    fn key(&self, pos: usize) -> Key {
        let n = self.rect.cols();
        let mut window = 0u128;
        for k in 0..(n + 2) {
            if self.filled.get(pos + k).copied().unwrap_or(true) {
                window |= 1 << k;
            }
        }
        let mut uncrossed_v = 0u64;
        for (j, &c) in self.v.iter().enumerate() {
            if c == 0 {
                uncrossed_v |= 1 << j;
            }
        }
        let row = pos / n;
        let row_line = self.h.get(row).map_or(0, |&c| c.min(CAP)) as u8;
        let mut v_targets = [0u8; 2];
        for (slot, &(j, _)) in v_targets.iter_mut().zip(self.v_targets) {
            *slot = self.v[j].min(CAP) as u8;
        }
        Key { pos: pos as u32, window, uncrossed_v, row_line, v_targets }
    }

    fn candidates(&self, cell: Cell) -> impl Iterator<Item = Tromino> + '_ {
        let Cell { row, col } = cell;
        let tl = (col >= 2).then(|| Tromino::new(Cell::new(row, col - 1), Corner::TL));
        let rest = [Corner::TR, Corner::BL, Corner::BR].into_iter().map(move |c| Tromino::new(cell, c));
        tl.into_iter()
            .chain(rest)
            .filter(|p| p.fits_in(self.rect) && p.cells().iter().all(|&c| !self.filled[self.rect.index(c)]))
    }

    fn place(&mut self, p: Tromino) {
        for c in p.cells() {
            self.filled[self.rect.index(c)] = true;
        }
        self.h[p.anchor.row - 1] += 1;
        self.v[p.anchor.col - 1] += 1;
        self.placed.push(p);
    }

    fn unplace(&mut self) {
        let p = self.placed.pop().expect("unplace without a placed piece");
        for c in p.cells() {
            self.filled[self.rect.index(c)] = false;
        }
        self.h[p.anchor.row - 1] -= 1;
        self.v[p.anchor.col - 1] -= 1;
    }

    fn over_target(&self, p: Tromino) -> bool {
        let line = p.anchor.row - 1;
        if self.h_target[line].is_some_and(|t| self.h[line] > t) {
            return true;
        }
        self.v_targets.iter().any(|&(j, t)| self.v[j] > t)
    }

    /// `pos` is the first empty cell; lines above its row are already checked.
    fn dfs(&mut self, pos: Option<usize>) -> bool {
        let n = self.rect.cols();
        let Some(pos) = pos else {
            return self.complete_ok();
        };
        let key = self.key(pos);
        if self.dead.contains(&key) {
            return false;
        }
        let row = pos / n;
        let options: Vec<Tromino> = self.candidates(self.rect.cell_at(pos)).collect();
        for p in options {
            self.place(p);
            if !self.over_target(p) {
                let next = self.first_empty(pos + 1);
                let next_row = next.map_or(self.rect.rows(), |i| i / n);
                if self.lines_ok(row, next_row) && self.dfs(next) {
                    return true;
                }
            }
            self.unplace();
        }
        self.dead.insert(key);
        false
    }
}
