//! Rectangles, L-tromino placements and complete tilings.
//!
//! Coordinates are 1-based `(row, col)`, rows counted from the top edge and
//! columns from the left edge. An L-tromino always occupies a 2x2 bounding box
//! minus one corner, so a placement is stored as the top-left cell of that box
//! plus the missing corner.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("rectangle dimensions must be positive, got {rows}x{cols}")]
    EmptyRect { rows: usize, cols: usize },
    #[error("invalid tiling: {0}")]
    Invalid(Violation),
    #[error("unknown corner code {0:?}")]
    BadCorner(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    rows: usize,
    cols: usize,
}

impl Rect {
    pub fn new(rows: usize, cols: usize) -> Result<Self, GridError> {
        if rows == 0 || cols == 0 {
            return Err(GridError::EmptyRect { rows, cols });
        }
        Ok(Self { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    pub fn transposed(&self) -> Rect {
        Rect { rows: self.cols, cols: self.rows }
    }

    /// Necessary condition for a tromino tiling: the area is divisible by 3 and
    /// neither side is a single row or column.
    pub fn tromino_tileable(&self) -> bool {
        self.area() % 3 == 0 && self.rows.min(self.cols) >= 2
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.rows).contains(&cell.row) && (1..=self.cols).contains(&cell.col)
    }

    /// Row-major index of a cell inside the rectangle.
    pub(crate) fn index(&self, cell: Cell) -> usize {
        (cell.row - 1) * self.cols + (cell.col - 1)
    }

    pub(crate) fn cell_at(&self, index: usize) -> Cell {
        Cell::new(index / self.cols + 1, index % self.cols + 1)
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({},{})", self.rows, self.cols)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Corner of the 2x2 bounding box left uncovered by a tromino.
///
/// The declaration order is the corner code used for canonical ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    TL,
    TR,
    BL,
    BR,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::TL, Corner::TR, Corner::BL, Corner::BR];

    /// Offset of this corner from the top-left cell of the box.
    fn offset(self) -> (usize, usize) {
        match self {
            Corner::TL => (0, 0),
            Corner::TR => (0, 1),
            Corner::BL => (1, 0),
            Corner::BR => (1, 1),
        }
    }

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Option<Corner> {
        Corner::ALL.get(code as usize).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Corner::TL => "TL",
            Corner::TR => "TR",
            Corner::BL => "BL",
            Corner::BR => "BR",
        }
    }

    fn transposed(self) -> Corner {
        match self {
            Corner::TR => Corner::BL,
            Corner::BL => Corner::TR,
            c => c,
        }
    }

    fn flipped(self) -> Corner {
        match self {
            Corner::TL => Corner::BL,
            Corner::TR => Corner::BR,
            Corner::BL => Corner::TL,
            Corner::BR => Corner::TR,
        }
    }

    fn mirrored(self) -> Corner {
        match self {
            Corner::TL => Corner::TR,
            Corner::TR => Corner::TL,
            Corner::BL => Corner::BR,
            Corner::BR => Corner::BL,
        }
    }
}

impl FromStr for Corner {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "TL" => Ok(Corner::TL),
            "TR" => Ok(Corner::TR),
            "BL" => Ok(Corner::BL),
            "BR" => Ok(Corner::BR),
            other => Err(GridError::BadCorner(other.to_string())),
        }
    }
}

/// An L-tromino: the 2x2 box whose top-left cell is `anchor`, minus `missing`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tromino {
    pub anchor: Cell,
    pub missing: Corner,
}

impl Tromino {
    pub const fn new(anchor: Cell, missing: Corner) -> Self {
        Self { anchor, missing }
    }

    /// The three covered cells, in row-major order.
    pub fn cells(&self) -> [Cell; 3] {
        let (mr, mc) = self.missing.offset();
        let mut out = [self.anchor; 3];
        let mut k = 0;
        for (dr, dc) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            if (dr, dc) != (mr, mc) {
                out[k] = Cell::new(self.anchor.row + dr, self.anchor.col + dc);
                k += 1;
            }
        }
        out
    }

    /// The cell of the box diagonally opposite the missing corner; it is
    /// edge-adjacent to both other cells.
    pub fn elbow(&self) -> Cell {
        let (mr, mc) = self.missing.offset();
        Cell::new(self.anchor.row + 1 - mr, self.anchor.col + 1 - mc)
    }

    pub fn fits_in(&self, rect: Rect) -> bool {
        self.anchor.row >= 1 && self.anchor.col >= 1 && self.anchor.row < rect.rows() && self.anchor.col < rect.cols()
    }

    fn sort_key(&self) -> (usize, usize, u8) {
        // Every L-piece touches both rows and both columns of its box, so the
        // anchor is also the (min row, min col) of the covered cells.
        (self.anchor.row, self.anchor.col, self.missing.code())
    }
}

impl Ord for Tromino {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Tromino {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// First problem found while checking a candidate tiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    Overlap(Cell),
    Gap(Cell),
    OutOfBounds(Tromino),
    OrderViolation(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Overlap(c) => write!(f, "cell {c} covered twice"),
            Violation::Gap(c) => write!(f, "cell {c} not covered"),
            Violation::OutOfBounds(p) => {
                write!(f, "piece at {} missing {} leaves the rectangle", p.anchor, p.missing.as_str())
            }
            Violation::OrderViolation(i) => write!(f, "piece {i} is out of canonical order"),
        }
    }
}

/// Checks that `pieces` is a canonical, exact cover of `rect`.
///
/// Pieces are inspected in order; for each one bounds are checked, then
/// overlaps, then ordering against its predecessor. Gaps are reported last,
/// as the first uncovered cell in row-major order.
pub fn validate(rect: Rect, pieces: &[Tromino]) -> Result<(), Violation> {
    let mut covered = vec![false; rect.area()];
    for (i, piece) in pieces.iter().enumerate() {
        if !piece.fits_in(rect) {
            return Err(Violation::OutOfBounds(*piece));
        }
        for cell in piece.cells() {
            let slot = &mut covered[rect.index(cell)];
            if *slot {
                return Err(Violation::Overlap(cell));
            }
            *slot = true;
        }
        if i > 0 && pieces[i - 1] >= *piece {
            return Err(Violation::OrderViolation(i));
        }
    }
    match covered.iter().position(|&c| !c) {
        Some(idx) => Err(Violation::Gap(rect.cell_at(idx))),
        None => Ok(()),
    }
}

/// A complete, canonically ordered tromino tiling of a rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    rect: Rect,
    pieces: Vec<Tromino>,
}

impl Tiling {
    /// Builds a tiling from pieces that must already be in canonical order.
    pub fn new(rect: Rect, pieces: Vec<Tromino>) -> Result<Self, GridError> {
        validate(rect, &pieces).map_err(GridError::Invalid)?;
        Ok(Self { rect, pieces })
    }

    /// Sorts the pieces into canonical order before validating.
    pub fn from_unordered(rect: Rect, mut pieces: Vec<Tromino>) -> Result<Self, GridError> {
        pieces.sort();
        Self::new(rect, pieces)
    }

    /// For producers that construct exact covers in canonical order by design.
    pub(crate) fn from_sorted_unchecked(rect: Rect, pieces: Vec<Tromino>) -> Self {
        debug_assert_eq!(validate(rect, &pieces), Ok(()));
        Self { rect, pieces }
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn pieces(&self) -> &[Tromino] {
        &self.pieces
    }

    pub fn into_pieces(self) -> Vec<Tromino> {
        self.pieces
    }

    /// Piece index owning each cell, row-major.
    pub fn owner_grid(&self) -> Vec<usize> {
        let mut grid = vec![usize::MAX; self.rect.area()];
        for (i, p) in self.pieces.iter().enumerate() {
            for c in p.cells() {
                grid[self.rect.index(c)] = i;
            }
        }
        grid
    }

    /// Reflection across the main diagonal; the result tiles `R(n,m)`.
    pub fn transpose(&self) -> Tiling {
        let pieces = self
            .pieces
            .iter()
            .map(|p| Tromino::new(Cell::new(p.anchor.col, p.anchor.row), p.missing.transposed()))
            .collect();
        Self::remap(self.rect.transposed(), pieces)
    }

    /// Reflection in the horizontal axis (rows mirrored).
    pub fn flip(&self) -> Tiling {
        let m = self.rect.rows();
        let pieces = self
            .pieces
            .iter()
            .map(|p| Tromino::new(Cell::new(m - p.anchor.row, p.anchor.col), p.missing.flipped()))
            .collect();
        Self::remap(self.rect, pieces)
    }

    /// Reflection in the vertical axis (columns mirrored).
    pub fn mirror(&self) -> Tiling {
        let n = self.rect.cols();
        let pieces = self
            .pieces
            .iter()
            .map(|p| Tromino::new(Cell::new(p.anchor.row, n - p.anchor.col), p.missing.mirrored()))
            .collect();
        Self::remap(self.rect, pieces)
    }

    fn remap(rect: Rect, mut pieces: Vec<Tromino>) -> Tiling {
        pieces.sort();
        Self::from_sorted_unchecked(rect, pieces)
    }

    pub fn to_doc(&self) -> TilingDoc {
        TilingDoc {
            rows: self.rect.rows(),
            cols: self.rect.cols(),
            pieces: self
                .pieces
                .iter()
                .map(|p| PieceDoc { r: p.anchor.row, c: p.anchor.col, missing: p.missing.as_str().to_string() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("tiling documents always serialize")
    }

    /// Parses a JSON tiling document; pieces must be in canonical order.
    pub fn from_json(text: &str) -> Result<Tiling, DocError> {
        let doc: TilingDoc = serde_json::from_str(text)?;
        Ok(Tiling::try_from(doc)?)
    }
}

/// Wire form of a tiling: `{"rows":m,"cols":n,"pieces":[{"r":..,"c":..,"missing":"TL"},..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingDoc {
    pub rows: usize,
    pub cols: usize,
    pub pieces: Vec<PieceDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceDoc {
    pub r: usize,
    pub c: usize,
    pub missing: String,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("malformed tiling document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Grid(#[from] GridError),
}

impl TryFrom<TilingDoc> for Tiling {
    type Error = GridError;

    fn try_from(doc: TilingDoc) -> Result<Self, Self::Error> {
        let rect = Rect::new(doc.rows, doc.cols)?;
        let pieces = doc
            .pieces
            .into_iter()
            .map(|p| Ok(Tromino::new(Cell::new(p.r, p.c), p.missing.parse()?)))
            .collect::<Result<Vec<_>, GridError>>()?;
        Tiling::new(rect, pieces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cellset(p: Tromino) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = p.cells().iter().map(|c| (c.row, c.col)).collect();
        v.sort();
        v
    }

    /// The cover of R(2,3) by an upper-left and a lower-right L.
    fn two_by_three() -> Tiling {
        Tiling::new(
            Rect::new(2, 3).unwrap(),
            vec![Tromino::new(Cell::new(1, 1), Corner::BR), Tromino::new(Cell::new(1, 2), Corner::TL)],
        )
        .unwrap()
    }

    #[test]
    fn cells_of_follow_the_encoding() {
        let p = Tromino::new(Cell::new(1, 1), Corner::BR);
        assert_eq!(cellset(p), vec![(1, 1), (1, 2), (2, 1)]);
        let p = Tromino::new(Cell::new(1, 1), Corner::TL);
        assert_eq!(cellset(p), vec![(1, 2), (2, 1), (2, 2)]);
        let p = Tromino::new(Cell::new(3, 5), Corner::TR);
        assert_eq!(cellset(p), vec![(3, 5), (4, 5), (4, 6)]);
    }

    #[test]
    fn elbow_touches_both_other_cells() {
        for corner in Corner::ALL {
            let p = Tromino::new(Cell::new(2, 2), corner);
            let e = p.elbow();
            for c in p.cells().into_iter().filter(|&c| c != e) {
                assert_eq!(c.row.abs_diff(e.row) + c.col.abs_diff(e.col), 1);
            }
        }
    }

    #[test]
    fn validate_reports_first_problem() {
        let t = two_by_three();
        assert_eq!(validate(t.rect(), t.pieces()), Ok(()));

        let one = &t.pieces()[..1];
        assert_eq!(validate(t.rect(), one), Err(Violation::Gap(Cell::new(1, 3))));

        let dup = vec![t.pieces()[0], t.pieces()[0], t.pieces()[1]];
        assert_eq!(validate(t.rect(), &dup), Err(Violation::Overlap(Cell::new(1, 1))));

        let swapped = vec![t.pieces()[1], t.pieces()[0]];
        assert_eq!(validate(t.rect(), &swapped), Err(Violation::OrderViolation(1)));

        let outside = vec![Tromino::new(Cell::new(2, 1), Corner::TL)];
        assert!(matches!(validate(t.rect(), &outside), Err(Violation::OutOfBounds(_))));
    }

    #[test]
    fn tileable_gate() {
        assert!(Rect::new(2, 3).unwrap().tromino_tileable());
        assert!(!Rect::new(1, 3).unwrap().tromino_tileable());
        assert!(!Rect::new(4, 4).unwrap().tromino_tileable());
        assert!(Rect::new(0, 3).is_err());
    }

    #[test]
    fn symmetries_are_involutions() {
        let t = two_by_three();
        let tt = t.transpose();
        assert_eq!(tt.rect(), Rect::new(3, 2).unwrap());
        assert_eq!(tt.pieces().len(), 2);
        assert_eq!(tt.transpose(), t);
        assert_eq!(t.flip().flip(), t);
        assert_eq!(t.mirror().mirror(), t);
        // the flipped cover puts the elbow of the left piece on the bottom row
        let f = t.flip();
        assert_eq!(f.pieces()[0], Tromino::new(Cell::new(1, 1), Corner::TR));
    }

    #[test]
    fn json_document_shape() {
        let t = two_by_three();
        let text = t.to_json();
        assert_eq!(text, r#"{"rows":2,"cols":3,"pieces":[{"r":1,"c":1,"missing":"BR"},{"r":1,"c":2,"missing":"TL"}]}"#);
        assert_eq!(Tiling::from_json(&text).unwrap(), t);
        let bad = r#"{"rows":2,"cols":3,"pieces":[{"r":1,"c":1,"missing":"XX"}]}"#;
        assert!(Tiling::from_json(bad).is_err());
    }
}
