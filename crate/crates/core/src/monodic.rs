//! Directed monodic tilings and coloured domino tilings.
//!
//! Each tromino splits into a directed domino and a monomino. The domino is
//! an end cell (the tail) plus the elbow (the head); the monomino is the
//! remaining end cell, which sits on the right-hand side of the arrow head
//! when looking along the arrow. Exactly one of the two end cells can serve as
//! tail under this rule, so the split is a fixed function of the orientation
//! and the reverse map just reattaches the cell to the right of each head.
//!
//! Stretching doubles the columns (or rows): every cell becomes two, a
//! monomino becomes a blue domino and a directed domino becomes two red
//! dominoes that keep its arrow.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{Cell, Corner, Rect, Tiling, Tromino};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonodicError {
    #[error("no free monomino to the right of the arrow head at {0}")]
    InvalidMonodic(Cell),
    #[error("not the image of a stretch: cannot unstretch at {0}")]
    NotAStretchImage(Cell),
    #[error("cells {0} and {1} are not edge-adjacent")]
    NotADomino(Cell, Cell),
    #[error("cell {0} is covered twice")]
    Overlap(Cell),
    #[error("cell {0} is not covered")]
    Gap(Cell),
    #[error("cell {0} lies outside the rectangle")]
    OutOfBounds(Cell),
    #[error("invalid document: {0}")]
    Document(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
    Left,
    Right,
}

impl Direction {
    fn delta(self) -> (isize, isize) {
        match self {
            Direction::Up => (-1, 0),
            Direction::Down => (1, 0),
            Direction::Left => (0, -1),
            Direction::Right => (0, 1),
        }
    }

    fn from_delta(d: (isize, isize)) -> Option<Direction> {
        match d {
            (-1, 0) => Some(Direction::Up),
            (1, 0) => Some(Direction::Down),
            (0, -1) => Some(Direction::Left),
            (0, 1) => Some(Direction::Right),
            _ => None,
        }
    }

    /// The direction on the right-hand side when facing this way.
    fn right_hand(self) -> Direction {
        let (dr, dc) = self.delta();
        Direction::from_delta((dc, -dr)).expect("rotation of a unit step")
    }

    fn transposed(self) -> Direction {
        match self {
            Direction::Up => Direction::Left,
            Direction::Left => Direction::Up,
            Direction::Down => Direction::Right,
            Direction::Right => Direction::Down,
        }
    }

    fn is_horizontal(self) -> bool {
        matches!(self, Direction::Left | Direction::Right)
    }
}

fn step(c: Cell, d: Direction) -> Option<Cell> {
    let (dr, dc) = d.delta();
    let row = c.row.checked_add_signed(dr)?;
    let col = c.col.checked_add_signed(dc)?;
    (row >= 1 && col >= 1).then_some(Cell::new(row, col))
}

fn direction_between(from: Cell, to: Cell) -> Option<Direction> {
    let dr = to.row as isize - from.row as isize;
    let dc = to.col as isize - from.col as isize;
    Direction::from_delta((dr, dc))
}

fn transpose_cell(c: Cell) -> Cell {
    Cell::new(c.col, c.row)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedDomino {
    pub tail: Cell,
    pub head: Cell,
}

impl DirectedDomino {
    pub fn new(tail: Cell, head: Cell) -> Result<Self, MonodicError> {
        direction_between(tail, head).ok_or(MonodicError::NotADomino(tail, head))?;
        Ok(Self { tail, head })
    }

    pub fn direction(&self) -> Direction {
        direction_between(self.tail, self.head).expect("validated on construction")
    }

    /// The cell a valid tiling must hold a monomino in.
    pub fn companion(&self) -> Option<Cell> {
        step(self.head, self.direction().right_hand())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Red,
    Blue,
}

/// Cover by directed (red) dominoes and (blue) monominoes, both kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonodicTiling {
    rect: Rect,
    dominoes: Vec<DirectedDomino>,
    monominoes: Vec<Cell>,
}

fn check_cover<'a>(rect: Rect, cells: impl Iterator<Item = &'a Cell>) -> Result<(), MonodicError> {
    let mut seen = vec![false; rect.area()];
    for &c in cells {
        if !rect.contains(c) {
            return Err(MonodicError::OutOfBounds(c));
        }
        let i = rect.index(c);
        if seen[i] {
            return Err(MonodicError::Overlap(c));
        }
        seen[i] = true;
    }
    match seen.iter().position(|s| !s) {
        Some(i) => Err(MonodicError::Gap(rect.cell_at(i))),
        None => Ok(()),
    }
}

impl MonodicTiling {
    pub fn new(rect: Rect, mut dominoes: Vec<DirectedDomino>, mut monominoes: Vec<Cell>) -> Result<Self, MonodicError> {
        let cells = dominoes.iter().flat_map(|d| [&d.tail, &d.head]).chain(monominoes.iter());
        check_cover(rect, cells)?;
        dominoes.sort();
        monominoes.sort();
        Ok(Self { rect, dominoes, monominoes })
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn dominoes(&self) -> &[DirectedDomino] {
        &self.dominoes
    }

    pub fn monominoes(&self) -> &[Cell] {
        &self.monominoes
    }

    fn transposed(&self) -> MonodicTiling {
        MonodicTiling {
            rect: self.rect.transposed(),
            dominoes: sorted(
                self.dominoes
                    .iter()
                    .map(|d| DirectedDomino { tail: transpose_cell(d.tail), head: transpose_cell(d.head) }),
            ),
            monominoes: sorted(self.monominoes.iter().map(|&c| transpose_cell(c))),
        }
    }
}

fn sorted<T: Ord>(it: impl Iterator<Item = T>) -> Vec<T> {
    let mut v: Vec<T> = it.collect();
    v.sort();
    v
}

/// Splits one tromino into its directed domino and monomino.
fn split(p: &Tromino) -> (DirectedDomino, Cell) {
    let elbow = p.elbow();
    let ends: Vec<Cell> = p.cells().into_iter().filter(|&c| c != elbow).collect();
    for (tail, mono) in [(ends[0], ends[1]), (ends[1], ends[0])] {
        let d = DirectedDomino { tail, head: elbow };
        if d.companion() == Some(mono) {
            return (d, mono);
        }
    }
    unreachable!("one end of an L-piece always lies right of the arrow from the other")
}

pub fn to_monodic(t: &Tiling) -> MonodicTiling {
    let (dominoes, monominoes) = t.pieces().iter().map(split).unzip();
    MonodicTiling::new(t.rect(), dominoes, monominoes).expect("a tiling splits into a cover")
}

/// Reattaches the monomino to the right of every arrow head.
pub fn from_monodic(mt: &MonodicTiling) -> Result<Tiling, MonodicError> {
    let mut free: HashMap<Cell, bool> = mt.monominoes.iter().map(|&c| (c, true)).collect();
    let mut pieces = Vec::with_capacity(mt.dominoes.len());
    for d in &mt.dominoes {
        let mono = d.companion().ok_or(MonodicError::InvalidMonodic(d.head))?;
        match free.get_mut(&mono) {
            Some(slot @ true) => *slot = false,
            _ => return Err(MonodicError::InvalidMonodic(d.head)),
        }
        let cells = [d.tail, d.head, mono];
        let row = cells.iter().map(|c| c.row).min().expect("three cells");
        let col = cells.iter().map(|c| c.col).min().expect("three cells");
        let missing = Corner::ALL
            .into_iter()
            .find(|&corner| {
                let p = Tromino::new(Cell::new(row, col), corner);
                let mut a = p.cells();
                let mut b = cells;
                a.sort();
                b.sort();
                a == b
            })
            .ok_or(MonodicError::InvalidMonodic(d.head))?;
        pieces.push(Tromino::new(Cell::new(row, col), missing));
    }
    if let Some((&c, _)) = free.iter().filter(|(_, &f)| f).min() {
        return Err(MonodicError::Gap(c));
    }
    Tiling::from_unordered(mt.rect, pieces).map_err(|e| MonodicError::Document(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredDomino {
    /// The two cells in row-major order.
    pub cells: (Cell, Cell),
    pub colour: Colour,
    /// Arrow inherited from the directed domino a red piece came from.
    pub arrow: Option<Direction>,
}

impl ColouredDomino {
    pub fn new(a: Cell, b: Cell, colour: Colour, arrow: Option<Direction>) -> Result<Self, MonodicError> {
        direction_between(a, b).ok_or(MonodicError::NotADomino(a, b))?;
        let cells = if a <= b { (a, b) } else { (b, a) };
        Ok(Self { cells, colour, arrow })
    }

    fn is_horizontal(&self) -> bool {
        self.cells.0.row == self.cells.1.row
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColouredDominoTiling {
    rect: Rect,
    dominoes: Vec<ColouredDomino>,
}

impl ColouredDominoTiling {
    pub fn new(rect: Rect, mut dominoes: Vec<ColouredDomino>) -> Result<Self, MonodicError> {
        check_cover(rect, dominoes.iter().flat_map(|d| [&d.cells.0, &d.cells.1]))?;
        dominoes.sort();
        Ok(Self { rect, dominoes })
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn dominoes(&self) -> &[ColouredDomino] {
        &self.dominoes
    }

    pub fn count(&self, colour: Colour) -> usize {
        self.dominoes.iter().filter(|d| d.colour == colour).count()
    }

    fn transposed(&self) -> ColouredDominoTiling {
        let dominoes = self.dominoes.iter().map(|d| {
            let (a, b) = (transpose_cell(d.cells.0), transpose_cell(d.cells.1));
            ColouredDomino {
                cells: if a <= b { (a, b) } else { (b, a) },
                colour: d.colour,
                arrow: d.arrow.map(Direction::transposed),
            }
        });
        ColouredDominoTiling { rect: self.rect.transposed(), dominoes: sorted(dominoes) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stretch {
    /// `R(m, n)` to `R(m, 2n)`.
    Horizontal,
    /// `R(m, n)` to `R(2m, n)`.
    Vertical,
}

pub fn stretch(mt: &MonodicTiling, direction: Stretch) -> ColouredDominoTiling {
    match direction {
        Stretch::Horizontal => stretch_columns(mt),
        Stretch::Vertical => stretch_columns(&mt.transposed()).transposed(),
    }
}

fn stretch_columns(mt: &MonodicTiling) -> ColouredDominoTiling {
    let rect = Rect::new(mt.rect.rows(), 2 * mt.rect.cols()).expect("positive sides");
    let left = |c: Cell| Cell::new(c.row, 2 * c.col - 1);
    let right = |c: Cell| Cell::new(c.row, 2 * c.col);
    let red = |a, b, arrow| ColouredDomino::new(a, b, Colour::Red, Some(arrow)).expect("adjacent");
    let mut out = Vec::with_capacity(mt.rect.area());
    for &c in &mt.monominoes {
        out.push(ColouredDomino::new(left(c), right(c), Colour::Blue, None).expect("adjacent"));
    }
    for d in &mt.dominoes {
        let arrow = d.direction();
        let (a, b) = if d.tail <= d.head { (d.tail, d.head) } else { (d.head, d.tail) };
        if arrow.is_horizontal() {
            out.push(red(left(a), right(a), arrow));
            out.push(red(left(b), right(b), arrow));
        } else {
            out.push(red(left(a), left(b), arrow));
            out.push(red(right(a), right(b), arrow));
        }
    }
    ColouredDominoTiling::new(rect, out).expect("stretching preserves the cover")
}

pub fn unstretch(cd: &ColouredDominoTiling, direction: Stretch) -> Result<MonodicTiling, MonodicError> {
    match direction {
        Stretch::Horizontal => unstretch_columns(cd),
        Stretch::Vertical => unstretch_columns(&cd.transposed()).map(|mt| mt.transposed()),
    }
}

fn unstretch_columns(cd: &ColouredDominoTiling) -> Result<MonodicTiling, MonodicError> {
    let (m, n2) = (cd.rect.rows(), cd.rect.cols());
    if n2 % 2 == 1 {
        return Err(MonodicError::NotAStretchImage(Cell::new(1, n2)));
    }
    let n = n2 / 2;
    // piece covering each cell
    let by_cell: BTreeMap<Cell, &ColouredDomino> =
        cd.dominoes.iter().flat_map(|d| [(d.cells.0, d), (d.cells.1, d)]).collect();
    let mut dominoes = Vec::new();
    let mut monominoes = Vec::new();
    let mut used = vec![false; m * n];
    let source = |c: Cell| Cell::new(c.row, c.col.div_ceil(2));
    for row in 1..=m {
        let mut j = 1;
        while j <= n {
            let here = Cell::new(row, 2 * j - 1);
            let d = by_cell[&here];
            let fail = MonodicError::NotAStretchImage(here);
            if used[(row - 1) * n + j - 1] {
                j += 1;
                continue;
            }
            let aligned_pair = d.cells == (here, Cell::new(row, 2 * j));
            match (d.colour, aligned_pair) {
                (Colour::Blue, true) if d.arrow.is_none() => {
                    monominoes.push(Cell::new(row, j));
                    j += 1;
                }
                (Colour::Red, true) => {
                    // first half of a horizontal domino: the next pair must match
                    let arrow = d.arrow.filter(|a| a.is_horizontal()).ok_or(fail.clone())?;
                    let next = Cell::new(row, 2 * j + 1);
                    let e = by_cell.get(&next).ok_or(fail.clone())?;
                    if j == n
                        || e.cells != (next, Cell::new(row, 2 * j + 2))
                        || e.colour != Colour::Red
                        || e.arrow != Some(arrow)
                    {
                        return Err(fail);
                    }
                    let (a, b) = (Cell::new(row, j), Cell::new(row, j + 1));
                    let (tail, head) = if arrow == Direction::Right { (a, b) } else { (b, a) };
                    dominoes.push(DirectedDomino { tail, head });
                    j += 2;
                }
                (Colour::Red, false) if !d.is_horizontal() && d.cells.0 == here => {
                    let arrow = d.arrow.filter(|a| !a.is_horizontal()).ok_or(fail.clone())?;
                    let below = d.cells.1;
                    let twin = by_cell[&Cell::new(row, 2 * j)];
                    if twin.cells != (Cell::new(row, 2 * j), Cell::new(row + 1, 2 * j))
                        || twin.colour != Colour::Red
                        || twin.arrow != Some(arrow)
                    {
                        return Err(fail);
                    }
                    let (a, b) = (source(here), source(below));
                    let (tail, head) = if arrow == Direction::Down { (a, b) } else { (b, a) };
                    dominoes.push(DirectedDomino { tail, head });
                    used[row * n + j - 1] = true;
                    j += 1;
                }
                _ => return Err(fail),
            }
        }
    }
    MonodicTiling::new(Rect::new(m, n).expect("positive sides"), dominoes, monominoes)
}

#[derive(Serialize, Deserialize)]
struct DominoDoc {
    cells: [[usize; 2]; 2],
    colour: Colour,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arrow: Option<Direction>,
}

#[derive(Serialize, Deserialize)]
struct MonominoDoc {
    cell: [usize; 2],
    colour: Colour,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Doc {
    Monodic { rows: usize, cols: usize, dominoes: Vec<DominoDoc>, monominoes: Vec<MonominoDoc> },
    ColouredDomino { rows: usize, cols: usize, dominoes: Vec<DominoDoc> },
}

fn pair(c: Cell) -> [usize; 2] {
    [c.row, c.col]
}

fn cell(p: [usize; 2]) -> Cell {
    Cell::new(p[0], p[1])
}

fn doc_rect(rows: usize, cols: usize) -> Result<Rect, MonodicError> {
    Rect::new(rows, cols).map_err(|e| MonodicError::Document(e.to_string()))
}

impl MonodicTiling {
    /// `{"kind":"monodic","rows":..,"cols":..,"dominoes":[{"cells":[[r,c],[r,c]],"colour":"red","arrow":".."}],"monominoes":[{"cell":[r,c],"colour":"blue"}]}`
    /// with each domino listed tail first.
    pub fn to_json(&self) -> String {
        let doc = Doc::Monodic {
            rows: self.rect.rows(),
            cols: self.rect.cols(),
            dominoes: self
                .dominoes
                .iter()
                .map(|d| DominoDoc {
                    cells: [pair(d.tail), pair(d.head)],
                    colour: Colour::Red,
                    arrow: Some(d.direction()),
                })
                .collect(),
            monominoes: self.monominoes.iter().map(|&c| MonominoDoc { cell: pair(c), colour: Colour::Blue }).collect(),
        };
        serde_json::to_string(&doc).expect("monodic documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, MonodicError> {
        match serde_json::from_str(text).map_err(|e| MonodicError::Document(e.to_string()))? {
            Doc::Monodic { rows, cols, dominoes, monominoes } => {
                let dominoes = dominoes
                    .into_iter()
                    .map(|d| {
                        let dd = DirectedDomino::new(cell(d.cells[0]), cell(d.cells[1]))?;
                        if d.arrow.is_some_and(|a| a != dd.direction()) {
                            return Err(MonodicError::Document("arrow disagrees with cell order".into()));
                        }
                        Ok(dd)
                    })
                    .collect::<Result<_, _>>()?;
                let monominoes = monominoes.into_iter().map(|m| cell(m.cell)).collect();
                MonodicTiling::new(doc_rect(rows, cols)?, dominoes, monominoes)
            }
            Doc::ColouredDomino { .. } => Err(MonodicError::Document("expected kind \"monodic\"".into())),
        }
    }
}

impl ColouredDominoTiling {
    /// `{"kind":"coloured_domino","rows":..,"cols":..,"dominoes":[{"cells":[[r,c],[r,c]],"colour":"red|blue","arrow":".."}]}`
    pub fn to_json(&self) -> String {
        let doc = Doc::ColouredDomino {
            rows: self.rect.rows(),
            cols: self.rect.cols(),
            dominoes: self
                .dominoes
                .iter()
                .map(|d| DominoDoc { cells: [pair(d.cells.0), pair(d.cells.1)], colour: d.colour, arrow: d.arrow })
                .collect(),
        };
        serde_json::to_string(&doc).expect("domino documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, MonodicError> {
        match serde_json::from_str(text).map_err(|e| MonodicError::Document(e.to_string()))? {
            Doc::ColouredDomino { rows, cols, dominoes } => {
                let dominoes = dominoes
                    .into_iter()
                    .map(|d| ColouredDomino::new(cell(d.cells[0]), cell(d.cells[1]), d.colour, d.arrow))
                    .collect::<Result<_, _>>()?;
                ColouredDominoTiling::new(doc_rect(rows, cols)?, dominoes)
            }
            Doc::Monodic { .. } => Err(MonodicError::Document("expected kind \"coloured_domino\"".into())),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Up => "up",
            Direction::Down => "down",
            Direction::Left => "left",
            Direction::Right => "right",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{collect_tilings, Mode};
    use std::collections::HashSet;

    fn all(m: usize, n: usize) -> Vec<Tiling> {
        collect_tilings(Rect::new(m, n).unwrap(), Mode::All)
    }

    #[test]
    fn right_hand_rule() {
        assert_eq!(Direction::Right.right_hand(), Direction::Down);
        assert_eq!(Direction::Down.right_hand(), Direction::Left);
        assert_eq!(Direction::Left.right_hand(), Direction::Up);
        assert_eq!(Direction::Up.right_hand(), Direction::Right);
    }

    #[test]
    fn every_orientation_splits() {
        for corner in Corner::ALL {
            let p = Tromino::new(Cell::new(1, 1), corner);
            let (d, mono) = split(&p);
            assert_eq!(d.head, p.elbow());
            assert_eq!(d.companion(), Some(mono));
            let mut cells = vec![d.tail, d.head, mono];
            cells.sort();
            assert_eq!(cells, p.cells().to_vec());
        }
    }

    #[test]
    fn two_by_three_counts() {
        for t in all(2, 3) {
            let mt = to_monodic(&t);
            assert_eq!((mt.dominoes().len(), mt.monominoes().len()), (2, 2));
            assert_eq!(from_monodic(&mt).unwrap(), t);
        }
    }

    #[test]
    fn reversed_arrow_is_invalid() {
        let t = &all(2, 3)[0];
        let mt = to_monodic(t);
        let mut dominoes = mt.dominoes().to_vec();
        let d = dominoes[0];
        dominoes[0] = DirectedDomino { tail: d.head, head: d.tail };
        let bad = MonodicTiling::new(mt.rect(), dominoes, mt.monominoes().to_vec()).unwrap();
        assert!(matches!(from_monodic(&bad), Err(MonodicError::InvalidMonodic(_))));
    }

    #[test]
    fn stretch_shapes() {
        for t in all(2, 3) {
            let mt = to_monodic(&t);
            let h = stretch(&mt, Stretch::Horizontal);
            assert_eq!((h.rect().rows(), h.rect().cols()), (2, 6));
            assert_eq!((h.count(Colour::Blue), h.count(Colour::Red)), (2, 4));
            let v = stretch(&mt, Stretch::Vertical);
            assert_eq!((v.rect().rows(), v.rect().cols()), (4, 3));
            assert_eq!(unstretch(&h, Stretch::Horizontal).unwrap(), mt);
            assert_eq!(unstretch(&v, Stretch::Vertical).unwrap(), mt);
        }
    }

    #[test]
    fn full_chain_on_4x6() {
        let mut seen = HashSet::new();
        for t in all(4, 6) {
            let mt = to_monodic(&t);
            assert_eq!(from_monodic(&mt).unwrap(), t);
            let cd = stretch(&mt, Stretch::Horizontal);
            assert_eq!(unstretch(&cd, Stretch::Horizontal).unwrap(), mt);
            assert!(seen.insert(cd));
        }
    }

    /// Rows 1 and 2 hold horizontal dominoes on columns 2-3, straddling the
    /// stretched cell pairs, so no colouring can be unstretched.
    fn unaligned_3x4(colours: u32) -> ColouredDominoTiling {
        let c = Cell::new;
        let shapes = [
            (c(1, 1), c(2, 1)),
            (c(1, 2), c(1, 3)),
            (c(1, 4), c(2, 4)),
            (c(2, 2), c(2, 3)),
            (c(3, 1), c(3, 2)),
            (c(3, 3), c(3, 4)),
        ];
        let dominoes = shapes
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| {
                if colours >> k & 1 == 1 {
                    ColouredDomino::new(a, b, Colour::Red, direction_between(a, b)).unwrap()
                } else {
                    ColouredDomino::new(a, b, Colour::Blue, None).unwrap()
                }
            })
            .collect();
        ColouredDominoTiling::new(Rect::new(3, 4).unwrap(), dominoes).unwrap()
    }

    #[test]
    fn unaligned_tiling_is_not_an_image() {
        for colours in 0..64 {
            let cd = unaligned_3x4(colours);
            assert!(matches!(unstretch(&cd, Stretch::Horizontal), Err(MonodicError::NotAStretchImage(_))));
            assert!(unstretch(&cd, Stretch::Vertical).is_err());
        }
    }

    #[test]
    fn json_documents() {
        let mt = to_monodic(&all(2, 3)[0]);
        let text = mt.to_json();
        assert!(text.starts_with(r#"{"kind":"monodic","rows":2,"cols":3,"dominoes":[{"cells":"#));
        assert_eq!(MonodicTiling::from_json(&text).unwrap(), mt);
        let cd = stretch(&mt, Stretch::Horizontal);
        let text = cd.to_json();
        assert!(text.starts_with(r#"{"kind":"coloured_domino""#));
        assert_eq!(ColouredDominoTiling::from_json(&text).unwrap(), cd);
        assert!(MonodicTiling::from_json(&text).is_err());
    }
}
