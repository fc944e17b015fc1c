//! Exact counting, fault analysis and construction of L-tromino tilings of
//! rectangles.

pub mod enumeration;
pub mod fault;
pub mod generative;
pub mod grid;
pub mod monodic;
pub mod series;
pub mod verify;

pub use grid::{Cell, Corner, Rect, Tiling, Tromino};
