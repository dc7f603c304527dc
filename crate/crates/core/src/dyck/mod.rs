//! Dyck paths, ∘-decorations, their statistics and generating polynomials.

pub mod catalan;
pub mod decorated;
pub mod multipoly;
pub mod path;

pub use catalan::{cat_poly, cat_rise, cat_rise_table, CatMethod};
pub use decorated::{enumerate_decorations, stats_circ, DecoratedPath, FirstPart, PathStats};
pub use multipoly::MultiPoly;
pub use path::{enumerate_paths, DyckPath, ReadingOrder};
