//! Exact computation of four-variable q,t-Catalan polynomials, both as sums
//! over decorated Dyck paths and as Macdonald-operator coefficients.

pub mod dyck;
pub mod error;
pub mod exact;
pub mod macdonald;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
