//! Exact dense linear algebra over the rationals or a prime field.

mod matrix;
mod scalar;
mod sparse;

pub use matrix::{Matrix, Rref, Solution, Vector};
pub use scalar::{Field, Scalar};
pub use sparse::{SparseEliminator, SparseRow};
