//! Dense linear algebra: exact over any field, plus `f64` helpers backed
//! by nalgebra.

mod field;
mod matrix;
pub mod numeric;
mod subspace;

pub use field::{char_poly, inverse, rank, rref};
pub use matrix::{elementary_symmetric, Matrix};
pub use subspace::Subspace;
