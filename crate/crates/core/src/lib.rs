pub mod combinatorics;
pub mod error;
pub mod graded;
pub mod hecke;
pub mod linalg;
pub mod lusztig;
pub mod scalar;
pub mod suites;
pub mod symgroup;

pub use error::{Error, Result};
