use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("specialization at a root of unity q = {0}")]
    RootOfUnity(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid composition {parts:?} of {n}")]
    InvalidComposition { n: usize, parts: Vec<usize> },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("input is not an S_{m}-module: {reason}")]
    NotSnModule { m: usize, reason: String },
    #[error("not a Speh sum: {0}")]
    NotSpehSum(String),
    #[error("subspace not invariant: {0}")]
    NotInvariant(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("eigenvalue {0} sits on a non-removable singularity")]
    Singularity(f64),
    #[error("relation {relation} has residual {residual:e} above tolerance {tol:e}")]
    Residual { relation: String, residual: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
