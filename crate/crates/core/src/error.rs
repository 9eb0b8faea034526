use thiserror::Error;

/// Errors surfaced by the core operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("cochains do not live on a common space")]
    SpaceMismatch,

    #[error("composition position {position} out of range 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("operator does not commute with the structure twist")]
    TwistMismatch,

    #[error("operator is not a Nijenhuis operator: {0}")]
    NotNijenhuis(String),

    #[error("Hom-Leibniz axioms fail: {0}")]
    InvalidAlgebra(String),

    #[error("bimodule axioms fail: {0}")]
    InvalidBimodule(String),

    #[error("cochain is not homogeneous of bidegree {l}|{k}")]
    NotHomogeneous { l: i64, k: i64 },

    #[error("coboundary does not square to zero at degree {degree}; the input structure is invalid")]
    NotAComplex { degree: usize },

    #[error("invalid rational literal {0:?}")]
    InvalidScalar(String),
}

pub type Result<T> = std::result::Result<T, Error>;
