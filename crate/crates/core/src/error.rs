use thiserror::Error;

use crate::f2geom::PointSet;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported dimension k={0}; only k in {{2, 3, 4}} is supported")]
    UnsupportedDimension(u32),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u8, right: u8 },

    #[error("the zero vector is not a projective point")]
    ZeroVector,

    #[error("coordinate vector {0:?} is not a nonzero 0/1 vector of length 2..=4")]
    BadCoordinates(Vec<u64>),

    #[error("orbit leaves the input family: {0:?} is not in the set list")]
    ClosureViolation(PointSet),

    #[error("classification mismatch: {reason} (set {set:?})")]
    ClassificationMismatch { reason: String, set: PointSet },

    #[error("expected a set of size {expected}, found {found}")]
    WrongSize { expected: usize, found: usize },

    #[error("non-integral invariant: {0}")]
    NonIntegralInvariant(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable tag used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnsupportedDimension(_) => "unsupported-dimension",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::ZeroVector | Error::BadCoordinates(_) => "bad-point",
            Error::ClosureViolation(_) => "closure-violation",
            Error::ClassificationMismatch { .. } => "classification-mismatch",
            Error::WrongSize { .. } => "wrong-size",
            Error::NonIntegralInvariant(_) => "non-integral-invariant",
            Error::HypothesisViolation(_) => "hypothesis-violation",
            Error::Validation(_) => "validation",
            Error::Inconsistent(_) => "inconsistent",
            Error::Overflow(_) => "overflow",
            Error::Parse(_) => "malformed-input",
            Error::Io(_) => "io",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
