use thiserror::Error;

use crate::algebra::IdentityWitness;
use crate::exactmath::ExactError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra is not a Lie algebra: {0}")]
    NotLie(IdentityWitness),
    #[error("algebra is not a Leibniz algebra: {0}")]
    NotLeibniz(IdentityWitness),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("size {size} exceeds the configured limit {limit}")]
    DimensionTooLarge { size: usize, limit: usize },
    /// Indices are zero-based.
    #[error("no limit: structure constant ({i}, {j}, {k}) has a pole of order {pole_order} at t = 0")]
    NoLimit {
        i: usize,
        j: usize,
        k: usize,
        pole_order: i64,
    },
    #[error("contraction path is singular over Q(t)")]
    SingularPath,
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl Error {
    /// Stable machine-readable code, used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotLie(_) => "NOT_LIE",
            Error::NotLeibniz(_) => "NOT_LEIBNIZ",
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::DimensionTooLarge { .. } => "DIMENSION_TOO_LARGE",
            Error::NoLimit { .. } => "NO_LIMIT",
            Error::SingularPath => "SINGULAR_PATH",
            Error::UnknownName(_) => "UNKNOWN_NAME",
            Error::BadParameter(_) => "BAD_PARAMETER",
            Error::InvalidStructure(_) => "INVALID_STRUCTURE",
            Error::Exact(_) => "ARITHMETIC",
        }
    }
}
