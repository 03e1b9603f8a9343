//! Exact scalar, polynomial, rational-function and matrix arithmetic.
//!
//! Everything downstream (cohomology, contractions, invariants) is computed
//! over ℚ or ℚ(t). Ranks of rational matrices do not change under field
//! extension, so dimensions computed here are valid over ℂ as well.

mod elimination;
mod matrix;
mod poly;
mod rat;
mod ratfunc;
mod sparse;

pub use elimination::{gauss_jordan, kernel_basis, normalize_basis, rank, row_space_basis, Echelon};
pub use matrix::Matrix;
pub use poly::UniPoly;
pub use rat::{int, rat, Rat, Scalar};
pub use ratfunc::RatFunc;
pub use sparse::SparseMatrix;

use thiserror::Error;

/// Failures of the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("matrix is singular")]
    Singular,
    #[error("rational function has a pole of order {order} at t = 0")]
    PoleAtZero { order: i64 },
    #[error("operation undefined for the zero rational function")]
    ZeroFunction,
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}
