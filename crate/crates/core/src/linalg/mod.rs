//! Exact rational scalars and sparse linear algebra.

mod rational;
mod sparse;

pub use rational::{ParseRationalError, Rational};
pub(crate) use sparse::kernel_from_echelon;
pub use sparse::{
    echelon, kernel_basis, solve_membership, Echelon, Membership, Reduction, SparseMatrix,
    SparseVector,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
