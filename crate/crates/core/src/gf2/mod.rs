//! Dense linear algebra over GF(2) on word-packed bit vectors.
//!
//! Row operations are word-parallel XORs, so elimination on an `n × n`
//! system costs roughly `n³ / 64` word operations.

mod echelon;
mod matrix;
mod perm;
mod solve;
mod vector;

pub use echelon::EchelonDecomposition;
pub use matrix::BitMatrix;
pub use perm::RowPermutation;
pub use solve::{solve, GeneralSolution, Inconsistency, Solve};
pub use vector::BitVector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },
    #[error("basis is rank deficient: expected rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },
    #[error("index map is not a permutation")]
    NotAPermutation,
}

/// Rank over GF(2).
pub fn rank(m: &BitMatrix) -> usize {
    m.rank()
}

/// `M · v` over GF(2).
pub fn mat_vec(m: &BitMatrix, v: &BitVector) -> Result<BitVector, LinalgError> {
    m.mat_vec(v)
}
