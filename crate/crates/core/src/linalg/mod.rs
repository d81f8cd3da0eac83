//! GF(2) linear algebra: packed matrices, chain-complex homology, and the
//! exact-sequence dimension test used by every obstruction check.

mod complex;
mod laurent;
mod les;
mod matrix;

pub use complex::{complex_homology, ChainComplex};
pub use laurent::LaurentDims;
pub use les::{les_feasible, les_feasible_ranges, DimRange};
pub use matrix::Z2Matrix;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("boundary composition is nonzero into degree {degree}")]
    NonzeroComposition { degree: i32 },
    #[error("boundary out of degree {degree} has shape {found:?}, expected {expected:?}")]
    ShapeMismatch { degree: i32, expected: (usize, usize), found: (usize, usize) },
}

/// GF(2) rank of `m`.
pub fn rank(m: &Z2Matrix) -> usize {
    m.rank()
}
