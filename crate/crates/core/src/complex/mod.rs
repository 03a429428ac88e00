//! Chain complexes, double complexes, tensor products and length-graded complexes over ℤ.

mod chain;
mod double;
mod tensor;

pub use chain::{homology_table, BasedChainComplex, HomologyTable, Truncation};
pub use double::{total_complex, BasedDoubleComplex};
pub use tensor::{graded_tensor, tensor_complex, GradedChainComplex};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("a complex needs at least degree 0")]
    NoDegrees,
    #[error("expected {expected} boundary matrices, found {found}")]
    BoundaryCount { expected: usize, found: usize },
    #[error("boundary in degree {degree} has shape {found:?}, expected {expected:?}")]
    BoundaryShape { degree: usize, expected: (usize, usize), found: (usize, usize) },
    #[error("d ∘ d ≠ 0 at degree {degree}")]
    NotAComplex { degree: usize },
    #[error("double complex shape mismatch at bidegree ({p}, {q})")]
    BidegreeShape { p: usize, q: usize },
    #[error("double complex law fails at bidegree ({p}, {q})")]
    NotADoubleComplex { p: usize, q: usize },
    #[error("homology through degree {requested} needs the complex built through degree {required}, but it stops at {built}")]
    InsufficientTruncation { requested: usize, built: usize, required: usize },
}
