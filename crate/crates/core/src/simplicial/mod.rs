//! Based simplicial and bisimplicial abelian groups and their chain complexes.

mod bisimplicial;
mod chains;
mod object;
mod source;

pub use bisimplicial::{BasedBisimplicialObject, Region};
pub use chains::{diagonal, double_chains, normalized_chains, row_normalize, unnormalized_chains};
pub use object::BasedSimplicialObject;
pub use source::{BisimplicialSource, Diagonal, ExternalProduct, Generator, SimplicialSource};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("generator {0} is listed twice")]
    DuplicateGenerator(String),
    #[error("{map} {index} out of degree {degree} sends {generator} outside the basis")]
    OutsideBasis { map: &'static str, index: usize, degree: usize, generator: String },
    #[error("a simplicial object needs at least degree 0")]
    Empty,
    #[error("face or degeneracy tables do not match the bases")]
    TableShape,
    #[error("identity {identity} fails in degree {degree} (i = {i}, j = {j})")]
    IdentityFails { identity: &'static str, degree: usize, i: usize, j: usize },
    #[error("degeneracy {index} in degree {degree} is not injective")]
    DegeneracyNotInjective { degree: usize, index: usize },
    #[error("the diagonal needs a square region [0, D]², got p ≤ {p_max}, q ≤ {q_max}, p + q ≤ {total_max}")]
    NonSquare { p_max: usize, q_max: usize, total_max: usize },
}

#[cfg(test)]
mod tests;
