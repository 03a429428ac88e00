//! First-order magnitude nerves and complexes of categories and generalized metric spaces.

mod metric;
mod nerve;

pub use metric::{adjacency, graded_homology, magnitude_complex_metric, metric_nerve, Adjacency, Gradings, MetricNerve};
pub use nerve::{nerve_category, CategoryNerve};

use thiserror::Error;

use crate::complex::ComplexError;
use crate::simplicial::SimplicialError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagnitudeError {
    #[error("adjacency needs two distinct points of the space, got {x} and {y}")]
    InvalidPair { x: usize, y: usize },
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[cfg(test)]
mod tests;
