//! Validated finite presentations of the enriched structures: groups, categories,
//! generalized metric spaces, normed groups, Cat-groups, preordered groups and strict n-categories.

mod catgroup;
mod category;
mod group;
mod metric;
mod ncat;
mod normed;

pub use catgroup::{two_group_from_normal_subgroup, CatGroup, PreorderedGroup};
pub use category::{FinCategory, Morphism};
pub use group::{small_groups, FiniteGroup};
pub use metric::{tensor_metric, GenMetricSpace};
pub use ncat::{sphere_ncat, suspension, StrictNCat};
pub use normed::{word_norm_group, NormedGroup};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnrichedError {
    #[error("{structure}: {what}")]
    Shape { structure: &'static str, what: String },
    #[error("{structure}: label {label} appears twice")]
    DuplicateLabel { structure: &'static str, label: String },
    #[error("{structure} violates {law}: {}", .witnesses.join(", "))]
    Violation { structure: &'static str, law: &'static str, witnesses: Vec<String> },
}

impl EnrichedError {
    pub(crate) fn violation(structure: &'static str, law: &'static str, witnesses: Vec<String>) -> Self {
        EnrichedError::Violation { structure, law, witnesses }
    }

    pub(crate) fn shape(structure: &'static str, what: impl Into<String>) -> Self {
        EnrichedError::Shape { structure, what: what.into() }
    }
}

pub(crate) fn check_unique_labels(structure: &'static str, labels: &[String]) -> Result<(), EnrichedError> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(EnrichedError::DuplicateLabel { structure, label: l.clone() });
        }
    }
    Ok(())
}
