//! Homology of a parsed structure, as an ungraded table or one table per length grading.

use std::collections::BTreeMap;

use maghom::complex::{homology_table, HomologyTable};
use maghom::enriched::{tensor_metric, FinCategory, GenMetricSpace, StrictNCat};
use maghom::iterated::{ncat_homology, normed_group_homology, IteratedError, Route};
use maghom::magnitude::{graded_homology, magnitude_complex_metric, nerve_category, Gradings};
use maghom::simplicial::normalized_chains;
use maghom::Rational;
use thiserror::Error;

use crate::input::Structure;

#[derive(Debug, Error)]
pub enum ComputeError {
    #[error(transparent)]
    Iterated(#[from] IteratedError),
    #[error(transparent)]
    Oracle(#[from] maghom::oracles::OracleError),
    #[error("{kind} inputs are ungraded; drop --grading")]
    Ungraded { kind: &'static str },
}

impl From<maghom::complex::ComplexError> for ComputeError {
    fn from(e: maghom::complex::ComplexError) -> Self {
        ComputeError::Iterated(e.into())
    }
}

impl From<maghom::simplicial::SimplicialError> for ComputeError {
    fn from(e: maghom::simplicial::SimplicialError) -> Self {
        ComputeError::Iterated(e.into())
    }
}

#[derive(Clone, Debug)]
pub struct Request {
    pub max_degree: usize,
    /// Empty means every reachable grading.
    pub gradings: Vec<Rational>,
    pub route: Route,
    pub normalize_rows: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homology {
    Ungraded(HomologyTable),
    Graded(BTreeMap<Rational, HomologyTable>),
}

fn category_homology(c: &FinCategory, req: &Request) -> Result<HomologyTable, ComputeError> {
    match req.route {
        Route::Diagonal => {
            let s = nerve_category(c, req.max_degree + 1)?;
            Ok(homology_table(&normalized_chains(&s), req.max_degree)?)
        }
        Route::Tot => Ok(ncat_homology(&StrictNCat::from_category(c), req.max_degree + 1, Route::Tot, req.normalize_rows)?),
    }
}

fn metric_homology(x: &GenMetricSpace<Rational>, req: &Request) -> Result<BTreeMap<Rational, HomologyTable>, ComputeError> {
    let gradings = if req.gradings.is_empty() { Gradings::AllReachable } else { Gradings::Explicit(req.gradings.clone()) };
    Ok(graded_homology(&magnitude_complex_metric(x, req.max_degree + 1, &gradings), req.max_degree)?)
}

pub fn homology(s: &Structure, req: &Request) -> Result<Homology, ComputeError> {
    let ungraded = |kind| if req.gradings.is_empty() { Ok(()) } else { Err(ComputeError::Ungraded { kind }) };
    Ok(match s {
        Structure::Category(c) => {
            ungraded(s.kind())?;
            Homology::Ungraded(category_homology(c, req)?)
        }
        Structure::CategoryProduct(a, b) => {
            ungraded(s.kind())?;
            Homology::Ungraded(category_homology(&a.product(b), req)?)
        }
        Structure::Metric(x) => Homology::Graded(metric_homology(x, req)?),
        Structure::MetricTensor(x, y) => Homology::Graded(metric_homology(&tensor_metric(x, y), req)?),
        Structure::Normed(g) => {
            let gradings = if req.gradings.is_empty() { Gradings::AllReachable } else { Gradings::Explicit(req.gradings.clone()) };
            Homology::Graded(normed_group_homology(g, &gradings, req.max_degree + 1, req.route, req.normalize_rows)?)
        }
        Structure::CatGroup(g) => {
            ungraded(s.kind())?;
            Homology::Ungraded(ncat_homology(&StrictNCat::from_cat_group(g), req.max_degree + 1, req.route, req.normalize_rows)?)
        }
        Structure::NCat { x, .. } => {
            ungraded(s.kind())?;
            Homology::Ungraded(ncat_homology(x, req.max_degree + 1, req.route, req.normalize_rows)?)
        }
    })
}
