//! Iterated magnitude homology: double nerves of 2-categories and normed groups, the `MB^n`
//! nerves of strict n-categories, and the Künneth comparison for products.

mod ncat;
mod normed;

pub use ncat::{double_nerve_2cat, double_nerve_ncat, mb_n, NCatDoubleNerve, NCatNerve, NCatNerveCore};
pub use normed::{double_nerve_normed_group, reachable_gradings, NormedDoubleNerve, NormedMatrix};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::complex::{homology_table, total_complex, BasedChainComplex, ComplexError, HomologyTable};
use crate::enriched::{tensor_metric, FinCategory, GenMetricSpace, NormedGroup, StrictNCat};
use crate::magnitude::{graded_homology, magnitude_complex_metric, nerve_category, Gradings};
use crate::oracles::oracle_kunneth;
use crate::scalar::Length;
use crate::simplicial::{
    double_chains, normalized_chains, row_normalize, unnormalized_chains, BasedBisimplicialObject, BasedSimplicialObject,
    BisimplicialSource, Diagonal, Generator, Region, SimplicialError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IteratedError {
    #[error("iterated nerves need an n-category of level at least 1")]
    LevelZero,
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// How the chain complex of a double nerve is formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Chains on the diagonal simplicial object.
    Diagonal,
    /// Total complex of the double complex.
    Tot,
}

/// Chain complex of a bisimplicial source, built through total degree `max_degree`.
///
/// Generators are labelled by bidegree; diagonal generators sit at `(n, n)`. With `normalize_rows`
/// the diagonal route uses normalized chains and the Tot route drops horizontally degenerate
/// generators; homology is the same either way.
pub fn iterated_complex<S: BisimplicialSource>(
    src: &S,
    max_degree: usize,
    route: Route,
    normalize_rows: bool,
) -> Result<BasedChainComplex<(usize, usize, S::Gen)>, IteratedError> {
    Ok(match route {
        Route::Diagonal => {
            let s = BasedSimplicialObject::from_source(&Diagonal(src), max_degree)?;
            diagonal_chains(&s, normalize_rows).map_labels(|n, g| (n, n, g))
        }
        Route::Tot => {
            let b = BasedBisimplicialObject::from_source(src, Region::triangle(max_degree))?;
            tot_chains(&b, normalize_rows)
        }
    })
}

fn diagonal_chains<G: Generator>(s: &BasedSimplicialObject<G>, normalize: bool) -> BasedChainComplex<G> {
    if normalize {
        normalized_chains(s)
    } else {
        unnormalized_chains(s)
    }
}

fn tot_chains<G: Generator>(b: &BasedBisimplicialObject<G>, normalize_rows: bool) -> BasedChainComplex<(usize, usize, G)> {
    total_complex(&if normalize_rows { row_normalize(b) } else { double_chains(b) })
}

/// Iterated magnitude homology of a strict n-category in degrees below `max_degree`.
///
/// The diagonal route builds `MB^n` directly; the Tot route builds the outer double nerve.
pub fn ncat_homology(x: &StrictNCat, max_degree: usize, route: Route, normalize_rows: bool) -> Result<HomologyTable, IteratedError> {
    let top = max_degree.checked_sub(1).ok_or(ComplexError::NoDegrees)?;
    match route {
        Route::Diagonal => {
            let s = mb_n(x, max_degree)?;
            Ok(homology_table(&diagonal_chains(&s, normalize_rows), top)?)
        }
        Route::Tot => {
            let src = NCatDoubleNerve(NCatNerveCore::new(x)?);
            Ok(homology_table(&iterated_complex(&src, max_degree, Route::Tot, normalize_rows)?, top)?)
        }
    }
}

/// Iterated magnitude homology of a normed group, per grading, in degrees below `max_degree`.
///
/// `Gradings::AllReachable` takes every grading that could support homology in those degrees.
pub fn normed_group_homology<L: Length>(
    g: &NormedGroup<L>,
    gradings: &Gradings<L>,
    max_degree: usize,
    route: Route,
    normalize_rows: bool,
) -> Result<BTreeMap<L, HomologyTable>, IteratedError> {
    let top = max_degree.checked_sub(1).ok_or(ComplexError::NoDegrees)?;
    let ls = match gradings {
        Gradings::Explicit(ls) => ls.clone(),
        Gradings::AllReachable => reachable_gradings(g, max_degree),
    };
    ls.into_iter()
        .map(|l| {
            let src = NormedDoubleNerve::new(g, l.clone(), max_degree);
            let c = iterated_complex(&src, max_degree, route, normalize_rows)?;
            Ok((l, homology_table(&c, top)?))
        })
        .collect()
}

/// Direct homology of a product against the Künneth assembly from its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethReport<L> {
    pub direct: BTreeMap<L, HomologyTable>,
    pub predicted: BTreeMap<L, HomologyTable>,
}

impl<L: Length> KunnethReport<L> {
    /// Gradings where the two sides differ; a grading missing on one side counts as zero.
    pub fn mismatches(&self) -> Vec<L> {
        let zero = HomologyTable::new(Vec::new());
        let mut ls: Vec<&L> = self.direct.keys().chain(self.predicted.keys()).collect();
        ls.sort();
        ls.dedup();
        ls.into_iter()
            .filter(|l| {
                let a = self.direct.get(l).unwrap_or(&zero);
                let b = self.predicted.get(l).unwrap_or(&zero);
                let n = a.groups().len().max(b.groups().len());
                (0..n).any(|k| a.get(k) != b.get(k))
            })
            .cloned()
            .collect()
    }

    pub fn agrees(&self) -> bool {
        self.mismatches().is_empty()
    }
}

fn metric_homology<L: Length>(x: &GenMetricSpace<L>, max_degree: usize) -> Result<BTreeMap<L, HomologyTable>, IteratedError> {
    Ok(graded_homology(&magnitude_complex_metric(x, max_degree + 1, &Gradings::AllReachable), max_degree)?)
}

/// Künneth comparison for `x ⊗ y` in homological degrees `0..=max_degree`, every grading.
pub fn kunneth_check_metric<L: Length>(
    x: &GenMetricSpace<L>,
    y: &GenMetricSpace<L>,
    max_degree: usize,
) -> Result<KunnethReport<L>, IteratedError> {
    let direct = metric_homology(&tensor_metric(x, y), max_degree)?;
    let predicted = oracle_kunneth(&metric_homology(x, max_degree)?, &metric_homology(y, max_degree)?, max_degree);
    Ok(KunnethReport { direct, predicted })
}

fn category_homology(x: &FinCategory, max_degree: usize) -> Result<BTreeMap<u64, HomologyTable>, IteratedError> {
    let s = nerve_category(x, max_degree + 1)?;
    Ok(BTreeMap::from([(0, homology_table(&normalized_chains(&s), max_degree)?)]))
}

/// Künneth comparison for a product of categories; ungraded, reported under grading 0.
pub fn kunneth_check_category(x: &FinCategory, y: &FinCategory, max_degree: usize) -> Result<KunnethReport<u64>, IteratedError> {
    let direct = category_homology(&x.product(y), max_degree)?;
    let predicted = oracle_kunneth(&category_homology(x, max_degree)?, &category_homology(y, max_degree)?, max_degree);
    Ok(KunnethReport { direct, predicted })
}
