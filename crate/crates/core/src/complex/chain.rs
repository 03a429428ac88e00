use std::fmt;

use rayon::prelude::*;

use super::ComplexError;
use crate::linalg::{homology_from_ranks, smith_normal_form, FgAbelianGroup, IntMatrix, SmithNormalForm};

/// How far a complex is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// Every chain group above the top stored degree is zero.
    Exact,
    /// Chain groups above the top stored degree were not built.
    BuiltThrough(usize),
}

/// Free chain complex over ℤ with labelled bases in degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct BasedChainComplex<B> {
    bases: Vec<Vec<B>>,
    /// `boundaries[k]` maps degree `k` to degree `k - 1`; `boundaries[0]` has zero rows.
    boundaries: Vec<IntMatrix>,
    truncation: Truncation,
}

impl<B> BasedChainComplex<B> {
    /// Assembles a complex from bases in degrees `0..=top` and boundaries `d_1, …, d_top`.
    ///
    /// `exact` states that all chain groups above `top` vanish. Dimensions are checked
    /// here; `d ∘ d = 0` is checked by [`validate`](Self::validate).
    pub fn new(bases: Vec<Vec<B>>, higher_boundaries: Vec<IntMatrix>, exact: bool) -> Result<Self, ComplexError> {
        if bases.is_empty() {
            return Err(ComplexError::NoDegrees);
        }
        let top = bases.len() - 1;
        if higher_boundaries.len() != top {
            return Err(ComplexError::BoundaryCount { expected: top, found: higher_boundaries.len() });
        }
        let mut boundaries = Vec::with_capacity(bases.len());
        boundaries.push(IntMatrix::zeros(0, bases[0].len()));
        for (i, d) in higher_boundaries.into_iter().enumerate() {
            let k = i + 1;
            if d.nrows() != bases[k - 1].len() || d.ncols() != bases[k].len() {
                return Err(ComplexError::BoundaryShape {
                    degree: k,
                    expected: (bases[k - 1].len(), bases[k].len()),
                    found: (d.nrows(), d.ncols()),
                });
            }
            boundaries.push(d);
        }
        let truncation = if exact { Truncation::Exact } else { Truncation::BuiltThrough(top) };
        Ok(BasedChainComplex { bases, boundaries, truncation })
    }

    /// The complex with no generators at all.
    pub fn zero() -> Self {
        BasedChainComplex {
            bases: vec![Vec::new()],
            boundaries: vec![IntMatrix::zeros(0, 0)],
            truncation: Truncation::Exact,
        }
    }

    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn is_exact(&self) -> bool {
        self.truncation == Truncation::Exact
    }

    /// Whether degree `k` is known (stored, or zero by exactness).
    pub fn knows_degree(&self, k: usize) -> bool {
        k <= self.top_degree() || self.is_exact()
    }

    /// Basis in degree `k` (empty above the top degree).
    pub fn basis(&self, k: usize) -> &[B] {
        self.bases.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, k: usize) -> usize {
        self.basis(k).len()
    }

    /// Boundary out of degree `k`; a zero matrix of the right shape above the top degree.
    pub fn boundary(&self, k: usize) -> IntMatrix {
        match self.boundaries.get(k) {
            Some(d) => d.clone(),
            None => IntMatrix::zeros(self.rank(k.saturating_sub(1)), self.rank(k)),
        }
    }

    pub fn boundary_ref(&self, k: usize) -> Option<&IntMatrix> {
        self.boundaries.get(k)
    }

    /// Checks `d_{k-1} ∘ d_k = 0` in every stored degree and reports the first failure.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for k in 2..self.boundaries.len() {
            let ok = self.boundaries[k - 1]
                .product_is_zero(&self.boundaries[k])
                .map_err(|_| ComplexError::BoundaryShape {
                    degree: k,
                    expected: (self.rank(k - 1), self.rank(k)),
                    found: (self.boundaries[k].nrows(), self.boundaries[k].ncols()),
                })?;
            if !ok {
                return Err(ComplexError::NotAComplex { degree: k });
            }
        }
        Ok(())
    }

    /// Relabels every basis element.
    pub fn map_labels<C>(self, mut f: impl FnMut(usize, B) -> C) -> BasedChainComplex<C> {
        let bases = self
            .bases
            .into_iter()
            .enumerate()
            .map(|(k, basis)| basis.into_iter().map(|b| f(k, b)).collect())
            .collect();
        BasedChainComplex { bases, boundaries: self.boundaries, truncation: self.truncation }
    }

    /// Forgets degrees above `top`, which turns the complex into a truncated one.
    pub fn truncated(mut self, top: usize) -> Self {
        if top < self.top_degree() {
            self.bases.truncate(top + 1);
            self.boundaries.truncate(top + 1);
            self.truncation = Truncation::BuiltThrough(top);
        } else if let Truncation::BuiltThrough(t) = self.truncation {
            self.truncation = Truncation::BuiltThrough(t.min(top));
        }
        self
    }

    /// Checks that homology through `max_degree` is determined.
    pub fn check_faithful(&self, max_degree: usize) -> Result<(), ComplexError> {
        match self.truncation {
            Truncation::Exact => Ok(()),
            Truncation::BuiltThrough(top) if max_degree < top => Ok(()),
            Truncation::BuiltThrough(top) => Err(ComplexError::InsufficientTruncation {
                requested: max_degree,
                built: top,
                required: max_degree + 1,
            }),
        }
    }
}

impl<B: Clone> BasedChainComplex<B> {
    /// Direct sum of complexes of the same truncation state; labels are tagged by summand index.
    pub fn direct_sum(parts: &[BasedChainComplex<B>]) -> BasedChainComplex<(usize, B)> {
        let exact = parts.iter().all(|c| c.is_exact());
        let top = if exact {
            parts.iter().map(|c| c.top_degree()).max().unwrap_or(0)
        } else {
            parts
                .iter()
                .filter_map(|c| match c.truncation {
                    Truncation::BuiltThrough(t) => Some(t),
                    Truncation::Exact => None,
                })
                .min()
                .unwrap_or(0)
        };
        let bases: Vec<Vec<(usize, B)>> = (0..=top)
            .map(|k| {
                parts
                    .iter()
                    .enumerate()
                    .flat_map(|(i, c)| c.basis(k).iter().cloned().map(move |b| (i, b)))
                    .collect()
            })
            .collect();
        let boundaries = (1..=top)
            .map(|k| {
                parts
                    .iter()
                    .fold(IntMatrix::zeros(0, 0), |acc, c| acc.direct_sum(&c.boundary(k)))
            })
            .collect();
        BasedChainComplex::new(bases, boundaries, exact).expect("direct sum of well-shaped complexes")
    }
}

/// Integral homology groups indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyTable {
    groups: Vec<FgAbelianGroup>,
}

impl HomologyTable {
    pub fn new(groups: Vec<FgAbelianGroup>) -> Self {
        HomologyTable { groups }
    }

    /// Group in degree `k`; zero beyond the stored range.
    pub fn get(&self, k: usize) -> FgAbelianGroup {
        self.groups.get(k).cloned().unwrap_or_default()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.groups.len().checked_sub(1)
    }

    pub fn groups(&self) -> &[FgAbelianGroup] {
        &self.groups
    }

    /// Restriction to degrees `0..=max_degree`.
    pub fn up_to(&self, max_degree: usize) -> HomologyTable {
        HomologyTable { groups: (0..=max_degree).map(|k| self.get(k)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.groups.iter().all(FgAbelianGroup::is_zero)
    }
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Homology of `c` in degrees `0..=max_degree`.
///
/// Fails if the complex was not built far enough to determine the requested degrees.
pub fn homology_table<B: Sync>(c: &BasedChainComplex<B>, max_degree: usize) -> Result<HomologyTable, ComplexError> {
    c.check_faithful(max_degree)?;
    // Normal forms of d_1, …, d_{max+1}, computed independently per degree.
    let forms: Vec<SmithNormalForm> = (0..=max_degree + 1)
        .into_par_iter()
        .map(|k| match c.boundary_ref(k) {
            Some(d) if k > 0 => smith_normal_form(d),
            _ => SmithNormalForm::from_diagonal([]),
        })
        .collect();
    let groups = (0..=max_degree)
        .map(|k| homology_from_ranks(c.rank(k), forms[k].rank(), &forms[k + 1]))
        .collect();
    Ok(HomologyTable { groups })
}
