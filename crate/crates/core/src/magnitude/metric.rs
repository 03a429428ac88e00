use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::MagnitudeError;
use crate::complex::{homology_table, BasedChainComplex, ComplexError, GradedChainComplex, HomologyTable};
use crate::enriched::GenMetricSpace;
use crate::linalg::IntMatrix;
use crate::scalar::{Int, Length};
use crate::simplicial::{BasedSimplicialObject, SimplicialError, SimplicialSource};

/// Which length gradings to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gradings<L> {
    Explicit(Vec<L>),
    /// Every length realized by a tuple of degree at most the truncation degree.
    AllReachable,
}

/// Result of an adjacency test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjacency {
    Adjacent,
    /// A point strictly between the two.
    Witness(usize),
}

/// Whether `x` and `y` are adjacent, that is, no third point lies between them.
pub fn adjacency<L: Length>(x_space: &GenMetricSpace<L>, x: usize, y: usize) -> Result<Adjacency, MagnitudeError> {
    if x == y || x >= x_space.len() || y >= x_space.len() {
        return Err(MagnitudeError::InvalidPair { x, y });
    }
    Ok((0..x_space.len())
        .find(|&z| z != x && z != y && x_space.is_between(x, z, y))
        .map_or(Adjacency::Adjacent, Adjacency::Witness))
}

fn step<L: Length>(x: &GenMetricSpace<L>, a: usize, b: usize) -> Option<&L> {
    x.d(a, b).finite()
}

/// Tuples of degree `0..=max_degree` with consecutive points distinct and finite length, grouped by
/// length and degree, each group in lexicographic order. Lengths above `bound` are pruned.
fn enumerate_tuples<L: Length>(
    x: &GenMetricSpace<L>,
    max_degree: usize,
    bound: Option<&L>,
    allow_repeats: bool,
) -> BTreeMap<L, Vec<Vec<Vec<usize>>>> {
    let per_start: Vec<Vec<(L, Vec<usize>)>> = (0..x.len())
        .into_par_iter()
        .map(|start| {
            let mut out = Vec::new();
            let mut stack = vec![(L::zero(), vec![start])];
            // Depth-first with children pushed in reverse, so tuples come out in preorder.
            while let Some((len, t)) = stack.pop() {
                if t.len() <= max_degree {
                    let last = *t.last().expect("nonempty tuple");
                    for y in (0..x.len()).rev() {
                        if y == last && !allow_repeats {
                            continue;
                        }
                        let Some(d) = step(x, last, y) else { continue };
                        let next = len.clone() + d.clone();
                        if bound.is_some_and(|b| &next > b) {
                            continue;
                        }
                        let mut u = t.clone();
                        u.push(y);
                        stack.push((next, u));
                    }
                }
                out.push((len, t));
            }
            out
        })
        .collect();
    let mut graded: BTreeMap<L, Vec<Vec<Vec<usize>>>> = BTreeMap::new();
    for (len, t) in per_start.into_iter().flatten() {
        let n = t.len() - 1;
        graded.entry(len).or_insert_with(|| vec![Vec::new(); max_degree + 1])[n].push(t);
    }
    graded
}

/// `true` when no tuple of degree `degree` can have length `l`.
fn degree_exceeds_support<L: Length>(x: &GenMetricSpace<L>, degree: usize, l: &L) -> bool {
    let min_positive = x
        .distances()
        .iter()
        .flatten()
        .filter_map(|d| d.finite())
        .filter(|d| !d.is_zero())
        .min()
        .cloned();
    match min_positive {
        None => degree > 0,
        Some(m) => &(0..degree).fold(L::zero(), |acc, _| acc + m.clone()) > l,
    }
}

/// The normalized magnitude complex, one chain complex per length grading.
///
/// Degree-`n` generators are tuples `(x_0, …, x_n)` with `x_i ≠ x_{i+1}` and total length `ℓ`;
/// `∂ = Σ_{0<i<n} (-1)^i δ_i` where `δ_i` deletes `x_i` if it lies between its neighbours and is
/// zero otherwise. Each grading is built through `max_degree`, so homology is determined below it;
/// a grading whose support ends by `max_degree` is marked exact.
pub fn magnitude_complex_metric<L: Length>(
    x: &GenMetricSpace<L>,
    max_degree: usize,
    gradings: &Gradings<L>,
) -> GradedChainComplex<L, Vec<usize>> {
    let bound = match gradings {
        Gradings::Explicit(ls) => ls.iter().max(),
        Gradings::AllReachable => None,
    };
    let mut tuples = enumerate_tuples(x, max_degree, bound, false);
    if let Gradings::Explicit(ls) = gradings {
        for l in ls {
            tuples.entry(l.clone()).or_insert_with(|| vec![Vec::new(); max_degree + 1]);
        }
        tuples.retain(|l, _| ls.contains(l));
    }
    let pieces = tuples
        .into_par_iter()
        .map(|(l, bases)| {
            let exact = degree_exceeds_support(x, max_degree + 1, &l);
            (l, metric_piece(x, bases, exact))
        })
        .collect();
    GradedChainComplex::new(pieces)
}

fn metric_piece<L: Length>(x: &GenMetricSpace<L>, bases: Vec<Vec<Vec<usize>>>, exact: bool) -> BasedChainComplex<Vec<usize>> {
    let index: Vec<HashMap<&[usize], u32>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, t)| (t.as_slice(), i as u32)).collect()).collect();
    let boundaries = (1..bases.len())
        .map(|n| {
            let columns: Vec<Vec<(u32, Int)>> = bases[n]
                .iter()
                .map(|t| {
                    (1..n)
                        .filter(|&i| x.is_between(t[i - 1], t[i], t[i + 1]))
                        .map(|i| {
                            debug_assert_ne!(t[i - 1], t[i + 1], "a between point separates distinct neighbours");
                            let mut face = t.clone();
                            face.remove(i);
                            let row = index[n - 1][face.as_slice()];
                            (row, if i % 2 == 0 { Int::from(1) } else { Int::from(-1) })
                        })
                        .collect()
                })
                .collect();
            IntMatrix::from_columns(bases[n - 1].len(), columns)
        })
        .collect();
    BasedChainComplex::new(bases, boundaries, exact).expect("metric chain shapes follow the bases")
}

/// Homology of every grading of a graded complex in degrees `0..=max_degree`.
pub fn graded_homology<L: Length, B: Sync>(
    c: &GradedChainComplex<L, B>,
    max_degree: usize,
) -> Result<BTreeMap<L, HomologyTable>, ComplexError> {
    c.pieces().iter().map(|(l, piece)| Ok((l.clone(), homology_table(piece, max_degree)?))).collect()
}

/// One length grading of the unnormalized magnitude nerve of a metric space.
///
/// Generators are all tuples of length `ℓ`, repeats allowed. Inner faces delete a point lying
/// between its neighbours; the outer faces delete an end point only when it equals its neighbour,
/// since otherwise the length drops out of grading `ℓ`. Degeneracies repeat a point.
#[derive(Clone, Debug)]
pub struct MetricNerve<'a, L> {
    pub space: &'a GenMetricSpace<L>,
    pub grading: L,
    /// Generators of every degree, precomputed through a fixed degree.
    tuples: Vec<Vec<Vec<usize>>>,
}

impl<'a, L: Length> MetricNerve<'a, L> {
    pub fn new(space: &'a GenMetricSpace<L>, grading: L, max_degree: usize) -> Self {
        let tuples = enumerate_tuples(space, max_degree, Some(&grading), true)
            .remove(&grading)
            .unwrap_or_else(|| vec![Vec::new(); max_degree + 1]);
        MetricNerve { space, grading, tuples }
    }
}

impl<L: Length> SimplicialSource for MetricNerve<'_, L> {
    type Gen = Vec<usize>;

    fn generators(&self, n: usize) -> Vec<Vec<usize>> {
        self.tuples.get(n).cloned().unwrap_or_default()
    }

    fn face(&self, n: usize, i: usize, t: &Vec<usize>) -> Option<Vec<usize>> {
        let keep = match i {
            0 => t[0] == t[1],
            i if i == n => t[n - 1] == t[n],
            i => self.space.is_between(t[i - 1], t[i], t[i + 1]),
        };
        keep.then(|| {
            let mut h = t.clone();
            h.remove(i);
            h
        })
    }

    fn degeneracy(&self, _n: usize, i: usize, t: &Vec<usize>) -> Vec<usize> {
        let mut h = t.clone();
        h.insert(i, t[i]);
        h
    }
}

/// The grading-`ℓ` unnormalized magnitude nerve in degrees `0..=max_degree`.
pub fn metric_nerve<L: Length>(
    x: &GenMetricSpace<L>,
    grading: L,
    max_degree: usize,
) -> Result<BasedSimplicialObject<Vec<usize>>, SimplicialError> {
    BasedSimplicialObject::from_source(&MetricNerve::new(x, grading, max_degree), max_degree)
}
