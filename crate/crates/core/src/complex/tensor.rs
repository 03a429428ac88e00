use std::collections::BTreeMap;

use super::{BasedChainComplex, Truncation};
use crate::linalg::IntMatrix;
use crate::scalar::{Int, Length};

/// Tensor product of complexes with the Koszul sign `d(c ⊗ d) = dc ⊗ d + (-1)^j c ⊗ dd`.
///
/// Within `(C ⊗ D)_n` the basis lists the blocks `C_j ⊗ D_{n-j}` by increasing `j`,
/// each block in lexicographic order of the pair.
pub fn tensor_complex<B1: Clone, B2: Clone>(
    c: &BasedChainComplex<B1>,
    d: &BasedChainComplex<B2>,
) -> BasedChainComplex<(B1, B2)> {
    let (top, exact) = match (c.truncation(), d.truncation()) {
        (Truncation::Exact, Truncation::Exact) => (c.top_degree() + d.top_degree(), true),
        (Truncation::Exact, Truncation::BuiltThrough(t)) | (Truncation::BuiltThrough(t), Truncation::Exact) => {
            (t, false)
        }
        (Truncation::BuiltThrough(s), Truncation::BuiltThrough(t)) => (s.min(t), false),
    };
    // offset of block C_j ⊗ D_{n-j} inside degree n
    let offset = |n: usize, j: usize| -> usize { (0..j).map(|i| c.rank(i) * d.rank(n - i)).sum() };
    let bases: Vec<Vec<(B1, B2)>> = (0..=top)
        .map(|n| {
            (0..=n)
                .flat_map(|j| {
                    c.basis(j).iter().flat_map(move |x| d.basis(n - j).iter().map(move |y| (x.clone(), y.clone())))
                })
                .collect()
        })
        .collect();
    let boundaries = (1..=top)
        .map(|n| {
            let mut columns = Vec::with_capacity(bases[n].len());
            for j in 0..=n {
                let k = n - j;
                let dc = c.boundary(j);
                let dd = d.boundary(k);
                let sign = if j % 2 == 0 { Int::from(1) } else { Int::from(-1) };
                let (rank_c, rank_d) = (c.rank(j), d.rank(k));
                for a in 0..rank_c {
                    for b in 0..rank_d {
                        let mut col: Vec<(u32, Int)> = Vec::new();
                        if j > 0 {
                            let base = offset(n - 1, j - 1);
                            let width = d.rank(k);
                            for (r, x) in dc.column(a) {
                                col.push(((base + *r as usize * width + b) as u32, x.clone()));
                            }
                        }
                        if k > 0 {
                            let base = offset(n - 1, j);
                            let width = d.rank(k - 1);
                            for (r, x) in dd.column(b) {
                                col.push(((base + a * width + *r as usize) as u32, x * &sign));
                            }
                        }
                        columns.push(col);
                    }
                }
            }
            IntMatrix::from_columns(bases[n - 1].len(), columns)
        })
        .collect();
    BasedChainComplex::new(bases, boundaries, exact).expect("tensor complex shapes agree")
}

/// Chain complexes indexed by an exact length grading; absent gradings are zero.
#[derive(Clone, Debug)]
pub struct GradedChainComplex<L, B> {
    pieces: BTreeMap<L, BasedChainComplex<B>>,
}

impl<L: Length, B> GradedChainComplex<L, B> {
    pub fn new(pieces: BTreeMap<L, BasedChainComplex<B>>) -> Self {
        GradedChainComplex { pieces }
    }

    pub fn gradings(&self) -> impl Iterator<Item = &L> {
        self.pieces.keys()
    }

    pub fn get(&self, grading: &L) -> Option<&BasedChainComplex<B>> {
        self.pieces.get(grading)
    }

    pub fn pieces(&self) -> &BTreeMap<L, BasedChainComplex<B>> {
        &self.pieces
    }

    pub fn into_pieces(self) -> BTreeMap<L, BasedChainComplex<B>> {
        self.pieces
    }
}

/// Convolution tensor: the grading-`ℓ` piece is `⊕_{r+s=ℓ} C^r ⊗ D^s` over present gradings.
///
/// Labels record the pair of gradings alongside the pair of generators.
pub fn graded_tensor<L: Length, B1: Clone, B2: Clone>(
    c: &GradedChainComplex<L, B1>,
    d: &GradedChainComplex<L, B2>,
) -> GradedChainComplex<L, ((L, L), (B1, B2))> {
    let mut groups: BTreeMap<L, Vec<((L, L), BasedChainComplex<(B1, B2)>)>> = BTreeMap::new();
    for (r, cr) in &c.pieces {
        for (s, ds) in &d.pieces {
            groups
                .entry(r.clone() + s.clone())
                .or_default()
                .push(((r.clone(), s.clone()), tensor_complex(cr, ds)));
        }
    }
    let pieces = groups
        .into_iter()
        .map(|(l, parts)| {
            let (keys, complexes): (Vec<(L, L)>, Vec<_>) = parts.into_iter().unzip();
            let sum = BasedChainComplex::direct_sum(&complexes).map_labels(|_, (i, b)| (keys[i].clone(), b));
            (l, sum)
        })
        .collect();
    GradedChainComplex { pieces }
}
