//! The graded double nerve of a normed group, viewed as a one-object category enriched in
//! metric spaces.

use std::collections::BTreeMap;

use crate::enriched::NormedGroup;
use crate::scalar::Length;
use crate::simplicial::{BasedBisimplicialObject, BisimplicialSource, Region};

use super::IteratedError;

/// A `(q + 1) × p` matrix of group elements, stored row-major.
///
/// Column `j` is a point of the nerve of the hom space in degree `q`; rows are the `q + 1` vertices
/// of that simplex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl NormedMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.cols + j] as usize
    }

    fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.entries[i * self.cols + j]).collect()
    }

    fn from_columns(rows: usize, columns: &[Vec<u32>]) -> Self {
        let cols = columns.len();
        let entries = (0..rows).flat_map(|i| columns.iter().map(move |c| c[i])).collect();
        NormedMatrix { rows, cols, entries }
    }

    fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Sum over columns of the path length `Σ_i d(g_i, g_{i+1})`.
    pub fn total_length<L: Length>(&self, g: &NormedGroup<L>) -> L {
        self.columns().iter().fold(L::zero(), |acc, c| acc + column_length(g, c))
    }
}

fn column_length<L: Length>(g: &NormedGroup<L>, c: &[u32]) -> L {
    c.windows(2).fold(L::zero(), |acc, w| acc + g.distance(w[0] as usize, w[1] as usize).clone())
}

fn is_constant(c: &[u32]) -> bool {
    c.windows(2).all(|w| w[0] == w[1])
}

/// Grading-`ℓ` part of the double nerve of a normed group.
#[derive(Clone, Debug)]
pub struct NormedDoubleNerve<'a, L> {
    pub group: &'a NormedGroup<L>,
    pub grading: L,
    /// Columns of height `q + 1` and length at most the grading, grouped by length, for each `q`.
    columns: Vec<BTreeMap<L, Vec<Vec<u32>>>>,
}

impl<'a, L: Length> NormedDoubleNerve<'a, L> {
    /// Prepares columns of every height up to `q_max + 1`.
    pub fn new(group: &'a NormedGroup<L>, grading: L, q_max: usize) -> Self {
        let columns = (0..=q_max).map(|q| Self::enumerate_columns(group, &grading, q + 1)).collect();
        NormedDoubleNerve { group, grading, columns }
    }

    fn enumerate_columns(group: &NormedGroup<L>, bound: &L, height: usize) -> BTreeMap<L, Vec<Vec<u32>>> {
        let n = group.group().order() as u32;
        let mut out: BTreeMap<L, Vec<Vec<u32>>> = BTreeMap::new();
        let mut stack: Vec<(L, Vec<u32>)> = (0..n).rev().map(|g| (L::zero(), vec![g])).collect();
        while let Some((len, c)) = stack.pop() {
            if c.len() == height {
                out.entry(len).or_default().push(c);
                continue;
            }
            let last = *c.last().expect("nonempty column") as usize;
            for g in (0..n).rev() {
                let next = len.clone() + group.distance(last, g as usize).clone();
                if &next <= bound {
                    let mut d = c.clone();
                    d.push(g);
                    stack.push((next, d));
                }
            }
        }
        out
    }

    fn choose(&self, q: usize, p: usize, acc: L, chosen: &mut Vec<Vec<u32>>, out: &mut Vec<NormedMatrix>) {
        if chosen.len() == p {
            if acc == self.grading {
                out.push(NormedMatrix::from_columns(q + 1, chosen));
            }
            return;
        }
        for (len, cols) in &self.columns[q] {
            let next = acc.clone() + len.clone();
            if next > self.grading {
                break;
            }
            for c in cols {
                chosen.push(c.clone());
                self.choose(q, p, next.clone(), chosen, out);
                chosen.pop();
            }
        }
    }

    fn d(&self, a: u32, b: u32) -> &L {
        self.group.distance(a as usize, b as usize)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.group.group().mul(a as usize, b as usize) as u32
    }

    fn between(&self, a: u32, m: u32, b: u32) -> bool {
        *self.d(a, b) == self.d(a, m).clone() + self.d(m, b).clone()
    }
}

impl<L: Length> BisimplicialSource for NormedDoubleNerve<'_, L> {
    type Gen = NormedMatrix;

    fn generators(&self, p: usize, q: usize) -> Vec<NormedMatrix> {
        if p == 0 {
            return if self.grading.is_zero() { vec![NormedMatrix { rows: q + 1, cols: 0, entries: Vec::new() }] } else { Vec::new() };
        }
        let mut out = Vec::new();
        self.choose(q, p, L::zero(), &mut Vec::with_capacity(p), &mut out);
        out.sort_unstable();
        out
    }

    fn h_face(&self, p: usize, _q: usize, j: usize, g: &NormedMatrix) -> Option<NormedMatrix> {
        let mut cols = g.columns();
        if j == 0 || j == p {
            let k = if j == 0 { 0 } else { p - 1 };
            if !is_constant(&cols[k]) {
                return None;
            }
            cols.remove(k);
        } else {
            let (a, b) = (&cols[j - 1], &cols[j]);
            let prod: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| self.mul(x, y)).collect();
            let additive = (0..g.rows - 1)
                .all(|i| *self.d(prod[i], prod[i + 1]) == self.d(a[i], a[i + 1]).clone() + self.d(b[i], b[i + 1]).clone());
            if !additive {
                return None;
            }
            cols.splice(j - 1..=j, [prod]);
        }
        Some(NormedMatrix::from_columns(g.rows, &cols))
    }

    fn v_face(&self, p: usize, q: usize, i: usize, g: &NormedMatrix) -> Option<NormedMatrix> {
        let row = |r: usize| &g.entries[r * p..(r + 1) * p];
        let keep = match i {
            0 => row(0) == row(1),
            i if i == q => row(q - 1) == row(q),
            i => (0..p).all(|j| self.between(g.entry(i - 1, j) as u32, g.entry(i, j) as u32, g.entry(i + 1, j) as u32)),
        };
        keep.then(|| {
            let mut entries = g.entries.clone();
            entries.drain(i * p..(i + 1) * p);
            NormedMatrix { rows: g.rows - 1, cols: p, entries }
        })
    }

    fn h_degeneracy(&self, _p: usize, _q: usize, j: usize, g: &NormedMatrix) -> NormedMatrix {
        let mut cols = g.columns();
        cols.insert(j, vec![self.group.group().identity() as u32; g.rows]);
        NormedMatrix::from_columns(g.rows, &cols)
    }

    fn v_degeneracy(&self, p: usize, _q: usize, i: usize, g: &NormedMatrix) -> NormedMatrix {
        let mut entries = g.entries.clone();
        let dup: Vec<u32> = g.entries[i * p..(i + 1) * p].to_vec();
        entries.splice(i * p..i * p, dup);
        NormedMatrix { rows: g.rows + 1, cols: p, entries }
    }
}

/// Grading-`ℓ` double nerve of a normed group on `region`.
pub fn double_nerve_normed_group<L: Length>(
    g: &NormedGroup<L>,
    grading: L,
    region: Region,
) -> Result<BasedBisimplicialObject<NormedMatrix>, IteratedError> {
    let src = NormedDoubleNerve::new(g, grading, region.q_max);
    Ok(BasedBisimplicialObject::from_source(&src, region)?)
}

/// Every grading that can carry homology in total degree below `max_degree`: sums of at most
/// `⌊max_degree / 2⌋ · ⌈max_degree / 2⌉` positive norm values, zero included.
pub fn reachable_gradings<L: Length>(g: &NormedGroup<L>, max_degree: usize) -> Vec<L> {
    let steps = (max_degree / 2) * max_degree.div_ceil(2);
    let values: Vec<L> = g.norm_values().into_iter().filter(|v| !v.is_zero()).collect();
    let mut reached = std::collections::BTreeSet::from([L::zero()]);
    let mut frontier = reached.clone();
    for _ in 0..steps {
        frontier = frontier.iter().flat_map(|s| values.iter().map(move |v| s.clone() + v.clone())).collect();
        reached.extend(frontier.iter().cloned());
    }
    reached.into_iter().collect()
}
