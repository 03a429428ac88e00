use std::cmp::Reverse;
use std::collections::BinaryHeap;

use ibig::ops::Abs;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::scalar::{gcd, lcm, Int};

/// Diagonal of the Smith normal form: `units` ones followed by the factors in `higher`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithNormalForm {
    units: usize,
    higher: Vec<Int>,
}

impl SmithNormalForm {
    pub fn rank(&self) -> usize {
        self.units + self.higher.len()
    }

    /// Invariant factors in divisibility order (ones included, zeros omitted).
    pub fn invariant_factors(&self) -> Vec<Int> {
        std::iter::repeat_n(Int::one(), self.units).chain(self.higher.iter().cloned()).collect()
    }

    /// The invariant factors exceeding one.
    pub fn torsion(&self) -> &[Int] {
        &self.higher
    }

    /// Normal form of a diagonal matrix with the given nonzero diagonal entries.
    pub fn from_diagonal(entries: impl IntoIterator<Item = Int>) -> Self {
        let mut units = 0;
        let mut rest = Vec::new();
        for e in entries {
            let e = e.abs();
            assert!(!e.is_zero(), "diagonal entries must be nonzero");
            if e.is_one() {
                units += 1;
            } else {
                rest.push(e);
            }
        }
        // Pairwise (gcd, lcm) replacement turns any diagonal into a divisibility chain.
        for i in 0..rest.len() {
            for j in i + 1..rest.len() {
                let g = gcd(&rest[i], &rest[j]);
                if g != rest[i] {
                    let l = lcm(&rest[i], &rest[j]);
                    rest[i] = g;
                    rest[j] = l;
                }
            }
        }
        let (ones, higher): (Vec<Int>, Vec<Int>) = rest.into_iter().partition(|e| e.is_one());
        SmithNormalForm { units: units + ones.len(), higher }
    }
}

/// Smith normal form of an integer matrix.
///
/// Unit pivots are eliminated sparsely first, choosing the shortest available
/// vector each time; whatever remains is reduced densely with minimal-absolute-value
/// pivoting.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let vectors = if m.ncols() >= m.nrows() { m.clone() } else { m.transpose() };
    let mut elim = Eliminator::new(&vectors);
    elim.eliminate_units();
    let (units, residual) = elim.residual();
    let mut diagonal = dense_smith(residual);
    diagonal.extend(std::iter::repeat_n(Int::one(), units));
    SmithNormalForm::from_diagonal(diagonal)
}

struct Eliminator {
    vecs: Vec<Vec<(u32, Int)>>,
    alive: Vec<bool>,
    row_index: Vec<Vec<u32>>,
    row_count: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
    units: usize,
}

impl Eliminator {
    fn new(m: &IntMatrix) -> Self {
        let vecs: Vec<Vec<(u32, Int)>> = m.columns().to_vec();
        let mut row_index = vec![Vec::new(); m.nrows()];
        let mut row_count = vec![0; m.nrows()];
        for (v, col) in vecs.iter().enumerate() {
            for (r, _) in col {
                row_index[*r as usize].push(v as u32);
                row_count[*r as usize] += 1;
            }
        }
        Eliminator {
            alive: vec![true; vecs.len()],
            stamp: vec![0; vecs.len()],
            vecs,
            row_index,
            row_count,
            epoch: 0,
            units: 0,
        }
    }

    fn eliminate_units(&mut self) {
        let mut heap: BinaryHeap<Reverse<(usize, u32)>> = self
            .vecs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty())
            .map(|(i, v)| Reverse((v.len(), i as u32)))
            .collect();
        while let Some(Reverse((len, v))) = heap.pop() {
            let vi = v as usize;
            if !self.alive[vi] || self.vecs[vi].len() != len || len == 0 {
                continue;
            }
            let pivot = self.vecs[vi]
                .iter()
                .filter(|(_, val)| is_unit(val))
                .min_by_key(|(r, _)| self.row_count[*r as usize])
                .map(|(r, val)| (*r, val.clone()));
            if let Some((row, unit)) = pivot {
                self.pivot(vi, row, &unit, &mut heap);
            }
        }
    }

    fn pivot(&mut self, v: usize, row: u32, unit: &Int, heap: &mut BinaryHeap<Reverse<(usize, u32)>>) {
        let pivot_vec = std::mem::take(&mut self.vecs[v]);
        self.alive[v] = false;
        for (r, _) in &pivot_vec {
            self.row_count[*r as usize] -= 1;
        }
        self.epoch += 1;
        let others = std::mem::take(&mut self.row_index[row as usize]);
        for w in others {
            let wi = w as usize;
            if !self.alive[wi] || self.stamp[wi] == self.epoch {
                continue;
            }
            self.stamp[wi] = self.epoch;
            let Ok(pos) = self.vecs[wi].binary_search_by_key(&row, |(r, _)| *r) else {
                continue;
            };
            let factor = &self.vecs[wi][pos].1 * unit;
            let old = std::mem::take(&mut self.vecs[wi]);
            let merged = self.subtract_multiple(w, old, &pivot_vec, &factor);
            self.vecs[wi] = merged;
            if !self.vecs[wi].is_empty() {
                heap.push(Reverse((self.vecs[wi].len(), w)));
            }
        }
        self.units += 1;
    }

    /// `a - factor * b`, keeping row counts and the row index current for vector `w`.
    fn subtract_multiple(
        &mut self,
        w: u32,
        a: Vec<(u32, Int)>,
        b: &[(u32, Int)],
        factor: &Int,
    ) -> Vec<(u32, Int)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = b.iter().peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(ai.next().unwrap()),
                (Some((ra, _)), Some((rb, _))) if ra < rb => out.push(ai.next().unwrap()),
                (None, Some(_)) | (Some(_), Some(_)) => {
                    let (rb, vb) = bi.next().unwrap();
                    let same = matches!(ai.peek(), Some((ra, _)) if ra == rb);
                    if same {
                        let (_, va) = ai.next().unwrap();
                        let value = va - factor * vb;
                        if value.is_zero() {
                            self.row_count[*rb as usize] -= 1;
                        } else {
                            out.push((*rb, value));
                        }
                    } else {
                        self.row_count[*rb as usize] += 1;
                        self.row_index[*rb as usize].push(w);
                        out.push((*rb, -(factor * vb)));
                    }
                }
            }
        }
        out
    }

    /// Number of unit pivots and the dense matrix left over.
    fn residual(self) -> (usize, Vec<Vec<Int>>) {
        let live: Vec<&Vec<(u32, Int)>> = self
            .vecs
            .iter()
            .zip(&self.alive)
            .filter(|(v, alive)| **alive && !v.is_empty())
            .map(|(v, _)| v)
            .collect();
        let mut rows: Vec<u32> = live.iter().flat_map(|v| v.iter().map(|(r, _)| *r)).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut dense = vec![vec![Int::zero(); live.len()]; rows.len()];
        for (c, v) in live.iter().enumerate() {
            for (r, val) in v.iter() {
                let i = rows.binary_search(r).unwrap();
                dense[i][c] = val.clone();
            }
        }
        (self.units, dense)
    }
}

fn is_unit(v: &Int) -> bool {
    v.is_one() || (-v).is_one()
}

/// Nonzero diagonal entries (absolute values) of the Smith form of a dense matrix.
fn dense_smith(mut a: Vec<Vec<Int>>) -> Vec<Int> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&a, t..m, t..n) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    for j in t..n {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for row in a.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                let in_col = min_entry(&a, t..m, t..t + 1);
                let in_row = min_entry(&a, t..t + 1, t..n);
                let (pi, pj) = [in_col, in_row]
                    .into_iter()
                    .flatten()
                    .min_by_key(|(i, j)| a[*i][*j].clone().abs())
                    .expect("pivot row or column has a nonzero entry");
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let offending = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero())
            });
            match offending {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].clone().abs());
    }
    diagonal
}

fn min_entry(
    a: &[Vec<Int>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, Int)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = &a[i][j];
            if v.is_zero() {
                continue;
            }
            let abs = v.clone().abs();
            if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                let done = abs.is_one();
                best = Some((i, j, abs));
                if done {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> (Vec<Int>, usize) {
        let s = smith_normal_form(&IntMatrix::from_rows(rows));
        (s.invariant_factors(), s.rank())
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(snf(&[vec![2]]), (ints(&[2]), 1));
        assert_eq!(snf(&[vec![0, 0], vec![0, 0]]), (vec![], 0));
        assert_eq!(snf(&[vec![2, 4], vec![6, 8]]), (ints(&[2, 4]), 2));
    }

    #[test]
    fn empty_matrices() {
        assert_eq!(smith_normal_form(&IntMatrix::zeros(0, 0)).rank(), 0);
        assert_eq!(smith_normal_form(&IntMatrix::zeros(3, 0)).rank(), 0);
        assert_eq!(smith_normal_form(&IntMatrix::zeros(0, 4)).rank(), 0);
    }

    #[test]
    fn diagonal_normalization() {
        let s = SmithNormalForm::from_diagonal(ints(&[6, 4, 1, -10]));
        assert_eq!(s.invariant_factors(), ints(&[1, 2, 2, 60]));
        let s = SmithNormalForm::from_diagonal(ints(&[2, 3]));
        assert_eq!(s.invariant_factors(), ints(&[1, 6]));
    }

    #[test]
    fn mixed_unit_and_torsion() {
        // Boundary of the real projective plane's minimal cell structure in degree 2.
        assert_eq!(snf(&[vec![2], vec![0]]), (ints(&[2]), 1));
        assert_eq!(snf(&[vec![1, 1, 0], vec![1, -1, 0], vec![0, 0, 3]]), (ints(&[1, 1, 6]), 3));
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), (ints(&[1, 6]), 2));
    }
}
