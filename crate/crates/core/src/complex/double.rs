use super::{BasedChainComplex, ComplexError};
use crate::linalg::IntMatrix;
use crate::scalar::Int;

/// Double complex over ℤ on the bidegrees `p ≤ p_max`, `q ≤ q_max`, `p + q ≤ total_max`.
///
/// Horizontal maps lower `p`, vertical maps lower `q`, and the two commute.
#[derive(Clone, Debug)]
pub struct BasedDoubleComplex<B> {
    p_max: usize,
    q_max: usize,
    total_max: usize,
    exact: bool,
    bases: Vec<Vec<Vec<B>>>,
    horizontal: Vec<Vec<IntMatrix>>,
    vertical: Vec<Vec<IntMatrix>>,
}

impl<B> BasedDoubleComplex<B> {
    /// Assembles a double complex. `bases[p][q]` must be present for every `q ≤ q_max` and is
    /// ignored (must be empty) outside the region; `horizontal[p][q]` maps `(p, q) → (p-1, q)`
    /// and `vertical[p][q]` maps `(p, q) → (p, q-1)`, with zero-row matrices on the edges.
    ///
    /// `exact` states that every group outside the region vanishes.
    pub fn new(
        total_max: usize,
        bases: Vec<Vec<Vec<B>>>,
        horizontal: Vec<Vec<IntMatrix>>,
        vertical: Vec<Vec<IntMatrix>>,
        exact: bool,
    ) -> Result<Self, ComplexError> {
        let p_max = bases.len().checked_sub(1).ok_or(ComplexError::NoDegrees)?;
        let q_max = bases[0].len().checked_sub(1).ok_or(ComplexError::NoDegrees)?;
        let dc = BasedDoubleComplex { p_max, q_max, total_max, exact, bases, horizontal, vertical };
        dc.check_shapes()?;
        Ok(dc)
    }

    fn check_shapes(&self) -> Result<(), ComplexError> {
        for p in 0..=self.p_max {
            for q in 0..=self.q_max {
                let n = self.rank(p, q);
                let h = &self.horizontal[p][q];
                let v = &self.vertical[p][q];
                let h_rows = if p == 0 { 0 } else { self.rank(p - 1, q) };
                let v_rows = if q == 0 { 0 } else { self.rank(p, q - 1) };
                if (h.nrows(), h.ncols()) != (h_rows, n) {
                    return Err(ComplexError::BidegreeShape { p, q });
                }
                if (v.nrows(), v.ncols()) != (v_rows, n) {
                    return Err(ComplexError::BidegreeShape { p, q });
                }
                if !self.in_region(p, q) && n > 0 {
                    return Err(ComplexError::BidegreeShape { p, q });
                }
            }
        }
        Ok(())
    }

    pub fn in_region(&self, p: usize, q: usize) -> bool {
        p <= self.p_max && q <= self.q_max && p + q <= self.total_max
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    pub fn basis(&self, p: usize, q: usize) -> &[B] {
        self.bases.get(p).and_then(|col| col.get(q)).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, p: usize, q: usize) -> usize {
        self.basis(p, q).len()
    }

    pub fn horizontal(&self, p: usize, q: usize) -> &IntMatrix {
        &self.horizontal[p][q]
    }

    pub fn vertical(&self, p: usize, q: usize) -> &IntMatrix {
        &self.vertical[p][q]
    }

    /// Checks that rows and columns are complexes and that the two differentials commute.
    pub fn validate(&self) -> Result<(), ComplexError> {
        let zero = |m: Result<IntMatrix, _>| m.map(|m: IntMatrix| m.is_zero()).unwrap_or(false);
        for p in 0..=self.p_max {
            for q in 0..=self.q_max {
                if !self.in_region(p, q) {
                    continue;
                }
                if p >= 2 && !zero(self.horizontal[p - 1][q].mul(&self.horizontal[p][q])) {
                    return Err(ComplexError::NotADoubleComplex { p, q });
                }
                if q >= 2 && !zero(self.vertical[p][q - 1].mul(&self.vertical[p][q])) {
                    return Err(ComplexError::NotADoubleComplex { p, q });
                }
                if p >= 1 && q >= 1 {
                    let hv = self.horizontal[p][q - 1].mul(&self.vertical[p][q]);
                    let vh = self.vertical[p - 1][q].mul(&self.horizontal[p][q]);
                    match (hv, vh) {
                        (Ok(a), Ok(b)) if a == b => {}
                        _ => return Err(ComplexError::NotADoubleComplex { p, q }),
                    }
                }
            }
        }
        Ok(())
    }
}

impl<B: Clone> BasedDoubleComplex<B> {
    /// Total complex: `Tot_n = ⊕_{p+q=n} B_{pq}` with differential `d_h + (-1)^p d_v` on the `(p, q)` block.
    ///
    /// Degrees are built as far as every antidiagonal lies inside the region.
    pub fn total_complex(&self) -> BasedChainComplex<(usize, usize, B)> {
        let top = if self.exact {
            self.p_max + self.q_max
        } else {
            self.total_max.min(self.p_max).min(self.q_max)
        };
        let blocks = |n: usize| -> Vec<(usize, usize)> {
            (0..=n).filter(|&p| n - p <= self.q_max && p <= self.p_max).map(|p| (p, n - p)).collect()
        };
        let mut bases = Vec::with_capacity(top + 1);
        // offsets[n][(p)] = position of block (p, n-p) inside Tot_n
        let mut offsets: Vec<Vec<(usize, usize, usize)>> = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let mut basis = Vec::new();
            let mut offs = Vec::new();
            for (p, q) in blocks(n) {
                offs.push((p, q, basis.len()));
                basis.extend(self.basis(p, q).iter().cloned().map(|b| (p, q, b)));
            }
            bases.push(basis);
            offsets.push(offs);
        }
        let offset = |n: usize, p: usize| -> usize {
            offsets[n].iter().find(|(pp, _, _)| *pp == p).map(|(_, _, o)| *o).expect("block present")
        };
        let mut boundaries = Vec::with_capacity(top);
        for n in 1..=top {
            let mut columns: Vec<Vec<(u32, Int)>> = Vec::with_capacity(bases[n].len());
            for &(p, q, _) in &offsets[n] {
                let h = &self.horizontal[p][q];
                let v = &self.vertical[p][q];
                let sign = if p % 2 == 0 { Int::from(1) } else { Int::from(-1) };
                for c in 0..self.rank(p, q) {
                    let mut col = Vec::new();
                    if p > 0 {
                        let o = offset(n - 1, p - 1);
                        col.extend(h.column(c).iter().map(|(r, x)| (*r + o as u32, x.clone())));
                    }
                    if q > 0 {
                        let o = offset(n - 1, p);
                        col.extend(v.column(c).iter().map(|(r, x)| (*r + o as u32, x * &sign)));
                    }
                    columns.push(col);
                }
            }
            boundaries.push(IntMatrix::from_columns(bases[n - 1].len(), columns));
        }
        BasedChainComplex::new(bases, boundaries, self.exact).expect("total complex shapes agree")
    }
}

/// Total complex of a double complex (free-function form).
pub fn total_complex<B: Clone>(b: &BasedDoubleComplex<B>) -> BasedChainComplex<(usize, usize, B)> {
    b.total_complex()
}
