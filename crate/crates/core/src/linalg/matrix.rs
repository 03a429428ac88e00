use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::LinalgError;
use crate::scalar::Int;

/// Sparse integer matrix stored by columns.
///
/// Each column is a list of `(row, value)` pairs sorted by row with no zero values.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: Vec<Vec<(u32, Int)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let cols = (0..n).map(|i| vec![(i as u32, Int::from(1u8))]).collect();
        IntMatrix { rows: n, cols }
    }

    /// Builds a matrix from unsorted column entries; repeated rows are summed and zeros dropped.
    ///
    /// Panics if a row index is out of range.
    pub fn from_columns<I>(rows: usize, columns: I) -> Self
    where
        I: IntoIterator<Item = Vec<(u32, Int)>>,
    {
        let cols = columns.into_iter().map(|col| normalize_column(rows, col)).collect();
        IntMatrix { rows, cols }
    }

    /// Builds a matrix from columns of small coefficients.
    pub fn from_small_columns<I>(rows: usize, columns: I) -> Self
    where
        I: IntoIterator<Item = Vec<(u32, i64)>>,
    {
        Self::from_columns(
            rows,
            columns
                .into_iter()
                .map(|col| col.into_iter().map(|(r, v)| (r, Int::from(v))).collect()),
        )
    }

    /// Builds a matrix from dense rows. All rows must have the same length.
    pub fn from_rows<T: Into<Int> + Clone>(rows: &[Vec<T>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut cols = vec![Vec::new(); ncols];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (c, value) in row.iter().enumerate() {
                let value: Int = value.clone().into();
                if !value.is_zero() {
                    cols[c].push((r as u32, value));
                }
            }
        }
        IntMatrix { rows: nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(u32, Int)] {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[Vec<(u32, Int)>] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Int {
        assert!(r < self.rows && c < self.ncols(), "index ({r}, {c}) out of bounds");
        match self.cols[c].binary_search_by_key(&(r as u32), |(row, _)| *row) {
            Ok(i) => self.cols[c][i].1.clone(),
            Err(_) => Int::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn max_abs_entry(&self) -> Int {
        self.cols
            .iter()
            .flatten()
            .map(|(_, v)| v.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r as usize].push((c as u32, v.clone()));
            }
        }
        IntMatrix { rows: self.ncols(), cols }
    }

    /// The product `self · rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.ncols() != rhs.nrows() {
            return Err(LinalgError::DimensionMismatch {
                left: (self.nrows(), self.ncols()),
                right: (rhs.nrows(), rhs.ncols()),
            });
        }
        let cols = rhs
            .cols
            .iter()
            .map(|rcol| {
                let mut acc: BTreeMap<u32, Int> = BTreeMap::new();
                for (k, coeff) in rcol {
                    for (r, v) in &self.cols[*k as usize] {
                        *acc.entry(*r).or_insert_with(Int::zero) += coeff * v;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(IntMatrix { rows: self.rows, cols })
    }

    /// Whether `self · rhs` vanishes, without materializing the product.
    pub fn product_is_zero(&self, rhs: &IntMatrix) -> Result<bool, LinalgError> {
        if self.ncols() != rhs.nrows() {
            return Err(LinalgError::DimensionMismatch {
                left: (self.nrows(), self.ncols()),
                right: (rhs.nrows(), rhs.ncols()),
            });
        }
        let mut acc: BTreeMap<u32, Int> = BTreeMap::new();
        for rcol in &rhs.cols {
            acc.clear();
            for (k, coeff) in rcol {
                for (r, v) in &self.cols[*k as usize] {
                    *acc.entry(*r).or_insert_with(Int::zero) += coeff * v;
                }
            }
            if acc.values().any(|v| !v.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_dense(&self) -> Vec<Vec<Int>> {
        let mut dense = vec![vec![Int::zero(); self.ncols()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                dense[*r as usize][c] = v.clone();
            }
        }
        dense
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let shift = self.rows as u32;
        let mut cols = self.cols.clone();
        cols.extend(
            other
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (r + shift, v.clone())).collect()),
        );
        IntMatrix { rows: self.rows + other.rows, cols }
    }

    /// Reorders rows and columns: entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> IntMatrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.ncols());
        let mut cols = vec![Vec::new(); self.ncols()];
        for (c, col) in self.cols.iter().enumerate() {
            cols[col_perm[c]] =
                col.iter().map(|(r, v)| (row_perm[*r as usize] as u32, v.clone())).collect();
        }
        IntMatrix::from_columns(self.rows, cols)
    }
}

fn normalize_column(rows: usize, mut col: Vec<(u32, Int)>) -> Vec<(u32, Int)> {
    col.sort_by_key(|(r, _)| *r);
    let mut out: Vec<(u32, Int)> = Vec::with_capacity(col.len());
    for (r, v) in col {
        assert!((r as usize) < rows, "row {r} out of range for {rows} rows");
        match out.last_mut() {
            Some((last, acc)) if *last == r => *acc += v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} ", self.nrows(), self.ncols())?;
        if self.nrows() * self.ncols() <= 64 {
            f.debug_list().entries(self.to_dense()).finish()
        } else {
            write!(f, "({} nonzeros)", self.nnz())
        }
    }
}
