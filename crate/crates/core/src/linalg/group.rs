use std::fmt;

use num_traits::Zero;

use super::{smith::SmithNormalForm, LinalgError};
use crate::scalar::{gcd, Int};

/// A finitely generated abelian group `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/dₖ` with `d₁ | d₂ | …` and every `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<Int>,
}

impl FgAbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// `ℤ/n`, with `ℤ/0 = ℤ` and `ℤ/1 = 0`.
    pub fn cyclic(n: impl Into<Int>) -> Self {
        Self::from_cyclic_factors([n.into()])
    }

    /// Validated constructor from an invariant-factor decomposition.
    pub fn new(free_rank: usize, torsion: Vec<Int>) -> Result<Self, LinalgError> {
        for (i, d) in torsion.iter().enumerate() {
            if *d < Int::from(2u8) {
                return Err(LinalgError::BadInvariantFactor(d.clone()));
            }
            if i > 0 && !(d % &torsion[i - 1]).is_zero() {
                return Err(LinalgError::NotDivisibilityChain(torsion.clone()));
            }
        }
        Ok(FgAbelianGroup { free_rank, torsion })
    }

    /// The direct sum of cyclic groups `ℤ/nᵢ` (with `ℤ/0 = ℤ`), renormalized to invariant factors.
    pub fn from_cyclic_factors(factors: impl IntoIterator<Item = Int>) -> Self {
        let mut free_rank = 0;
        let mut finite = Vec::new();
        for n in factors {
            if n.is_zero() {
                free_rank += 1;
            } else {
                finite.push(n);
            }
        }
        let torsion = SmithNormalForm::from_diagonal(finite).torsion().to_vec();
        FgAbelianGroup { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Cyclic summands, free ones written as `0`.
    fn cyclic_summands(&self) -> impl Iterator<Item = Int> + '_ {
        std::iter::repeat_n(Int::zero(), self.free_rank).chain(self.torsion.iter().cloned())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_cyclic_factors(self.cyclic_summands().chain(other.cyclic_summands()))
    }
}

impl std::iter::Sum for FgAbelianGroup {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(FgAbelianGroup::zero(), |acc, g| acc.direct_sum(&g))
    }
}

/// `A ⊗ B` over ℤ.
pub fn tensor_fg(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let mut factors = Vec::new();
    for m in a.cyclic_summands() {
        for n in b.cyclic_summands() {
            // ℤ/0 = ℤ, so gcd(m, n) also covers the free cases: gcd(0, n) = n.
            factors.push(gcd(&m, &n));
        }
    }
    FgAbelianGroup::from_cyclic_factors(factors)
}

/// `Tor(A, B)` over ℤ.
pub fn tor_fg(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let mut factors = Vec::new();
    for m in a.torsion() {
        for n in b.torsion() {
            factors.push(gcd(m, n));
        }
    }
    FgAbelianGroup::from_cyclic_factors(factors)
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" ⊕ "))
    }
}
