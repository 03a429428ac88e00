//! Exact integer linear algebra: Smith normal form, homology of free complexes,
//! and `⊗` / `Tor` of finitely generated abelian groups.

mod group;
mod matrix;
mod smith;

pub use group::{tensor_fg, tor_fg, FgAbelianGroup};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithNormalForm};

use thiserror::Error;

use crate::scalar::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left:?} · {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("composite of consecutive boundaries is nonzero")]
    NonzeroComposite,
    #[error("invariant factor {0} is below 2")]
    BadInvariantFactor(Int),
    #[error("torsion factors {0:?} do not form a divisibility chain")]
    NotDivisibilityChain(Vec<Int>),
}

/// `ker d_k / im d_{k+1}` for consecutive boundaries `d_k: ℤ^{n_k} → ℤ^{n_{k-1}}`
/// and `d_{k+1}: ℤ^{n_{k+1}} → ℤ^{n_k}`.
pub fn homology_between(d_k: &IntMatrix, d_k_plus_1: &IntMatrix) -> Result<FgAbelianGroup, LinalgError> {
    if !d_k.product_is_zero(d_k_plus_1)? {
        return Err(LinalgError::NonzeroComposite);
    }
    let incoming = smith_normal_form(d_k_plus_1);
    let outgoing_rank = smith_normal_form(d_k).rank();
    Ok(homology_from_ranks(d_k.ncols(), outgoing_rank, &incoming))
}

/// Homology in a degree with `n_k` generators, given the rank of the outgoing boundary
/// and the normal form of the incoming one.
pub fn homology_from_ranks(n_k: usize, outgoing_rank: usize, incoming: &SmithNormalForm) -> FgAbelianGroup {
    let free_rank = n_k - outgoing_rank - incoming.rank();
    FgAbelianGroup::new(free_rank, incoming.torsion().to_vec())
        .expect("Smith normal form yields a divisibility chain")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let zero_out = IntMatrix::zeros(1, 2);
        let zero_in = IntMatrix::zeros(2, 1);
        assert_eq!(homology_between(&zero_out, &zero_in).unwrap(), FgAbelianGroup::free(2));

        let times_two = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(homology_between(&IntMatrix::zeros(0, 1), &times_two).unwrap(), FgAbelianGroup::cyclic(2));

        // Circle with two vertices and two edges, both from a to b.
        let d1 = IntMatrix::from_rows(&[vec![-1, -1], vec![1, 1]]);
        let d2 = IntMatrix::zeros(2, 0);
        assert_eq!(homology_between(&d1, &d2).unwrap(), FgAbelianGroup::free(1));
    }

    #[test]
    fn rejects_bad_input() {
        let d = IntMatrix::from_rows(&[vec![1]]);
        assert_eq!(homology_between(&d, &d), Err(LinalgError::NonzeroComposite));
        assert!(matches!(
            homology_between(&IntMatrix::zeros(1, 2), &IntMatrix::zeros(3, 1)),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }
}
