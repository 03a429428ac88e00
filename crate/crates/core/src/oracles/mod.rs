//! Closed-form predictions for magnitude homology, computed without the iterated chain
//! machinery so they can cross-check it.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::complex::{homology_table, ComplexError, HomologyTable};
use crate::enriched::{CatGroup, FinCategory, FiniteGroup, GenMetricSpace, NormedGroup};
use crate::linalg::{homology_from_ranks, smith_normal_form, tensor_fg, tor_fg, FgAbelianGroup, IntMatrix};
use crate::magnitude::nerve_category;
use crate::scalar::{Distance, Int, Length};
use crate::simplicial::{normalized_chains, SimplicialError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("the indecomposable count describes positive gradings only")]
    ZeroGrading,
    #[error("suspension prediction needs a nonempty input")]
    EmptyInput,
    #[error("degree-0 homology {0} is not free")]
    NotFree(FgAbelianGroup),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Free abelian group on ordered pairs of distinct adjacent points at distance `ℓ`.
pub fn oracle_mh1_metric<L: Length>(x: &GenMetricSpace<L>, l: &L) -> FgAbelianGroup {
    let n = x.len();
    let dist = |a: usize, b: usize| x.d(a, b).clone();
    let count = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && x.d(a, b) == &Distance::Finite(l.clone()))
        .filter(|&(a, b)| (0..n).all(|m| m == a || m == b || &dist(a, m) + &dist(m, b) != dist(a, b)))
        .count();
    FgAbelianGroup::free(count)
}

/// Abelianization of a finite group, as the cokernel of the relations `[ab] − [a] − [b]`.
pub fn abelianization(g: &FiniteGroup) -> FgAbelianGroup {
    let n = g.order();
    let columns: Vec<Vec<(u32, Int)>> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut col: BTreeMap<u32, Int> = BTreeMap::new();
            *col.entry(g.mul(a, b) as u32).or_insert_with(|| Int::from(0)) += Int::from(1);
            *col.entry(a as u32).or_insert_with(|| Int::from(0)) -= Int::from(1);
            *col.entry(b as u32).or_insert_with(|| Int::from(0)) -= Int::from(1);
            col.into_iter().filter(|(_, v)| *v != Int::from(0)).collect()
        })
        .collect();
    homology_from_ranks(n, 0, &smith_normal_form(&IntMatrix::from_columns(n, columns)))
}

/// `(MH₀, MH₁) = (ℤ, Con(G)_ab)` for a Cat-group.
pub fn oracle_mh01_catgroup(g: &CatGroup) -> (FgAbelianGroup, FgAbelianGroup) {
    let (con, _) = g.component_group();
    (FgAbelianGroup::free(1), abelianization(&con))
}

/// Whether `g` is indecomposable: `g ≠ e` and no `h ∉ {e, g}` has `|h| + |h⁻¹g| = |g|`.
pub fn is_indecomposable<L: Length>(g: &NormedGroup<L>, x: usize) -> bool {
    let grp = g.group();
    x != grp.identity()
        && (0..grp.order())
            .filter(|&h| h != grp.identity() && h != x)
            .all(|h| g.norm(h).clone() + g.norm(grp.mul(grp.inv(h), x)).clone() != *g.norm(x))
}

/// `ℤ^k` with `k` the number of conjugacy classes of indecomposables of norm `ℓ > 0`.
pub fn oracle_mh2_normed<L: Length>(g: &NormedGroup<L>, l: &L) -> Result<FgAbelianGroup, OracleError> {
    if l.is_zero() {
        return Err(OracleError::ZeroGrading);
    }
    let classes = g
        .group()
        .conjugacy_classes()
        .into_iter()
        .filter(|c| g.norm(c[0]) == l && is_indecomposable(g, c[0]))
        .count();
    Ok(FgAbelianGroup::free(classes))
}

/// Group homology in degrees `0..=max_degree` from the normalized bar complex.
pub fn oracle_group_homology(g: &FiniteGroup, max_degree: usize) -> Result<HomologyTable, OracleError> {
    let nerve = nerve_category(&FinCategory::from_group(g), max_degree + 1)?;
    Ok(homology_table(&normalized_chains(&nerve), max_degree)?)
}

/// Homology of the suspension `ΓX` one degree beyond the table for `X`.
pub fn oracle_suspension(x: &HomologyTable) -> Result<HomologyTable, OracleError> {
    let h0 = x.get(0);
    if !h0.is_free() {
        return Err(OracleError::NotFree(h0));
    }
    if h0.free_rank() == 0 {
        return Err(OracleError::EmptyInput);
    }
    let mut groups = vec![FgAbelianGroup::free(1), FgAbelianGroup::free(h0.free_rank() - 1)];
    groups.extend(x.groups().iter().skip(1).cloned());
    Ok(HomologyTable::new(groups))
}

/// Split Künneth assembly in degrees `0..=max_degree`:
/// `⊕_{r+s=ℓ} (⊕_{j+k=n} H_j^r ⊗ H_k^s ⊕ ⊕_{j+k=n-1} Tor(H_j^r, H_k^s))`.
pub fn oracle_kunneth<L: Length>(
    hx: &BTreeMap<L, HomologyTable>,
    hy: &BTreeMap<L, HomologyTable>,
    max_degree: usize,
) -> BTreeMap<L, HomologyTable> {
    let mut out: BTreeMap<L, Vec<FgAbelianGroup>> = BTreeMap::new();
    for (r, a) in hx {
        for (s, b) in hy {
            let slot = out.entry(r.clone() + s.clone()).or_insert_with(|| vec![FgAbelianGroup::zero(); max_degree + 1]);
            for (n, group) in slot.iter_mut().enumerate() {
                let tensors = (0..=n).map(|j| tensor_fg(&a.get(j), &b.get(n - j)));
                let tors = (0..n).map(|j| tor_fg(&a.get(j), &b.get(n - 1 - j)));
                *group = group.direct_sum(&tensors.chain(tors).sum());
            }
        }
    }
    out.into_iter().map(|(l, g)| (l, HomologyTable::new(g))).collect()
}
