use std::collections::{BTreeSet, VecDeque};

use super::{EnrichedError, FiniteGroup, GenMetricSpace};
use crate::scalar::{Distance, Length};

/// A finite group with a conjugation-invariant norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormedGroup<L> {
    group: FiniteGroup,
    norm: Vec<L>,
}

const NORMED: &str = "normed group";

impl<L: Length> NormedGroup<L> {
    pub fn new(group: FiniteGroup, norm: Vec<L>) -> Result<Self, EnrichedError> {
        if norm.len() != group.order() {
            return Err(EnrichedError::shape(NORMED, "one norm value per element is required"));
        }
        let g = NormedGroup { group, norm };
        g.validate()?;
        Ok(g)
    }

    /// `|e| = 0`, `|g| > 0` otherwise, `|gh| ≤ |g| + |h|`, and `|ghg⁻¹| = |h|`.
    pub fn validate(&self) -> Result<(), EnrichedError> {
        let grp = &self.group;
        let l = |x: usize| grp.label(x).to_string();
        for g in 0..grp.order() {
            let zero = self.norm[g].is_zero();
            if g == grp.identity() && !zero {
                return Err(EnrichedError::violation(NORMED, "|e| = 0", vec![l(g)]));
            }
            if g != grp.identity() && zero {
                return Err(EnrichedError::violation(NORMED, "|g| > 0 for g ≠ e", vec![l(g)]));
            }
        }
        for g in 0..grp.order() {
            for h in 0..grp.order() {
                if self.norm[grp.mul(g, h)] > self.norm[g].clone() + self.norm[h].clone() {
                    return Err(EnrichedError::violation(NORMED, "|gh| ≤ |g| + |h|", vec![l(g), l(h)]));
                }
                if self.norm[grp.conjugate(g, h)] != self.norm[h] {
                    return Err(EnrichedError::violation(NORMED, "conjugation invariance", vec![l(g), l(h)]));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn norm(&self, g: usize) -> &L {
        &self.norm[g]
    }

    pub fn norms(&self) -> &[L] {
        &self.norm
    }

    /// The bi-invariant metric `d(g, h) = |g h⁻¹|`.
    pub fn distance(&self, g: usize, h: usize) -> &L {
        &self.norm[self.group.mul(g, self.group.inv(h))]
    }

    /// Distinct norm values, ascending.
    pub fn norm_values(&self) -> Vec<L> {
        self.norm.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn metric_space(&self) -> GenMetricSpace<L> {
        let n = self.group.order();
        let d = (0..n).map(|g| (0..n).map(|h| Distance::Finite(self.distance(g, h).clone())).collect()).collect();
        GenMetricSpace::new(self.group.labels().to_vec(), d).expect("norms induce metrics")
    }
}

/// Word norm with respect to the conjugates of `generators` and their inverses, by breadth-first search.
pub fn word_norm_group<L: Length>(group: &FiniteGroup, generators: &[usize]) -> Result<NormedGroup<L>, EnrichedError> {
    let n = group.order();
    let steps: BTreeSet<usize> = generators
        .iter()
        .flat_map(|&s| [s, group.inv(s)])
        .flat_map(|s| (0..n).map(move |g| group.conjugate(g, s)))
        .filter(|&s| s != group.identity())
        .collect();
    let mut dist = vec![None; n];
    dist[group.identity()] = Some(0usize);
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        for &s in &steps {
            let y = group.mul(x, s);
            if dist[y].is_none() {
                dist[y] = Some(dist[x].unwrap() + 1);
                queue.push_back(y);
            }
        }
    }
    let norm = dist
        .iter()
        .enumerate()
        .map(|(g, d)| {
            d.map(L::from_count).ok_or_else(|| {
                EnrichedError::violation(NORMED, "generating set normally generates the group", vec![group.label(g).to_string()])
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    NormedGroup::new(group.clone(), norm)
}
