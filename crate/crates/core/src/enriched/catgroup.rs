use std::collections::HashMap;

use super::{EnrichedError, FinCategory, FiniteGroup, Morphism};

/// A Cat-group: a group `G` whose elements are the objects of a category `C`, with a
/// multiplication functor `m: C × C → C` extending the group law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatGroup {
    group: FiniteGroup,
    category: FinCategory,
    /// `mul[a * arrows + b]` is `m(a, b)`.
    mul: Vec<usize>,
}

const CATGROUP: &str = "Cat-group";

impl CatGroup {
    /// Object `i` of `category` is element `i` of `group`; `mul` is the arrow table, row-major.
    pub fn new(group: FiniteGroup, category: FinCategory, mul: Vec<usize>) -> Result<Self, EnrichedError> {
        let m = category.morphisms().len();
        if category.objects().len() != group.order() {
            return Err(EnrichedError::shape(CATGROUP, "objects must be the group elements"));
        }
        if mul.len() != m * m || mul.iter().any(|&x| x >= m) {
            return Err(EnrichedError::shape(CATGROUP, format!("arrow multiplication must be a {m}×{m} table")));
        }
        let cg = CatGroup { group, category, mul };
        cg.validate()?;
        Ok(cg)
    }

    /// Functoriality of `m` (endpoints, identities, interchange), associativity and unit on arrows.
    pub fn validate(&self) -> Result<(), EnrichedError> {
        let (c, g) = (&self.category, &self.group);
        let m = c.morphisms().len();
        let name = |a: usize| c.morphism(a).label.clone();
        for a in 0..m {
            for b in 0..m {
                let (fa, fb, fab) = (c.morphism(a), c.morphism(b), c.morphism(self.m(a, b)));
                if fab.source != g.mul(fa.source, fb.source) || fab.target != g.mul(fa.target, fb.target) {
                    return Err(EnrichedError::violation(CATGROUP, "m respects sources and targets", vec![name(a), name(b)]));
                }
            }
        }
        for x in 0..g.order() {
            for y in 0..g.order() {
                if self.m(c.identity(x), c.identity(y)) != c.identity(g.mul(x, y)) {
                    return Err(EnrichedError::violation(CATGROUP, "m preserves identities", vec![name(c.identity(x)), name(c.identity(y))]));
                }
            }
        }
        let unit = c.identity(g.identity());
        for a in 0..m {
            if self.m(unit, a) != a || self.m(a, unit) != a {
                return Err(EnrichedError::violation(CATGROUP, "unit law for m", vec![name(a)]));
            }
            for b in 0..m {
                for d in 0..m {
                    if self.m(self.m(a, b), d) != self.m(a, self.m(b, d)) {
                        return Err(EnrichedError::violation(CATGROUP, "associativity of m", vec![name(a), name(b), name(d)]));
                    }
                }
            }
        }
        // Interchange: m(a' ∘ a, b' ∘ b) = m(a', b') ∘ m(a, b).
        let composable: Vec<(usize, usize, usize)> = (0..m)
            .flat_map(|a| (0..m).filter_map(move |a2| c.compose(a2, a).map(|h| (a, a2, h))))
            .collect();
        for &(a, a2, aa) in &composable {
            for &(b, b2, bb) in &composable {
                if Some(self.m(aa, bb)) != c.compose(self.m(a2, b2), self.m(a, b)) {
                    return Err(EnrichedError::violation(CATGROUP, "interchange law", vec![name(a2), name(a), name(b2), name(b)]));
                }
            }
        }
        Ok(())
    }

    /// The strict 2-group with no non-identity arrows.
    pub fn discrete(group: &FiniteGroup) -> Self {
        two_group_from_normal_subgroup(group, &[group.identity()]).expect("trivial subgroup is normal")
    }

    /// The strict 2-group with exactly one arrow between any two objects.
    pub fn codiscrete(group: &FiniteGroup) -> Self {
        let all: Vec<usize> = (0..group.order()).collect();
        two_group_from_normal_subgroup(group, &all).expect("the whole group is normal")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn category(&self) -> &FinCategory {
        &self.category
    }

    /// Horizontal multiplication of arrows.
    pub fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.category.morphisms().len() + b]
    }

    /// The normal subgroup `E` of objects connected to the identity.
    pub fn identity_component(&self) -> Vec<usize> {
        let comp = self.category.component_of();
        let e = comp[self.group.identity()];
        (0..self.group.order()).filter(|&x| comp[x] == e).collect()
    }

    /// The group of connected components `G/E` and the projection onto it.
    pub fn component_group(&self) -> (FiniteGroup, Vec<usize>) {
        self.group.quotient(&self.identity_component()).expect("identity component is a normal subgroup")
    }
}

/// `G_N`: objects `G`; an arrow `g → kg` for each `k ∈ N`, written `(k, g)`; vertical composition
/// multiplies in `N`, and `m` multiplies in `N ⋊ G`: `(k, g)(k', g') = (k · g k' g⁻¹, g g')`.
///
/// Arrow `(k, g)` has index `g * |N| + position of k in N`.
pub fn two_group_from_normal_subgroup(group: &FiniteGroup, normal: &[usize]) -> Result<CatGroup, EnrichedError> {
    let mut n_sorted = normal.to_vec();
    n_sorted.sort_unstable();
    n_sorted.dedup();
    if !group.is_subgroup(&n_sorted) {
        return Err(EnrichedError::violation(CATGROUP, "N is a subgroup", n_sorted.iter().map(|&x| group.label(x).to_string()).collect()));
    }
    if let Some((k, g)) = group.normality_witness(&n_sorted) {
        return Err(EnrichedError::violation(CATGROUP, "N is normal", vec![group.label(k).to_string(), group.label(g).to_string()]));
    }
    let nn = n_sorted.len();
    let pos: HashMap<usize, usize> = n_sorted.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let arrow = |k: usize, g: usize| g * nn + pos[&k];
    let mut morphisms = Vec::with_capacity(group.order() * nn);
    for g in 0..group.order() {
        for &k in &n_sorted {
            morphisms.push(Morphism::new(format!("({},{})", group.label(k), group.label(g)), g, group.mul(k, g)));
        }
    }
    let identities = (0..group.order()).map(|g| arrow(group.identity(), g)).collect();
    let mut composites = HashMap::new();
    for g in 0..group.order() {
        for &k in &n_sorted {
            for &k2 in &n_sorted {
                // (k2, kg) ∘ (k, g) = (k2 k, g)
                composites.insert((arrow(k2, group.mul(k, g)), arrow(k, g)), arrow(group.mul(k2, k), g));
            }
        }
    }
    let category = FinCategory::new(group.labels().to_vec(), morphisms, identities, composites)?;
    let m = group.order() * nn;
    let mut mul = vec![0; m * m];
    for g in 0..group.order() {
        for &k in &n_sorted {
            for g2 in 0..group.order() {
                for &k2 in &n_sorted {
                    let k3 = group.mul(k, group.conjugate(g, k2));
                    mul[arrow(k, g) * m + arrow(k2, g2)] = arrow(k3, group.mul(g, g2));
                }
            }
        }
    }
    CatGroup::new(group.clone(), category, mul)
}

/// A group with a translation-invariant preorder, given by its positive cone `P = {g : e ≤ g}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreorderedGroup {
    group: FiniteGroup,
    cone: Vec<bool>,
}

const PREORDERED: &str = "preordered group";

impl PreorderedGroup {
    /// `g ≤ h` iff `h g⁻¹ ∈ P`; `P` must contain `e` and be closed under products and conjugation.
    pub fn from_cone(group: &FiniteGroup, cone: &[usize]) -> Result<Self, EnrichedError> {
        let n = group.order();
        if cone.iter().any(|&x| x >= n) {
            return Err(EnrichedError::shape(PREORDERED, "cone element out of range"));
        }
        let mut inside = vec![false; n];
        cone.iter().for_each(|&x| inside[x] = true);
        let l = |x: usize| group.label(x).to_string();
        if !inside[group.identity()] {
            return Err(EnrichedError::violation(PREORDERED, "e ∈ P", vec![]));
        }
        for a in (0..n).filter(|&a| inside[a]) {
            for b in 0..n {
                if inside[b] && !inside[group.mul(a, b)] {
                    return Err(EnrichedError::violation(PREORDERED, "P closed under products", vec![l(a), l(b)]));
                }
                if !inside[group.conjugate(b, a)] {
                    return Err(EnrichedError::violation(PREORDERED, "P closed under conjugation", vec![l(a), l(b)]));
                }
            }
        }
        Ok(PreorderedGroup { group: group.clone(), cone: inside })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn le(&self, g: usize, h: usize) -> bool {
        self.cone[self.group.mul(h, self.group.inv(g))]
    }

    pub fn cone(&self) -> Vec<usize> {
        (0..self.group.order()).filter(|&x| self.cone[x]).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|g| (0..n).all(|h| self.le(g, h) == self.le(h, g)))
    }

    /// The preorder as a thin Cat-group. A finite cone is a normal subgroup, so this is `G_P`.
    pub fn cat_group(&self) -> CatGroup {
        two_group_from_normal_subgroup(&self.group, &self.cone()).expect("finite cones are normal subgroups")
    }
}
