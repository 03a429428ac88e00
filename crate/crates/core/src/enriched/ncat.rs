use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use super::category::{group_by_component, number_components};
use super::{check_unique_labels, CatGroup, EnrichedError, FinCategory};

/// A finite strict n-category in globular form.
///
/// `cells[k]` lists the k-cells. For `k ≥ 1`, `source[k][c]` and `target[k][c]` are (k-1)-cells;
/// for `k < level`, `identity[k][c]` is the identity (k+1)-cell on `c`. `compose[k][j]` holds the
/// composites `b ∘_j a` of k-cells along j-cells (`j < k`), defined iff `t_j(a) = s_j(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictNCat {
    pub(super) cells: Vec<Vec<String>>,
    pub(super) source: Vec<Vec<usize>>,
    pub(super) target: Vec<Vec<usize>>,
    pub(super) identity: Vec<Vec<usize>>,
    pub(super) compose: Vec<Vec<HashMap<(usize, usize), usize>>>,
}

const NCAT: &str = "strict n-category";

impl StrictNCat {
    pub fn new(
        cells: Vec<Vec<String>>,
        source: Vec<Vec<usize>>,
        target: Vec<Vec<usize>>,
        identity: Vec<Vec<usize>>,
        compose: Vec<Vec<HashMap<(usize, usize), usize>>>,
    ) -> Result<Self, EnrichedError> {
        let x = StrictNCat { cells, source, target, identity, compose };
        x.check_shape()?;
        x.validate()?;
        Ok(x)
    }

    fn check_shape(&self) -> Result<(), EnrichedError> {
        let n = self.cells.len();
        let bad = |what: &str| Err(EnrichedError::shape(NCAT, what.to_string()));
        if n == 0 {
            return bad("at least the 0-cells are required");
        }
        for k in 0..n {
            check_unique_labels(NCAT, &self.cells[k])?;
        }
        if self.source.len() != n || self.target.len() != n || self.identity.len() != n || self.compose.len() != n {
            return bad("tables must have one entry per dimension");
        }
        for k in 0..n {
            let count = self.cells[k].len();
            let below = if k == 0 { 0 } else { self.cells[k - 1].len() };
            let expected = if k == 0 { 0 } else { count };
            if self.source[k].len() != expected || self.target[k].len() != expected {
                return bad("each positive-dimensional cell needs a source and a target");
            }
            if self.source[k].iter().chain(&self.target[k]).any(|&c| c >= below) {
                return bad("source or target out of range");
            }
            let ids = if k + 1 < n { count } else { 0 };
            if self.identity[k].len() != ids || (k + 1 < n && self.identity[k].iter().any(|&c| c >= self.cells[k + 1].len())) {
                return bad("each cell below the top dimension needs an identity");
            }
            if self.compose[k].len() != k {
                return bad("composition tables must be given along every lower dimension");
            }
            for table in &self.compose[k] {
                if table.iter().any(|(&(b, a), &c)| a >= count || b >= count || c >= count) {
                    return bad("composite out of range");
                }
            }
        }
        Ok(())
    }

    pub fn level(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, k: usize) -> &[String] {
        &self.cells[k]
    }

    pub fn cell_count(&self, k: usize) -> usize {
        self.cells[k].len()
    }

    pub fn source(&self, k: usize, c: usize) -> usize {
        self.source[k][c]
    }

    pub fn target(&self, k: usize, c: usize) -> usize {
        self.target[k][c]
    }

    /// The identity (k+1)-cell on the k-cell `c`.
    pub fn identity(&self, k: usize, c: usize) -> usize {
        self.identity[k][c]
    }

    /// The j-dimensional source of the k-cell `c`.
    pub fn source_at(&self, k: usize, c: usize, j: usize) -> usize {
        (j..k).rev().fold(c, |x, d| self.source[d + 1][x])
    }

    pub fn target_at(&self, k: usize, c: usize, j: usize) -> usize {
        (j..k).rev().fold(c, |x, d| self.target[d + 1][x])
    }

    /// The identity k-cell on the j-cell `c`, iterated.
    pub fn identity_at(&self, j: usize, c: usize, k: usize) -> usize {
        (j..k).fold(c, |x, d| self.identity[d][x])
    }

    /// `b ∘_j a` for k-cells.
    pub fn compose(&self, k: usize, j: usize, b: usize, a: usize) -> Option<usize> {
        self.compose[k][j].get(&(b, a)).copied()
    }

    fn name(&self, k: usize, c: usize) -> String {
        format!("{}-cell {}", k, self.cells[k][c])
    }

    /// Exhaustive check of globularity, identities, composition domains, unit, associativity,
    /// interchange, and composition of identities.
    pub fn validate(&self) -> Result<(), EnrichedError> {
        let n = self.level();
        let fail = |law: &'static str, w: Vec<String>| Err(EnrichedError::violation(NCAT, law, w));
        for k in 2..=n {
            for c in 0..self.cell_count(k) {
                let (s, t) = (self.source[k][c], self.target[k][c]);
                if self.source[k - 1][s] != self.source[k - 1][t] || self.target[k - 1][s] != self.target[k - 1][t] {
                    return fail("globularity", vec![self.name(k, c)]);
                }
            }
        }
        for k in 0..n {
            for c in 0..self.cell_count(k) {
                let i = self.identity[k][c];
                if self.source[k + 1][i] != c || self.target[k + 1][i] != c {
                    return fail("identity has the cell as source and target", vec![self.name(k, c)]);
                }
            }
        }
        for k in 1..=n {
            for j in 0..k {
                self.validate_composition(k, j)?;
            }
        }
        Ok(())
    }

    fn validate_composition(&self, k: usize, j: usize) -> Result<(), EnrichedError> {
        let fail = |law: &'static str, w: Vec<String>| Err(EnrichedError::violation(NCAT, law, w));
        let count = self.cell_count(k);
        let mut by_source: HashMap<usize, Vec<usize>> = HashMap::new();
        for b in 0..count {
            by_source.entry(self.source_at(k, b, j)).or_default().push(b);
        }
        let mut defined = 0;
        for a in 0..count {
            for &b in by_source.get(&self.target_at(k, a, j)).map_or(&[][..], |v| v) {
                defined += 1;
                let Some(c) = self.compose(k, j, b, a) else {
                    return fail("composite defined on composable cells", vec![self.name(k, b), self.name(k, a)]);
                };
                let ends_ok = if j + 1 == k {
                    self.source[k][c] == self.source[k][a] && self.target[k][c] == self.target[k][b]
                } else {
                    let (sa, sb, ta, tb) = (self.source[k][a], self.source[k][b], self.target[k][a], self.target[k][b]);
                    Some(self.source[k][c]) == self.compose(k - 1, j, sb, sa)
                        && Some(self.target[k][c]) == self.compose(k - 1, j, tb, ta)
                };
                if !ends_ok {
                    return fail("composite has the right boundary", vec![self.name(k, b), self.name(k, a)]);
                }
            }
        }
        if defined != self.compose[k][j].len() {
            return fail("composites only on composable cells", vec![format!("{k}-cells along {j}")]);
        }
        for a in 0..count {
            let left = self.identity_at(j, self.target_at(k, a, j), k);
            let right = self.identity_at(j, self.source_at(k, a, j), k);
            if self.compose(k, j, left, a) != Some(a) || self.compose(k, j, a, right) != Some(a) {
                return fail("unit law", vec![self.name(k, a)]);
            }
        }
        let pairs: Vec<(usize, usize, usize)> = self.compose[k][j].iter().map(|(&(b, a), &c)| (b, a, c)).collect();
        for &(b, a, ba) in &pairs {
            for &c in by_source.get(&self.target_at(k, b, j)).map_or(&[][..], |v| v) {
                if self.compose(k, j, c, ba) != self.compose(k, j, c, b).and_then(|cb| self.compose(k, j, cb, a)) {
                    return fail("associativity", vec![self.name(k, c), self.name(k, b), self.name(k, a)]);
                }
            }
        }
        // (d ∘_i c) ∘_j (b ∘_i a) = (d ∘_j b) ∘_i (c ∘_j a) for j < i < k.
        for i in j + 1..k {
            let vertical: Vec<(usize, usize, usize)> = self.compose[k][i].iter().map(|(&(c, a), &ca)| (c, a, ca)).collect();
            for &(c, a, ca) in &vertical {
                for &(d, b, db) in &vertical {
                    let Some(lhs) = self.compose(k, j, db, ca) else { continue };
                    let rhs = self
                        .compose(k, j, d, c)
                        .zip(self.compose(k, j, b, a))
                        .and_then(|(dc, ba)| self.compose(k, i, dc, ba));
                    if rhs != Some(lhs) {
                        return fail("interchange law", vec![self.name(k, d), self.name(k, c), self.name(k, b), self.name(k, a)]);
                    }
                }
            }
        }
        if k < self.level() {
            for (&(b, a), &c) in &self.compose[k][j] {
                let ids = self.compose(k + 1, j, self.identity[k][b], self.identity[k][a]);
                if ids != Some(self.identity[k][c]) {
                    return fail("composites of identities are identities", vec![self.name(k, b), self.name(k, a)]);
                }
            }
        }
        Ok(())
    }

    /// A finite set as a 0-category.
    pub fn discrete_set(labels: Vec<String>) -> Result<Self, EnrichedError> {
        StrictNCat::new(vec![labels], vec![vec![]], vec![vec![]], vec![vec![]], vec![vec![]])
    }

    /// An ordinary category as a 1-category.
    pub fn from_category(cat: &FinCategory) -> Self {
        let m = cat.morphisms().len();
        let mut composites = HashMap::new();
        for g in 0..m {
            for f in 0..m {
                if let Some(h) = cat.compose(g, f) {
                    composites.insert((g, f), h);
                }
            }
        }
        StrictNCat::new(
            vec![cat.objects().to_vec(), cat.morphisms().iter().map(|f| f.label.clone()).collect()],
            vec![vec![], cat.morphisms().iter().map(|f| f.source).collect()],
            vec![vec![], cat.morphisms().iter().map(|f| f.target).collect()],
            vec![(0..cat.objects().len()).map(|x| cat.identity(x)).collect(), vec![]],
            vec![vec![], vec![composites]],
        )
        .expect("categories are 1-categories")
    }

    /// A Cat-group as a one-object 2-category: 1-cells are group elements with `h ∘_0 g = h·g`,
    /// 2-cells are arrows with `β ∘_0 α = m(β, α)` and `∘_1` the composition of the category.
    pub fn from_cat_group(cg: &CatGroup) -> Self {
        let (g, c) = (cg.group(), cg.category());
        let (n, m) = (g.order(), c.morphisms().len());
        let one: HashMap<(usize, usize), usize> =
            (0..n).flat_map(|b| (0..n).map(move |a| ((b, a), g.mul(b, a)))).collect();
        let two_h: HashMap<(usize, usize), usize> =
            (0..m).flat_map(|b| (0..m).map(move |a| ((b, a), cg.m(b, a)))).collect();
        let two_v: HashMap<(usize, usize), usize> = (0..m)
            .flat_map(|b| (0..m).filter_map(move |a| c.compose(b, a).map(|h| ((b, a), h))))
            .collect();
        StrictNCat::new(
            vec![vec!["*".into()], g.labels().to_vec(), c.morphisms().iter().map(|f| f.label.clone()).collect()],
            vec![vec![], vec![0; n], c.morphisms().iter().map(|f| f.source).collect()],
            vec![vec![], vec![0; n], c.morphisms().iter().map(|f| f.target).collect()],
            vec![vec![g.identity()], (0..n).map(|x| c.identity(x)).collect(), vec![]],
            vec![vec![], vec![one], vec![two_h, two_v]],
        )
        .expect("Cat-groups are one-object 2-categories")
    }

    /// One cell in every dimension up to `level`.
    pub fn terminal(level: usize) -> Self {
        let mut x = StrictNCat::discrete_set(vec!["*".into()]).expect("point");
        for _ in 0..level {
            x = x.raise();
        }
        x
    }

    /// Adds identity cells one dimension up (the same structure viewed as a (level+1)-category).
    fn raise(&self) -> Self {
        let n = self.level();
        let top = self.cell_count(n);
        let mut x = self.clone();
        x.cells.push(self.cells[n].iter().map(|c| format!("id({c})")).collect());
        x.source.push((0..top).collect());
        x.target.push((0..top).collect());
        x.identity[n] = (0..top).collect();
        x.identity.push(vec![]);
        let mut tables = self.compose[n].clone();
        tables.push((0..top).map(|c| ((c, c), c)).collect());
        x.compose.push(tables);
        x
    }

    /// Connected components of the 0-cells under nonempty hom.
    pub fn component_of(&self) -> Vec<usize> {
        let mut uf = UnionFind::<usize>::new(self.cell_count(0));
        if self.level() >= 1 {
            for c in 0..self.cell_count(1) {
                uf.union(self.source[1][c], self.target[1][c]);
            }
        }
        number_components(&uf.into_labeling())
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        group_by_component(&self.component_of())
    }
}

/// `ΓX`: 0-cells `A`, `B`; `hom(A, A)` and `hom(B, B)` terminal, `hom(B, A)` empty, `hom(A, B) = X`.
///
/// In dimension `k ≥ 1` the cells are the iterated identities of `A` and `B` followed by the
/// (k-1)-cells of `X`.
pub fn suspension(x: &StrictNCat) -> StrictNCat {
    let n = x.level() + 1;
    let shift = |c: usize| c + 2;
    let mut cells = vec![vec!["A".to_string(), "B".to_string()]];
    let mut source = vec![vec![]];
    let mut target = vec![vec![]];
    let mut identity = Vec::new();
    let mut compose = vec![vec![]];
    let idname = |k: usize, o: &str| format!("{}{}{}", "id(".repeat(k), o, ")".repeat(k));
    for k in 1..=n {
        let mut names = vec![idname(k, "A"), idname(k, "B")];
        names.extend(x.cells[k - 1].iter().cloned());
        cells.push(names);
        let (s, t): (Vec<usize>, Vec<usize>) = if k == 1 {
            let ends = (0..x.cell_count(0)).map(|_| (0, 1));
            [(0, 0), (1, 1)].into_iter().chain(ends).unzip()
        } else {
            let inner = (0..x.cell_count(k - 1)).map(|c| (shift(x.source[k - 1][c]), shift(x.target[k - 1][c])));
            [(0, 0), (1, 1)].into_iter().chain(inner).unzip()
        };
        source.push(s);
        target.push(t);
        let mut tables = Vec::with_capacity(k);
        // Along 0-cells: whiskering by identities of A or B acts as a unitor.
        let mut zero: HashMap<(usize, usize), usize> = HashMap::from([((0, 0), 0), ((1, 1), 1)]);
        for c in 0..x.cell_count(k - 1) {
            zero.insert((shift(c), 0), shift(c));
            zero.insert((1, shift(c)), shift(c));
        }
        tables.push(zero);
        for j in 1..k {
            let mut t: HashMap<(usize, usize), usize> = HashMap::from([((0, 0), 0), ((1, 1), 1)]);
            for (&(b, a), &c) in &x.compose[k - 1][j - 1] {
                t.insert((shift(b), shift(a)), shift(c));
            }
            tables.push(t);
        }
        compose.push(tables);
    }
    for k in 0..n {
        let mut ids = vec![0, 1];
        if k == 0 {
            ids = vec![0, 1];
        } else {
            ids.extend(x.identity[k - 1].iter().map(|&c| shift(c)));
        }
        identity.push(ids);
    }
    identity.push(vec![]);
    StrictNCat::new(cells, source, target, identity, compose).expect("suspensions are strict n-categories")
}

/// `𝕊⁰` is the two-point set and `𝕊ⁿ = Γ𝕊ⁿ⁻¹`.
pub fn sphere_ncat(n: usize) -> StrictNCat {
    let mut x = StrictNCat::discrete_set(vec!["N".into(), "S".into()]).expect("two points");
    for _ in 0..n {
        x = suspension(&x);
    }
    x
}
