use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use super::{check_unique_labels, EnrichedError, FiniteGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

impl Morphism {
    pub fn new(label: impl Into<String>, source: usize, target: usize) -> Self {
        Morphism { label: label.into(), source, target }
    }
}

/// A finite category with a dense composition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    /// `compose[g * m + f] = g ∘ f` when `target(f) = source(g)`.
    compose: Vec<Option<usize>>,
    homs: Vec<Vec<Vec<usize>>>,
}

const CATEGORY: &str = "category";

impl FinCategory {
    /// Builds and validates a category. `composites` maps `(g, f)` to `g ∘ f`; composites with an
    /// identity may be omitted and are filled in by the unit law.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        composites: HashMap<(usize, usize), usize>,
    ) -> Result<Self, EnrichedError> {
        check_unique_labels(CATEGORY, &objects)?;
        let labels: Vec<String> = morphisms.iter().map(|f| f.label.clone()).collect();
        check_unique_labels(CATEGORY, &labels)?;
        let (o, m) = (objects.len(), morphisms.len());
        if let Some(f) = morphisms.iter().find(|f| f.source >= o || f.target >= o) {
            return Err(EnrichedError::shape(CATEGORY, format!("morphism {} has an unknown endpoint", f.label)));
        }
        if identities.len() != o || identities.iter().any(|&i| i >= m) {
            return Err(EnrichedError::shape(CATEGORY, "one identity morphism per object is required"));
        }
        let mut compose = vec![None; m * m];
        for (&(g, f), &h) in &composites {
            if g >= m || f >= m || h >= m {
                return Err(EnrichedError::shape(CATEGORY, "composite refers to an unknown morphism"));
            }
            compose[g * m + f] = Some(h);
        }
        let mut is_identity = vec![false; m];
        for (x, &i) in identities.iter().enumerate() {
            if morphisms[i].source != x || morphisms[i].target != x {
                return Err(EnrichedError::violation(CATEGORY, "identity is an endomorphism", vec![morphisms[i].label.clone()]));
            }
            is_identity[i] = true;
        }
        for f in 0..m {
            let (s, t) = (morphisms[f].source, morphisms[f].target);
            compose[identities[t] * m + f].get_or_insert(f);
            compose[f * m + identities[s]].get_or_insert(f);
        }
        let mut homs = vec![vec![Vec::new(); o]; o];
        for (i, f) in morphisms.iter().enumerate() {
            homs[f.source][f.target].push(i);
        }
        let cat = FinCategory { objects, morphisms, identities, compose, homs };
        cat.validate()?;
        Ok(cat)
    }

    /// Checks composability, the unit laws and associativity exhaustively.
    pub fn validate(&self) -> Result<(), EnrichedError> {
        let m = self.morphisms.len();
        let name = |i: usize| self.morphisms[i].label.clone();
        for g in 0..m {
            for f in 0..m {
                let composable = self.morphisms[f].target == self.morphisms[g].source;
                match (composable, self.compose[g * m + f]) {
                    (true, None) => {
                        return Err(EnrichedError::violation(CATEGORY, "composite defined for composable pairs", vec![name(g), name(f)]))
                    }
                    (false, Some(_)) => {
                        return Err(EnrichedError::violation(CATEGORY, "composite only for composable pairs", vec![name(g), name(f)]))
                    }
                    (true, Some(h)) => {
                        let (hf, ff, gf) = (&self.morphisms[h], &self.morphisms[f], &self.morphisms[g]);
                        if hf.source != ff.source || hf.target != gf.target {
                            return Err(EnrichedError::violation(CATEGORY, "composite has the right endpoints", vec![name(g), name(f)]));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..m {
            let (s, t) = (self.morphisms[f].source, self.morphisms[f].target);
            if self.compose(self.identities[t], f) != Some(f) || self.compose(f, self.identities[s]) != Some(f) {
                return Err(EnrichedError::violation(CATEGORY, "unit law", vec![name(f)]));
            }
        }
        for f in 0..m {
            for &g in &self.homs_from(self.morphisms[f].target) {
                let gf = self.compose(g, f).expect("composable");
                for &h in &self.homs_from(self.morphisms[g].target) {
                    if self.compose(h, gf) != self.compose(self.compose(h, g).expect("composable"), f) {
                        return Err(EnrichedError::violation(CATEGORY, "associativity", vec![name(h), name(g), name(f)]));
                    }
                }
            }
        }
        Ok(())
    }

    fn homs_from(&self, x: usize) -> Vec<usize> {
        self.homs[x].iter().flatten().copied().collect()
    }

    /// The one-object category of a group; `g ∘ f = g·f`.
    pub fn from_group(group: &FiniteGroup) -> Self {
        let n = group.order();
        let morphisms = (0..n).map(|g| Morphism::new(group.label(g), 0, 0)).collect();
        let composites = (0..n).flat_map(|g| (0..n).map(move |f| ((g, f), group.mul(g, f)))).collect();
        FinCategory::new(vec!["*".into()], morphisms, vec![group.identity()], composites).expect("groups are categories")
    }

    /// The thin category of a preorder `le[x][y]` (reflexive and transitive).
    pub fn from_preorder(objects: Vec<String>, le: &[Vec<bool>]) -> Result<Self, EnrichedError> {
        let n = objects.len();
        if le.len() != n || le.iter().any(|r| r.len() != n) {
            return Err(EnrichedError::shape("preorder", "relation must be square"));
        }
        let mut index = HashMap::new();
        let mut morphisms = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if le[x][y] {
                    index.insert((x, y), morphisms.len());
                    morphisms.push(Morphism::new(format!("{}<={}", objects[x], objects[y]), x, y));
                }
            }
        }
        let identities = (0..n)
            .map(|x| index.get(&(x, x)).copied().ok_or_else(|| EnrichedError::violation("preorder", "reflexivity", vec![objects[x].clone()])))
            .collect::<Result<Vec<_>, _>>()?;
        let mut composites = HashMap::new();
        for (&(x, y), &f) in &index {
            for z in 0..n {
                if let Some(&g) = index.get(&(y, z)) {
                    let h = index.get(&(x, z)).copied().ok_or_else(|| {
                        EnrichedError::violation("preorder", "transitivity", vec![objects[x].clone(), objects[y].clone(), objects[z].clone()])
                    })?;
                    composites.insert((g, f), h);
                }
            }
        }
        FinCategory::new(objects, morphisms, identities, composites)
    }

    /// Discrete category on the given objects.
    pub fn discrete(objects: Vec<String>) -> Self {
        let n = objects.len();
        let le: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x == y).collect()).collect();
        let morphisms = objects.iter().enumerate().map(|(x, o)| Morphism::new(format!("id_{o}"), x, x)).collect();
        let cat = FinCategory::from_preorder(objects, &le).expect("discrete preorder");
        FinCategory { morphisms, ..cat }
    }

    pub fn terminal() -> Self {
        FinCategory::discrete(vec!["*".into()])
    }

    /// `0 → 1 → … → n-1`.
    pub fn linear_order(n: usize) -> Self {
        let le: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect();
        FinCategory::from_preorder((0..n).map(|x| x.to_string()).collect(), &le).expect("linear order")
    }

    /// Two objects `A`, `B` and two parallel arrows `f, g: A → B`.
    pub fn circle() -> Self {
        let morphisms = vec![
            Morphism::new("id_A", 0, 0),
            Morphism::new("id_B", 1, 1),
            Morphism::new("f", 0, 1),
            Morphism::new("g", 0, 1),
        ];
        FinCategory::new(vec!["A".into(), "B".into()], morphisms, vec![0, 1], HashMap::new()).expect("circle category")
    }

    /// Cartesian product; morphism `(f, g)` has index `f * |mor Y| + g`.
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let (mo, oo) = (other.morphisms.len(), other.objects.len());
        let objects = self
            .objects
            .iter()
            .flat_map(|a| other.objects.iter().map(move |b| format!("({a},{b})")))
            .collect();
        let morphisms = self
            .morphisms
            .iter()
            .flat_map(|f| {
                other.morphisms.iter().map(move |g| {
                    Morphism::new(format!("({},{})", f.label, g.label), f.source * oo + g.source, f.target * oo + g.target)
                })
            })
            .collect();
        let identities =
            self.identities.iter().flat_map(|&i| other.identities.iter().map(move |&j| i * mo + j)).collect();
        let mut composites = HashMap::new();
        let m = self.morphisms.len();
        for g1 in 0..m {
            for f1 in 0..m {
                let Some(h1) = self.compose[g1 * m + f1] else { continue };
                for g2 in 0..mo {
                    for f2 in 0..mo {
                        if let Some(h2) = other.compose[g2 * mo + f2] {
                            composites.insert((g1 * mo + g2, f1 * mo + f2), h1 * mo + h2);
                        }
                    }
                }
            }
        }
        FinCategory::new(objects, morphisms, identities, composites).expect("products of categories are categories")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].source] == f
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.homs[x][y]
    }

    /// `g ∘ f`, when `target(f) = source(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g * self.morphisms.len() + f]
    }

    pub fn morphism_index(&self, label: &str) -> Option<usize> {
        self.morphisms.iter().position(|f| f.label == label)
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    /// Component index of every object, numbered in order of first appearance.
    pub fn component_of(&self) -> Vec<usize> {
        let mut uf = UnionFind::<usize>::new(self.objects.len());
        for f in &self.morphisms {
            uf.union(f.source, f.target);
        }
        number_components(&uf.into_labeling())
    }

    /// Connected components as sorted object lists.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        group_by_component(&self.component_of())
    }
}

pub(crate) fn number_components(roots: &[usize]) -> Vec<usize> {
    let mut numbering = HashMap::new();
    roots
        .iter()
        .map(|r| {
            let next = numbering.len();
            *numbering.entry(*r).or_insert(next)
        })
        .collect()
}

pub(crate) fn group_by_component(component: &[usize]) -> Vec<Vec<usize>> {
    let count = component.iter().max().map_or(0, |&c| c + 1);
    let mut out = vec![Vec::new(); count];
    for (x, &c) in component.iter().enumerate() {
        out[c].push(x);
    }
    out
}
