use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{check_unique_labels, EnrichedError};

/// A finite group given by its multiplication table; elements are the indices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
}

const GROUP: &str = "group";

impl FiniteGroup {
    /// Validates a multiplication table `table[a][b] = a·b`.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, EnrichedError> {
        let n = labels.len();
        if n == 0 {
            return Err(EnrichedError::shape(GROUP, "a group needs at least one element"));
        }
        check_unique_labels(GROUP, &labels)?;
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(EnrichedError::shape(GROUP, format!("multiplication table must be {n}×{n} with entries below {n}")));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| EnrichedError::violation(GROUP, "existence of an identity", vec![]))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        let w = [a, b, c].iter().map(|&x| labels[x].clone()).collect();
                        return Err(EnrichedError::violation(GROUP, "associativity", w));
                    }
                }
            }
        }
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| EnrichedError::violation(GROUP, "existence of inverses", vec![labels[a].clone()]))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup { labels, mul: table, inv, identity })
    }

    fn from_closure<T: Clone + Eq + std::hash::Hash + Ord>(
        elements: Vec<T>,
        label: impl Fn(&T) -> String,
        op: impl Fn(&T, &T) -> T,
    ) -> Self {
        let index: HashMap<T, usize> = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let table = elements.iter().map(|a| elements.iter().map(|b| index[&op(a, b)]).collect()).collect();
        FiniteGroup::from_table(elements.iter().map(label).collect(), table).expect("closed under a group law")
    }

    /// `ℤ/n` with labels `0, …, n-1`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        FiniteGroup::from_closure((0..n).collect(), |x| x.to_string(), |a, b| (a + b) % n)
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    /// The subgroup of `S_m` generated by permutations of `0..m`; elements sorted lexicographically
    /// (so the identity comes first) and labelled in 1-based cycle notation.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<Self, EnrichedError> {
        let m = generators.first().map_or(0, |g| g.len());
        for g in generators {
            let mut seen = vec![false; m];
            if g.len() != m || g.iter().any(|&x| x >= m || std::mem::replace(&mut seen[x], true)) {
                return Err(EnrichedError::shape("permutation group", format!("{g:?} is not a permutation of 0..{m}")));
            }
        }
        let id: Vec<usize> = (0..m).collect();
        let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = compose(g, &p);
                if found.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        Ok(FiniteGroup::from_closure(found.into_iter().collect(), |p| cycle_notation(p), compose))
    }

    /// The symmetric group on `m` letters.
    pub fn symmetric(m: usize) -> Self {
        let mut gens = Vec::new();
        if m >= 2 {
            let mut t: Vec<usize> = (0..m).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..m).map(|i| (i + 1) % m).collect());
        }
        if m == 0 {
            return FiniteGroup::trivial();
        }
        if gens.is_empty() {
            gens.push(vec![0]);
        }
        FiniteGroup::from_permutations(&gens).expect("valid generators")
    }

    /// Dihedral group of order `2n`: elements `r^i` and `r^i s` with `s r s = r^{-1}`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0, "dihedral group needs n ≥ 1");
        let elements: Vec<(usize, usize)> = (0..2).flat_map(|s| (0..n).map(move |i| (s, i))).collect();
        FiniteGroup::from_closure(
            elements,
            |&(s, i)| if s == 0 { format!("r{i}") } else { format!("r{i}s") },
            |&(s1, i1), &(s2, i2)| {
                // r^a s^b · r^c s^d = r^{a ± c} s^{b+d}
                let c = if s1 == 0 { i2 } else { (n - i2) % n };
                ((s1 + s2) % 2, (i1 + c) % n)
            },
        )
    }

    /// The quaternion group `Q_8`.
    pub fn quaternion() -> Self {
        // (sign, unit) with units 1, i, j, k.
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let elements: Vec<(bool, usize)> = [false, true].iter().flat_map(|&s| (0..4).map(move |u| (s, u))).collect();
        FiniteGroup::from_closure(
            elements,
            |&(s, u)| format!("{}{}", if s { "-" } else { "" }, ["1", "i", "j", "k"][u]),
            |&(s1, u1), &(s2, u2)| {
                let (s, u) = UNIT[u1][u2];
                (s ^ s1 ^ s2, u)
            },
        )
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let elements: Vec<(usize, usize)> =
            (0..self.order()).flat_map(|a| (0..other.order()).map(move |b| (a, b))).collect();
        FiniteGroup::from_closure(
            elements,
            |&(a, b)| format!("({},{})", self.labels[a], other.labels[b]),
            |&(a, b), &(c, d)| (self.mul(a, c), other.mul(b, d)),
        )
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The subgroup generated by `gens`, as a sorted list of elements.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !std::mem::replace(&mut inside[y], true) {
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&x| inside[x]).collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.order()];
        for &x in set {
            if x >= self.order() {
                return false;
            }
            inside[x] = true;
        }
        inside[self.identity] && set.iter().all(|&a| inside[self.inv(a)] && set.iter().all(|&b| inside[self.mul(a, b)]))
    }

    /// A witness `(n, g)` with `g n g⁻¹ ∉ N`, if `N` is not normal.
    pub fn normality_witness(&self, set: &[usize]) -> Option<(usize, usize)> {
        let mut inside = vec![false; self.order()];
        set.iter().for_each(|&x| inside[x] = true);
        set.iter().find_map(|&n| (0..self.order()).find(|&g| !inside[self.conjugate(g, n)]).map(|g| (n, g)))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        self.is_subgroup(set) && self.normality_witness(set).is_none()
    }

    /// All subgroups, each a sorted element list, ordered by size then lexicographically.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let cyclic: BTreeSet<Vec<usize>> = (0..self.order()).map(|g| self.generated(&[g])).collect();
        let mut all: BTreeSet<Vec<usize>> = cyclic.clone();
        let mut frontier: Vec<Vec<usize>> = all.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &cyclic {
                    let joined = self.generated(&h.iter().chain(c).copied().collect::<Vec<_>>());
                    if all.insert(joined.clone()) {
                        next.push(joined);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Vec<usize>> = all.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        self.subgroups().into_iter().filter(|n| self.normality_witness(n).is_none()).collect()
    }

    /// `G/N` with cosets ordered by their least element, and the projection `G → G/N`.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>), EnrichedError> {
        if !self.is_subgroup(normal) {
            return Err(EnrichedError::violation(GROUP, "subgroup closure", normal.iter().map(|&x| self.labels[x].clone()).collect()));
        }
        if let Some((n, g)) = self.normality_witness(normal) {
            return Err(EnrichedError::violation(GROUP, "normality", vec![self.labels[n].clone(), self.labels[g].clone()]));
        }
        let mut projection = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if projection[g] == usize::MAX {
                for &n in normal {
                    projection[self.mul(n, g)] = reps.len();
                }
                reps.push(g);
            }
        }
        let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r])).collect();
        let table = reps.iter().map(|&a| reps.iter().map(|&b| projection[self.mul(a, b)]).collect()).collect();
        Ok((FiniteGroup::from_table(labels, table)?, projection))
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for h in 0..self.order() {
            if seen[h] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order()).map(|g| self.conjugate(g, h)).collect();
            class.iter().for_each(|&x| seen[x] = true);
            classes.push(class.into_iter().collect());
        }
        classes
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// The fourteen groups of order at most 8, up to isomorphism, with short names.
pub fn small_groups() -> Vec<(String, FiniteGroup)> {
    let z = FiniteGroup::cyclic;
    vec![
        ("Z1".into(), z(1)),
        ("Z2".into(), z(2)),
        ("Z3".into(), z(3)),
        ("Z4".into(), z(4)),
        ("Z2xZ2".into(), z(2).direct_product(&z(2))),
        ("Z5".into(), z(5)),
        ("Z6".into(), z(6)),
        ("S3".into(), FiniteGroup::symmetric(3)),
        ("Z7".into(), z(7)),
        ("Z8".into(), z(8)),
        ("Z4xZ2".into(), z(4).direct_product(&z(2))),
        ("Z2xZ2xZ2".into(), z(2).direct_product(&z(2)).direct_product(&z(2))),
        ("D4".into(), FiniteGroup::dihedral(4)),
        ("Q8".into(), FiniteGroup::quaternion()),
    ]
}
