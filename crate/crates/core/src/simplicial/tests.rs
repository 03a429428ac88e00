use proptest::prelude::*;

use super::*;
use crate::complex::{homology_table, tensor_complex, HomologyTable};
use crate::linalg::FgAbelianGroup;

/// Nerve of a preorder given by its relation matrix: `n`-simplices are chains `x_0 ≤ … ≤ x_n`.
#[derive(Clone, Debug)]
struct PreorderNerve {
    le: Vec<Vec<bool>>,
}

impl PreorderNerve {
    fn linear(n: usize) -> Self {
        PreorderNerve { le: (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect() }
    }
}

impl SimplicialSource for PreorderNerve {
    type Gen = Vec<u8>;

    fn generators(&self, n: usize) -> Vec<Vec<u8>> {
        let k = self.le.len() as u8;
        let mut out: Vec<Vec<u8>> = (0..k).map(|x| vec![x]).collect();
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|c| {
                    let last = *c.last().unwrap() as usize;
                    (0..k).filter(move |&y| self.le[last][y as usize]).map(move |y| {
                        let mut d = c.clone();
                        d.push(y);
                        d
                    })
                })
                .collect();
        }
        out
    }

    fn face(&self, _n: usize, i: usize, g: &Vec<u8>) -> Option<Vec<u8>> {
        let mut h = g.clone();
        h.remove(i);
        Some(h)
    }

    fn degeneracy(&self, _n: usize, i: usize, g: &Vec<u8>) -> Vec<u8> {
        let mut h = g.clone();
        h.insert(i, g[i]);
        h
    }
}

#[derive(Clone, Debug)]
struct Constant;

impl SimplicialSource for Constant {
    type Gen = usize;
    fn generators(&self, n: usize) -> Vec<usize> {
        vec![n]
    }
    fn face(&self, n: usize, _i: usize, _g: &usize) -> Option<usize> {
        Some(n - 1)
    }
    fn degeneracy(&self, n: usize, _i: usize, _g: &usize) -> usize {
        n + 1
    }
}

fn z(r: usize) -> FgAbelianGroup {
    FgAbelianGroup::free(r)
}

#[test]
fn constant_object_boundaries_alternate() {
    let s = BasedSimplicialObject::from_source(&Constant, 5).unwrap();
    let c = unnormalized_chains(&s);
    for n in 1..=5 {
        let expected = if n % 2 == 0 { 1 } else { 0 };
        assert_eq!(c.boundary(n).get(0, 0), expected.into());
    }
    assert_eq!(homology_table(&c, 4).unwrap(), HomologyTable::new(vec![z(1), z(0), z(0), z(0), z(0)]));
    let nc = normalized_chains(&s);
    assert_eq!(nc.rank(0), 1);
    assert!((1..=5).all(|n| nc.rank(n) == 0));
}

#[test]
fn linear_order_is_contractible() {
    let s = BasedSimplicialObject::from_source(&PreorderNerve::linear(3), 3).unwrap();
    let c = unnormalized_chains(&s);
    c.validate().unwrap();
    assert_eq!(homology_table(&c, 2).unwrap(), HomologyTable::new(vec![z(1), z(0), z(0)]));
    let n = normalized_chains(&s);
    assert_eq!((0..=3).map(|k| n.rank(k)).collect::<Vec<_>>(), vec![3, 3, 1, 0]);
}

#[test]
fn truncation_limits_homology() {
    let s = BasedSimplicialObject::from_source(&PreorderNerve::linear(2), 2).unwrap();
    assert!(homology_table(&unnormalized_chains(&s), 1).is_ok());
    assert!(homology_table(&unnormalized_chains(&s), 2).is_err());
}

#[test]
fn broken_tables_are_rejected() {
    // Degree 1 with two faces that disagree with the degeneracy: δ_0 σ_0 must be the identity.
    let bases = vec![vec![0u8, 1], vec![10, 11]];
    let faces = vec![vec![], vec![vec![Some(1), Some(1)], vec![Some(0), Some(1)]]];
    let degeneracies = vec![vec![vec![0, 1]]];
    assert!(matches!(
        BasedSimplicialObject::from_tables(bases, faces, degeneracies),
        Err(SimplicialError::IdentityFails { .. })
    ));
    let dup = BasedSimplicialObject::from_tables(vec![vec![0u8, 0]], vec![vec![]], vec![]);
    assert!(matches!(dup, Err(SimplicialError::DuplicateGenerator(_))));
}

#[test]
fn diagonal_requires_square_region() {
    let b = BasedBisimplicialObject::from_source(
        &ExternalProduct(PreorderNerve::linear(2), Constant),
        Region::triangle(2),
    )
    .unwrap();
    assert!(matches!(diagonal(&b), Err(SimplicialError::NonSquare { .. })));
}

#[test]
fn concentrated_bisimplicial_object_has_constant_diagonal() {
    let b = BasedBisimplicialObject::from_source(&ExternalProduct(Constant, Constant), Region::square(3)).unwrap();
    let d = diagonal(&b).unwrap();
    assert!((0..=3).all(|n| d.basis(n).len() == 1));
    assert_eq!(homology_table(&normalized_chains(&d), 2).unwrap().get(0), z(1));
}

/// Two-vertex, two-edge graph with edges `a, b: 0 → 1` as a simplicial set.
fn two_edge_circle() -> BasedSimplicialObject<String> {
    // Degree n simplices: constant at a vertex (2), or "edge e with the jump after k" (2·n).
    let d = 3;
    let mut bases: Vec<Vec<String>> = Vec::new();
    for n in 0..=d {
        let mut b = vec![format!("v0^{n}"), format!("v1^{n}")];
        for e in ["a", "b"] {
            for k in 1..=n {
                b.push(format!("{e}{k}^{n}"));
            }
        }
        bases.push(b);
    }
    let pos = |n: usize, name: String| bases[n].iter().position(|x| *x == name).unwrap() as u32;
    // Describe a simplex by its vertex sequence and edge; faces delete entries.
    let decode = |name: &str| -> (Option<char>, usize, usize) {
        let (head, n) = name.split_once('^').unwrap();
        let n: usize = n.parse().unwrap();
        if let Some(v) = head.strip_prefix('v') {
            (None, v.parse().unwrap(), n)
        } else {
            (head.chars().next(), head[1..].parse().unwrap(), n)
        }
    };
    let encode = |edge: Option<char>, k: usize, n: usize| -> String {
        match edge {
            None => format!("v{k}^{n}"),
            Some(_) if k == 0 => format!("v1^{n}"),
            Some(_) if k == n + 1 => format!("v0^{n}"),
            Some(e) => format!("{e}{k}^{n}"),
        }
    };
    let mut faces = vec![vec![]];
    let mut degens = vec![];
    for n in 1..=d {
        faces.push(
            (0..=n)
                .map(|i| {
                    bases[n]
                        .iter()
                        .map(|g| {
                            let (e, k, _) = decode(g);
                            let k2 = if e.is_some() && i < k { k - 1 } else { k };
                            Some(pos(n - 1, encode(e, k2, n - 1)))
                        })
                        .collect()
                })
                .collect(),
        );
    }
    for n in 0..d {
        degens.push(
            (0..=n)
                .map(|i| {
                    bases[n]
                        .iter()
                        .map(|g| {
                            let (e, k, _) = decode(g);
                            let k2 = if e.is_some() && i < k { k + 1 } else { k };
                            pos(n + 1, encode(e, k2, n + 1))
                        })
                        .collect()
                })
                .collect(),
        );
    }
    BasedSimplicialObject::from_tables(bases, faces, degens).unwrap()
}

#[test]
fn circle_from_explicit_tables() {
    let s = two_edge_circle();
    let n = normalized_chains(&s);
    assert_eq!(n.rank(1), 2);
    assert_eq!(n.rank(2), 0);
    let h = homology_table(&unnormalized_chains(&s), 2).unwrap();
    assert_eq!(h, HomologyTable::new(vec![z(1), z(1), z(0)]));
    assert_eq!(homology_table(&n, 2).unwrap(), h);
}

#[test]
fn eilenberg_zilber_on_external_products() {
    let s = two_edge_circle();
    let b = BasedBisimplicialObject::from_source(&ExternalProduct(&s, &s), Region::square(3)).unwrap();
    let diag = homology_table(&normalized_chains(&diagonal(&b).unwrap()), 2).unwrap();
    let tensor = homology_table(&tensor_complex(&normalized_chains(&s), &normalized_chains(&s)), 2).unwrap();
    assert_eq!(diag, HomologyTable::new(vec![z(1), z(2), z(1)]));
    assert_eq!(diag, tensor);
    let tot = double_chains(&b).total_complex();
    tot.validate().unwrap();
    assert_eq!(homology_table(&tot, 2).unwrap(), diag);
    let rows = row_normalize(&b).total_complex();
    rows.validate().unwrap();
    assert_eq!(homology_table(&rows, 2).unwrap(), diag);
}

#[test]
fn row_normalize_without_degeneracies_changes_nothing() {
    // Degree-0-only rows: no horizontal degeneracies land anywhere in the region.
    let b = BasedBisimplicialObject::from_source(
        &ExternalProduct(PreorderNerve { le: vec![vec![true, false], vec![false, true]] }, PreorderNerve::linear(2)),
        Region { p_max: 0, q_max: 2, total_max: 2 },
    )
    .unwrap();
    let a = double_chains(&b);
    let r = row_normalize(&b);
    assert_eq!(a.rank(0, 2), r.rank(0, 2));
    assert_eq!(a.vertical(0, 2), r.vertical(0, 2));
}

fn preorder_strategy() -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * n).prop_map(move |bits| {
            let mut le: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j || bits[i * n + j]).collect()).collect();
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if le[i][k] && le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
            le
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normalized_and_unnormalized_agree(le in preorder_strategy()) {
        let s = BasedSimplicialObject::from_source(&PreorderNerve { le }, 4).unwrap();
        let u = unnormalized_chains(&s);
        let n = normalized_chains(&s);
        prop_assert!(u.validate().is_ok());
        prop_assert!(n.validate().is_ok());
        prop_assert_eq!(homology_table(&u, 3).unwrap(), homology_table(&n, 3).unwrap());
    }

    #[test]
    fn diagonal_and_total_routes_agree(a in preorder_strategy(), b in preorder_strategy()) {
        let (x, y) = (PreorderNerve { le: a }, PreorderNerve { le: b });
        let bi = BasedBisimplicialObject::from_source(&ExternalProduct(x, y), Region::square(3)).unwrap();
        let diag = homology_table(&unnormalized_chains(&diagonal(&bi).unwrap()), 2).unwrap();
        let tot = double_chains(&bi);
        prop_assert!(tot.validate().is_ok());
        prop_assert_eq!(&homology_table(&tot.total_complex(), 2).unwrap(), &diag);
        prop_assert_eq!(&homology_table(&row_normalize(&bi).total_complex(), 2).unwrap(), &diag);
    }
}
