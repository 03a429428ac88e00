use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::complex::{homology_table, HomologyTable};
use crate::enriched::{FinCategory, FiniteGroup, GenMetricSpace};
use crate::linalg::FgAbelianGroup;
use crate::scalar::Distance;
use crate::simplicial::{normalized_chains, unnormalized_chains};

type Q = BigRational;

fn z(r: usize) -> FgAbelianGroup {
    FgAbelianGroup::free(r)
}

fn table(groups: &[FgAbelianGroup]) -> HomologyTable {
    HomologyTable::new(groups.to_vec())
}

#[test]
fn terminal_category_nerve() {
    let s = nerve_category(&FinCategory::terminal(), 4).unwrap();
    assert!((0..=4).all(|n| s.basis(n).len() == 1));
    assert!((1..=4).all(|n| s.degenerate_mask(n) == vec![true]));
    let h = homology_table(&normalized_chains(&s), 3).unwrap();
    assert_eq!(h, table(&[z(1), z(0), z(0), z(0)]));
}

#[test]
fn circle_category() {
    let c = FinCategory::circle();
    let s = nerve_category(&c, 3).unwrap();
    assert_eq!(s.basis(1).len(), 4);
    let n = normalized_chains(&s);
    let labels: Vec<&str> = n.basis(1).iter().map(|p| c.morphism(p[0]).label.as_str()).collect();
    assert_eq!(labels, vec!["f", "g"]);
    assert_eq!(homology_table(&n, 2).unwrap(), table(&[z(1), z(1), z(0)]));
    assert_eq!(homology_table(&unnormalized_chains(&s), 2).unwrap(), table(&[z(1), z(1), z(0)]));
}

#[test]
fn bar_complex_of_z2() {
    let g = FinCategory::from_group(&FiniteGroup::cyclic(2));
    let s = nerve_category(&g, 4).unwrap();
    assert_eq!((0..4).map(|n| s.basis(n).len()).collect::<Vec<_>>(), vec![1, 2, 4, 8]);
    let two = FgAbelianGroup::cyclic(2);
    assert_eq!(homology_table(&normalized_chains(&s), 3).unwrap(), table(&[z(1), two.clone(), z(0), two]));
}

#[test]
fn linear_order_is_contractible() {
    let s = nerve_category(&FinCategory::linear_order(4), 3).unwrap();
    assert_eq!(homology_table(&normalized_chains(&s), 2).unwrap(), table(&[z(1), z(0), z(0)]));
}

#[test]
fn two_point_space() {
    let x = GenMetricSpace::<u64>::complete_graph(2);
    let d = 4;
    let c = magnitude_complex_metric(&x, d, &Gradings::AllReachable);
    assert_eq!(c.gradings().copied().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
    let h = graded_homology(&c, d).unwrap();
    for (l, t) in &h {
        for k in 0..=d {
            let expected = if k as u64 == *l { z(2) } else { z(0) };
            assert_eq!(t.get(k), expected, "MH_{k}^{l}");
        }
    }
}

#[test]
fn degree_zero_is_free_on_points() {
    let x = GenMetricSpace::<u64>::cycle_graph(5);
    let h = graded_homology(&magnitude_complex_metric(&x, 2, &Gradings::AllReachable), 1).unwrap();
    assert_eq!(h[&0].get(0), z(5));
    assert!(h.iter().filter(|(l, _)| **l > 0).all(|(_, t)| t.get(0).is_zero()));
}

#[test]
fn directed_triangle_grading_one() {
    let x = GenMetricSpace::<u64>::cycle_digraph(3);
    let c = magnitude_complex_metric(&x, 2, &Gradings::Explicit(vec![1]));
    assert_eq!(c.get(&1).unwrap().rank(1), 3);
    assert_eq!(graded_homology(&c, 1).unwrap()[&1].get(1), z(3));
}

#[test]
fn explicit_gradings_include_empty_ones() {
    let x = GenMetricSpace::<u64>::complete_graph(3);
    let c = magnitude_complex_metric(&x, 2, &Gradings::Explicit(vec![1, 7]));
    assert_eq!(c.gradings().copied().collect::<Vec<_>>(), vec![1, 7]);
    assert_eq!(c.get(&7).unwrap().rank(0), 0);
}

#[test]
fn truncation_is_reported() {
    let x = GenMetricSpace::<u64>::cycle_graph(4);
    let c = magnitude_complex_metric(&x, 2, &Gradings::Explicit(vec![4]));
    assert!(homology_table(c.get(&4).unwrap(), 1).is_ok());
    assert!(homology_table(c.get(&4).unwrap(), 2).is_err());
    // Grading 1 cannot hold a tuple of degree 3, so it is known in every degree.
    let c = magnitude_complex_metric(&x, 2, &Gradings::Explicit(vec![1]));
    assert!(homology_table(c.get(&1).unwrap(), 5).is_ok());
}

#[test]
fn adjacency_examples() {
    let two = GenMetricSpace::<u64>::complete_graph(2);
    assert_eq!(adjacency(&two, 0, 1).unwrap(), Adjacency::Adjacent);
    let line = GenMetricSpace::<u64>::path_graph(3);
    assert_eq!(adjacency(&line, 0, 2).unwrap(), Adjacency::Witness(1));
    assert_eq!(adjacency(&line, 0, 1).unwrap(), Adjacency::Adjacent);
    let hexagon = GenMetricSpace::<u64>::cycle_graph(6);
    assert!(matches!(adjacency(&hexagon, 0, 3).unwrap(), Adjacency::Witness(_)));
    assert_eq!(adjacency(&two, 1, 1), Err(MagnitudeError::InvalidPair { x: 1, y: 1 }));
}

#[test]
fn rational_lengths() {
    let half = Q::new(1.into(), 2.into());
    let pts = vec!["a".to_string(), "b".to_string()];
    let d = vec![vec![Distance::zero(), Distance::Finite(half.clone())], vec![Distance::Finite(half.clone()), Distance::zero()]];
    let x = GenMetricSpace::new(pts, d).unwrap();
    let h = graded_homology(&magnitude_complex_metric(&x, 3, &Gradings::AllReachable), 2).unwrap();
    assert_eq!(h[&half].get(1), z(2));
    assert_eq!(h[&(half.clone() + half)].get(2), z(2));
}

fn random_space(n: usize, weights: &[u8]) -> GenMetricSpace<u64> {
    // Shortest-path closure of a complete weighted digraph (weight 0 read as "no edge").
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for x in 0..n {
        for y in 0..n {
            let w = weights[(x * n + y) % weights.len()] as u64;
            d[x][y] = if x == y { 0 } else if w == 0 { inf } else { w };
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let dist = d.iter().map(|r| r.iter().map(|&v| if v >= inf { Distance::Infinite } else { Distance::Finite(v) }).collect()).collect();
    GenMetricSpace::new((0..n).map(|i| format!("p{i}")).collect(), dist).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normalized_nerve_is_the_magnitude_complex(n in 2usize..5, weights in proptest::collection::vec(0u8..4, 16)) {
        let x = random_space(n, &weights);
        let d = 3;
        let c = magnitude_complex_metric(&x, d, &Gradings::AllReachable);
        for (l, piece) in c.pieces() {
            let nerve = metric_nerve(&x, *l, d).unwrap();
            let moore = normalized_chains(&nerve);
            for k in 0..=d {
                prop_assert_eq!(moore.basis(k), piece.basis(k));
                prop_assert_eq!(moore.boundary(k), piece.boundary(k));
            }
            let top = d - 1;
            prop_assert_eq!(homology_table(&unnormalized_chains(&nerve), top).unwrap(), homology_table(piece, top).unwrap());
        }
    }

    #[test]
    fn metric_complexes_are_complexes(n in 2usize..6, weights in proptest::collection::vec(0u8..4, 25)) {
        let x = random_space(n, &weights);
        let min = x.distances().iter().flatten().filter_map(|d| d.finite()).filter(|&&d| d > 0).min().copied();
        for (l, piece) in magnitude_complex_metric(&x, 3, &Gradings::AllReachable).pieces() {
            prop_assert!(piece.validate().is_ok());
            for k in 0..=3 {
                if let (Some(m), true) = (min, piece.rank(k) > 0) {
                    prop_assert!(k as u64 * m <= *l);
                }
            }
        }
    }

    #[test]
    fn nerve_normalization_preserves_homology(g in 0usize..6) {
        let groups = [
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)),
            FiniteGroup::symmetric(3),
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(4),
        ];
        let s = nerve_category(&FinCategory::from_group(&groups[g]), 3).unwrap();
        prop_assert_eq!(homology_table(&normalized_chains(&s), 2).unwrap(), homology_table(&unnormalized_chains(&s), 2).unwrap());
    }
}
