//! Test-side oracles and random instance generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use maghom::enriched::{word_norm_group, FinCategory, FiniteGroup, GenMetricSpace, NormedGroup};
use maghom::{Distance, Int, Rational};
use num_traits::Zero;
use rand::Rng;

/// Determinant by cofactor expansion; only used on matrices up to 4×4.
pub fn det(m: &[Vec<i64>]) -> Int {
    match m.len() {
        0 => Int::from(1),
        1 => Int::from(m[0][0]),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
                let term = Int::from(m[0][j]) * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(Int::from(0), |a, b| a + b),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (0..n).flat_map(|last| subsets(last, k - 1).into_iter().map(move |mut s| {
        s.push(last);
        s
    })).collect()
}

fn gcd(a: Int, b: Int) -> Int {
    let (mut a, mut b) = (if a < Int::from(0) { -a } else { a }, if b < Int::from(0) { -b } else { b });
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Invariant factors `d_k / d_{k-1}` from the gcds `d_k` of all `k × k` minors.
pub fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<Int> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut divisors = vec![Int::from(1)];
    for k in 1..=rows.min(cols) {
        let mut g = Int::from(0);
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = gcd(g, det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|v| v.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, pivot);
        let inv = (1..p).find(|&x| a[rank][c] * x % p == 1).expect("p is prime");
        for v in a[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for j in 0..cols {
                    a[r][j] = (a[r][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over ℚ by fraction-free elimination.
pub fn rank_rational(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Int>> = m.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, pivot);
        for r in rank + 1..a.len() {
            let (f, p) = (a[r][c].clone(), a[rank][c].clone());
            for j in 0..cols {
                a[r][j] = &a[r][j] * &p - &f * &a[rank][j];
            }
        }
        rank += 1;
    }
    rank
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

/// Shortest-path closure of a random weighted digraph on `n` points with rational weights in
/// `{1/2, 1, …, 3}`; each arc is missing with probability `missing`.
pub fn random_rational_space(rng: &mut impl Rng, n: usize, missing: f64) -> GenMetricSpace<Rational> {
    let half = |k: i64| Rational::new(k.into(), 2.into());
    let mut d: Vec<Vec<Distance<Rational>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if x == y {
                        Distance::zero()
                    } else if rng.gen_bool(missing) {
                        Distance::Infinite
                    } else {
                        Distance::Finite(half(rng.gen_range(1..=6)))
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = &d[i][k] + &d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    GenMetricSpace::new((0..n).map(|i| format!("p{i}")).collect(), d).expect("shortest-path closures are metrics")
}

/// A random preorder on `n` points as a category: reflexive-transitive closure of random arcs.
pub fn random_preorder(rng: &mut impl Rng, n: usize) -> FinCategory {
    let mut le: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x == y || rng.gen_bool(0.3)).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                le[i][j] = le[i][j] || (le[i][k] && le[k][j]);
            }
        }
    }
    FinCategory::from_preorder((0..n).map(|i| format!("x{i}")).collect(), &le).expect("closure is a preorder")
}

/// Word norms from every union of non-identity conjugacy classes that generates the group,
/// together with each norm doubled on one generating class where that stays valid.
pub fn normed_groups(g: &FiniteGroup) -> Vec<NormedGroup<u64>> {
    let classes: Vec<Vec<usize>> = g.conjugacy_classes().into_iter().filter(|c| !c.contains(&g.identity())).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 1u32..(1 << classes.len()) {
        let gens: Vec<usize> = (0..classes.len()).filter(|i| mask & (1 << i) != 0).flat_map(|i| classes[i].clone()).collect();
        let Ok(base) = word_norm_group::<u64>(g, &gens) else { continue };
        let mut candidates = vec![base.norms().to_vec()];
        for c in &classes {
            let mut scaled = base.norms().to_vec();
            c.iter().for_each(|&x| scaled[x] *= 2);
            candidates.push(scaled);
        }
        for norm in candidates {
            if seen.insert(norm.clone()) {
                if let Ok(n) = NormedGroup::new(g.clone(), norm) {
                    out.push(n);
                }
            }
        }
    }
    if g.order() == 1 {
        out.push(NormedGroup::new(g.clone(), vec![0]).expect("trivial norm"));
    }
    out
}
