use std::collections::VecDeque;

use super::{check_unique_labels, EnrichedError};
use crate::scalar::{Distance, Length};

/// A finite generalized metric space: separated, triangle inequality, not necessarily symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMetricSpace<L> {
    points: Vec<String>,
    d: Vec<Vec<Distance<L>>>,
}

const METRIC: &str = "metric space";

impl<L: Length> GenMetricSpace<L> {
    pub fn new(points: Vec<String>, d: Vec<Vec<Distance<L>>>) -> Result<Self, EnrichedError> {
        check_unique_labels(METRIC, &points)?;
        let n = points.len();
        if d.len() != n || d.iter().any(|r| r.len() != n) {
            return Err(EnrichedError::shape(METRIC, format!("distance matrix must be {n}×{n}")));
        }
        let space = GenMetricSpace { points, d };
        space.validate()?;
        Ok(space)
    }

    pub fn validate(&self) -> Result<(), EnrichedError> {
        let n = self.len();
        let p = |x: usize| self.points[x].clone();
        for x in 0..n {
            if !self.d[x][x].is_zero() {
                return Err(EnrichedError::violation(METRIC, "d(x,x) = 0", vec![p(x)]));
            }
            for y in 0..n {
                if x != y && self.d[x][y].is_zero() {
                    return Err(EnrichedError::violation(METRIC, "separation", vec![p(x), p(y)]));
                }
                for z in 0..n {
                    if self.d[x][z] > &self.d[x][y] + &self.d[y][z] {
                        return Err(EnrichedError::violation(METRIC, "triangle inequality", vec![p(x), p(y), p(z)]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Shortest-path metric of a directed graph with unit edge lengths; unreachable pairs are at ∞.
    pub fn from_digraph(points: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, EnrichedError> {
        let n = points.len();
        if edges.iter().any(|&(a, b)| a >= n || b >= n) {
            return Err(EnrichedError::shape(METRIC, "edge endpoint out of range"));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a != b {
                adj[a].push(b);
            }
        }
        let d = (0..n)
            .map(|s| {
                let mut dist = vec![None; n];
                dist[s] = Some(0usize);
                let mut queue = VecDeque::from([s]);
                while let Some(x) = queue.pop_front() {
                    for &y in &adj[x] {
                        if dist[y].is_none() {
                            dist[y] = Some(dist[x].unwrap() + 1);
                            queue.push_back(y);
                        }
                    }
                }
                dist.into_iter().map(|k| k.map_or(Distance::Infinite, |k| Distance::Finite(L::from_count(k)))).collect()
            })
            .collect();
        GenMetricSpace::new(points, d)
    }

    fn numbered(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    /// `0 → 1 → … → n-1 → 0`.
    pub fn cycle_digraph(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_digraph(Self::numbered(n), &edges).expect("cycle digraph")
    }

    /// Undirected `n`-cycle.
    pub fn cycle_graph(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| [(i, (i + 1) % n), ((i + 1) % n, i)]).collect();
        Self::from_digraph(Self::numbered(n), &edges).expect("cycle graph")
    }

    /// Undirected path `0 - 1 - … - n-1`.
    pub fn path_graph(n: usize) -> Self {
        let edges: Vec<_> = (1..n).flat_map(|i| [(i - 1, i), (i, i - 1)]).collect();
        Self::from_digraph(Self::numbered(n), &edges).expect("path graph")
    }

    pub fn complete_graph(n: usize) -> Self {
        Self::discrete_space(n, Distance::Finite(L::one()))
    }

    /// `n` points, every pair of distinct points at distance `d`.
    pub fn discrete_space(n: usize, d: Distance<L>) -> Self {
        let m = (0..n).map(|x| (0..n).map(|y| if x == y { Distance::zero() } else { d.clone() }).collect()).collect();
        GenMetricSpace::new(Self::numbered(n), m).expect("discrete spaces are metric")
    }

    pub fn one_point() -> Self {
        Self::discrete_space(1, Distance::zero())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn d(&self, x: usize, y: usize) -> &Distance<L> {
        &self.d[x][y]
    }

    pub fn distances(&self) -> &[Vec<Distance<L>>] {
        &self.d
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|x| (0..x).all(|y| self.d[x][y] == self.d[y][x]))
    }

    /// Whether `z` lies between `x` and `y`: `d(x,y) = d(x,z) + d(z,y)` with all terms finite.
    pub fn is_between(&self, x: usize, z: usize, y: usize) -> bool {
        !self.d[x][y].is_infinite() && self.d[x][y] == &self.d[x][z] + &self.d[z][y]
    }
}

/// `X ⊗ Y` with the ℓ¹ metric; point `(x, y)` has index `x * |Y| + y`.
pub fn tensor_metric<L: Length>(x: &GenMetricSpace<L>, y: &GenMetricSpace<L>) -> GenMetricSpace<L> {
    let points = x.points.iter().flat_map(|a| y.points.iter().map(move |b| format!("({a},{b})"))).collect();
    let (nx, ny) = (x.len(), y.len());
    let d = (0..nx * ny)
        .map(|p| (0..nx * ny).map(|q| &x.d[p / ny][q / ny] + &y.d[p % ny][q % ny]).collect())
        .collect();
    GenMetricSpace::new(points, d).expect("ℓ¹ products of metric spaces are metric")
}
