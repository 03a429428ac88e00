use std::collections::HashMap;

use rayon::prelude::*;

use super::source::{Generator, SimplicialSource};
use super::SimplicialError;

/// A simplicial abelian group with chosen bases in degrees `0..=D`, materialized as index tables.
///
/// `faces[n][i][g]` is the index of `δ_i(g)` in degree `n-1`, or `None` for zero.
/// `degeneracies[n][i][g]` is the index of `σ_i(g)` in degree `n+1` (present for `n < D`).
#[derive(Clone, Debug)]
pub struct BasedSimplicialObject<G> {
    bases: Vec<Vec<G>>,
    index: Vec<HashMap<G, u32>>,
    faces: Vec<Vec<Vec<Option<u32>>>>,
    degeneracies: Vec<Vec<Vec<u32>>>,
}

pub(crate) fn index_of<G: Generator>(basis: &[G]) -> Result<HashMap<G, u32>, SimplicialError> {
    let mut map = HashMap::with_capacity(basis.len());
    for (i, g) in basis.iter().enumerate() {
        if map.insert(g.clone(), i as u32).is_some() {
            return Err(SimplicialError::DuplicateGenerator(format!("{g:?}")));
        }
    }
    Ok(map)
}

impl<G: Generator> BasedSimplicialObject<G> {
    /// Materializes degrees `0..=max_degree` of a source and checks the simplicial identities.
    pub fn from_source<S: SimplicialSource<Gen = G>>(src: &S, max_degree: usize) -> Result<Self, SimplicialError> {
        let bases: Vec<Vec<G>> = (0..=max_degree).into_par_iter().map(|n| src.generators(n)).collect();
        let index = bases.iter().map(|b| index_of(b)).collect::<Result<Vec<_>, _>>()?;
        let lookup = |n: usize, g: &G, what: &'static str, i: usize| -> Result<u32, SimplicialError> {
            index[n].get(g).copied().ok_or_else(|| SimplicialError::OutsideBasis {
                map: what,
                index: i,
                degree: n,
                generator: format!("{g:?}"),
            })
        };
        let faces = (0..=max_degree)
            .map(|n| {
                if n == 0 {
                    return Ok(Vec::new());
                }
                (0..=n)
                    .map(|i| {
                        bases[n]
                            .par_iter()
                            .map(|g| src.face(n, i, g).map(|h| lookup(n - 1, &h, "face", i)).transpose())
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let degeneracies = (0..max_degree)
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        bases[n]
                            .par_iter()
                            .map(|g| lookup(n + 1, &src.degeneracy(n, i, g), "degeneracy", i))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let obj = BasedSimplicialObject { bases, index, faces, degeneracies };
        obj.check_identities()?;
        Ok(obj)
    }

    /// Builds an object from explicit tables and checks the simplicial identities.
    pub fn from_tables(
        bases: Vec<Vec<G>>,
        faces: Vec<Vec<Vec<Option<u32>>>>,
        degeneracies: Vec<Vec<Vec<u32>>>,
    ) -> Result<Self, SimplicialError> {
        let max_degree = bases.len().checked_sub(1).ok_or(SimplicialError::Empty)?;
        let index = bases.iter().map(|b| index_of(b)).collect::<Result<Vec<_>, _>>()?;
        let shape_ok = faces.len() == max_degree + 1
            && degeneracies.len() == max_degree
            && (1..=max_degree).all(|n| {
                faces[n].len() == n + 1
                    && faces[n].iter().all(|f| {
                        f.len() == bases[n].len()
                            && f.iter().flatten().all(|&t| (t as usize) < bases[n - 1].len())
                    })
            })
            && (0..max_degree).all(|n| {
                degeneracies[n].len() == n + 1
                    && degeneracies[n]
                        .iter()
                        .all(|s| s.len() == bases[n].len() && s.iter().all(|&t| (t as usize) < bases[n + 1].len()))
            });
        if !shape_ok {
            return Err(SimplicialError::TableShape);
        }
        let obj = BasedSimplicialObject { bases, index, faces, degeneracies };
        obj.check_identities()?;
        Ok(obj)
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, n: usize) -> &[G] {
        &self.bases[n]
    }

    pub fn bases(&self) -> &[Vec<G>] {
        &self.bases
    }

    pub fn position(&self, n: usize, g: &G) -> Option<usize> {
        self.index[n].get(g).map(|&i| i as usize)
    }

    /// Face table `δ_i` on degree `n ≥ 1`.
    pub fn face_table(&self, n: usize, i: usize) -> &[Option<u32>] {
        &self.faces[n][i]
    }

    /// Degeneracy table `σ_i` on degree `n < D`.
    pub fn degeneracy_table(&self, n: usize, i: usize) -> &[u32] {
        &self.degeneracies[n][i]
    }

    /// Whether the generator `g` of degree `n ≥ 1` is in the image of some degeneracy.
    pub fn degenerate_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; self.bases[n].len()];
        if n > 0 {
            for table in &self.degeneracies[n - 1] {
                for &t in table {
                    mask[t as usize] = true;
                }
            }
        }
        mask
    }

    /// Checks injectivity of degeneracies and all simplicial identities up to the truncation.
    pub fn check_identities(&self) -> Result<(), SimplicialError> {
        check_simplicial_identities(
            self.max_degree(),
            |n| self.bases[n].len(),
            |n, i, g| self.faces[n][i][g].map(|x| x as usize),
            |n, i, g| self.degeneracies[n][i][g] as usize,
        )
    }
}

/// Verifies the simplicial identities on index-level face and degeneracy maps.
pub(crate) fn check_simplicial_identities(
    max_degree: usize,
    size: impl Fn(usize) -> usize,
    face: impl Fn(usize, usize, usize) -> Option<usize>,
    degen: impl Fn(usize, usize, usize) -> usize,
) -> Result<(), SimplicialError> {
    let fail = |identity: &'static str, degree: usize, i: usize, j: usize| {
        Err(SimplicialError::IdentityFails { identity, degree, i, j })
    };
    for n in 0..max_degree {
        for j in 0..=n {
            let mut seen = vec![false; size(n + 1)];
            for g in 0..size(n) {
                let t = degen(n, j, g);
                if std::mem::replace(&mut seen[t], true) {
                    return Err(SimplicialError::DegeneracyNotInjective { degree: n, index: j });
                }
            }
        }
    }
    for n in 2..=max_degree {
        for j in 1..=n {
            for i in 0..j {
                for g in 0..size(n) {
                    let lhs = face(n, j, g).and_then(|h| face(n - 1, i, h));
                    let rhs = face(n, i, g).and_then(|h| face(n - 1, j - 1, h));
                    if lhs != rhs {
                        return fail("d_i d_j = d_{j-1} d_i", n, i, j);
                    }
                }
            }
        }
    }
    for n in 0..max_degree {
        for j in 0..=n {
            for i in 0..=n + 1 {
                for g in 0..size(n) {
                    let lhs = face(n + 1, i, degen(n, j, g));
                    let rhs = if i == j || i == j + 1 {
                        Some(g)
                    } else if i < j {
                        face(n, i, g).map(|h| degen(n - 1, j - 1, h))
                    } else {
                        face(n, i - 1, g).map(|h| degen(n - 1, j, h))
                    };
                    if lhs != rhs {
                        return fail("d_i s_j", n, i, j);
                    }
                }
            }
        }
    }
    for n in 0..max_degree.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                for g in 0..size(n) {
                    if degen(n + 1, i, degen(n, j, g)) != degen(n + 1, j + 1, degen(n, i, g)) {
                        return fail("s_i s_j = s_{j+1} s_i", n, i, j);
                    }
                }
            }
        }
    }
    Ok(())
}

impl<G: Generator> SimplicialSource for BasedSimplicialObject<G> {
    type Gen = G;

    fn generators(&self, n: usize) -> Vec<G> {
        self.bases[n].clone()
    }

    fn face(&self, n: usize, i: usize, g: &G) -> Option<G> {
        let k = self.index[n][g];
        self.faces[n][i][k as usize].map(|t| self.bases[n - 1][t as usize].clone())
    }

    fn degeneracy(&self, n: usize, i: usize, g: &G) -> G {
        let k = self.index[n][g];
        self.bases[n + 1][self.degeneracies[n][i][k as usize] as usize].clone()
    }
}
