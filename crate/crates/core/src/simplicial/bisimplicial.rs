use std::collections::HashMap;

use rayon::prelude::*;

use super::object::{check_simplicial_identities, index_of};
use super::source::{BisimplicialSource, Generator};
use super::SimplicialError;

/// The bidegrees `p ≤ p_max`, `q ≤ q_max`, `p + q ≤ total_max` on which a bisimplicial object is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Region {
    pub p_max: usize,
    pub q_max: usize,
    pub total_max: usize,
}

impl Region {
    /// `[0, d]²`, enough for the diagonal through degree `d`.
    pub fn square(d: usize) -> Self {
        Region { p_max: d, q_max: d, total_max: 2 * d }
    }

    /// `p + q ≤ d`, enough for the total complex through degree `d`.
    pub fn triangle(d: usize) -> Self {
        Region { p_max: d, q_max: d, total_max: d }
    }

    pub fn contains(&self, p: usize, q: usize) -> bool {
        p <= self.p_max && q <= self.q_max && p + q <= self.total_max
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        (0..=self.p_max)
            .flat_map(|p| (0..=self.q_max).map(move |q| (p, q)))
            .filter(|&(p, q)| self.contains(p, q))
            .collect()
    }
}

type FaceTables = Vec<Vec<Option<u32>>>;
type DegenTables = Vec<Vec<u32>>;

/// Materialized bisimplicial abelian group on a [`Region`].
#[derive(Clone, Debug)]
pub struct BasedBisimplicialObject<G> {
    region: Region,
    bases: Vec<Vec<Vec<G>>>,
    h_faces: Vec<Vec<FaceTables>>,
    v_faces: Vec<Vec<FaceTables>>,
    h_degens: Vec<Vec<DegenTables>>,
    v_degens: Vec<Vec<DegenTables>>,
}

struct Cell<G> {
    h_faces: FaceTables,
    v_faces: FaceTables,
    h_degens: DegenTables,
    v_degens: DegenTables,
    _marker: std::marker::PhantomData<G>,
}

impl<G: Generator> BasedBisimplicialObject<G> {
    /// Materializes a source on `region` and checks all bisimplicial identities.
    pub fn from_source<S: BisimplicialSource<Gen = G>>(src: &S, region: Region) -> Result<Self, SimplicialError> {
        let (pm, qm) = (region.p_max, region.q_max);
        let cells = region.cells();
        let generated: Vec<((usize, usize), Vec<G>)> =
            cells.par_iter().map(|&(p, q)| ((p, q), src.generators(p, q))).collect();
        let mut bases: Vec<Vec<Vec<G>>> = vec![vec![Vec::new(); qm + 1]; pm + 1];
        for ((p, q), b) in generated {
            bases[p][q] = b;
        }
        let mut index: Vec<Vec<HashMap<G, u32>>> = vec![vec![HashMap::new(); qm + 1]; pm + 1];
        for &(p, q) in &cells {
            index[p][q] = index_of(&bases[p][q])?;
        }
        let lookup = |p: usize, q: usize, g: &G, map: &'static str, i: usize| -> Result<u32, SimplicialError> {
            index[p][q].get(g).copied().ok_or_else(|| SimplicialError::OutsideBasis {
                map,
                index: i,
                degree: p + q,
                generator: format!("({p},{q}) {g:?}"),
            })
        };
        let built: Vec<Cell<G>> = cells
            .par_iter()
            .map(|&(p, q)| {
                let basis = &bases[p][q];
                let faces = |n: usize, f: &(dyn Fn(usize, &G) -> Option<G> + Sync), tp: usize, tq: usize, name| {
                    if n == 0 {
                        return Ok(Vec::new());
                    }
                    (0..=n)
                        .map(|i| {
                            basis
                                .iter()
                                .map(|g| f(i, g).map(|h| lookup(tp, tq, &h, name, i)).transpose())
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()
                };
                let degens = |n: usize, f: &(dyn Fn(usize, &G) -> G + Sync), tp: usize, tq: usize, name| {
                    if !region.contains(tp, tq) {
                        return Ok(Vec::new());
                    }
                    (0..=n)
                        .map(|i| basis.iter().map(|g| lookup(tp, tq, &f(i, g), name, i)).collect::<Result<Vec<_>, _>>())
                        .collect::<Result<Vec<_>, _>>()
                };
                Ok(Cell {
                    h_faces: faces(p, &|i, g| src.h_face(p, q, i, g), p.saturating_sub(1), q, "horizontal face")?,
                    v_faces: faces(q, &|i, g| src.v_face(p, q, i, g), p, q.saturating_sub(1), "vertical face")?,
                    h_degens: degens(p, &|i, g| src.h_degeneracy(p, q, i, g), p + 1, q, "horizontal degeneracy")?,
                    v_degens: degens(q, &|i, g| src.v_degeneracy(p, q, i, g), p, q + 1, "vertical degeneracy")?,
                    _marker: std::marker::PhantomData,
                })
            })
            .collect::<Result<Vec<_>, SimplicialError>>()?;
        let mut obj = BasedBisimplicialObject {
            region,
            bases,
            h_faces: vec![vec![Vec::new(); qm + 1]; pm + 1],
            v_faces: vec![vec![Vec::new(); qm + 1]; pm + 1],
            h_degens: vec![vec![Vec::new(); qm + 1]; pm + 1],
            v_degens: vec![vec![Vec::new(); qm + 1]; pm + 1],
        };
        for (&(p, q), cell) in cells.iter().zip(built) {
            obj.h_faces[p][q] = cell.h_faces;
            obj.v_faces[p][q] = cell.v_faces;
            obj.h_degens[p][q] = cell.h_degens;
            obj.v_degens[p][q] = cell.v_degens;
        }
        obj.check_identities()?;
        Ok(obj)
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn basis(&self, p: usize, q: usize) -> &[G] {
        &self.bases[p][q]
    }

    pub fn h_face_table(&self, p: usize, q: usize, i: usize) -> &[Option<u32>] {
        &self.h_faces[p][q][i]
    }

    pub fn v_face_table(&self, p: usize, q: usize, i: usize) -> &[Option<u32>] {
        &self.v_faces[p][q][i]
    }

    /// `σ_i^h` out of `(p, q)`; requires `(p+1, q)` in the region.
    pub fn h_degeneracy_table(&self, p: usize, q: usize, i: usize) -> &[u32] {
        &self.h_degens[p][q][i]
    }

    /// `σ_i^v` out of `(p, q)`; requires `(p, q+1)` in the region.
    pub fn v_degeneracy_table(&self, p: usize, q: usize, i: usize) -> &[u32] {
        &self.v_degens[p][q][i]
    }

    /// Horizontally degenerate generators of bidegree `(p, q)`.
    pub fn h_degenerate_mask(&self, p: usize, q: usize) -> Vec<bool> {
        let mut mask = vec![false; self.bases[p][q].len()];
        if p > 0 {
            for table in &self.h_degens[p - 1][q] {
                for &t in table {
                    mask[t as usize] = true;
                }
            }
        }
        mask
    }

    /// Checks rows and columns for the simplicial identities and that the two structures commute.
    pub fn check_identities(&self) -> Result<(), SimplicialError> {
        let r = self.region;
        for q in 0..=r.q_max {
            let top = r.p_max.min(r.total_max.saturating_sub(q));
            if !r.contains(0, q) {
                continue;
            }
            check_simplicial_identities(
                top,
                |p| self.bases[p][q].len(),
                |p, i, g| self.h_faces[p][q][i][g].map(|x| x as usize),
                |p, i, g| self.h_degens[p][q][i][g] as usize,
            )?;
        }
        for p in 0..=r.p_max {
            let top = r.q_max.min(r.total_max.saturating_sub(p));
            if !r.contains(p, 0) {
                continue;
            }
            check_simplicial_identities(
                top,
                |q| self.bases[p][q].len(),
                |q, i, g| self.v_faces[p][q][i][g].map(|x| x as usize),
                |q, i, g| self.v_degens[p][q][i][g] as usize,
            )?;
        }
        let fail = |identity, p: usize, q: usize| Err(SimplicialError::IdentityFails { identity, degree: p + q, i: p, j: q });
        for (p, q) in r.cells() {
            let n = self.bases[p][q].len();
            for g in 0..n {
                if p > 0 && q > 0 {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.v_faces[p][q][j][g].and_then(|h| self.h_faces[p][q - 1][i][h as usize]);
                            let b = self.h_faces[p][q][i][g].and_then(|h| self.v_faces[p - 1][q][j][h as usize]);
                            if a != b {
                                return fail("horizontal and vertical faces commute", p, q);
                            }
                        }
                    }
                }
                if p > 0 && r.contains(p, q + 1) {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.h_faces[p][q + 1][i][self.v_degens[p][q][j][g] as usize];
                            let b = self.h_faces[p][q][i][g].map(|h| self.v_degens[p - 1][q][j][h as usize]);
                            if a != b {
                                return fail("horizontal faces commute with vertical degeneracies", p, q);
                            }
                        }
                    }
                }
                if q > 0 && r.contains(p + 1, q) {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.v_faces[p + 1][q][j][self.h_degens[p][q][i][g] as usize];
                            let b = self.v_faces[p][q][j][g].map(|h| self.h_degens[p][q - 1][i][h as usize]);
                            if a != b {
                                return fail("vertical faces commute with horizontal degeneracies", p, q);
                            }
                        }
                    }
                }
                if r.contains(p + 1, q + 1) {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.h_degens[p][q + 1][i][self.v_degens[p][q][j][g] as usize];
                            let b = self.v_degens[p + 1][q][j][self.h_degens[p][q][i][g] as usize];
                            if a != b {
                                return fail("degeneracies commute", p, q);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
