//! Iterated magnitude nerves of finite strict n-categories.
//!
//! A generator of `MB^k` in degree `d`, taken inside a hom whose objects are `r`-cells, is stored
//! flat: `d + 1` objects (`r`-cells) followed by `d` blocks, block `j` being a generator of
//! `MB^{k-1}` in degree `d` of the hom between objects `j - 1` and `j`. `MB^0` is constant, so its
//! generators are single cells. The double nerve at bidegree `(p, q)` has `p + 1` objects and `p`
//! blocks of degree `q`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::enriched::{CatGroup, StrictNCat};
use crate::simplicial::{BasedBisimplicialObject, BasedSimplicialObject, BisimplicialSource, Region, SimplicialSource};

use super::IteratedError;

type Gens = Arc<Vec<Vec<u32>>>;

/// Shared enumeration and face machinery for the nerves of one n-category.
#[derive(Debug)]
pub struct NCatNerveCore<'a> {
    x: &'a StrictNCat,
    /// `r`-cells with given `(r-1)`-dimensional source and target, for `r ≥ 1`.
    parallel: HashMap<(usize, u32, u32), Vec<u32>>,
    memo: Mutex<HashMap<(usize, usize, usize, usize, Option<(u32, u32)>), Gens>>,
}

/// Flat length of an `MB^k` generator of degree `d`.
fn flat_len(k: usize, d: usize) -> usize {
    if k == 0 {
        1
    } else {
        d + 1 + d * flat_len(k - 1, d)
    }
}

impl<'a> NCatNerveCore<'a> {
    pub fn new(x: &'a StrictNCat) -> Result<Self, IteratedError> {
        if x.level() == 0 {
            return Err(IteratedError::LevelZero);
        }
        let mut parallel: HashMap<(usize, u32, u32), Vec<u32>> = HashMap::new();
        for r in 1..=x.level() {
            for c in 0..x.cell_count(r) {
                parallel.entry((r, x.source(r, c) as u32, x.target(r, c) as u32)).or_default().push(c as u32);
            }
        }
        Ok(NCatNerveCore { x, parallel, memo: Mutex::new(HashMap::new()) })
    }

    pub fn level(&self) -> usize {
        self.x.level()
    }

    fn objects(&self, r: usize, parent: Option<(u32, u32)>) -> Vec<u32> {
        match parent {
            None => (0..self.x.cell_count(0) as u32).collect(),
            Some((a, b)) => self.parallel.get(&(r, a, b)).cloned().unwrap_or_default(),
        }
    }

    /// Generators of `MB^k` in bidegree `(p, q)` of the hom between `parent` (all objects if
    /// `None`), whose objects are `r`-cells; lexicographic in the flat layout.
    fn bi_generators(&self, k: usize, p: usize, q: usize, r: usize, parent: Option<(u32, u32)>) -> Gens {
        let key = (k, p, q, r, parent);
        if let Some(g) = self.memo.lock().expect("memo lock").get(&key) {
            return g.clone();
        }
        let objects = self.objects(r, parent);
        let result: Vec<Vec<u32>> = if k == 0 {
            objects.into_iter().map(|c| vec![c]).collect()
        } else {
            let mut out = Vec::new();
            let mut objs = Vec::with_capacity(p + 1);
            let mut blocks: Vec<Gens> = Vec::with_capacity(p);
            self.extend_objects(k, p, q, r, &objects, &mut objs, &mut blocks, &mut out);
            out
        };
        let result = Arc::new(result);
        self.memo.lock().expect("memo lock").insert(key, result.clone());
        result
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_objects(
        &self,
        k: usize,
        p: usize,
        q: usize,
        r: usize,
        objects: &[u32],
        objs: &mut Vec<u32>,
        blocks: &mut Vec<Gens>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if objs.len() == p + 1 {
            let mut flat = objs.clone();
            flat.reserve(p * flat_len(k - 1, q));
            product(blocks, 0, &mut flat, out);
            return;
        }
        for &x in objects {
            if let Some(&prev) = objs.last() {
                let b = self.bi_generators(k - 1, q, q, r + 1, Some((prev, x)));
                if b.is_empty() {
                    continue;
                }
                blocks.push(b);
            }
            objs.push(x);
            self.extend_objects(k, p, q, r, objects, objs, blocks, out);
            objs.pop();
            if !objs.is_empty() {
                blocks.pop();
            }
        }
    }

    /// Identity generator of `MB^k` in degree `q` on the `e`-cell `c`.
    fn identity_block(&self, k: usize, q: usize, e: usize, c: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(c);
            return;
        }
        out.extend(std::iter::repeat_n(c, q + 1));
        let id = self.x.identity(e, c as usize) as u32;
        for _ in 0..q {
            self.identity_block(k - 1, q, e + 1, id, out);
        }
    }

    /// Cell dimension at each position of an `MB^k` generator of degree `d` with `r`-cell objects.
    fn depths(k: usize, d: usize, r: usize, out: &mut Vec<usize>) {
        if k == 0 {
            out.push(r);
            return;
        }
        out.extend(std::iter::repeat_n(r, d + 1));
        for _ in 0..d {
            Self::depths(k - 1, d, r + 1, out);
        }
    }

    /// `δ_i^h` at bidegree `(p, q)`: outer faces drop an end object and its block, inner faces
    /// compose adjacent blocks cellwise along `r`-cells.
    fn h_face(&self, k: usize, p: usize, q: usize, r: usize, i: usize, g: &[u32]) -> Vec<u32> {
        let len = flat_len(k - 1, q);
        let (objs, blocks) = g.split_at(p + 1);
        let block = |j: usize| &blocks[j * len..(j + 1) * len];
        let mut out = Vec::with_capacity(g.len() - 1 - len);
        out.extend(objs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x));
        for j in 0..p {
            if (i == 0 && j == 0) || (i == p && j == p - 1) || (i > 0 && i < p && j == i) {
                continue;
            }
            if i > 0 && i < p && j == i - 1 {
                let mut depth = Vec::with_capacity(len);
                Self::depths(k - 1, q, r + 1, &mut depth);
                let (a, b) = (block(i - 1), block(i));
                out.extend((0..len).map(|t| {
                    self.x.compose(depth[t], r, b[t] as usize, a[t] as usize).expect("adjacent blocks compose") as u32
                }));
            } else {
                out.extend_from_slice(block(j));
            }
        }
        out
    }

    /// `δ_i^v` at bidegree `(p, q)`: the diagonal face of `MB^{k-1}` applied to every block.
    fn v_face(&self, k: usize, p: usize, q: usize, r: usize, i: usize, g: &[u32]) -> Vec<u32> {
        let len = flat_len(k - 1, q);
        let mut out = g[..=p].to_vec();
        for j in 0..p {
            out.extend(self.diag_face(k - 1, q, r + 1, i, &g[p + 1 + j * len..p + 1 + (j + 1) * len]));
        }
        out
    }

    fn diag_face(&self, k: usize, d: usize, r: usize, i: usize, g: &[u32]) -> Vec<u32> {
        if k == 0 {
            return g.to_vec();
        }
        self.h_face(k, d, d - 1, r, i, &self.v_face(k, d, d, r, i, g))
    }

    /// `σ_i^h` at bidegree `(p, q)`: repeat object `i` and insert an identity block after it.
    fn h_degeneracy(&self, k: usize, p: usize, q: usize, r: usize, i: usize, g: &[u32]) -> Vec<u32> {
        let len = flat_len(k - 1, q);
        let mut out = Vec::with_capacity(g.len() + 1 + len);
        out.extend_from_slice(&g[..=i]);
        out.extend_from_slice(&g[i..=p]);
        let blocks = &g[p + 1..];
        out.extend_from_slice(&blocks[..i * len]);
        self.identity_block(k - 1, q, r + 1, self.x.identity(r, g[i] as usize) as u32, &mut out);
        out.extend_from_slice(&blocks[i * len..]);
        out
    }

    fn v_degeneracy(&self, k: usize, p: usize, q: usize, r: usize, i: usize, g: &[u32]) -> Vec<u32> {
        let len = flat_len(k - 1, q);
        let mut out = g[..=p].to_vec();
        for j in 0..p {
            out.extend(self.diag_degeneracy(k - 1, q, r + 1, i, &g[p + 1 + j * len..p + 1 + (j + 1) * len]));
        }
        out
    }

    fn diag_degeneracy(&self, k: usize, d: usize, r: usize, i: usize, g: &[u32]) -> Vec<u32> {
        if k == 0 {
            return g.to_vec();
        }
        self.h_degeneracy(k, d, d + 1, r, i, &self.v_degeneracy(k, d, d, r, i, g))
    }
}

fn product(blocks: &[Gens], j: usize, flat: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if j == blocks.len() {
        out.push(flat.clone());
        return;
    }
    for b in blocks[j].iter() {
        let mark = flat.len();
        flat.extend_from_slice(b);
        product(blocks, j + 1, flat, out);
        flat.truncate(mark);
    }
}

/// `MB^n` of an n-category as a simplicial source.
#[derive(Debug)]
pub struct NCatNerve<'a>(pub NCatNerveCore<'a>);

impl SimplicialSource for NCatNerve<'_> {
    type Gen = Vec<u32>;

    fn generators(&self, n: usize) -> Vec<Vec<u32>> {
        let k = self.0.level();
        self.0.bi_generators(k, n, n, 0, None).as_ref().clone()
    }

    fn face(&self, n: usize, i: usize, g: &Vec<u32>) -> Option<Vec<u32>> {
        Some(self.0.diag_face(self.0.level(), n, 0, i, g))
    }

    fn degeneracy(&self, n: usize, i: usize, g: &Vec<u32>) -> Vec<u32> {
        self.0.diag_degeneracy(self.0.level(), n, 0, i, g)
    }
}

/// The double nerve `MB^{MB^{n-1}}` of an n-category as a bisimplicial source.
#[derive(Debug)]
pub struct NCatDoubleNerve<'a>(pub NCatNerveCore<'a>);

impl BisimplicialSource for NCatDoubleNerve<'_> {
    type Gen = Vec<u32>;

    fn generators(&self, p: usize, q: usize) -> Vec<Vec<u32>> {
        self.0.bi_generators(self.0.level(), p, q, 0, None).as_ref().clone()
    }

    fn h_face(&self, p: usize, q: usize, i: usize, g: &Vec<u32>) -> Option<Vec<u32>> {
        Some(self.0.h_face(self.0.level(), p, q, 0, i, g))
    }

    fn v_face(&self, p: usize, q: usize, i: usize, g: &Vec<u32>) -> Option<Vec<u32>> {
        Some(self.0.v_face(self.0.level(), p, q, 0, i, g))
    }

    fn h_degeneracy(&self, p: usize, q: usize, i: usize, g: &Vec<u32>) -> Vec<u32> {
        self.0.h_degeneracy(self.0.level(), p, q, 0, i, g)
    }

    fn v_degeneracy(&self, p: usize, q: usize, i: usize, g: &Vec<u32>) -> Vec<u32> {
        self.0.v_degeneracy(self.0.level(), p, q, 0, i, g)
    }
}

/// `MB^n(x)` in degrees `0..=max_degree`, built directly on the diagonal.
pub fn mb_n(x: &StrictNCat, max_degree: usize) -> Result<BasedSimplicialObject<Vec<u32>>, IteratedError> {
    let src = NCatNerve(NCatNerveCore::new(x)?);
    Ok(BasedSimplicialObject::from_source(&src, max_degree)?)
}

/// The double nerve of an n-category, `n ≥ 1`, materialized on `region`.
pub fn double_nerve_ncat(x: &StrictNCat, region: Region) -> Result<BasedBisimplicialObject<Vec<u32>>, IteratedError> {
    let src = NCatDoubleNerve(NCatNerveCore::new(x)?);
    Ok(BasedBisimplicialObject::from_source(&src, region)?)
}

/// The double nerve of a Cat-group viewed as a one-object 2-category.
pub fn double_nerve_2cat(g: &CatGroup, region: Region) -> Result<BasedBisimplicialObject<Vec<u32>>, IteratedError> {
    double_nerve_ncat(&StrictNCat::from_cat_group(g), region)
}
