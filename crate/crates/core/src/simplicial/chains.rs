use super::{BasedBisimplicialObject, BasedSimplicialObject, Generator, Region, SimplicialError};
use crate::complex::{BasedChainComplex, BasedDoubleComplex};
use crate::linalg::IntMatrix;
use crate::scalar::Int;

/// Alternating-sum matrix of a family of face tables, with columns restricted to `keep_cols`
/// and rows renumbered by `row_index` (`None` drops the row).
fn alternating_sum(
    faces: &[&[Option<u32>]],
    keep_cols: &[usize],
    row_index: &[Option<u32>],
    nrows: usize,
) -> IntMatrix {
    let columns = keep_cols.iter().map(|&g| {
        let mut col: Vec<(u32, Int)> = Vec::with_capacity(faces.len());
        for (i, table) in faces.iter().enumerate() {
            if let Some(row) = table[g].and_then(|t| row_index[t as usize]) {
                col.push((row, if i % 2 == 0 { Int::from(1) } else { Int::from(-1) }));
            }
        }
        col
    });
    IntMatrix::from_columns(nrows, columns.collect::<Vec<_>>())
}

/// Keeps the unmasked positions; returns the kept positions and the renumbering.
fn filter(mask: &[bool]) -> (Vec<usize>, Vec<Option<u32>>) {
    let mut kept = Vec::new();
    let mut index = Vec::with_capacity(mask.len());
    for (g, &m) in mask.iter().enumerate() {
        if m {
            index.push(None);
        } else {
            index.push(Some(kept.len() as u32));
            kept.push(g);
        }
    }
    (kept, index)
}

fn identity_filter(n: usize) -> (Vec<usize>, Vec<Option<u32>>) {
    filter(&vec![false; n])
}

fn chains<G: Generator>(s: &BasedSimplicialObject<G>, normalized: bool) -> BasedChainComplex<G> {
    let top = s.max_degree();
    let filters: Vec<_> = (0..=top)
        .map(|n| if normalized { filter(&s.degenerate_mask(n)) } else { identity_filter(s.basis(n).len()) })
        .collect();
    let bases = filters.iter().enumerate().map(|(n, (kept, _))| kept.iter().map(|&g| s.basis(n)[g].clone()).collect()).collect();
    let boundaries = (1..=top)
        .map(|n| {
            let faces: Vec<&[Option<u32>]> = (0..=n).map(|i| s.face_table(n, i)).collect();
            alternating_sum(&faces, &filters[n].0, &filters[n - 1].1, filters[n - 1].0.len())
        })
        .collect();
    BasedChainComplex::new(bases, boundaries, false).expect("chain shapes follow the bases")
}

/// Chains `C(S)` with `∂_n = Σ (-1)^i δ_i`, built through the truncation degree of `S`.
pub fn unnormalized_chains<G: Generator>(s: &BasedSimplicialObject<G>) -> BasedChainComplex<G> {
    chains(s, false)
}

/// The Moore complex: nondegenerate generators, with faces landing on degenerate ones dropped.
pub fn normalized_chains<G: Generator>(s: &BasedSimplicialObject<G>) -> BasedChainComplex<G> {
    chains(s, true)
}

/// The diagonal of an object built on a square region `[0, D]²`.
pub fn diagonal<G: Generator>(b: &BasedBisimplicialObject<G>) -> Result<BasedSimplicialObject<G>, SimplicialError> {
    let r = b.region();
    if r.p_max != r.q_max || r.total_max < 2 * r.p_max {
        return Err(SimplicialError::NonSquare { p_max: r.p_max, q_max: r.q_max, total_max: r.total_max });
    }
    let d = r.p_max;
    let bases: Vec<Vec<G>> = (0..=d).map(|n| b.basis(n, n).to_vec()).collect();
    let faces = (0..=d)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    let v = b.v_face_table(n, n, i);
                    let h = b.h_face_table(n, n - 1, i);
                    v.iter().map(|x| x.and_then(|t| h[t as usize])).collect()
                })
                .collect()
        })
        .collect();
    let degeneracies = (0..d)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let v = b.v_degeneracy_table(n, n, i);
                    let h = b.h_degeneracy_table(n, n + 1, i);
                    v.iter().map(|&t| h[t as usize]).collect()
                })
                .collect()
        })
        .collect();
    BasedSimplicialObject::from_tables(bases, faces, degeneracies)
}

fn double<G: Generator>(b: &BasedBisimplicialObject<G>, normalize_rows: bool) -> BasedDoubleComplex<G> {
    let r: Region = b.region();
    let in_region = |p: usize, q: usize| r.contains(p, q);
    let filters: Vec<Vec<_>> = (0..=r.p_max)
        .map(|p| {
            (0..=r.q_max)
                .map(|q| {
                    let n = if in_region(p, q) { b.basis(p, q).len() } else { 0 };
                    if normalize_rows && in_region(p, q) {
                        filter(&b.h_degenerate_mask(p, q))
                    } else {
                        identity_filter(n)
                    }
                })
                .collect()
        })
        .collect();
    let mut bases = Vec::with_capacity(r.p_max + 1);
    let mut horizontal = Vec::with_capacity(r.p_max + 1);
    let mut vertical = Vec::with_capacity(r.p_max + 1);
    for p in 0..=r.p_max {
        let (mut row_b, mut row_h, mut row_v) = (Vec::new(), Vec::new(), Vec::new());
        for q in 0..=r.q_max {
            let (kept, _) = &filters[p][q];
            if !in_region(p, q) {
                row_b.push(Vec::new());
                row_h.push(IntMatrix::zeros(if p == 0 { 0 } else { filters[p - 1][q].0.len() }, 0));
                row_v.push(IntMatrix::zeros(if q == 0 { 0 } else { filters[p][q - 1].0.len() }, 0));
                continue;
            }
            row_b.push(kept.iter().map(|&g| b.basis(p, q)[g].clone()).collect());
            row_h.push(if p == 0 {
                IntMatrix::zeros(0, kept.len())
            } else {
                let faces: Vec<_> = (0..=p).map(|i| b.h_face_table(p, q, i)).collect();
                alternating_sum(&faces, kept, &filters[p - 1][q].1, filters[p - 1][q].0.len())
            });
            row_v.push(if q == 0 {
                IntMatrix::zeros(0, kept.len())
            } else {
                let faces: Vec<_> = (0..=q).map(|j| b.v_face_table(p, q, j)).collect();
                alternating_sum(&faces, kept, &filters[p][q - 1].1, filters[p][q - 1].0.len())
            });
        }
        bases.push(row_b);
        horizontal.push(row_h);
        vertical.push(row_v);
    }
    BasedDoubleComplex::new(r.total_max, bases, horizontal, vertical, false).expect("double complex shapes follow the bases")
}

/// Unnormalized double complex `C(B)`: alternating sums of horizontal and vertical faces.
pub fn double_chains<G: Generator>(b: &BasedBisimplicialObject<G>) -> BasedDoubleComplex<G> {
    double(b, false)
}

/// `C^v N^h B`: rows normalized (horizontally degenerate generators removed), columns unnormalized.
pub fn row_normalize<G: Generator>(b: &BasedBisimplicialObject<G>) -> BasedDoubleComplex<G> {
    double(b, true)
}
