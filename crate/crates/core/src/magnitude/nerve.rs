use crate::enriched::FinCategory;
use crate::simplicial::{BasedSimplicialObject, SimplicialError, SimplicialSource};

/// The nerve of a finite category.
///
/// A degree-0 generator is `[x]` for an object `x`; a degree-`n` generator (`n ≥ 1`) is a path
/// `[f_1, …, f_n]` of composable morphisms, `f_{i+1}` starting where `f_i` ends.
#[derive(Clone, Copy, Debug)]
pub struct CategoryNerve<'a>(pub &'a FinCategory);

impl CategoryNerve<'_> {
    /// Object `x_i` of a path, `0 ≤ i ≤ n`.
    fn vertex(&self, n: usize, i: usize, g: &[usize]) -> usize {
        match (n, i) {
            (0, _) => g[0],
            (_, i) if i < n => self.0.morphism(g[i]).source,
            _ => self.0.morphism(g[n - 1]).target,
        }
    }
}

impl SimplicialSource for CategoryNerve<'_> {
    type Gen = Vec<usize>;

    fn generators(&self, n: usize) -> Vec<Vec<usize>> {
        let c = self.0;
        if n == 0 {
            return (0..c.objects().len()).map(|x| vec![x]).collect();
        }
        let mut paths: Vec<Vec<usize>> = (0..c.morphisms().len()).map(|f| vec![f]).collect();
        for _ in 1..n {
            paths = paths
                .into_iter()
                .flat_map(|p| {
                    let end = c.morphism(*p.last().expect("nonempty path")).target;
                    let mut next: Vec<usize> = (0..c.objects().len()).flat_map(|y| c.hom(end, y).iter().copied()).collect();
                    next.sort_unstable();
                    next.into_iter().map(move |f| {
                        let mut q = p.clone();
                        q.push(f);
                        q
                    })
                })
                .collect();
        }
        paths
    }

    fn face(&self, n: usize, i: usize, g: &Vec<usize>) -> Option<Vec<usize>> {
        let c = self.0;
        if n == 1 {
            let f = c.morphism(g[0]);
            return Some(vec![if i == 0 { f.target } else { f.source }]);
        }
        let mut h = g.clone();
        if i == 0 {
            h.remove(0);
        } else if i == n {
            h.pop();
        } else {
            let composite = c.compose(g[i], g[i - 1]).expect("paths are composable");
            h.splice(i - 1..=i, [composite]);
        }
        Some(h)
    }

    fn degeneracy(&self, n: usize, i: usize, g: &Vec<usize>) -> Vec<usize> {
        let id = self.0.identity(self.vertex(n, i, g));
        if n == 0 {
            return vec![id];
        }
        let mut h = g.clone();
        h.insert(i, id);
        h
    }
}

/// The nerve of `x` in degrees `0..=max_degree`.
pub fn nerve_category(x: &FinCategory, max_degree: usize) -> Result<BasedSimplicialObject<Vec<usize>>, SimplicialError> {
    BasedSimplicialObject::from_source(&CategoryNerve(x), max_degree)
}
