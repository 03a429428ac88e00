use std::fmt::Debug;
use std::hash::Hash;

/// Generator type of a based simplicial object.
pub trait Generator: Clone + Eq + Hash + Debug + Send + Sync {}

impl<T: Clone + Eq + Hash + Debug + Send + Sync> Generator for T {}

/// A simplicial abelian group presented lazily by generators.
///
/// Faces send a generator to a generator or to zero; degeneracies send generators to
/// generators injectively. Generators of each degree are listed in a fixed order.
pub trait SimplicialSource: Sync {
    type Gen: Generator;

    fn generators(&self, n: usize) -> Vec<Self::Gen>;

    /// `δ_i` on a degree-`n` generator, `0 ≤ i ≤ n`, `n ≥ 1`.
    fn face(&self, n: usize, i: usize, g: &Self::Gen) -> Option<Self::Gen>;

    /// `σ_i` on a degree-`n` generator, `0 ≤ i ≤ n`.
    fn degeneracy(&self, n: usize, i: usize, g: &Self::Gen) -> Self::Gen;
}

/// A bisimplicial abelian group presented lazily; `p` is horizontal, `q` vertical.
pub trait BisimplicialSource: Sync {
    type Gen: Generator;

    fn generators(&self, p: usize, q: usize) -> Vec<Self::Gen>;

    /// `δ_i^h: (p, q) → (p-1, q)`.
    fn h_face(&self, p: usize, q: usize, i: usize, g: &Self::Gen) -> Option<Self::Gen>;

    /// `δ_i^v: (p, q) → (p, q-1)`.
    fn v_face(&self, p: usize, q: usize, i: usize, g: &Self::Gen) -> Option<Self::Gen>;

    /// `σ_i^h: (p, q) → (p+1, q)`.
    fn h_degeneracy(&self, p: usize, q: usize, i: usize, g: &Self::Gen) -> Self::Gen;

    /// `σ_i^v: (p, q) → (p, q+1)`.
    fn v_degeneracy(&self, p: usize, q: usize, i: usize, g: &Self::Gen) -> Self::Gen;
}

/// The diagonal of a bisimplicial source: degree `n` is bidegree `(n, n)`, and each
/// face or degeneracy is the horizontal one composed with the vertical one.
#[derive(Clone, Debug)]
pub struct Diagonal<S>(pub S);

impl<S: BisimplicialSource> SimplicialSource for Diagonal<S> {
    type Gen = S::Gen;

    fn generators(&self, n: usize) -> Vec<S::Gen> {
        self.0.generators(n, n)
    }

    fn face(&self, n: usize, i: usize, g: &S::Gen) -> Option<S::Gen> {
        let v = self.0.v_face(n, n, i, g)?;
        self.0.h_face(n, n - 1, i, &v)
    }

    fn degeneracy(&self, n: usize, i: usize, g: &S::Gen) -> S::Gen {
        let v = self.0.v_degeneracy(n, n, i, g);
        self.0.h_degeneracy(n, n + 1, i, &v)
    }
}

impl<S: SimplicialSource> SimplicialSource for &S {
    type Gen = S::Gen;

    fn generators(&self, n: usize) -> Vec<S::Gen> {
        (**self).generators(n)
    }

    fn face(&self, n: usize, i: usize, g: &S::Gen) -> Option<S::Gen> {
        (**self).face(n, i, g)
    }

    fn degeneracy(&self, n: usize, i: usize, g: &S::Gen) -> S::Gen {
        (**self).degeneracy(n, i, g)
    }
}

impl<S: BisimplicialSource> BisimplicialSource for &S {
    type Gen = S::Gen;

    fn generators(&self, p: usize, q: usize) -> Vec<S::Gen> {
        (**self).generators(p, q)
    }

    fn h_face(&self, p: usize, q: usize, i: usize, g: &S::Gen) -> Option<S::Gen> {
        (**self).h_face(p, q, i, g)
    }

    fn v_face(&self, p: usize, q: usize, i: usize, g: &S::Gen) -> Option<S::Gen> {
        (**self).v_face(p, q, i, g)
    }

    fn h_degeneracy(&self, p: usize, q: usize, i: usize, g: &S::Gen) -> S::Gen {
        (**self).h_degeneracy(p, q, i, g)
    }

    fn v_degeneracy(&self, p: usize, q: usize, i: usize, g: &S::Gen) -> S::Gen {
        (**self).v_degeneracy(p, q, i, g)
    }
}

/// External product `S ⊠ T`: bidegree `(p, q)` is `S_p × T_q`.
#[derive(Clone, Debug)]
pub struct ExternalProduct<S, T>(pub S, pub T);

impl<S: SimplicialSource, T: SimplicialSource> BisimplicialSource for ExternalProduct<S, T> {
    type Gen = (S::Gen, T::Gen);

    fn generators(&self, p: usize, q: usize) -> Vec<Self::Gen> {
        let right = self.1.generators(q);
        self.0
            .generators(p)
            .into_iter()
            .flat_map(|a| right.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }

    fn h_face(&self, p: usize, _q: usize, i: usize, (a, b): &Self::Gen) -> Option<Self::Gen> {
        Some((self.0.face(p, i, a)?, b.clone()))
    }

    fn v_face(&self, _p: usize, q: usize, i: usize, (a, b): &Self::Gen) -> Option<Self::Gen> {
        Some((a.clone(), self.1.face(q, i, b)?))
    }

    fn h_degeneracy(&self, p: usize, _q: usize, i: usize, (a, b): &Self::Gen) -> Self::Gen {
        (self.0.degeneracy(p, i, a), b.clone())
    }

    fn v_degeneracy(&self, _p: usize, q: usize, i: usize, (a, b): &Self::Gen) -> Self::Gen {
        (a.clone(), self.1.degeneracy(q, i, b))
    }
}
