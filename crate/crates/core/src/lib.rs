//! Exact magnitude homology and iterated magnitude homology of finite enriched categories.
//!
//! Inputs are finite categories, generalized metric spaces, normed groups, Cat-groups and strict
//! n-categories. Chain complexes carry explicit bases and are reduced over ℤ by Smith normal form,
//! so every homology group comes out with its torsion. Length gradings are exact; the core is
//! generic over the [`scalar::Length`] type, with rational and integer aliases below.

pub mod complex;
pub mod enriched;
pub mod iterated;
pub mod linalg;
pub mod magnitude;
pub mod oracles;
pub mod scalar;
pub mod simplicial;

pub use scalar::{Distance, Int, Length};

/// Exact rational lengths.
pub type Rational = num_rational::BigRational;

pub type RationalMetricSpace = enriched::GenMetricSpace<Rational>;
pub type IntegerMetricSpace = enriched::GenMetricSpace<u64>;
pub type RationalNormedGroup = enriched::NormedGroup<Rational>;
pub type IntegerNormedGroup = enriched::NormedGroup<u64>;
