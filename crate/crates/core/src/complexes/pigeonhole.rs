use serde::{Deserialize, Serialize};

use super::Subcomplex;

/// The pigeonhole instances of unavoidable subcomplexes, with their numeric
/// hypotheses. `n` is the simplex dimension, so there are `n + 1` vertices; the
/// distinguished vertex sets are always taken to be the first vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "example", rename_all = "snake_case")]
pub enum PigeonholeExample {
    /// (i) The simplex induced on the first `kept` vertices.
    Induced { n: usize, r: usize, kept: usize },
    /// (ii) Faces with at most one vertex in a set of `set_size` vertices.
    AtMostOne { n: usize, r: usize, set_size: usize },
    /// (iii) The `k`-skeleton.
    Skeleton { n: usize, r: usize, k: usize },
    /// (iv) `Δ_n^(k-1) ∪ Δ_{n-(r-s)}^(k)`.
    NonUniform { n: usize, r: usize, k: usize, s: usize },
    /// Faces with at most `s` vertices in a set of `set_size` vertices.
    Generalized { n: usize, r: usize, set_size: usize, s: usize },
}

impl PigeonholeExample {
    pub fn n(&self) -> usize {
        match *self {
            PigeonholeExample::Induced { n, .. }
            | PigeonholeExample::AtMostOne { n, .. }
            | PigeonholeExample::Skeleton { n, .. }
            | PigeonholeExample::NonUniform { n, .. }
            | PigeonholeExample::Generalized { n, .. } => n,
        }
    }

    pub fn r(&self) -> usize {
        match *self {
            PigeonholeExample::Induced { r, .. }
            | PigeonholeExample::AtMostOne { r, .. }
            | PigeonholeExample::Skeleton { r, .. }
            | PigeonholeExample::NonUniform { r, .. }
            | PigeonholeExample::Generalized { r, .. } => r,
        }
    }

    /// The subcomplex the example is about.
    pub fn complex(&self) -> Subcomplex {
        match *self {
            PigeonholeExample::Induced { kept, .. } => Subcomplex::induced(0..kept),
            PigeonholeExample::AtMostOne { set_size, .. } => Subcomplex::at_most(1, 0..set_size),
            PigeonholeExample::Skeleton { k, .. } => Subcomplex::Skeleton(k),
            PigeonholeExample::NonUniform { n, r, k, s } => Subcomplex::non_uniform(n, r, k, s),
            PigeonholeExample::Generalized { set_size, s, .. } => Subcomplex::at_most(s, 0..set_size),
        }
    }
}

/// Evaluates the example's numeric hypothesis. No enumeration is involved.
pub fn pigeonhole_predicate(example: &PigeonholeExample) -> bool {
    match *example {
        // All but at most r - 1 vertices are kept.
        PigeonholeExample::Induced { n, r, kept } => kept <= n + 1 && kept + r > n + 1,
        PigeonholeExample::AtMostOne { n, r, set_size } => set_size <= n + 1 && set_size < 2 * r,
        PigeonholeExample::Skeleton { n, r, k } => r * (k + 2) > n + 1,
        PigeonholeExample::NonUniform { n, r, k, s } => s <= r && r * (k + 1) + s > n + 1,
        PigeonholeExample::Generalized { n, r, set_size, s } => set_size <= n + 1 && set_size < (s + 1) * r,
    }
}
