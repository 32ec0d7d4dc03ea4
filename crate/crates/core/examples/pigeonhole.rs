//! The pigeonhole families of unavoidable complexes, predicate against
//! exhaustive check.

use tverberg_lab::complexes::{PigeonholeExample, DEFAULT_MAX_SIMPLEX_DIM};
use tverberg_lab::{is_unavoidable, pigeonhole_predicate, UnavoidabilityMode};

fn main() -> tverberg_lab::Result<()> {
    use PigeonholeExample::*;
    let cases = [
        Induced { n: 6, r: 3, kept: 5 },
        Induced { n: 6, r: 3, kept: 4 },
        AtMostOne { n: 7, r: 3, set_size: 5 },
        AtMostOne { n: 7, r: 3, set_size: 6 },
        Skeleton { n: 7, r: 3, k: 1 },
        NonUniform { n: 8, r: 3, k: 1, s: 2 },
        Generalized { n: 8, r: 2, set_size: 5, s: 2 },
    ];
    for ex in cases {
        let u = is_unavoidable(&ex.complex(), ex.n(), ex.r(), UnavoidabilityMode::Pairwise, DEFAULT_MAX_SIMPLEX_DIM)?;
        println!("{ex:?}\n  predicate {}  unavoidable {}", pigeonhole_predicate(&ex), u.unavoidable);
    }
    Ok(())
}
