//! Unavoidable subcomplexes: which skeleta catch every triple of disjoint faces?

use tverberg_lab::complexes::DEFAULT_MAX_SIMPLEX_DIM;
use tverberg_lab::{is_unavoidable, Subcomplex, UnavoidabilityMode};

fn main() -> tverberg_lab::Result<()> {
    let (n, r) = (9, 3);
    for k in 0..4 {
        let u = is_unavoidable(&Subcomplex::Skeleton(k), n, r, UnavoidabilityMode::Pairwise, DEFAULT_MAX_SIMPLEX_DIM)?;
        let example = u
            .counterexample
            .map(|fam| fam.iter().map(|f| f.vertices().to_vec()).collect::<Vec<_>>());
        println!("{k}-skeleton of the {n}-simplex, r = {r}: unavoidable = {} {example:?}", u.unavoidable);
    }
    Ok(())
}
