//! Exact search and verification of constrained Tverberg partitions.
//!
//! A [`Configuration`] of rational points in `R^d` stands for the affine map
//! from the simplex `Δ_N` sending vertex `i` to point `i`. A Tverberg family is
//! a list of `r` disjoint faces of `Δ_N` whose images have a common point; the
//! [`solver`] finds such families under extra constraints (dimension bounds,
//! subcomplexes, colorings, j-wise disjointness, affine equalities) and every
//! answer comes with a [`Witness`] that [`verify_witness`] checks exactly.
//!
//! ```
//! use tverberg_lab::{find_tverberg, Configuration, ConstraintSet, SearchStatus};
//!
//! let square = Configuration::from_integers(2, &[vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
//! let outcome = find_tverberg(&square, &ConstraintSet::new(2)).unwrap();
//! assert_eq!(outcome.status, SearchStatus::WitnessFound);
//! let w = outcome.witness.unwrap();
//! assert_eq!(w.point[0].to_string(), "1/2");
//! ```

pub mod cli;
pub mod complexes;
pub mod enumerate;
mod error;
pub mod geometry;
pub mod solver;
pub mod theorems;

pub use complexes::{is_unavoidable, parse_subcomplex, pigeonhole_predicate, Subcomplex, UnavoidabilityMode};
pub use error::{Error, Result};
pub use geometry::{
    hull_intersection_witness, minimal_support_faces, verify_witness, Coloring, Configuration, Face, Rational,
    VerificationReport, Witness,
};
pub use solver::{
    find_tverberg, lift_configuration, project_family, replicate_for_jwise, solve_equal_barycentric, solve_jwise,
    ConstraintSet, DimBound, Disjointness, SearchOptions, SearchOutcome, SearchStatus,
};

/// Version tag carried by every JSON document this crate writes.
pub const SCHEMA: &str = "tverberg-lab/1";

pub(crate) fn schema_string() -> String {
    SCHEMA.to_string()
}

pub(crate) fn check_schema(found: &str) -> Result<()> {
    if found == SCHEMA {
        Ok(())
    } else {
        Err(Error::Input(format!("unsupported schema {found:?}, expected {SCHEMA:?}")))
    }
}
