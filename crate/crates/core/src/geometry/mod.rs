//! Exact arithmetic, point configurations and hull-intersection certificates.

mod config;
pub mod lp;
mod rational;
mod verify;
mod witness;

pub use config::{Coloring, Configuration, Face, MAX_VERTICES};
pub use rational::{ParseRationalError, Rational};
pub use verify::{verify_witness, Clause, VerificationReport};
pub use witness::{hull_intersection_with_equalities, hull_intersection_witness, minimal_support_faces, Witness};
