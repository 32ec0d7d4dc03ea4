//! Theorem instances at desk scale: parameter calculators, configuration
//! generators and a runner that records witnesses or exhaustive refutations.

mod bounds;
mod generators;
mod runner;

pub use bounds::{
    admissible, bound_nc, gvkf_condition_original, gvkf_condition_sharpened, is_prime, is_prime_power,
    min_dimension_bound, type_b_min_colors, BoundSet,
};
pub use generators::{
    in_general_position, moment_curve_config, random_config, random_constraint_rows, sarkaria_config, Provenance,
    GENERATOR,
};
pub use runner::{
    run_instance, run_instance_with, Aggregate, Backing, Claim, Refutation, Report, Source, TheoremId, TheoremInstance,
    TrialReport, Verdict, DEFAULT_COORD_RANGE, DEFAULT_TRIALS, GENERIC_REFUTATION_SHARE,
};
