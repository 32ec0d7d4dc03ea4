//! Symbolic subcomplexes of the simplex and exhaustive unavoidability checks.

mod dsl;
mod pigeonhole;
mod subcomplex;
mod unavoidable;

pub use dsl::parse_subcomplex;
pub use pigeonhole::{pigeonhole_predicate, PigeonholeExample};
pub use subcomplex::{MaskComplex, Subcomplex};
pub use unavoidable::{is_unavoidable, Unavoidability, UnavoidabilityMode, DEFAULT_MAX_SIMPLEX_DIM};
