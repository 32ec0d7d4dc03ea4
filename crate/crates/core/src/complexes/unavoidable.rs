use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::Subcomplex;
use crate::enumerate::for_each_family;
use crate::error::{input, Error, Result};
use crate::geometry::Face;

/// Refuse exhaustive unavoidability checks above this simplex dimension unless
/// the caller raises the cap.
pub const DEFAULT_MAX_SIMPLEX_DIM: usize = 14;

/// Which families of faces the unavoidability check quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnavoidabilityMode {
    /// All families of `r` pairwise disjoint nonempty faces.
    Pairwise,
    /// Only partitions of the full vertex set into `r` blocks.
    CoverPartition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Unavoidability {
    pub unavoidable: bool,
    /// A family none of whose faces lies in the complex, when one exists.
    pub counterexample: Option<Vec<Face>>,
    /// Families inspected before the answer was settled.
    pub families_checked: u64,
    pub mode: UnavoidabilityMode,
}

/// Decides whether every family of `r` disjoint faces of `Δ_n` (restricted as
/// `mode` says) has at least one face in `sigma`.
///
/// In pairwise mode families are visited by increasing number of used vertices,
/// so a reported counterexample uses as few vertices as possible.
pub fn is_unavoidable(
    sigma: &Subcomplex,
    n: usize,
    r: usize,
    mode: UnavoidabilityMode,
    max_simplex_dim: usize,
) -> Result<Unavoidability> {
    if r < 1 {
        return input("r must be positive");
    }
    if n + 1 < r {
        return input(format!("need N >= r - 1, got N = {n}, r = {r}"));
    }
    if n > max_simplex_dim {
        return Err(Error::Resource(format!(
            "exhaustive check for N = {n} exceeds the cap N <= {max_simplex_dim}"
        )));
    }
    let complex = sigma.compile(n + 1)?;
    let mut checked = 0u64;
    let mut found: Option<Vec<u64>> = None;
    let accept = |_: &[u64], _: usize| true;
    let mut visit = |family: &[u64]| {
        checked += 1;
        if family.iter().all(|&f| !complex.contains(f)) {
            found = Some(family.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };

    match mode {
        UnavoidabilityMode::CoverPartition => {
            let all: Vec<usize> = (0..=n).collect();
            let _ = for_each_family(&all, r, false, &accept, &mut visit);
        }
        UnavoidabilityMode::Pairwise => {
            'sizes: for used in r..=n + 1 {
                // Vertex subsets of the given size in increasing bitmask order.
                let limit = 1u64.checked_shl(n as u32 + 1).unwrap_or(0).wrapping_sub(1);
                let mut subset = u64::MAX >> (64 - used);
                while subset & !limit == 0 {
                    let elements: Vec<usize> = (0..=n).filter(|&v| subset >> v & 1 == 1).collect();
                    if for_each_family(&elements, r, false, &accept, &mut visit).is_break() {
                        break 'sizes;
                    }
                    if used as u32 == u64::BITS {
                        break;
                    }
                    // Gosper's hack: next integer with the same popcount.
                    let c = subset & subset.wrapping_neg();
                    let rr = subset + c;
                    if rr == 0 {
                        break;
                    }
                    subset = (((rr ^ subset) >> 2) / c) | rr;
                }
            }
        }
    }

    Ok(Unavoidability {
        unavoidable: found.is_none(),
        counterexample: found.map(|f| f.into_iter().map(Face::from_mask).collect()),
        families_checked: checked,
        mode,
    })
}
