//! The enumeration engine shared by every search path.
//!
//! Two completeness modes:
//!
//! * set partitions: without face restrictions a feasible family can be
//!   enlarged to a partition of all vertices (enlarging faces only enlarges
//!   hulls), so partitions into `r` blocks are the whole search space;
//! * restricted families: with a downward-closed set of allowed faces, every
//!   family of `r` disjoint allowed faces is enumerated, but the LP runs only on
//!   maximal ones (no unused vertex can join any face). Every feasible family
//!   lies below a feasible maximal one, so this is complete as well.
//!
//! Candidates are produced in canonical order by one thread and checked in
//! batches; the batch reduction keeps the first feasible candidate in order, so
//! the result does not depend on the number of workers.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use rayon::ThreadPool;
use serde::{Deserialize, Serialize};

use super::constraints::sizes_fit;
use crate::complexes::MaskComplex;
use crate::enumerate::for_each_family;
use crate::error::{Error, Result};
use crate::geometry::{hull_intersection_witness, Configuration, Face, Witness, MAX_VERTICES};

const FIRST_BATCH: usize = 4;
const MAX_BATCH: usize = 512;

/// Which candidate space a search enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Partitions of the full vertex set into `r` blocks.
    SetPartitions,
    /// All families of `r` disjoint allowed faces; LP on the maximal ones.
    RestrictedFamilies,
}

/// Which faces a family may use: membership in a complex and size caps that
/// must be matchable to the faces.
#[derive(Clone, Debug, Default)]
pub(crate) struct FaceRule {
    pub complex: Option<MaskComplex>,
    /// Size caps in decreasing order, one per face.
    pub caps: Option<Vec<usize>>,
}

impl FaceRule {
    pub fn restricts(&self) -> bool {
        self.complex.is_some() || self.caps.is_some()
    }

    fn allows_face(&self, face: u64) -> bool {
        self.complex.as_ref().map_or(true, |c| c.contains(face))
    }

    fn allows_sizes(&self, blocks: &[u64]) -> bool {
        match &self.caps {
            None => true,
            Some(caps) => {
                if caps.iter().all(|&c| c == caps[0]) {
                    blocks.iter().all(|b| b.count_ones() as usize <= caps[0])
                } else {
                    let sizes: Vec<usize> = blocks.iter().map(|b| b.count_ones() as usize).collect();
                    sizes_fit(&sizes, caps)
                }
            }
        }
    }

    /// No unused vertex can be added to any face while staying allowed.
    fn is_maximal(&self, blocks: &[u64], num_vertices: usize) -> bool {
        let used = blocks.iter().fold(0u64, |m, b| m | b);
        let mut trial = blocks.to_vec();
        for v in 0..num_vertices {
            let bit = 1u64 << v;
            if used & bit != 0 {
                continue;
            }
            for b in 0..blocks.len() {
                trial[b] = blocks[b] | bit;
                let ok = self.allows_face(trial[b]) && self.allows_sizes(&trial);
                trial[b] = blocks[b];
                if ok {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) struct RawOutcome {
    pub witness: Option<Witness>,
    pub aborted: bool,
    pub mode: SearchMode,
    pub families_enumerated: u64,
    pub lp_calls: u64,
}

struct Candidate {
    leaf: u64,
    index: u64,
    family: Vec<u64>,
}

/// Searches `config` for `r` pairwise disjoint faces obeying `rule` whose hulls
/// meet. Families beyond the `cap`-th enumerated one are not examined.
pub(crate) fn search(
    config: &Configuration,
    r: usize,
    rule: &FaceRule,
    cap: u64,
    pool: Option<&ThreadPool>,
) -> Result<RawOutcome> {
    let n = config.len();
    if n > MAX_VERTICES {
        return Err(Error::Input(format!("at most {MAX_VERTICES} points are supported, got {n}")));
    }
    let mode = if rule.restricts() { SearchMode::RestrictedFamilies } else { SearchMode::SetPartitions };
    let elements: Vec<usize> = (0..n).collect();

    let mut leaves = 0u64;
    let mut candidates = 0u64;
    let mut aborted = false;
    let mut found: Option<(u64, u64, Witness)> = None;
    let mut batch: Vec<Candidate> = Vec::with_capacity(MAX_BATCH);
    let mut batch_size = FIRST_BATCH;

    let evaluate = |batch: &[Candidate]| -> Option<(u64, u64, Witness)> {
        let run = || {
            batch.par_iter().find_map_first(|c| {
                let faces: Vec<Face> = c.family.iter().map(|&m| Face::from_mask(m)).collect();
                hull_intersection_witness(config, &faces)
                    .expect("enumerated faces are valid")
                    .map(|w| (c.leaf, c.index, w))
            })
        };
        match pool {
            Some(p) => p.install(run),
            None => run(),
        }
    };

    let accept = |blocks: &[u64], b: usize| rule.allows_face(blocks[b]) && rule.allows_sizes(blocks);
    let allow_unused = mode == SearchMode::RestrictedFamilies;
    let _ = for_each_family(&elements, r, allow_unused, &accept, &mut |family: &[u64]| {
        if leaves == cap {
            aborted = true;
            return ControlFlow::Break(());
        }
        leaves += 1;
        if allow_unused && !rule.is_maximal(family, n) {
            return ControlFlow::Continue(());
        }
        candidates += 1;
        batch.push(Candidate { leaf: leaves, index: candidates, family: family.to_vec() });
        if batch.len() >= batch_size {
            found = evaluate(&batch);
            batch.clear();
            batch_size = (batch_size * 2).min(MAX_BATCH);
            if found.is_some() {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    if found.is_none() && !batch.is_empty() {
        found = evaluate(&batch);
    }

    Ok(match found {
        Some((leaf, index, w)) => RawOutcome {
            witness: Some(w),
            aborted: false,
            mode,
            families_enumerated: leaf,
            lp_calls: index,
        },
        None => RawOutcome { witness: None, aborted, mode, families_enumerated: leaves, lp_calls: candidates },
    })
}

/// A thread pool with the given number of workers, shared across searches.
pub(crate) fn pool_for(jobs: usize) -> Result<Arc<ThreadPool>> {
    static POOLS: OnceLock<Mutex<HashMap<usize, Arc<ThreadPool>>>> = OnceLock::new();
    let mut pools = POOLS.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
    if let Some(p) = pools.get(&jobs) {
        return Ok(p.clone());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Resource(format!("cannot start {jobs} worker threads: {e}")))?;
    let pool = Arc::new(pool);
    pools.insert(jobs, pool.clone());
    Ok(pool)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count_bounded_families, stirling2};

    fn line(n: i64) -> Configuration {
        Configuration::from_integers(1, &(0..n).map(|x| vec![x]).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn first_partition_in_canonical_order() {
        let out = search(&line(4), 2, &FaceRule::default(), 1000, None).unwrap();
        let w = out.witness.unwrap();
        // {0,1,2}|{3} fails, {0,1,3}|{2} is the next partition and succeeds.
        assert_eq!(w.faces, vec![Face::new([0, 1, 3]).unwrap(), Face::new([2]).unwrap()]);
        assert_eq!((out.families_enumerated, out.lp_calls), (2, 2));
    }

    #[test]
    fn exhausted_counts_every_partition() {
        // Three points on a line have a Radon partition, two do not.
        assert!(search(&line(3), 2, &FaceRule::default(), 1000, None).unwrap().witness.is_some());
        let out = search(&line(2), 2, &FaceRule::default(), 1000, None).unwrap();
        assert!(out.witness.is_none() && !out.aborted);
        assert_eq!(out.families_enumerated as u128, stirling2(2, 2));
    }

    #[test]
    fn restricted_counts_all_families() {
        let rule = FaceRule { complex: None, caps: Some(vec![1, 1]) };
        let out = search(&line(5), 2, &rule, u64::MAX, None).unwrap();
        assert!(out.witness.is_none());
        assert_eq!(out.families_enumerated as u128, count_bounded_families(5, 2, 1));
        // Maximal families of two singletons: none, since a third vertex can never join.
        assert_eq!(out.lp_calls as u128, count_bounded_families(5, 2, 1));
    }

    #[test]
    fn cap_aborts() {
        let out = search(&line(2), 2, &FaceRule::default(), 0, None).unwrap();
        assert!(out.aborted);
        assert_eq!(out.families_enumerated, 0);
    }

    #[test]
    fn per_face_caps_and_maximality() {
        let rule = FaceRule { complex: None, caps: Some(vec![2, 1]) };
        assert!(rule.is_maximal(&[0b011, 0b100], 3));
        assert!(!rule.is_maximal(&[0b001, 0b100], 3));
        assert!(!rule.allows_sizes(&[0b011, 0b1100]));
    }
}
