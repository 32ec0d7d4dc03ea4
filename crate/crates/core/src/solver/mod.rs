//! Search for constrained Tverberg families.
//!
//! [`find_tverberg`] reduces every constraint set to one pairwise search:
//!
//! * affine constraints and equal barycentric coordinates become extra
//!   coordinates ([`lift_configuration`]), so a Tverberg family of the lifted
//!   points equalizes the constraint values;
//! * j-wise disjointness becomes pairwise disjointness on `j - 1` copies of
//!   every point ([`replicate_for_jwise`]), followed by [`project_family`];
//! * subcomplexes, dimension bounds and rainbow faces restrict the enumerated
//!   faces.
//!
//! Every witness is re-verified against the original configuration and
//! constraints before it is returned.

mod constraints;
mod search;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use constraints::{ConstraintSet, DimBound, Disjointness};
pub(crate) use constraints::sizes_fit;
pub use search::SearchMode;
pub(crate) use search::pool_for;
use search::{search, FaceRule};

use crate::error::{input, Error, Result};
use crate::geometry::{minimal_support_faces, verify_witness, Configuration, Face, Rational, Witness};

/// Default limit on enumerated families per search.
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop after this many enumerated families and report
    /// [`SearchStatus::AbortedCap`].
    pub cap: u64,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub jobs: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { cap: DEFAULT_CAP, jobs: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    WitnessFound,
    /// The whole candidate space of the reported mode was refuted.
    ExhaustedNoWitness,
    AbortedCap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub mode: SearchMode,
    /// Leaves of the enumeration visited, up to and including the witness.
    pub families_enumerated: u64,
    /// Feasibility problems in enumeration order up to and including the
    /// witness. Speculative work done by parallel workers is not counted.
    pub lp_calls: u64,
    /// Points of the configuration actually searched, after lifting and
    /// replication.
    pub searched_points: usize,
    pub searched_dim: usize,
    /// Wall-clock time. Not serialized, so that outputs are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    #[serde(default = "crate::schema_string")]
    pub schema: String,
    pub status: SearchStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("outcome serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let out: SearchOutcome = serde_json::from_str(text)?;
        crate::check_schema(&out.schema)?;
        Ok(out)
    }
}

/// Finds `r` faces satisfying `constraints` whose images share a point, with
/// default options.
pub fn find_tverberg(config: &Configuration, constraints: &ConstraintSet) -> Result<SearchOutcome> {
    find_tverberg_with(config, constraints, &SearchOptions::default())
}

/// [`find_tverberg`] with an explicit cap and worker count.
pub fn find_tverberg_with(
    config: &Configuration,
    constraints: &ConstraintSet,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    constraints.validate(config)?;
    let start = Instant::now();
    let pool = options.jobs.map(pool_for).transpose()?;

    let (target, map) = match constraints.disjointness {
        Disjointness::JWise(j) if j > 2 => {
            if constraints.equal_barycentric {
                return input("equal barycentric coordinates are only supported with pairwise disjointness");
            }
            let (rep, map) = replicate_for_jwise(config, j)?;
            (rep, Some(map))
        }
        _ => (config.clone(), None),
    };
    let pulled_rows: Vec<Vec<Rational>> = match &map {
        None => constraints.affine_constraints.clone().unwrap_or_default(),
        Some(m) => constraints
            .affine_constraints
            .iter()
            .flatten()
            .map(|row| m.iter().map(|&v| row[v].clone()).collect())
            .collect(),
    };

    let mut rows = pulled_rows;
    if constraints.equal_barycentric {
        rows.extend(class_indicator_rows(&target)?);
    }
    let lifted = lift_configuration(&target, &rows)?;

    let complex = match &constraints.subcomplex {
        None => None,
        Some(s) => {
            let bound = s.bind_coloring(config.coloring())?;
            let bound = match &map {
                Some(m) => bound.pull_back(m),
                None => bound,
            };
            Some(bound)
        }
    };
    let rainbow = if constraints.rainbow {
        let c = target.coloring().expect("validated");
        Some(crate::complexes::Subcomplex::Rainbow(Some(c.clone())))
    } else {
        None
    };
    let complex = match (complex, rainbow) {
        (Some(a), Some(b)) => Some(a.intersect(b)),
        (a, b) => a.or(b),
    };
    let rule = FaceRule {
        complex: complex.map(|c| c.compile(target.len())).transpose()?,
        caps: constraints.max_dims.as_ref().map(|b| b.size_caps(constraints.r)),
    };

    let raw = search(&lifted, constraints.r, &rule, options.cap, pool.as_deref())?;
    let stats = SearchStats {
        mode: raw.mode,
        families_enumerated: raw.families_enumerated,
        lp_calls: raw.lp_calls,
        searched_points: lifted.len(),
        searched_dim: lifted.dim(),
        elapsed: start.elapsed(),
    };

    let Some(lifted_witness) = raw.witness else {
        let status = if raw.aborted { SearchStatus::AbortedCap } else { SearchStatus::ExhaustedNoWitness };
        return Ok(SearchOutcome { schema: crate::schema_string(), status, witness: None, stats });
    };

    // Drop the lifted coordinates; the weights are those of the search space.
    let mut witness = Witness {
        faces: lifted_witness.faces,
        weights: lifted_witness.weights,
        point: lifted_witness.point[..target.dim()].to_vec(),
    };
    if let Some(m) = &map {
        witness = project_witness(&witness, m);
    }
    if constraints.equal_barycentric {
        witness = minimal_support_faces(&witness);
    }

    let report = verify_witness(config, &witness, constraints);
    if !report.passed() {
        let failed: Vec<String> = report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        return Err(Error::Internal(format!("solver produced a witness that fails verification ({})", failed.join("; "))));
    }
    Ok(SearchOutcome { schema: crate::schema_string(), status: SearchStatus::WitnessFound, witness: Some(witness), stats })
}

/// Appends the values of each constraint row as extra coordinates:
/// point `i` becomes `(p_i, g_1(i), ..., g_c(i))`.
pub fn lift_configuration(config: &Configuration, affine_constraints: &[Vec<Rational>]) -> Result<Configuration> {
    if let Some((i, row)) = affine_constraints.iter().enumerate().find(|(_, r)| r.len() != config.len()) {
        return input(format!("constraint {i} has {} values, expected {}", row.len(), config.len()));
    }
    if affine_constraints.is_empty() {
        return Ok(config.clone());
    }
    let points = config
        .points()
        .iter()
        .enumerate()
        .map(|(v, p)| p.iter().cloned().chain(affine_constraints.iter().map(|row| row[v].clone())).collect())
        .collect();
    let mut lifted = Configuration::new(config.dim() + affine_constraints.len(), points)?;
    if let Some(l) = config.labels() {
        lifted = lifted.with_labels(l.to_vec())?;
    }
    if let Some(c) = config.coloring() {
        lifted = lifted.with_coloring(c.clone())?;
    }
    Ok(lifted)
}

/// Indicator rows of color classes `1..m`. The indicator of class 0 is one
/// minus their sum, so equalizing the others equalizes it too.
fn class_indicator_rows(config: &Configuration) -> Result<Vec<Vec<Rational>>> {
    let Some(col) = config.coloring() else {
        return input("equal barycentric coordinates need a coloring");
    };
    Ok(col
        .classes()
        .iter()
        .skip(1)
        .map(|class| {
            let mut row = vec![Rational::zero(); config.len()];
            for &v in class {
                row[v] = Rational::one();
            }
            row
        })
        .collect())
}

/// Tverberg family with equal barycentric coordinates for a configuration
/// whose coloring has `(r-1)d + 1` classes of exactly `r` points each.
///
/// The returned faces are minimal: each is rainbow, every class meets either
/// all faces or none, and the weight on each class is the same in every face.
pub fn solve_equal_barycentric(config: &Configuration) -> Result<SearchOutcome> {
    solve_equal_barycentric_with(config, &SearchOptions::default())
}

pub fn solve_equal_barycentric_with(config: &Configuration, options: &SearchOptions) -> Result<SearchOutcome> {
    let Some(col) = config.coloring() else {
        return input("equal barycentric coordinates need a coloring");
    };
    let r = col.classes()[0].len();
    if let Some(k) = col.classes().iter().position(|c| c.len() != r) {
        return input(format!("all color classes must have the same size; class 0 has {r}, class {k} has {}", col.classes()[k].len()));
    }
    if r < 2 {
        return input("color classes need at least two points");
    }
    let expected = (r - 1) * config.dim() + 1;
    if col.num_classes() != expected {
        return input(format!(
            "{} color classes of size {r} in dimension {}; the theorem needs (r-1)d+1 = {expected}",
            col.num_classes(),
            config.dim()
        ));
    }
    find_tverberg_with(config, &ConstraintSet::new(r).with_equal_barycentric(), options)
}

/// `j - 1` copies of every point. Copy `c` of vertex `v` gets index
/// `c * (N + 1) + v`; the returned map sends each index to its original vertex.
pub fn replicate_for_jwise(config: &Configuration, j: usize) -> Result<(Configuration, Vec<usize>)> {
    if j < 2 {
        return input(format!("j-wise disjointness needs j >= 2, got {j}"));
    }
    let n = config.len();
    let map: Vec<usize> = (0..(j - 1) * n).map(|i| i % n).collect();
    let points = map.iter().map(|&v| config.point(v).to_vec()).collect();
    let mut rep = Configuration::new(config.dim(), points)?;
    if let Some(l) = config.labels() {
        rep = rep.with_labels(map.iter().map(|&v| l[v].clone()).collect())?;
    }
    if let Some(c) = config.coloring() {
        rep = rep.with_coloring(c.pull_back(&map))?;
    }
    Ok((rep, map))
}

/// Images of the faces under the projection, with repeated vertices merged.
/// Pairwise disjoint inputs give j-wise disjoint outputs when every vertex has
/// `j - 1` preimages.
pub fn project_family(family: &[Face], map: &[usize]) -> Vec<Face> {
    family
        .iter()
        .map(|f| Face::new(f.vertices().iter().map(|&v| map[v])).expect("image of a nonempty face"))
        .collect()
}

/// Projects a witness, adding up the weights of copies of the same vertex.
fn project_witness(w: &Witness, map: &[usize]) -> Witness {
    let faces = project_family(&w.faces, map);
    let weights = faces
        .iter()
        .zip(w.faces.iter().zip(&w.weights))
        .map(|(image, (f, ws))| {
            let mut merged = vec![Rational::zero(); image.len()];
            for (&v, x) in f.vertices().iter().zip(ws) {
                let t = image.vertices().binary_search(&map[v]).expect("image contains every projected vertex");
                merged[t] += x;
            }
            merged
        })
        .collect();
    Witness { faces, weights, point: w.point.clone() }
}

/// `r` faces, every `j` of which are disjoint, with a common image point and
/// optionally of dimension at most `k`.
pub fn solve_jwise(config: &Configuration, r: usize, j: usize, max_dim: Option<usize>) -> Result<SearchOutcome> {
    solve_jwise_with(config, r, j, max_dim, &SearchOptions::default())
}

pub fn solve_jwise_with(
    config: &Configuration,
    r: usize,
    j: usize,
    max_dim: Option<usize>,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    let mut c = ConstraintSet::new(r).with_disjointness(Disjointness::JWise(j));
    if let Some(k) = max_dim {
        c = c.with_max_dims(DimBound::Uniform(k));
    }
    find_tverberg_with(config, &c, options)
}
