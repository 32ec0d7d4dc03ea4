//! The theorem catalog and the trial runner.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bounds::{gvkf_condition_sharpened, is_prime, is_prime_power, min_dimension_bound, type_b_min_colors, BoundSet};
use super::generators::{
    in_general_position, moment_curve_config, random_config, random_constraint_rows, sarkaria_config, GENERATOR,
};
use crate::complexes::Subcomplex;
use crate::enumerate::{count_bounded_families, stirling2};
use crate::error::{input, Error, Result};
use crate::geometry::{Coloring, Configuration, Witness};
use crate::solver::{
    find_tverberg_with, ConstraintSet, DimBound, Disjointness, SearchOptions, SearchStats, SearchStatus, DEFAULT_CAP,
};

/// Default coordinate range of random trial configurations.
pub const DEFAULT_COORD_RANGE: [i64; 2] = [-1000, 1000];
pub const DEFAULT_TRIALS: usize = 100;
/// Share of generic trials that must be refuted for a lower bound on random
/// configurations to count as confirmed.
pub const GENERIC_REFUTATION_SHARE: f64 = 0.95;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    TopologicalTverbergAffine,
    #[serde(rename = "key_lemma_1_affine")]
    KeyLemma1Affine,
    WeakColored,
    TypeBColored,
    DimBounded,
    GvkfSharpened,
    NonUniformDims,
    VkfSharpened,
    Jwise,
    JwiseAffine,
    EqualBarycentric,
    OptimalColored,
    OptimalColoredSplit,
    ColoredRadon,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::TopologicalTverbergAffine,
        TheoremId::KeyLemma1Affine,
        TheoremId::WeakColored,
        TheoremId::TypeBColored,
        TheoremId::DimBounded,
        TheoremId::GvkfSharpened,
        TheoremId::NonUniformDims,
        TheoremId::VkfSharpened,
        TheoremId::Jwise,
        TheoremId::JwiseAffine,
        TheoremId::EqualBarycentric,
        TheoremId::OptimalColored,
        TheoremId::OptimalColoredSplit,
        TheoremId::ColoredRadon,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::TopologicalTverbergAffine => "topological_tverberg_affine",
            TheoremId::KeyLemma1Affine => "key_lemma_1_affine",
            TheoremId::WeakColored => "weak_colored",
            TheoremId::TypeBColored => "type_b_colored",
            TheoremId::DimBounded => "dim_bounded",
            TheoremId::GvkfSharpened => "gvkf_sharpened",
            TheoremId::NonUniformDims => "non_uniform_dims",
            TheoremId::VkfSharpened => "vkf_sharpened",
            TheoremId::Jwise => "jwise",
            TheoremId::JwiseAffine => "jwise_affine",
            TheoremId::EqualBarycentric => "equal_barycentric",
            TheoremId::OptimalColored => "optimal_colored",
            TheoremId::OptimalColoredSplit => "optimal_colored_split",
            TheoremId::ColoredRadon => "colored_radon",
        }
    }

    /// One-line statement of the affine claim being tested.
    pub fn statement(&self) -> &'static str {
        match self {
            TheoremId::TopologicalTverbergAffine => "N >= (r-1)(d+1) points admit r pairwise disjoint faces with intersecting hulls",
            TheoremId::KeyLemma1Affine => "N >= (r-1)(d+1+c): a Tverberg family also equalizes c affine functions",
            TheoremId::WeakColored => "N >= (r-1)(2d+2), d+1 colors of size <= 2r-1: rainbow Tverberg family",
            TheoremId::TypeBColored => "c >= ceil((r-1)d/r)+1 colors of size <= 2r-1, N >= (r-1)(d+1+c): rainbow Tverberg family",
            TheoremId::DimBounded => "N >= (r-1)(d+2), k >= ceil((r-1)d/r): Tverberg family of faces of dimension <= k",
            TheoremId::GvkfSharpened => "k >= (r-1)d/r, N+1 > (r-1)(d+2)/(j-1): j-wise disjoint family of faces of dimension <= k",
            TheoremId::NonUniformDims => "r(k+1)+s > N+1: faces of dimension <= k, at most (N-(r-s)+1)/(k+1) of dimension k",
            TheoremId::VkfSharpened => "N = d+2: two disjoint faces of dimensions ceil(d/2) and floor(d/2) with intersecting images",
            TheoremId::Jwise => "N+1 > (r-1)(d+1)/(j-1): j-wise disjoint Tverberg family (topological form)",
            TheoremId::JwiseAffine => "N+1 > (r-1)(d+1)/(j-1): j-wise disjoint Tverberg family for affine maps",
            TheoremId::EqualBarycentric => "(r-1)d+1 colors of size r: rainbow Tverberg family with equal barycentric coordinates",
            TheoremId::OptimalColored => "N >= (r-1)(d+1), colors of size <= r-1: rainbow Tverberg family",
            TheoremId::OptimalColoredSplit => "small colors (<= r-1) and large colors (>= 2r-1) with enough small vertices: rainbow family",
            TheoremId::ColoredRadon => "N = d+2 with a 3-element set S: Radon partition meeting S at most once per face",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = TheoremId::ALL.iter().map(TheoremId::as_str).collect();
            Error::Input(format!("unknown theorem id {s:?}; known: {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Every trial configuration has a witness.
    #[default]
    Existence,
    /// The designated extremal configuration has none.
    Necessity,
}

/// Whether a positive result follows from a proved statement for affine maps
/// or is only evidence (for example a topological theorem at a non-prime-power
/// `r`, where the affine case is open).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Backing {
    TheoremBacked,
    ExperimentalEvidence,
}

fn default_trials() -> usize {
    DEFAULT_TRIALS
}

fn default_range() -> [i64; 2] {
    DEFAULT_COORD_RANGE
}

fn default_cap() -> u64 {
    DEFAULT_CAP
}

/// A theorem from the catalog at concrete parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremInstance {
    pub theorem: TheoremId,
    pub params: BoundSet,
    /// Color class sizes; classes are contiguous index ranges.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<usize>>,
    /// Face dimensions to prescribe exactly.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(default)]
    pub claim: Claim,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_range")]
    pub coord_range: [i64; 2],
    #[serde(default = "default_cap")]
    pub cap: u64,
}

impl TheoremInstance {
    pub fn new(theorem: TheoremId, params: BoundSet) -> Self {
        TheoremInstance {
            theorem,
            params,
            classes: None,
            dims: None,
            claim: Claim::Existence,
            trials: DEFAULT_TRIALS,
            seed: 0,
            coord_range: DEFAULT_COORD_RANGE,
            cap: DEFAULT_CAP,
        }
    }

    pub fn necessity(mut self) -> Self {
        self.claim = Claim::Necessity;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_classes(mut self, classes: Vec<usize>) -> Self {
        self.classes = Some(classes);
        self
    }

    pub fn with_dims(mut self, dims: Vec<usize>) -> Self {
        self.dims = Some(dims);
        self
    }

    pub fn with_coord_range(mut self, range: [i64; 2]) -> Self {
        self.coord_range = range;
        self
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }
}

/// The `--params` object of the theorem command: bound parameters plus the
/// instance-level options.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsJson {
    r: Option<usize>,
    d: Option<usize>,
    c: Option<usize>,
    j: Option<usize>,
    k: Option<usize>,
    s: Option<usize>,
    m: Option<usize>,
    #[serde(rename = "N", alias = "n")]
    n: Option<usize>,
    classes: Option<Vec<usize>>,
    dims: Option<Vec<usize>>,
    claim: Option<Claim>,
    coord_range: Option<[i64; 2]>,
    cap: Option<u64>,
}

impl TheoremInstance {
    /// Builds an instance from a flat parameter object such as
    /// `{"r":3,"d":3,"k":2,"N":10,"claim":"necessity"}`.
    pub fn from_params_json(theorem: TheoremId, text: &str) -> Result<Self> {
        let p: ParamsJson = serde_json::from_str(text)?;
        let params = BoundSet { r: p.r, d: p.d, c: p.c, j: p.j, k: p.k, s: p.s, m: p.m, n: p.n };
        let mut inst = TheoremInstance::new(theorem, params);
        inst.classes = p.classes;
        inst.dims = p.dims;
        inst.claim = p.claim.unwrap_or_default();
        inst.coord_range = p.coord_range.unwrap_or(DEFAULT_COORD_RANGE);
        inst.cap = p.cap.unwrap_or(DEFAULT_CAP);
        Ok(inst)
    }
}

/// Outcome of one trial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub index: usize,
    /// Seed of the random configuration, absent for fixed constructions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub general_position: Option<bool>,
    /// Degenerate configuration left out of a generic lower-bound check.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub excluded: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<SearchStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_dims: Option<Vec<usize>>,
    /// Number of faces of the top dimension `k`, for non-uniform bounds.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_dimensional_faces: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<SearchStats>,
    /// Why the trial contradicts the claim, if it does.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregate {
    pub trials: usize,
    pub witnesses: usize,
    pub exhausted: usize,
    pub aborted: usize,
    pub excluded: usize,
    pub failures: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Violated,
    /// Some search hit the enumeration cap.
    Inconclusive,
}

/// Certificate that the designated configuration has no witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    /// The extremal configuration, for fixed constructions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub configuration: Option<Configuration>,
    /// Candidate families in the searched space, from the closed form.
    pub expected_families: u128,
    /// Whether every refuted trial enumerated exactly that many families.
    pub counts_match: bool,
}

/// Where trial configurations come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Random { generator: String, coord_range: [i64; 2], first_seed: u64 },
    MomentCurve { count: usize, dim: usize },
    Sarkaria { r: usize, j: usize, dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default = "crate::schema_string")]
    pub schema: String,
    pub instance: TheoremInstance,
    pub backing: Backing,
    pub statement: String,
    /// The hypotheses checked before any trial, with the values used.
    pub hypothesis: String,
    pub constraints: ConstraintSet,
    pub source: Source,
    pub trials: Vec<TrialReport>,
    pub aggregate: Aggregate,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refutation: Option<Refutation>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: Report = serde_json::from_str(text)?;
        crate::check_schema(&r.schema)?;
        Ok(r)
    }

    /// One line for terminals.
    pub fn summary(&self) -> String {
        let a = &self.aggregate;
        let backing = match self.backing {
            Backing::TheoremBacked => "theorem-backed",
            Backing::ExperimentalEvidence => "experimental evidence",
        };
        format!(
            "{} ({:?} claim, {backing}): {:?}; {} trials, {} witnesses, {} exhausted, {} aborted, {} excluded",
            self.instance.theorem, self.instance.claim, self.verdict, a.trials, a.witnesses, a.exhausted, a.aborted, a.excluded
        )
        .to_lowercase()
    }
}

/// What a claim requires of each trial and of the run.
enum Expect {
    WitnessEveryTrial,
    RefuteFixed,
    RefuteGeneric,
}

enum PostCheck {
    None,
    ExactDims(Vec<usize>),
    NonUniform { k: usize, s: usize },
}

struct Plan {
    backing: Backing,
    hypothesis: String,
    n: usize,
    d: usize,
    classes: Option<Vec<usize>>,
    constraints: ConstraintSet,
    affine_rows: usize,
    source: Source,
    expect: Expect,
    expected_families: Option<u128>,
    post: PostCheck,
}

fn backed_if(cond: bool) -> Backing {
    if cond {
        Backing::TheoremBacked
    } else {
        Backing::ExperimentalEvidence
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Input(format!("hypothesis fails: {}", msg())))
    }
}

/// Splits `total` points into `parts` contiguous classes whose sizes differ by
/// at most one, larger classes first.
fn even_split(total: usize, parts: usize) -> Vec<usize> {
    (0..parts).map(|i| total / parts + usize::from(i < total % parts)).collect()
}

/// Least `N` with `(N+1)(j-1) > (r-1)·base`.
fn least_n_above(r: usize, j: usize, base: usize) -> usize {
    (r - 1) * base / (j - 1)
}

fn plan(inst: &TheoremInstance) -> Result<Plan> {
    let p = &inst.params;
    p.validate()?;
    let [lo, hi] = inst.coord_range;
    if lo > hi {
        return input(format!("empty coordinate range [{lo}, {hi}]"));
    }
    let random = Source::Random {
        generator: GENERATOR.to_string(),
        coord_range: inst.coord_range,
        first_seed: inst.seed,
    };
    let existence_only = |id: TheoremId| -> Result<()> {
        if inst.claim == Claim::Necessity {
            return input(format!("no lower-bound construction is catalogued for {id}"));
        }
        Ok(())
    };
    let base = |backing, hypothesis: String, n, d, constraints| Plan {
        backing,
        hypothesis,
        n,
        d,
        classes: None,
        constraints,
        affine_rows: 0,
        source: random.clone(),
        expect: Expect::WitnessEveryTrial,
        expected_families: None,
        post: PostCheck::None,
    };
    let check_classes = |classes: &[usize], n: usize| -> Result<()> {
        require(classes.iter().sum::<usize>() == n + 1 && classes.iter().all(|&c| c > 0), || {
            format!("color classes {classes:?} must be nonempty and cover the N+1 = {} points", n + 1)
        })
    };

    let id = inst.theorem;
    Ok(match id {
        TheoremId::TopologicalTverbergAffine => {
            let (r, d) = (p.need("r")?, p.need("d")?);
            let tverberg = (r - 1) * (d + 1);
            match inst.claim {
                Claim::Existence => {
                    let n = p.n.unwrap_or(tverberg);
                    require(n >= tverberg, || format!("N = {n} < (r-1)(d+1) = {tverberg}"))?;
                    base(Backing::TheoremBacked, format!("N = {n} >= (r-1)(d+1) = {tverberg}"), n, d, ConstraintSet::new(r))
                }
                Claim::Necessity => {
                    require(tverberg >= 1, || "no smaller N exists".into())?;
                    let n = p.n.unwrap_or(tverberg - 1);
                    require(n < tverberg, || format!("N = {n} is not below (r-1)(d+1) = {tverberg}"))?;
                    require(n + 1 >= r, || format!("need at least r = {r} points"))?;
                    Plan {
                        expect: Expect::RefuteGeneric,
                        expected_families: Some(stirling2(n + 1, r)),
                        ..base(
                            Backing::TheoremBacked,
                            format!("N = {n} < (r-1)(d+1) = {tverberg}, points in general position"),
                            n,
                            d,
                            ConstraintSet::new(r),
                        )
                    }
                }
            }
        }
        TheoremId::KeyLemma1Affine => {
            existence_only(id)?;
            let (r, d, c) = (p.need("r")?, p.need("d")?, p.need("c")?);
            let nc = (r - 1) * (d + 1 + c);
            let n = p.n.unwrap_or(nc);
            require(n >= nc, || format!("N = {n} < N_c = {nc}"))?;
            Plan {
                affine_rows: c,
                ..base(Backing::TheoremBacked, format!("N = {n} >= N_c = (r-1)(d+1+c) = {nc}"), n, d, ConstraintSet::new(r))
            }
        }
        TheoremId::WeakColored => {
            existence_only(id)?;
            let (r, d) = (p.need("r")?, p.need("d")?);
            let bound = (r - 1) * (2 * d + 2);
            let n = p.n.unwrap_or(bound);
            require(n >= bound, || format!("N = {n} < (r-1)(2d+2) = {bound}"))?;
            let classes = inst.classes.clone().unwrap_or_else(|| even_split(n + 1, d + 1));
            check_classes(&classes, n)?;
            require(classes.len() == d + 1, || format!("need d+1 = {} colors, got {}", d + 1, classes.len()))?;
            require(classes.iter().all(|&c| c < 2 * r), || format!("color classes {classes:?} exceed 2r-1 = {}", 2 * r - 1))?;
            Plan {
                classes: Some(classes),
                ..base(
                    backed_if(is_prime_power(r)),
                    format!("N = {n} >= (r-1)(2d+2) = {bound}, d+1 colors of size <= 2r-1"),
                    n,
                    d,
                    ConstraintSet::new(r).with_rainbow(),
                )
            }
        }
        TheoremId::TypeBColored => {
            existence_only(id)?;
            let (r, d) = (p.need("r")?, p.need("d")?);
            let min_c = type_b_min_colors(r, d);
            let c = p.c.or(inst.classes.as_ref().map(Vec::len)).unwrap_or(min_c);
            require(c >= min_c, || format!("c = {c} < ceil((r-1)d/r)+1 = {min_c}"))?;
            let nc = (r - 1) * (d + 1 + c);
            let n = p.n.unwrap_or(nc);
            require(n >= nc, || format!("N = {n} < N_c = {nc}"))?;
            let classes = inst.classes.clone().unwrap_or_else(|| even_split(n + 1, c));
            check_classes(&classes, n)?;
            require(classes.len() == c, || format!("need c = {c} colors, got {}", classes.len()))?;
            require(classes.iter().all(|&x| x < 2 * r), || format!("color classes {classes:?} exceed 2r-1 = {}", 2 * r - 1))?;
            Plan {
                classes: Some(classes),
                ..base(
                    backed_if(is_prime_power(r)),
                    format!("c = {c} >= {min_c} colors of size <= 2r-1, N = {n} >= N_c = {nc}"),
                    n,
                    d,
                    ConstraintSet::new(r).with_rainbow(),
                )
            }
        }
        TheoremId::DimBounded => {
            let (r, d) = (p.need("r")?, p.need("d")?);
            let kmin = min_dimension_bound(r, d);
            let k = p.k.unwrap_or(kmin);
            let n1 = (r - 1) * (d + 2);
            let constraints = ConstraintSet::new(r).with_max_dims(DimBound::Uniform(k));
            match inst.claim {
                Claim::Existence => {
                    let n = p.n.unwrap_or(n1);
                    require(n >= n1, || format!("N = {n} < (r-1)(d+2) = {n1}"))?;
                    require(k >= kmin, || format!("k = {k} < ceil((r-1)d/r) = {kmin}"))?;
                    base(
                        backed_if(is_prime_power(r)),
                        format!("N = {n} >= (r-1)(d+2) = {n1}, k = {k} >= {kmin}"),
                        n,
                        d,
                        constraints,
                    )
                }
                Claim::Necessity => {
                    let n = p.n.unwrap_or(n1 - 1);
                    require(n < n1, || format!("N = {n} is not below (r-1)(d+2) = {n1}"))?;
                    require(k < d, || format!("the moment-curve bound needs k < d, got k = {k}"))?;
                    // Not a proved statement: the certified lower bound is the
                    // Sarkaria construction (gvkf_sharpened with j = 2).
                    Plan {
                        source: Source::MomentCurve { count: n + 1, dim: d },
                        expect: Expect::RefuteFixed,
                        expected_families: Some(count_bounded_families(n + 1, r, k + 1)),
                        ..base(
                            Backing::ExperimentalEvidence,
                            format!("N + 1 = {} <= (r-1)(d+2) = {n1} points on the moment curve, k = {k} < d", n + 1),
                            n,
                            d,
                            constraints,
                        )
                    }
                }
            }
        }
        TheoremId::GvkfSharpened => {
            let (r, j, d) = (p.need("r")?, p.need("j")?, p.need("d")?);
            let k = p.k.unwrap_or_else(|| min_dimension_bound(r, d));
            let constraints = ConstraintSet::new(r)
                .with_disjointness(Disjointness::JWise(j))
                .with_max_dims(DimBound::Uniform(k));
            match inst.claim {
                Claim::Existence => {
                    let n = p.n.unwrap_or_else(|| least_n_above(r, j, d + 2));
                    require(gvkf_condition_sharpened(r, j, d, k, n), || {
                        format!("k >= (r-1)d/r and N+1 > (r-1)(d+2)/(j-1) fail for k = {k}, N = {n}")
                    })?;
                    require(k <= n, || format!("k = {k} > N = {n}"))?;
                    base(
                        backed_if(is_prime_power(r)),
                        format!("k = {k} >= (r-1)d/r and N+1 = {} > (r-1)(d+2)/(j-1)", n + 1),
                        n,
                        d,
                        constraints,
                    )
                }
                Claim::Necessity => {
                    require(k < d, || format!("the construction needs k < d, got k = {k}"))?;
                    let q = (r - 1) / (j - 1);
                    let points = q * (d + 2);
                    Plan {
                        source: Source::Sarkaria { r, j, dim: d },
                        expect: Expect::RefuteFixed,
                        expected_families: Some(count_bounded_families(points * (j - 1), r, k + 1)),
                        ..base(
                            Backing::TheoremBacked,
                            format!("N + 1 = floor((r-1)/(j-1))(d+2) = {points}, k = {k} < d"),
                            points - 1,
                            d,
                            constraints,
                        )
                    }
                }
            }
        }
        TheoremId::NonUniformDims => {
            existence_only(id)?;
            let (r, d, k, s) = (p.need("r")?, p.need("d")?, p.need("k")?, p.need("s")?);
            let n1 = (r - 1) * (d + 2);
            let n = p.n.unwrap_or(n1);
            require(n >= n1, || format!("N = {n} < (r-1)(d+2) = {n1}"))?;
            require(s < r, || format!("s = {s} must be below r = {r}"))?;
            require(r * (k + 1) + s > n + 1, || format!("r(k+1)+s = {} <= N+1 = {}", r * (k + 1) + s, n + 1))?;
            Plan {
                post: PostCheck::NonUniform { k, s },
                ..base(
                    backed_if(is_prime_power(r)),
                    format!("N = {n} >= {n1}, r(k+1)+s = {} > N+1", r * (k + 1) + s),
                    n,
                    d,
                    ConstraintSet::new(r).with_subcomplex(Subcomplex::non_uniform(n, r, k, s)),
                )
            }
        }
        TheoremId::VkfSharpened => {
            existence_only(id)?;
            let d = p.need("d")?;
            let standard = vec![d.div_ceil(2), d / 2];
            let dims = inst.dims.clone().unwrap_or_else(|| standard.clone());
            let r = dims.len();
            require(super::bounds::admissible(&dims, d), || format!("{dims:?} is not admissible for d = {d}"))?;
            let is_standard = dims == standard;
            let n = p.n.unwrap_or(if r == 2 { d + 2 } else { (r - 1) * (d + 2) });
            let backing = backed_if(is_standard && n >= d + 2);
            Plan {
                post: PostCheck::ExactDims(dims.clone()),
                ..base(
                    backing,
                    format!("N = {n}, prescribed dimensions {dims:?} admissible for d = {d}"),
                    n,
                    d,
                    ConstraintSet::new(r).with_max_dims(DimBound::PerFace(dims)),
                )
            }
        }
        TheoremId::Jwise | TheoremId::JwiseAffine => {
            existence_only(id)?;
            let (r, j, d) = (p.need("r")?, p.need("j")?, p.need("d")?);
            let n = p.n.unwrap_or_else(|| least_n_above(r, j, d + 1));
            require((n + 1) * (j - 1) > (r - 1) * (d + 1), || format!("N+1 = {} <= (r-1)(d+1)/(j-1)", n + 1))?;
            let backing = if id == TheoremId::JwiseAffine { Backing::TheoremBacked } else { backed_if(is_prime_power(r)) };
            base(
                backing,
                format!("N+1 = {} > (r-1)(d+1)/(j-1)", n + 1),
                n,
                d,
                ConstraintSet::new(r).with_disjointness(Disjointness::JWise(j)),
            )
        }
        TheoremId::EqualBarycentric => {
            existence_only(id)?;
            let (r, d) = (p.need("r")?, p.need("d")?);
            let colors = (r - 1) * d + 1;
            let n = r * colors - 1;
            require(p.n.map_or(true, |x| x == n), || format!("N must be r((r-1)d+1)-1 = {n}"))?;
            let classes = vec![r; colors];
            if let Some(c) = &inst.classes {
                require(*c == classes, || format!("need (r-1)d+1 = {colors} classes of size r = {r}"))?;
            }
            Plan {
                classes: Some(classes),
                ..base(
                    Backing::TheoremBacked,
                    format!("N = {n}, (r-1)d+1 = {colors} colors of size r"),
                    n,
                    d,
                    ConstraintSet::new(r).with_equal_barycentric(),
                )
            }
        }
        TheoremId::OptimalColored => {
            existence_only(id)?;
            let (r, d) = (p.need("r")?, p.need("d")?);
            let n0 = (r - 1) * (d + 1);
            let n = p.n.unwrap_or(n0);
            require(n >= n0, || format!("N = {n} < (r-1)(d+1) = {n0}"))?;
            let classes = inst.classes.clone().unwrap_or_else(|| {
                let parts = (n + 1).div_ceil(r - 1);
                even_split(n + 1, parts)
            });
            check_classes(&classes, n)?;
            require(classes.iter().all(|&c| c < r), || format!("color classes {classes:?} exceed r-1 = {}", r - 1))?;
            Plan {
                classes: Some(classes),
                ..base(
                    backed_if(is_prime(r)),
                    format!("N = {n} >= (r-1)(d+1) = {n0}, colors of size <= r-1"),
                    n,
                    d,
                    ConstraintSet::new(r).with_rainbow(),
                )
            }
        }
        TheoremId::OptimalColoredSplit => {
            existence_only(id)?;
            let (r, d) = (p.need("r")?, p.need("d")?);
            let classes = inst
                .classes
                .clone()
                .unwrap_or_else(|| std::iter::repeat(r - 1).take(d).chain(std::iter::once(2 * r - 1)).collect());
            let n = classes.iter().sum::<usize>().saturating_sub(1);
            check_classes(&classes, n)?;
            require(classes.iter().all(|&c| c < r || c >= 2 * r - 1), || {
                format!("every class must have size <= r-1 or >= 2r-1, got {classes:?}")
            })?;
            let small: usize = classes.iter().filter(|&&c| c < r).sum();
            let big = classes.iter().filter(|&&c| c >= 2 * r - 1).count() as i64;
            let threshold = (r as i64 - 1) * (d as i64 - big + 1) - big;
            require(small as i64 > threshold, || format!("small classes hold {small} <= (r-1)(d-k+1)-k = {threshold} points"))?;
            Plan {
                classes: Some(classes),
                ..base(
                    backed_if(is_prime(r)),
                    format!("{big} large colors, {small} > {threshold} vertices in small colors"),
                    n,
                    d,
                    ConstraintSet::new(r).with_rainbow(),
                )
            }
        }
        TheoremId::ColoredRadon => {
            existence_only(id)?;
            let d = p.need("d")?;
            let n = d + 2;
            require(p.n.map_or(true, |x| x == n), || format!("N must be d+2 = {n}"))?;
            base(
                Backing::TheoremBacked,
                format!("N = d+2 = {n}, S = {{0,1,2}}"),
                n,
                d,
                ConstraintSet::new(2).with_subcomplex(Subcomplex::at_most(1, 0..3)),
            )
        }
    })
}

/// Runs all trials of an instance on the ambient thread pool.
pub fn run_instance(instance: &TheoremInstance) -> Result<Report> {
    run_instance_with(instance, None)
}

/// Runs all trials with the given number of worker threads. The report does
/// not depend on the worker count.
pub fn run_instance_with(instance: &TheoremInstance, jobs: Option<usize>) -> Result<Report> {
    let plan = plan(instance)?;
    let trial_count = match plan.source {
        Source::Random { .. } => instance.trials,
        // Fixed constructions are searched once.
        _ => 1,
    };
    let run = || -> Result<Vec<TrialReport>> {
        (0..trial_count).into_par_iter().map(|i| run_trial(instance, &plan, i)).collect()
    };
    let trials = match jobs {
        Some(j) => crate::solver::pool_for(j)?.install(run)?,
        None => run()?,
    };

    let mut agg = Aggregate { trials: trials.len(), ..Default::default() };
    for t in &trials {
        if t.excluded {
            agg.excluded += 1;
            continue;
        }
        match t.status {
            Some(SearchStatus::WitnessFound) => agg.witnesses += 1,
            Some(SearchStatus::ExhaustedNoWitness) => agg.exhausted += 1,
            Some(SearchStatus::AbortedCap) => agg.aborted += 1,
            None => {}
        }
        if t.failure.is_some() {
            agg.failures += 1;
        }
    }

    let counts_match = plan.expected_families.map(|e| {
        trials
            .iter()
            .filter(|t| t.status == Some(SearchStatus::ExhaustedNoWitness))
            .all(|t| t.stats.as_ref().is_some_and(|s| s.families_enumerated as u128 == e))
    });
    let considered = agg.trials - agg.excluded;
    let verdict = match plan.expect {
        Expect::WitnessEveryTrial => {
            if agg.failures > 0 {
                Verdict::Violated
            } else if agg.aborted > 0 || considered == 0 {
                Verdict::Inconclusive
            } else {
                Verdict::Confirmed
            }
        }
        Expect::RefuteFixed | Expect::RefuteGeneric => {
            let needed = match plan.expect {
                Expect::RefuteFixed => considered,
                _ => (GENERIC_REFUTATION_SHARE * considered as f64).ceil() as usize,
            };
            if counts_match == Some(false) {
                Verdict::Violated
            } else if agg.exhausted >= needed && considered > 0 {
                Verdict::Confirmed
            } else if agg.exhausted + agg.aborted >= needed {
                Verdict::Inconclusive
            } else {
                Verdict::Violated
            }
        }
    };
    let refutation = match plan.expect {
        Expect::WitnessEveryTrial => None,
        _ => Some(Refutation {
            configuration: match plan.source {
                Source::Random { .. } => None,
                _ => Some(trial_config(&plan, 0)?.0),
            },
            expected_families: plan.expected_families.unwrap_or_default(),
            counts_match: counts_match.unwrap_or(true),
        }),
    };

    Ok(Report {
        schema: crate::schema_string(),
        instance: instance.clone(),
        backing: plan.backing,
        statement: instance.theorem.statement().to_string(),
        hypothesis: plan.hypothesis,
        constraints: plan.constraints,
        source: plan.source,
        trials,
        aggregate: agg,
        verdict,
        refutation,
    })
}

fn trial_config(plan: &Plan, index: usize) -> Result<(Configuration, Option<u64>)> {
    let (mut config, seed) = match &plan.source {
        Source::Random { coord_range, first_seed, .. } => {
            let seed = first_seed.wrapping_add(index as u64);
            (random_config(plan.n + 1, plan.d, *coord_range, seed)?.0, Some(seed))
        }
        Source::MomentCurve { count, dim } => (moment_curve_config(*count, *dim)?, None),
        Source::Sarkaria { r, j, dim } => (sarkaria_config(*r, *j, *dim)?, None),
    };
    if let Some(classes) = &plan.classes {
        config = config.with_coloring(Coloring::contiguous(classes)?)?;
    }
    Ok((config, seed))
}

fn run_trial(inst: &TheoremInstance, plan: &Plan, index: usize) -> Result<TrialReport> {
    let (config, seed) = trial_config(plan, index)?;
    let mut report = TrialReport {
        index,
        seed,
        general_position: None,
        excluded: false,
        status: None,
        witness: None,
        face_dims: None,
        top_dimensional_faces: None,
        stats: None,
        failure: None,
    };
    if let Expect::RefuteGeneric = plan.expect {
        let generic = in_general_position(&config);
        report.general_position = Some(generic);
        if !generic {
            report.excluded = true;
            return Ok(report);
        }
    }

    let mut constraints = plan.constraints.clone();
    if plan.affine_rows > 0 {
        let rows = random_constraint_rows(plan.affine_rows, config.len(), inst.coord_range, seed.unwrap_or(inst.seed));
        constraints = constraints.with_affine_constraints(rows);
    }
    let options = SearchOptions { cap: inst.cap, jobs: None };
    let outcome = find_tverberg_with(&config, &constraints, &options)?;
    report.status = Some(outcome.status);
    report.stats = Some(outcome.stats);

    match (&plan.expect, outcome.status) {
        (Expect::WitnessEveryTrial, SearchStatus::ExhaustedNoWitness) => {
            report.failure = Some("no witness exists for this configuration".into());
        }
        (Expect::RefuteFixed, SearchStatus::WitnessFound) | (Expect::RefuteGeneric, SearchStatus::WitnessFound) => {
            report.failure = Some("a witness exists below the claimed bound".into());
        }
        _ => {}
    }

    if let Some(w) = outcome.witness {
        let dims = w.face_dims();
        match &plan.post {
            PostCheck::None => {}
            PostCheck::ExactDims(want) => {
                let mut got = dims.clone();
                got.sort_unstable();
                let mut want = want.clone();
                want.sort_unstable();
                if got != want {
                    report.failure = Some(format!("face dimensions {dims:?} differ from the prescribed {want:?}"));
                }
            }
            PostCheck::NonUniform { k, s } => {
                let top = dims.iter().filter(|&&x| x == *k).count();
                report.top_dimensional_faces = Some(top);
                let limit = (plan.n + 1).saturating_sub(constraints.r - s);
                if dims.iter().any(|&x| x > *k) || top * (k + 1) > limit {
                    report.failure = Some(format!("{top} faces of dimension {k} exceed l(k+1) <= N-(r-s)+1 = {limit}"));
                }
            }
        }
        report.face_dims = Some(dims);
        report.witness = Some(w);
    }
    Ok(report)
}
