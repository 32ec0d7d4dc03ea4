use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complexes::{parse_subcomplex, Subcomplex};
use crate::error::{input, Result};
use crate::geometry::{Configuration, Rational};

/// How the faces of a family must avoid each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Disjointness {
    Pairwise,
    /// Every `j` of the faces have empty common intersection, i.e. each vertex
    /// lies in at most `j - 1` faces.
    JWise(usize),
}

impl Disjointness {
    /// Largest number of faces a single vertex may belong to.
    pub fn max_multiplicity(&self) -> usize {
        match self {
            Disjointness::Pairwise => 1,
            Disjointness::JWise(j) => j - 1,
        }
    }
}

/// Upper bounds on face dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimBound {
    /// Every face has dimension at most `k`.
    Uniform(usize),
    /// The faces can be matched to the listed bounds (one bound per face, in
    /// any order).
    PerFace(Vec<usize>),
}

impl DimBound {
    /// Largest allowed face size.
    pub fn max_face_size(&self) -> usize {
        match self {
            DimBound::Uniform(k) => k + 1,
            DimBound::PerFace(v) => v.iter().max().map_or(0, |k| k + 1),
        }
    }

    /// Face-size caps sorted in decreasing order, one per face.
    pub(crate) fn size_caps(&self, r: usize) -> Vec<usize> {
        let mut caps: Vec<usize> = match self {
            DimBound::Uniform(k) => vec![k + 1; r],
            DimBound::PerFace(v) => v.iter().map(|k| k + 1).collect(),
        };
        caps.sort_unstable_by(|a, b| b.cmp(a));
        caps
    }

    /// Whether faces with the given sizes can be assigned to distinct bounds.
    pub fn admits_sizes(&self, sizes: &[usize]) -> bool {
        let caps = self.size_caps(sizes.len().max(1));
        sizes_fit(sizes, &caps)
    }
}

/// Greedy matching of sizes to caps (both sorted decreasingly is optimal).
pub(crate) fn sizes_fit(sizes: &[usize], caps_desc: &[usize]) -> bool {
    if sizes.len() > caps_desc.len() {
        return false;
    }
    let mut s = sizes.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s.iter().zip(caps_desc).all(|(a, c)| a <= c)
}

/// Everything a Tverberg family is required to satisfy besides having a common point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSet {
    pub r: usize,
    pub disjointness: Disjointness,
    pub subcomplex: Option<Subcomplex>,
    pub max_dims: Option<DimBound>,
    pub rainbow: bool,
    pub equal_barycentric: bool,
    /// Per-vertex values of affine functions that must agree on all faces'
    /// common points.
    pub affine_constraints: Option<Vec<Vec<Rational>>>,
}

impl ConstraintSet {
    /// Plain pairwise disjoint `r`-families.
    pub fn new(r: usize) -> Self {
        ConstraintSet {
            r,
            disjointness: Disjointness::Pairwise,
            subcomplex: None,
            max_dims: None,
            rainbow: false,
            equal_barycentric: false,
            affine_constraints: None,
        }
    }

    pub fn with_disjointness(mut self, d: Disjointness) -> Self {
        self.disjointness = d;
        self
    }

    pub fn with_subcomplex(mut self, s: Subcomplex) -> Self {
        self.subcomplex = Some(s);
        self
    }

    pub fn with_max_dims(mut self, b: DimBound) -> Self {
        self.max_dims = Some(b);
        self
    }

    pub fn with_rainbow(mut self) -> Self {
        self.rainbow = true;
        self
    }

    pub fn with_equal_barycentric(mut self) -> Self {
        self.equal_barycentric = true;
        self
    }

    pub fn with_affine_constraints(mut self, rows: Vec<Vec<Rational>>) -> Self {
        self.affine_constraints = Some(rows);
        self
    }

    /// Whether some constraint restricts which faces may appear.
    pub fn restricts_faces(&self) -> bool {
        self.subcomplex.is_some() || self.max_dims.is_some() || self.rainbow
    }

    /// Checks internal consistency and compatibility with `config`.
    pub fn validate(&self, config: &Configuration) -> Result<()> {
        if self.r < 2 {
            return input(format!("r must be at least 2, got {}", self.r));
        }
        if let Disjointness::JWise(j) = self.disjointness {
            if j < 2 || j > self.r {
                return input(format!("j-wise disjointness needs 2 <= j <= r, got j = {j}, r = {}", self.r));
            }
        }
        if let Some(DimBound::PerFace(v)) = &self.max_dims {
            if v.len() != self.r {
                return input(format!("{} per-face dimension bounds given for r = {}", v.len(), self.r));
            }
        }
        if let Some(s) = &self.subcomplex {
            s.bind_coloring(config.coloring())?;
        }
        if (self.rainbow || self.equal_barycentric) && config.coloring().is_none() {
            return input("rainbow and equal-barycentric constraints need a coloring on the configuration");
        }
        if self.equal_barycentric {
            let col = config.coloring().expect("checked above");
            // With exactly r points per class, disjoint minimal faces with equal
            // class weights are automatically rainbow.
            if let Some(c) = col.classes().iter().position(|c| c.len() != self.r) {
                return input(format!(
                    "equal barycentric coordinates need every color class to have exactly r points, class {c} has {}",
                    col.classes()[c].len()
                ));
            }
        }
        if let Some(rows) = &self.affine_constraints {
            if let Some(i) = rows.iter().position(|row| row.len() != config.len()) {
                return input(format!(
                    "affine constraint {i} has {} values, expected one per point ({})",
                    rows[i].len(),
                    config.len()
                ));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("constraint serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstraintSetJson {
    r: usize,
    #[serde(default = "pairwise_json")]
    disjointness: DisjointnessJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    subcomplex: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_dims: Option<DimBoundJson>,
    #[serde(default, skip_serializing_if = "is_false")]
    rainbow: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    equal_barycentric: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    affine_constraints: Option<Vec<Vec<Rational>>>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

fn pairwise_json() -> DisjointnessJson {
    DisjointnessJson::Named(NamedDisjointness::Pairwise)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DisjointnessJson {
    Named(NamedDisjointness),
    JWise { jwise: usize },
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum NamedDisjointness {
    Pairwise,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DimBoundJson {
    Uniform(usize),
    PerFace(Vec<usize>),
}

impl Serialize for ConstraintSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ConstraintSetJson {
            r: self.r,
            disjointness: match self.disjointness {
                Disjointness::Pairwise => pairwise_json(),
                Disjointness::JWise(j) => DisjointnessJson::JWise { jwise: j },
            },
            subcomplex: self.subcomplex.as_ref().map(ToString::to_string),
            max_dims: self.max_dims.as_ref().map(|b| match b {
                DimBound::Uniform(k) => DimBoundJson::Uniform(*k),
                DimBound::PerFace(v) => DimBoundJson::PerFace(v.clone()),
            }),
            rainbow: self.rainbow,
            equal_barycentric: self.equal_barycentric,
            affine_constraints: self.affine_constraints.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ConstraintSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ConstraintSetJson::deserialize(deserializer)?;
        let subcomplex = match raw.subcomplex {
            Some(text) => Some(parse_subcomplex(&text).map_err(serde::de::Error::custom)?),
            None => None,
        };
        Ok(ConstraintSet {
            r: raw.r,
            disjointness: match raw.disjointness {
                DisjointnessJson::Named(NamedDisjointness::Pairwise) => Disjointness::Pairwise,
                DisjointnessJson::JWise { jwise } => Disjointness::JWise(jwise),
            },
            subcomplex,
            max_dims: raw.max_dims.map(|b| match b {
                DimBoundJson::Uniform(k) => DimBound::Uniform(k),
                DimBoundJson::PerFace(v) => DimBound::PerFace(v),
            }),
            rainbow: raw.rainbow,
            equal_barycentric: raw.equal_barycentric,
            affine_constraints: raw.affine_constraints,
        })
    }
}
