use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{input, Result};
use crate::SCHEMA;

/// Largest vertex count supported by the bitmask-based enumerators.
pub const MAX_VERTICES: usize = 64;

/// A nonempty face of the simplex, stored as strictly increasing vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Face(Vec<usize>);

impl Face {
    /// Sorts and deduplicates; rejects an empty vertex list.
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return input("faces must be nonempty");
        }
        Ok(Face(v))
    }

    pub fn from_mask(mask: u64) -> Self {
        debug_assert!(mask != 0);
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            v.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        Face(v)
    }

    /// Bitmask of the vertices; callers must ensure every index is below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension of the face, `|face| - 1`.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min_vertex(&self) -> usize {
        self.0[0]
    }

    pub fn max_vertex(&self) -> usize {
        *self.0.last().expect("faces are nonempty")
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        if v.is_empty() || v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(serde::de::Error::custom("face must be a nonempty strictly increasing index list"));
        }
        Ok(Face(v))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A partition of the vertex set `{0..n}` into color classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl Coloring {
    /// Validates that `classes` partition `0..num_vertices`. Classes are kept in the
    /// given order; indices within a class are sorted.
    pub fn new(num_vertices: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut class_of = vec![usize::MAX; num_vertices];
        let mut sorted = Vec::with_capacity(classes.len());
        for (c, class) in classes.into_iter().enumerate() {
            if class.is_empty() {
                return input(format!("color class {c} is empty"));
            }
            let mut class = class;
            class.sort_unstable();
            for &v in &class {
                if v >= num_vertices {
                    return input(format!("color class {c} mentions vertex {v}, but there are only {num_vertices} points"));
                }
                if class_of[v] != usize::MAX {
                    return input(format!("vertex {v} appears in more than one color class"));
                }
                class_of[v] = c;
            }
            sorted.push(class);
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return input(format!("vertex {v} is not covered by the coloring"));
        }
        Ok(Coloring { classes: sorted, class_of })
    }

    /// Contiguous classes of the given sizes: `{0..s0}`, `{s0..s0+s1}`, ...
    pub fn contiguous(sizes: &[usize]) -> Result<Self> {
        let mut classes = Vec::with_capacity(sizes.len());
        let mut next = 0;
        for &s in sizes {
            classes.push((next..next + s).collect());
            next += s;
        }
        Self::new(next, classes)
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_masks(&self) -> Vec<u64> {
        self.classes
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect()
    }

    /// At most one vertex of each class.
    pub fn is_rainbow(&self, face: &Face) -> bool {
        let mut seen = vec![false; self.classes.len()];
        face.vertices().iter().all(|&v| !std::mem::replace(&mut seen[self.class_of[v]], true))
    }

    /// Coloring of a configuration whose vertex `i` is a copy of vertex `map[i]`.
    pub fn pull_back(&self, map: &[usize]) -> Coloring {
        let mut classes = vec![Vec::new(); self.classes.len()];
        for (i, &v) in map.iter().enumerate() {
            classes[self.class_of[v]].push(i);
        }
        Coloring { classes, class_of: map.iter().map(|&v| self.class_of[v]).collect() }
    }
}

/// Labeled points with exact coordinates in `R^d`; equivalently the affine map
/// from the simplex on `points.len()` vertices determined by the vertex images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConfigurationJson", into = "ConfigurationJson")]
pub struct Configuration {
    dim: usize,
    points: Vec<Vec<Rational>>,
    labels: Option<Vec<String>>,
    coloring: Option<Coloring>,
}

impl Configuration {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if dim == 0 {
            return input("ambient dimension must be at least 1");
        }
        if points.is_empty() {
            return input("a configuration needs at least one point");
        }
        if let Some(i) = points.iter().position(|p| p.len() != dim) {
            return input(format!("point {i} has {} coordinates, expected {dim}", points[i].len()));
        }
        Ok(Configuration { dim, points, labels: None, coloring: None })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_integers(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        Self::new(dim, points.iter().map(|p| p.iter().map(|&x| Rational::from_integer(x)).collect()).collect())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.points.len() {
            return input(format!("{} labels given for {} points", labels.len(), self.points.len()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_coloring(mut self, coloring: Coloring) -> Result<Self> {
        if coloring.num_vertices() != self.points.len() {
            return input(format!(
                "coloring covers {} vertices but the configuration has {} points",
                coloring.num_vertices(),
                self.points.len()
            ));
        }
        self.coloring = Some(coloring);
        Ok(self)
    }

    pub fn with_color_classes(self, classes: Vec<Vec<usize>>) -> Result<Self> {
        let n = self.points.len();
        self.with_coloring(Coloring::new(n, classes)?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of points, `N + 1`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The simplex dimension `N`.
    pub fn simplex_dim(&self) -> usize {
        self.points.len() - 1
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        self.coloring.as_ref()
    }

    pub(crate) fn check_face(&self, face: &Face) -> Result<()> {
        if face.max_vertex() >= self.points.len() {
            return input(format!(
                "face {face} uses vertex {} but the configuration has only {} points",
                face.max_vertex(),
                self.points.len()
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configuration serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigurationJson {
    #[serde(default = "crate::schema_string")]
    schema: String,
    dim: usize,
    points: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    colors: Option<Vec<Vec<usize>>>,
}

impl TryFrom<ConfigurationJson> for Configuration {
    type Error = crate::Error;

    fn try_from(raw: ConfigurationJson) -> Result<Self> {
        crate::check_schema(&raw.schema)?;
        let mut config = Configuration::new(raw.dim, raw.points)?;
        if let Some(labels) = raw.labels {
            config = config.with_labels(labels)?;
        }
        if let Some(colors) = raw.colors {
            config = config.with_color_classes(colors)?;
        }
        Ok(config)
    }
}

impl From<Configuration> for ConfigurationJson {
    fn from(c: Configuration) -> Self {
        ConfigurationJson {
            schema: SCHEMA.to_string(),
            dim: c.dim,
            points: c.points,
            labels: c.labels,
            colors: c.coloring.map(|col| col.classes),
        }
    }
}
