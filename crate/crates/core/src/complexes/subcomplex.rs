use std::fmt;

use crate::error::{input, Result};
use crate::geometry::{Coloring, Face, MAX_VERTICES};

/// A subcomplex of the simplex `Δ_N`, given symbolically.
///
/// Every constructor is closed under taking nonempty subfaces, and so are
/// unions and intersections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subcomplex {
    /// All faces.
    Full,
    /// Faces of dimension at most `k`.
    Skeleton(usize),
    /// Faces all of whose vertices lie in the given set.
    Induced(Vec<usize>),
    /// Faces with at most `s` vertices in `set`.
    AtMostSInS { set: Vec<usize>, s: usize },
    /// Faces with at most one vertex per color class. `None` means the
    /// coloring of whatever configuration the complex is used with.
    Rainbow(Option<Coloring>),
    Union(Box<Subcomplex>, Box<Subcomplex>),
    Intersection(Box<Subcomplex>, Box<Subcomplex>),
}

impl Subcomplex {
    pub fn induced(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Subcomplex::Induced(v)
    }

    pub fn at_most(s: usize, set: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = set.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Subcomplex::AtMostSInS { set: v, s }
    }

    pub fn union(self, other: Subcomplex) -> Self {
        Subcomplex::Union(Box::new(self), Box::new(other))
    }

    pub fn intersect(self, other: Subcomplex) -> Self {
        Subcomplex::Intersection(Box::new(self), Box::new(other))
    }

    /// `Δ_N^(k-1) ∪ Δ_{N-(r-s)}^(k)`: faces of dimension below `k`, plus
    /// `k`-faces avoiding the last `r - s` vertices.
    pub fn non_uniform(n: usize, r: usize, k: usize, s: usize) -> Self {
        let kept = (n + 1).saturating_sub(r.saturating_sub(s));
        let top = Subcomplex::induced(0..kept).intersect(Subcomplex::Skeleton(k));
        if k == 0 {
            top
        } else {
            Subcomplex::Skeleton(k - 1).union(top)
        }
    }

    /// Replaces an unbound `rainbow` by the given coloring.
    pub fn bind_coloring(&self, coloring: Option<&Coloring>) -> Result<Subcomplex> {
        Ok(match self {
            Subcomplex::Rainbow(None) => match coloring {
                Some(c) => Subcomplex::Rainbow(Some(c.clone())),
                None => return input("the rainbow complex needs a vertex coloring"),
            },
            Subcomplex::Union(a, b) => a.bind_coloring(coloring)?.union(b.bind_coloring(coloring)?),
            Subcomplex::Intersection(a, b) => a.bind_coloring(coloring)?.intersect(b.bind_coloring(coloring)?),
            other => other.clone(),
        })
    }

    /// The corresponding complex on a vertex set where vertex `i` is a copy of
    /// `map[i]`. Faces without repeated copies are members iff their image is.
    pub fn pull_back(&self, map: &[usize]) -> Subcomplex {
        let preimage =
            |set: &[usize]| -> Vec<usize> { (0..map.len()).filter(|&i| set.binary_search(&map[i]).is_ok()).collect() };
        match self {
            Subcomplex::Full => Subcomplex::Full,
            Subcomplex::Skeleton(k) => Subcomplex::Skeleton(*k),
            Subcomplex::Induced(v) => Subcomplex::Induced(preimage(v)),
            Subcomplex::AtMostSInS { set, s } => Subcomplex::AtMostSInS { set: preimage(set), s: *s },
            Subcomplex::Rainbow(c) => Subcomplex::Rainbow(c.as_ref().map(|c| c.pull_back(map))),
            Subcomplex::Union(a, b) => a.pull_back(map).union(b.pull_back(map)),
            Subcomplex::Intersection(a, b) => a.pull_back(map).intersect(b.pull_back(map)),
        }
    }

    /// Membership of `face` in the complex on `num_vertices` vertices.
    pub fn contains_face(&self, face: &Face, num_vertices: usize) -> Result<bool> {
        if face.max_vertex() >= num_vertices {
            return input(format!("face {face} is not a face of a simplex on {num_vertices} vertices"));
        }
        self.check_bound()?;
        Ok(self.member(face))
    }

    fn check_bound(&self) -> Result<()> {
        match self {
            Subcomplex::Rainbow(None) => input("the rainbow complex needs a vertex coloring"),
            Subcomplex::Union(a, b) | Subcomplex::Intersection(a, b) => {
                a.check_bound()?;
                b.check_bound()
            }
            _ => Ok(()),
        }
    }

    fn member(&self, face: &Face) -> bool {
        match self {
            Subcomplex::Full => true,
            Subcomplex::Skeleton(k) => face.len() <= k + 1,
            Subcomplex::Induced(v) => face.vertices().iter().all(|x| v.binary_search(x).is_ok()),
            Subcomplex::AtMostSInS { set, s } => {
                face.vertices().iter().filter(|x| set.binary_search(x).is_ok()).count() <= *s
            }
            Subcomplex::Rainbow(Some(c)) => {
                face.max_vertex() < c.num_vertices() && c.is_rainbow(face)
            }
            Subcomplex::Rainbow(None) => false,
            Subcomplex::Union(a, b) => a.member(face) || b.member(face),
            Subcomplex::Intersection(a, b) => a.member(face) && b.member(face),
        }
    }

    /// Compiles to a bitmask predicate for enumeration over at most 64 vertices.
    pub fn compile(&self, num_vertices: usize) -> Result<MaskComplex> {
        if num_vertices > MAX_VERTICES {
            return input(format!("at most {MAX_VERTICES} vertices are supported, got {num_vertices}"));
        }
        let mask_of = |set: &[usize]| set.iter().filter(|&&v| v < MAX_VERTICES).fold(0u64, |m, &v| m | (1u64 << v));
        Ok(match self {
            Subcomplex::Full => MaskComplex::Full,
            Subcomplex::Skeleton(k) => MaskComplex::MaxSize((*k as u32).saturating_add(1)),
            Subcomplex::Induced(v) => MaskComplex::Within(mask_of(v)),
            Subcomplex::AtMostSInS { set, s } => MaskComplex::AtMost(mask_of(set), *s as u32),
            Subcomplex::Rainbow(None) => return input("the rainbow complex needs a vertex coloring"),
            Subcomplex::Rainbow(Some(c)) => {
                if c.num_vertices() != num_vertices {
                    return input(format!(
                        "coloring covers {} vertices, expected {num_vertices}",
                        c.num_vertices()
                    ));
                }
                MaskComplex::Rainbow(c.class_masks())
            }
            Subcomplex::Union(a, b) => {
                MaskComplex::Union(Box::new(a.compile(num_vertices)?), Box::new(b.compile(num_vertices)?))
            }
            Subcomplex::Intersection(a, b) => {
                MaskComplex::Intersection(Box::new(a.compile(num_vertices)?), Box::new(b.compile(num_vertices)?))
            }
        })
    }
}

/// Writes the expression in the DSL accepted by [`crate::complexes::parse_subcomplex`].
impl fmt::Display for Subcomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
            for (i, x) in v.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        }
        match self {
            Subcomplex::Full => write!(f, "full"),
            Subcomplex::Skeleton(k) => write!(f, "skeleton({k})"),
            Subcomplex::Induced(v) => {
                write!(f, "induced(")?;
                list(f, v)?;
                write!(f, ")")
            }
            Subcomplex::AtMostSInS { set, s } => {
                write!(f, "atmost({s};")?;
                list(f, set)?;
                write!(f, ")")
            }
            Subcomplex::Rainbow(_) => write!(f, "rainbow"),
            Subcomplex::Union(a, b) => write!(f, "({a} | {b})"),
            Subcomplex::Intersection(a, b) => write!(f, "({a} & {b})"),
        }
    }
}

/// A subcomplex evaluated on vertex bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaskComplex {
    Full,
    MaxSize(u32),
    Within(u64),
    AtMost(u64, u32),
    Rainbow(Vec<u64>),
    Union(Box<MaskComplex>, Box<MaskComplex>),
    Intersection(Box<MaskComplex>, Box<MaskComplex>),
}

impl MaskComplex {
    #[inline]
    pub fn contains(&self, face: u64) -> bool {
        match self {
            MaskComplex::Full => true,
            MaskComplex::MaxSize(s) => face.count_ones() <= *s,
            MaskComplex::Within(m) => face & !m == 0,
            MaskComplex::AtMost(m, s) => (face & m).count_ones() <= *s,
            MaskComplex::Rainbow(classes) => classes.iter().all(|c| (face & c).count_ones() <= 1),
            MaskComplex::Union(a, b) => a.contains(face) || b.contains(face),
            MaskComplex::Intersection(a, b) => a.contains(face) && b.contains(face),
        }
    }
}
