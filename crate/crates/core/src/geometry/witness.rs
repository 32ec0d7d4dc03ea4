use serde::{Deserialize, Serialize};

use super::lp::find_nonnegative_solution;
use super::{Configuration, Face, Rational};
use crate::error::{input, Result};

/// A face family together with a common point and, for every face, convex
/// weights on its vertices whose combination is that point.
///
/// `weights[i][t]` is the weight of vertex `faces[i].vertices()[t]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub faces: Vec<Face>,
    pub weights: Vec<Vec<Rational>>,
    pub point: Vec<Rational>,
}

impl Witness {
    /// Weight of `vertex` in face `i` (zero if the vertex is not in the face).
    pub fn weight(&self, i: usize, vertex: usize) -> Rational {
        match self.faces[i].vertices().binary_search(&vertex) {
            Ok(t) => self.weights[i].get(t).cloned().unwrap_or_default(),
            Err(_) => Rational::zero(),
        }
    }

    /// `sum_v weight(i, v) * values[v]` for a per-vertex value vector.
    pub fn evaluate_affine(&self, i: usize, values: &[Rational]) -> Rational {
        self.faces[i].vertices().iter().zip(&self.weights[i]).map(|(&v, w)| w * &values[v]).sum()
    }

    pub fn face_dims(&self) -> Vec<usize> {
        self.faces.iter().map(Face::dim).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Decides whether the convex hulls of the faces' point sets share a point and,
/// if so, returns an exactly verifiable witness.
pub fn hull_intersection_witness(config: &Configuration, faces: &[Face]) -> Result<Option<Witness>> {
    hull_intersection_with_equalities(config, faces, &[])
}

/// Like [`hull_intersection_witness`], but additionally requires that every
/// per-vertex value vector in `equalities` takes the same value on all faces'
/// convex combinations. Each vector is interpolated affinely over the simplex.
pub fn hull_intersection_with_equalities(
    config: &Configuration,
    faces: &[Face],
    equalities: &[Vec<Rational>],
) -> Result<Option<Witness>> {
    if faces.is_empty() {
        return input("hull intersection needs at least one face");
    }
    for f in faces {
        config.check_face(f)?;
    }
    if let Some(row) = equalities.iter().find(|r| r.len() != config.len()) {
        return input(format!("constraint row has {} values, expected {}", row.len(), config.len()));
    }

    // One weight variable per (face, vertex) slot.
    let offsets: Vec<usize> = faces
        .iter()
        .scan(0, |acc, f| {
            let o = *acc;
            *acc += f.len();
            Some(o)
        })
        .collect();
    let nvars = faces.iter().map(Face::len).sum::<usize>();
    let d = config.dim();
    let mut rows = Vec::with_capacity(faces.len() * (1 + d + equalities.len()));
    let mut rhs = Vec::with_capacity(rows.capacity());

    for (f, &o) in faces.iter().zip(&offsets) {
        let mut row = vec![Rational::zero(); nvars];
        for t in 0..f.len() {
            row[o + t] = Rational::one();
        }
        rows.push(row);
        rhs.push(Rational::one());
    }

    // Each further face's combination equals the first face's combination, in
    // every coordinate and every constraint value.
    let value_of = |v: usize, c: usize| -> &Rational {
        if c < d {
            &config.point(v)[c]
        } else {
            &equalities[c - d][v]
        }
    };
    for c in 0..d + equalities.len() {
        for (f, &o) in faces.iter().zip(&offsets).skip(1) {
            let mut row = vec![Rational::zero(); nvars];
            for (t, &v) in f.vertices().iter().enumerate() {
                row[o + t] = value_of(v, c).clone();
            }
            for (t, &v) in faces[0].vertices().iter().enumerate() {
                row[t] = -value_of(v, c);
            }
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }

    let Some(solution) = find_nonnegative_solution(&rows, &rhs) else {
        return Ok(None);
    };
    let weights: Vec<Vec<Rational>> =
        faces.iter().zip(&offsets).map(|(f, &o)| solution.values[o..o + f.len()].to_vec()).collect();
    let point = (0..d)
        .map(|c| faces[0].vertices().iter().zip(&weights[0]).map(|(&v, w)| w * &config.point(v)[c]).sum())
        .collect();
    Ok(Some(Witness { faces: faces.to_vec(), weights, point }))
}

/// Shrinks every face to the support of its weights, so that the common point
/// lies in the relative interior of each face. Weights and point are unchanged.
pub fn minimal_support_faces(witness: &Witness) -> Witness {
    let mut faces = Vec::with_capacity(witness.faces.len());
    let mut weights = Vec::with_capacity(witness.faces.len());
    for (f, w) in witness.faces.iter().zip(&witness.weights) {
        let (vs, ws): (Vec<usize>, Vec<Rational>) =
            f.vertices().iter().zip(w).filter(|(_, w)| !w.is_zero()).map(|(&v, w)| (v, w.clone())).unzip();
        // A valid witness has weights summing to one, hence a nonempty support.
        faces.push(Face::new(vs).expect("weights of a valid witness sum to one"));
        weights.push(ws);
    }
    Witness { faces, weights, point: witness.point.clone() }
}
