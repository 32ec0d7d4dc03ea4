use serde::Serialize;

use super::{Configuration, Rational, Witness};
use crate::solver::{sizes_fit, ConstraintSet, DimBound};

/// Outcome of one verification clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub passed: bool,
    /// Empty when the clause passed; otherwise the first violation found.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub clauses: Vec<Clause>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, result: Result<(), String>) {
        let (passed, detail) = match result {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e),
        };
        self.clauses.push(Clause { name, passed, detail });
    }
}

/// Checks a witness against the configuration and every clause of
/// `constraints`, recomputing everything with exact arithmetic.
///
/// Structural problems (out-of-range vertices, misshapen weights) fail the
/// corresponding clause and the later geometric clauses are skipped.
pub fn verify_witness(config: &Configuration, witness: &Witness, constraints: &ConstraintSet) -> VerificationReport {
    let mut report = VerificationReport { clauses: Vec::new() };
    let faces = &witness.faces;
    let r = constraints.r;

    report.push(
        "face_count",
        if faces.len() == r { Ok(()) } else { Err(format!("{} faces, expected {r}", faces.len())) },
    );

    let in_range = match faces.iter().find(|f| f.max_vertex() >= config.len()) {
        Some(f) => Err(format!("face {f} uses a vertex beyond {}", config.simplex_dim())),
        None => Ok(()),
    };
    let structural = in_range.is_ok();
    report.push("vertex_range", in_range);

    let weights_ok = check_weights(witness);
    let weights_valid = weights_ok.is_ok();
    report.push("weights", weights_ok);

    let point_ok = if witness.point.len() == config.dim() {
        Ok(())
    } else {
        Err(format!("point has {} coordinates, expected {}", witness.point.len(), config.dim()))
    };
    let point_valid = point_ok.is_ok();
    report.push("point_dimension", point_ok);

    if structural && weights_valid && point_valid {
        report.push("combination", check_combination(config, witness));
    } else {
        report.push("combination", Err("skipped: malformed witness".into()));
    }

    report.push("disjointness", check_multiplicity(witness, constraints.disjointness.max_multiplicity()));

    if let Some(sigma) = &constraints.subcomplex {
        let result = sigma.bind_coloring(config.coloring()).map_err(|e| e.to_string()).and_then(|s| {
            for f in faces {
                match s.contains_face(f, config.len()) {
                    Ok(true) => {}
                    Ok(false) => return Err(format!("face {f} is not in {sigma}")),
                    Err(e) => return Err(e.to_string()),
                }
            }
            Ok(())
        });
        report.push("subcomplex", result);
    }

    if let Some(bound) = &constraints.max_dims {
        report.push("max_dims", check_dims(witness, bound, r));
    }

    if constraints.rainbow {
        let result = match config.coloring() {
            None => Err("configuration has no coloring".into()),
            Some(c) => match faces.iter().find(|f| f.max_vertex() >= c.num_vertices() || !c.is_rainbow(f)) {
                Some(f) => Err(format!("face {f} has two vertices of one color")),
                None => Ok(()),
            },
        };
        report.push("rainbow", result);
    }

    if constraints.equal_barycentric {
        report.push("equal_barycentric", check_equal_barycentric(config, witness));
    }

    if let Some(rows) = &constraints.affine_constraints {
        report.push("affine_constraints", check_affine(config, witness, rows, weights_valid && structural));
    }

    report
}

fn check_weights(w: &Witness) -> Result<(), String> {
    if w.weights.len() != w.faces.len() {
        return Err(format!("{} weight vectors for {} faces", w.weights.len(), w.faces.len()));
    }
    for (i, (f, ws)) in w.faces.iter().zip(&w.weights).enumerate() {
        if ws.len() != f.len() {
            return Err(format!("face {i} has {} vertices but {} weights", f.len(), ws.len()));
        }
        if let Some(x) = ws.iter().find(|x| x.is_negative()) {
            return Err(format!("face {i} has negative weight {x}"));
        }
        let total: Rational = ws.iter().sum();
        if !total.is_one() {
            return Err(format!("weights of face {i} sum to {total}"));
        }
    }
    Ok(())
}

fn check_combination(config: &Configuration, w: &Witness) -> Result<(), String> {
    for (i, (f, ws)) in w.faces.iter().zip(&w.weights).enumerate() {
        for c in 0..config.dim() {
            let value: Rational = f.vertices().iter().zip(ws).map(|(&v, x)| x * &config.point(v)[c]).sum();
            if value != w.point[c] {
                return Err(format!("face {i} combines to {value} in coordinate {c}, point has {}", w.point[c]));
            }
        }
    }
    Ok(())
}

fn check_multiplicity(w: &Witness, max: usize) -> Result<(), String> {
    let mut counts = std::collections::BTreeMap::<usize, usize>::new();
    for f in &w.faces {
        for &v in f.vertices() {
            *counts.entry(v).or_default() += 1;
        }
    }
    match counts.into_iter().find(|&(_, c)| c > max) {
        Some((v, c)) => Err(format!("vertex {v} lies in {c} faces, at most {max} allowed")),
        None => Ok(()),
    }
}

fn check_dims(w: &Witness, bound: &DimBound, r: usize) -> Result<(), String> {
    let sizes: Vec<usize> = w.faces.iter().map(|f| f.len()).collect();
    if sizes_fit(&sizes, &bound.size_caps(r.max(sizes.len()))) {
        Ok(())
    } else {
        Err(format!("face dimensions {:?} exceed the bounds {bound:?}", w.face_dims()))
    }
}

/// Every face meets each color class at most once, and for every class the
/// total weight a face puts on it is the same for all faces. For minimal
/// faces the latter forces each class to meet either every face or none.
fn check_equal_barycentric(config: &Configuration, w: &Witness) -> Result<(), String> {
    let Some(col) = config.coloring() else {
        return Err("configuration has no coloring".into());
    };
    if w.faces.is_empty() {
        return Err("witness has no faces".into());
    }
    for f in &w.faces {
        if f.max_vertex() >= col.num_vertices() || !col.is_rainbow(f) {
            return Err(format!("face {f} is not rainbow"));
        }
    }
    for (k, class) in col.classes().iter().enumerate() {
        let g = |i: usize| -> Rational { class.iter().map(|&v| w.weight(i, v)).sum() };
        let first = g(0);
        for i in 1..w.faces.len() {
            let gi = g(i);
            if gi != first {
                return Err(format!("class {k} has coordinate {first} on face 0 but {gi} on face {i}"));
            }
        }
    }
    Ok(())
}

fn check_affine(config: &Configuration, w: &Witness, rows: &[Vec<Rational>], well_formed: bool) -> Result<(), String> {
    if !well_formed {
        return Err("skipped: malformed witness".into());
    }
    for (c, row) in rows.iter().enumerate() {
        if row.len() != config.len() {
            return Err(format!("constraint {c} has {} values, expected {}", row.len(), config.len()));
        }
        let first = w.evaluate_affine(0, row);
        for i in 1..w.faces.len() {
            let v = w.evaluate_affine(i, row);
            if v != first {
                return Err(format!("constraint {c} takes {first} on face 0 but {v} on face {i}"));
            }
        }
    }
    Ok(())
}
