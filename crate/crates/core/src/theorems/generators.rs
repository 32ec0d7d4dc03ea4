//! Point configurations for theorem trials: seeded random integer points and
//! the extremal constructions used to certify lower bounds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::geometry::{Configuration, Rational};

/// Name of the pseudo-random generator behind [`random_config`].
pub const GENERATOR: &str = "chacha8";

/// How a random configuration was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub generator: String,
    pub seed: u64,
    /// Inclusive coordinate range.
    pub coord_range: [i64; 2],
}

/// Points `(t, t^2, ..., t^d)` for `t = 1..=count`.
pub fn moment_curve_config(count: usize, d: usize) -> Result<Configuration> {
    if count == 0 || d == 0 {
        return input("the moment curve needs count >= 1 and d >= 1");
    }
    let points = (1..=count as i64)
        .map(|t| {
            let t = Rational::from_integer(t);
            let mut p = Vec::with_capacity(d);
            let mut power = Rational::one();
            for _ in 0..d {
                power = &power * &t;
                p.push(power.clone());
            }
            p
        })
        .collect();
    Configuration::new(d, points)
}

/// `floor((r-1)/(j-1))` copies of each vertex of the standard simplex
/// `conv(0, e_1, ..., e_d)` and of its barycenter, grouped by location.
pub fn sarkaria_config(r: usize, j: usize, d: usize) -> Result<Configuration> {
    if r < 2 || d < 1 || j < 2 || j > r {
        return input(format!("need r >= 2, d >= 1, 2 <= j <= r; got r = {r}, j = {j}, d = {d}"));
    }
    let copies = (r - 1) / (j - 1);
    let mut locations: Vec<Vec<Rational>> = Vec::with_capacity(d + 2);
    locations.push(vec![Rational::zero(); d]);
    for i in 0..d {
        let mut e = vec![Rational::zero(); d];
        e[i] = Rational::one();
        locations.push(e);
    }
    locations.push(vec![Rational::new(1, d as i64 + 1); d]);
    let names: Vec<String> = (0..=d).map(|i| format!("v{i}")).chain(std::iter::once("b".to_string())).collect();

    let mut points = Vec::with_capacity(copies * (d + 2));
    let mut labels = Vec::with_capacity(points.capacity());
    for (loc, name) in locations.iter().zip(&names) {
        for c in 0..copies {
            points.push(loc.clone());
            labels.push(format!("{name}.{c}"));
        }
    }
    Configuration::new(d, points)?.with_labels(labels)
}

/// `count` points with integer coordinates drawn uniformly from
/// `coord_range` (inclusive) by a seeded generator.
pub fn random_config(count: usize, d: usize, coord_range: [i64; 2], seed: u64) -> Result<(Configuration, Provenance)> {
    if count == 0 || d == 0 {
        return input("random configurations need count >= 1 and d >= 1");
    }
    let [lo, hi] = coord_range;
    if lo > hi {
        return input(format!("empty coordinate range [{lo}, {hi}]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<i64>> = (0..count).map(|_| (0..d).map(|_| rng.gen_range(lo..=hi)).collect()).collect();
    let config = Configuration::from_integers(d, &points)?;
    Ok((config, Provenance { generator: GENERATOR.to_string(), seed, coord_range }))
}

/// `rows` vectors of random integers in `coord_range`, one value per point,
/// seeded independently of the point coordinates.
pub fn random_constraint_rows(rows: usize, count: usize, coord_range: [i64; 2], seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let [lo, hi] = coord_range;
    (0..rows)
        .map(|_| (0..count).map(|_| Rational::from_integer(rng.gen_range(lo..=hi))).collect())
        .collect()
}

/// Every set of at most `d + 1` points is affinely independent.
pub fn in_general_position(config: &Configuration) -> bool {
    let n = config.len();
    let d = config.dim();
    let size = (d + 1).min(n);
    let mut subset: Vec<usize> = (0..size).collect();
    loop {
        if affine_rank(config, &subset) + 1 != subset.len() {
            return false;
        }
        // Next combination in lexicographic order.
        let mut i = size;
        while i > 0 && subset[i - 1] == i - 1 + n - size {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        subset[i - 1] += 1;
        for t in i..size {
            subset[t] = subset[t - 1] + 1;
        }
    }
}

/// Rank of the difference vectors `p_v - p_{subset[0]}`.
fn affine_rank(config: &Configuration, subset: &[usize]) -> usize {
    let base = config.point(subset[0]);
    let mut rows: Vec<Vec<Rational>> = subset[1..]
        .iter()
        .map(|&v| config.point(v).iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let cols = config.dim();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].recip();
        for i in rank + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] * &inv;
            for t in c..cols {
                rows[i][t] = rows[i][t].sub_mul(&f, &rows[rank][t]);
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moment_curve_values() {
        let m = moment_curve_config(4, 2).unwrap();
        assert_eq!(m, Configuration::from_integers(2, &[vec![1, 1], vec![2, 4], vec![3, 9], vec![4, 16]]).unwrap());
        let m = moment_curve_config(10, 3).unwrap();
        assert_eq!(m.point(9), &[Rational::from_integer(10), Rational::from_integer(100), Rational::from_integer(1000)]);
        assert_eq!(moment_curve_config(3, 1).unwrap().len(), 3);
        assert!(moment_curve_config(0, 1).is_err());
    }

    #[test]
    fn sarkaria_construction() {
        let s = sarkaria_config(3, 2, 1).unwrap();
        let xs: Vec<String> = s.points().iter().map(|p| p[0].to_string()).collect();
        assert_eq!(xs, vec!["0", "0", "1", "1", "1/2", "1/2"]);
        let t = sarkaria_config(2, 2, 2).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.point(3), &[Rational::new(1, 3), Rational::new(1, 3)]);
        assert_eq!(sarkaria_config(5, 3, 2).unwrap().len(), 2 * 4);
    }

    #[test]
    fn random_is_reproducible() {
        let (a, pa) = random_config(11, 3, [-50, 50], 7).unwrap();
        let (b, _) = random_config(11, 3, [-50, 50], 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(pa.generator, GENERATOR);
        let (c, _) = random_config(11, 3, [-50, 50], 8).unwrap();
        assert_ne!(a, c);
        assert_eq!(random_config(3, 5, [0, 1], 1).unwrap().0.len(), 3);
    }

    #[test]
    fn general_position() {
        let good = Configuration::from_integers(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![3, 5]]).unwrap();
        assert!(in_general_position(&good));
        let collinear = Configuration::from_integers(2, &[vec![0, 0], vec![1, 1], vec![5, 0], vec![2, 2]]).unwrap();
        assert!(!in_general_position(&collinear));
        let repeated = Configuration::from_integers(1, &[vec![1], vec![2], vec![1]]).unwrap();
        assert!(!in_general_position(&repeated));
        assert!(in_general_position(&moment_curve_config(10, 3).unwrap()));
    }
}
