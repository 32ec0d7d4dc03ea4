//! Parameter calculators: point-count thresholds, the van Kampen–Flores
//! conditions and admissible dimension tuples.

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// The integer parameters a theorem instance may refer to.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundSet {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    /// Number of constraint functions or color classes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    /// Dimension bound.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Simplex dimension; the configuration has `N + 1` points.
    #[serde(default, rename = "N", alias = "n", skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl BoundSet {
    /// Checks the minimal values: `r >= 2`, `d >= 1`, `2 <= j <= r`, `s <= r`.
    pub fn validate(&self) -> Result<()> {
        if let Some(r) = self.r {
            if r < 2 {
                return input(format!("r must be at least 2, got {r}"));
            }
        }
        if self.d == Some(0) {
            return input("d must be at least 1");
        }
        if let Some(j) = self.j {
            if j < 2 || self.r.is_some_and(|r| j > r) {
                return input(format!("j must satisfy 2 <= j <= r, got j = {j}"));
            }
        }
        if let (Some(s), Some(r)) = (self.s, self.r) {
            if s > r {
                return input(format!("s must satisfy 0 <= s <= r, got s = {s}, r = {r}"));
            }
        }
        Ok(())
    }

    pub(crate) fn need(&self, name: &str) -> Result<usize> {
        let v = match name {
            "r" => self.r,
            "d" => self.d,
            "c" => self.c,
            "j" => self.j,
            "k" => self.k,
            "s" => self.s,
            "m" => self.m,
            "N" => self.n,
            _ => None,
        };
        v.ok_or_else(|| crate::Error::Input(format!("parameter {name} is required")))
    }
}

fn check_rd(r: usize, d: usize) -> Result<()> {
    if r < 2 {
        return input(format!("r must be at least 2, got {r}"));
    }
    if d < 1 {
        return input("d must be at least 1");
    }
    Ok(())
}

/// `N_c = (r-1)(d+1+c)`: with `N >= N_c`, `c` affine constraints can be
/// equalized on a Tverberg family.
pub fn bound_nc(r: usize, d: usize, c: usize) -> Result<usize> {
    check_rd(r, d)?;
    Ok((r - 1) * (d + 1 + c))
}

/// Least `m >= 0` with `(r-1)(m+1) + r(k+1) >= (N+1)(j-1) > (r-1)(m+d+2)`,
/// the integrality condition of the original generalized van Kampen–Flores
/// theorem. Requires `k < d`.
pub fn gvkf_condition_original(r: usize, j: usize, d: usize, k: usize, n: usize) -> Result<Option<usize>> {
    check_rd(r, d)?;
    if j < 2 || j > r {
        return input(format!("need 2 <= j <= r, got j = {j}, r = {r}"));
    }
    if k >= d {
        return input(format!("the condition is stated for k < d, got k = {k}, d = {d}"));
    }
    let target = (n as u128 + 1) * (j as u128 - 1);
    let (r, d, k) = (r as u128, d as u128, k as u128);
    let mut m = 0u128;
    // The right inequality fails for all larger m once it fails.
    while target > (r - 1) * (m + d + 2) {
        if (r - 1) * (m + 1) + r * (k + 1) >= target {
            return Ok(Some(m as usize));
        }
        m += 1;
    }
    Ok(None)
}

/// `k >= (r-1)d/r` and `N+1 > (r-1)(d+2)/(j-1)`, compared exactly.
pub fn gvkf_condition_sharpened(r: usize, j: usize, d: usize, k: usize, n: usize) -> bool {
    if r < 2 || d < 1 || j < 2 || j > r {
        return false;
    }
    let (r, j, d, k, n) = (r as u128, j as u128, d as u128, k as u128, n as u128);
    r * k >= (r - 1) * d && (n + 1) * (j - 1) > (r - 1) * (d + 2)
}

/// `floor(d/2) <= d_i <= d` for all entries and total codimension at most `d`.
/// Tuples with fewer than two entries are not admissible.
pub fn admissible(dims: &[usize], d: usize) -> bool {
    dims.len() >= 2
        && dims.iter().all(|&x| d / 2 <= x && x <= d)
        && dims.iter().map(|&x| d - x).sum::<usize>() <= d
}

/// Smallest `k` with `k >= (r-1)d/r`.
pub fn min_dimension_bound(r: usize, d: usize) -> usize {
    ((r - 1) * d).div_ceil(r)
}

/// Fewest color classes of size at most `2r-1` for the type-B colored
/// theorem: `ceil((r-1)d/r) + 1`.
pub fn type_b_min_colors(r: usize, d: usize) -> usize {
    min_dimension_bound(r, d) + 1
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

pub fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|p| n % p == 0).expect("n >= 2 has a prime factor");
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nc_values() {
        assert_eq!(bound_nc(3, 2, 0).unwrap(), 6);
        assert_eq!(bound_nc(3, 3, 1).unwrap(), 10);
        assert_eq!(bound_nc(2, 2, 2).unwrap(), 5);
        assert!(bound_nc(1, 2, 0).is_err());
        assert!(bound_nc(2, 0, 0).is_err());
    }

    #[test]
    fn original_condition() {
        assert_eq!(gvkf_condition_original(3, 3, 3, 2, 5).unwrap(), None);
        assert_eq!(gvkf_condition_original(2, 2, 2, 1, 4).unwrap(), Some(0));
        assert!(gvkf_condition_original(3, 2, 3, 3, 10).is_err());
    }

    #[test]
    fn sharpened_condition() {
        assert!(gvkf_condition_sharpened(3, 3, 3, 2, 5));
        assert!(gvkf_condition_sharpened(3, 2, 3, 2, 10));
        assert!(!gvkf_condition_sharpened(3, 2, 3, 1, 10));
        assert!(!gvkf_condition_sharpened(3, 2, 3, 2, 9));
    }

    #[test]
    fn admissible_tuples() {
        assert!(admissible(&[2, 1], 3));
        assert!(!admissible(&[1, 1], 3));
        assert!(admissible(&[4, 4, 4, 4], 4));
        assert!(!admissible(&[3], 3));
    }

    #[test]
    fn primes() {
        let pp: Vec<usize> = (0..20).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]);
        let p: Vec<usize> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(p, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn derived_bounds() {
        assert_eq!(min_dimension_bound(3, 3), 2);
        assert_eq!(min_dimension_bound(2, 3), 2);
        assert_eq!(type_b_min_colors(2, 2), 2);
    }

    #[test]
    fn bound_set_json() {
        let b: BoundSet = serde_json::from_str(r#"{"r":3,"d":3,"k":2,"N":10}"#).unwrap();
        assert_eq!(b.n, Some(10));
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"r":3,"d":3,"k":2,"N":10}"#);
        assert!(serde_json::from_str::<BoundSet>(r#"{"x":1}"#).is_err());
        assert!(BoundSet { r: Some(3), j: Some(4), ..Default::default() }.validate().is_err());
    }
}
