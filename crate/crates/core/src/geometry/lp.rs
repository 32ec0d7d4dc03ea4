//! Exact feasibility for `A x = b, x >= 0` by the phase-1 simplex method.
//!
//! Every row gets an artificial variable and the sum of artificials is
//! minimized with Bland's rule (lowest-index entering column, lowest-label
//! leaving row among ratio ties), which cannot cycle. Artificial columns are
//! never re-entered once they leave the basis, so they are not stored at all.
//! The first basic solution reaching objective zero is returned, which makes
//! the result a deterministic function of the input rows.

use super::Rational;

/// Outcome of a feasibility run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub values: Vec<Rational>,
    pub pivots: usize,
}

/// Returns a nonnegative basic solution of `rows · x = rhs`, or `None` when the
/// system is infeasible. All rows must have the same length.
pub fn find_nonnegative_solution(rows: &[Vec<Rational>], rhs: &[Rational]) -> Option<LpSolution> {
    assert_eq!(rows.len(), rhs.len());
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == n));

    // Tableau rows: n coefficient columns followed by the right-hand side.
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (row, b) in rows.iter().zip(rhs) {
        let mut t = Vec::with_capacity(n + 1);
        if b.is_negative() {
            t.extend(row.iter().map(|x| -x));
            t.push(-b);
        } else {
            t.extend(row.iter().cloned());
            t.push(b.clone());
        }
        tab.push(t);
    }

    // Objective row: reduced costs of the phase-1 objective, and minus its value.
    let mut obj = vec![Rational::zero(); n + 1];
    for t in &tab {
        for (o, x) in obj.iter_mut().zip(t) {
            *o -= x;
        }
    }

    // Basic variable per row: artificial `n + i` initially.
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut pivots = 0usize;
    let mut nonzero = Vec::with_capacity(n + 1);

    while !obj[n].is_zero() {
        let Some(enter) = (0..n).find(|&j| obj[j].is_negative()) else {
            return None;
        };

        let mut leave: Option<usize> = None;
        for i in 0..m {
            let a = &tab[i][enter];
            if !a.is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(best) => {
                    // Compare rhs_i / a_i against rhs_best / a_best without dividing.
                    let lhs = &tab[i][n] * &tab[best][enter];
                    let rhs = &tab[best][n] * a;
                    match lhs.cmp(&rhs) {
                        std::cmp::Ordering::Less => Some(i),
                        std::cmp::Ordering::Equal if basis[i] < basis[best] => Some(i),
                        _ => Some(best),
                    }
                }
            };
        }
        // The objective is bounded below by zero, so a negative reduced cost
        // always has a positive entry in its column.
        let p = leave.expect("phase-1 objective is bounded");

        let piv = tab[p][enter].clone();
        if !piv.is_one() {
            let inv = piv.recip();
            for x in tab[p].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        nonzero.clear();
        nonzero.extend((0..=n).filter(|&k| !tab[p][k].is_zero()));

        let pivot_row = std::mem::take(&mut tab[p]);
        for (i, row) in tab.iter_mut().enumerate() {
            if i == p {
                continue;
            }
            let f = row[enter].clone();
            if f.is_zero() {
                continue;
            }
            for &k in &nonzero {
                row[k] = row[k].sub_mul(&f, &pivot_row[k]);
            }
        }
        let f = obj[enter].clone();
        for &k in &nonzero {
            obj[k] = obj[k].sub_mul(&f, &pivot_row[k]);
        }
        tab[p] = pivot_row;
        basis[p] = enter;
        pivots += 1;
    }

    let mut values = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            values[b] = tab[i][n].clone();
        }
    }
    Some(LpSolution { values, pivots })
}
