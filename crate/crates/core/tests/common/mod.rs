//! Independent oracles for integration tests. They share no code with the
//! library's LP or enumeration.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use tverberg_lab::{Configuration, Rational};

pub fn big(q: &Rational) -> BigRational {
    BigRational::new(q.numer(), q.denom())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Solves `A x = b` for the given columns of `A` when they are linearly
/// independent and `b` lies in their span; `None` otherwise.
fn solve_columns(a: &[Vec<BigRational>], b: &[BigRational], cols: &[usize]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let k = cols.len();
    let mut m: Vec<Vec<BigRational>> =
        (0..rows).map(|i| cols.iter().map(|&c| a[i][c].clone()).chain(std::iter::once(b[i].clone())).collect()).collect();
    let mut pivot_row = 0;
    for c in 0..k {
        let p = (pivot_row..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(pivot_row, p);
        let inv = m[pivot_row][c].recip();
        for t in c..=k {
            m[pivot_row][t] = &m[pivot_row][t] * &inv;
        }
        for i in 0..rows {
            if i != pivot_row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for t in c..=k {
                    let v = &f * &m[pivot_row][t];
                    m[i][t] -= v;
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

/// Whether the convex hulls of `faces` share a point on which every row of
/// `equalities` agrees, decided by enumerating basic solutions of the
/// standard-form system (one weight per face slot).
pub fn hulls_meet(config: &Configuration, faces: &[Vec<usize>], equalities: &[Vec<Rational>]) -> bool {
    let d = config.dim();
    let pts: Vec<Vec<BigRational>> = config.points().iter().map(|p| p.iter().map(big).collect()).collect();
    let vals: Vec<Vec<BigRational>> = equalities.iter().map(|r| r.iter().map(big).collect()).collect();
    let slots: Vec<(usize, usize)> = faces.iter().enumerate().flat_map(|(i, f)| f.iter().map(move |&v| (i, v))).collect();
    let ncols = slots.len();

    let mut a: Vec<Vec<BigRational>> = Vec::new();
    let mut b: Vec<BigRational> = Vec::new();
    for i in 0..faces.len() {
        a.push(slots.iter().map(|&(f, _)| if f == i { int(1) } else { int(0) }).collect());
        b.push(int(1));
    }
    // Coordinates (and equality rows) of face i minus face 0.
    let features = |v: usize| -> Vec<BigRational> { pts[v].iter().cloned().chain(vals.iter().map(|r| r[v].clone())).collect() };
    for i in 1..faces.len() {
        for t in 0..d + vals.len() {
            a.push(
                slots
                    .iter()
                    .map(|&(f, v)| {
                        if f == i {
                            features(v)[t].clone()
                        } else if f == 0 {
                            -features(v)[t].clone()
                        } else {
                            int(0)
                        }
                    })
                    .collect(),
            );
            b.push(int(0));
        }
    }

    let max_k = ncols.min(a.len());
    for k in 1..=max_k {
        let mut cols: Vec<usize> = (0..k).collect();
        loop {
            if let Some(x) = solve_columns(&a, &b, &cols) {
                if x.iter().all(|v| !v.is_negative()) {
                    return true;
                }
            }
            let mut i = k;
            while i > 0 && cols[i - 1] == i - 1 + ncols - k {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            cols[i - 1] += 1;
            for t in i..k {
                cols[t] = cols[t - 1] + 1;
            }
        }
    }
    false
}

/// All partitions of `0..n` into exactly `r` nonempty blocks, each block
/// sorted, blocks ordered by least element.
pub fn set_partitions(n: usize, r: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(v: usize, n: usize, r: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == n {
            if blocks.len() == r {
                out.push(blocks.clone());
            }
            return;
        }
        if r - blocks.len() > n - v {
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(v);
            go(v + 1, n, r, blocks, out);
            blocks[b].pop();
        }
        if blocks.len() < r {
            blocks.push(vec![v]);
            go(v + 1, n, r, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// All families of `r` pairwise disjoint nonempty faces of `0..n` (unused
/// vertices allowed), as unordered families.
pub fn disjoint_families(n: usize, r: usize) -> Vec<Vec<Vec<usize>>> {
    // Label each vertex with a block 0..r or "unused" r, then keep labelings in
    // canonical form: blocks appear in order of their least vertex.
    let mut out = Vec::new();
    let total = (r + 1).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut blocks = vec![Vec::new(); r];
        for v in 0..n {
            let lab = c % (r + 1);
            c /= r + 1;
            if lab < r {
                blocks[lab].push(v);
            }
        }
        if blocks.iter().any(Vec::is_empty) {
            continue;
        }
        if blocks.windows(2).all(|w| w[0][0] < w[1][0]) {
            out.push(blocks);
        }
    }
    out
}

/// Multiplicity of the most used vertex.
pub fn max_multiplicity(faces: &[Vec<usize>], n: usize) -> usize {
    (0..n).map(|v| faces.iter().filter(|f| f.contains(&v)).count()).max().unwrap_or(0)
}

/// Exact check that `witness` combines to its point on every face.
pub fn combines_exactly(config: &Configuration, w: &tverberg_lab::Witness) -> bool {
    let d = config.dim();
    w.faces.iter().zip(&w.weights).all(|(f, ws)| {
        let sum: BigRational = ws.iter().map(big).sum();
        let nonneg = ws.iter().all(|x| !x.is_negative());
        let point_ok = (0..d).all(|t| {
            let c: BigRational = f.vertices().iter().zip(ws).map(|(&v, x)| big(x) * big(&config.point(v)[t])).sum();
            c == big(&w.point[t])
        });
        nonneg && sum == int(1) && point_ok
    })
}

pub fn faces_of(w: &tverberg_lab::Witness) -> Vec<Vec<usize>> {
    w.faces.iter().map(|f| f.vertices().to_vec()).collect()
}

/// Direct search for a partition into `r` blocks whose hulls meet at a point
/// where every equality row agrees: own enumeration plus the basic-solution
/// oracle.
pub fn direct_partition_exists(config: &Configuration, r: usize, equalities: &[Vec<Rational>]) -> bool {
    set_partitions(config.len(), r).iter().any(|p| hulls_meet(config, p, equalities))
}

/// All families of `r` nonempty faces of `0..n` in which every vertex lies in
/// at most `max_mult` faces and every face has at most `max_size` vertices.
/// Faces are listed in a fixed order, so the same family may appear permuted.
pub fn multiplicity_families(n: usize, r: usize, max_mult: usize, max_size: usize) -> Vec<Vec<Vec<usize>>> {
    let choices: Vec<u32> = (0u32..(1 << r)).filter(|m| m.count_ones() as usize <= max_mult).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let mut faces = vec![Vec::new(); r];
        for (v, &i) in idx.iter().enumerate() {
            for (b, face) in faces.iter_mut().enumerate() {
                if choices[i] & (1 << b) != 0 {
                    face.push(v);
                }
            }
        }
        if faces.iter().all(|f| !f.is_empty() && f.len() <= max_size) {
            out.push(faces);
        }
        let mut t = 0;
        while t < n && idx[t] + 1 == choices.len() {
            idx[t] = 0;
            t += 1;
        }
        if t == n {
            return out;
        }
        idx[t] += 1;
    }
}
