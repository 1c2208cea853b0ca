//! Points of F^d indexed in mixed radix q, first coordinate most significant.

use nilrep_core::exactfield::{FiniteField, Gf};

pub(crate) fn count(f: &FiniteField, d: usize) -> usize {
    (f.order() as usize).pow(d as u32)
}

pub(crate) fn point(f: &FiniteField, d: usize, mut idx: usize) -> Vec<Gf> {
    let q = f.order() as usize;
    let mut v = vec![Gf(0); d];
    for slot in v.iter_mut().rev() {
        *slot = Gf((idx % q) as u32);
        idx /= q;
    }
    v
}

pub(crate) fn index(f: &FiniteField, v: &[Gf]) -> usize {
    v.iter().fold(0, |acc, c| acc * f.order() as usize + c.0 as usize)
}

pub(crate) fn add(f: &FiniteField, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    a.iter().zip(b).map(|(x, y)| f.add(*x, *y)).collect()
}

pub(crate) fn scale(f: &FiniteField, c: Gf, a: &[Gf]) -> Vec<Gf> {
    a.iter().map(|x| f.mul(c, *x)).collect()
}

pub(crate) fn dot(f: &FiniteField, a: &[Gf], b: &[Gf]) -> Gf {
    a.iter().zip(b).fold(Gf(0), |acc, (x, y)| f.add(acc, f.mul(*x, *y)))
}

pub(crate) fn raw(v: &[Gf]) -> Vec<u32> {
    v.iter().map(|x| x.0).collect()
}

/// Nonzero vectors with first nonzero entry 1, ordered by the position of
/// that entry and then lexicographically.
pub(crate) fn normalized(f: &FiniteField, d: usize) -> Vec<Vec<Gf>> {
    let mut out = Vec::new();
    for pivot in 0..d {
        let tail = d - pivot - 1;
        for t in 0..count(f, tail) {
            let mut v = vec![Gf(0); d];
            v[pivot] = f.one();
            v[pivot + 1..].copy_from_slice(&point(f, tail, t));
            out.push(v);
        }
    }
    out
}

/// Basis of the null space of the rows (solutions `x` with `row . x = 0`).
pub(crate) fn nullspace(f: &FiniteField, rows: &[Vec<Gf>], n: usize) -> Vec<Vec<Gf>> {
    let mut m: Vec<Vec<Gf>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(k) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else { continue };
        m.swap(r, k);
        let inv = f.inv(m[r][c]).expect("nonzero pivot");
        m[r] = scale(f, inv, &m[r]);
        for k in 0..m.len() {
            if k != r && !m[k][c].is_zero() {
                let factor = m[k][c];
                let row = m[r].clone();
                for (x, y) in m[k].iter_mut().zip(&row) {
                    *x = f.sub(*x, f.mul(factor, *y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Gf(0); n];
            v[free] = f.one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = f.neg(row[free]);
            }
            v
        })
        .collect()
}

pub(crate) fn rank(f: &FiniteField, rows: &[Vec<Gf>], n: usize) -> usize {
    n - nullspace(f, rows, n).len()
}
