//! Character tables by simultaneous diagonalization of the class matrices
//! over a prime field F_l, followed by lifting to cyclotomic integers.

use std::cmp::Ordering;

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::exactfield::{is_prime, Cyclotomic};
use crate::unitgroup::UnitGroup;

use super::classfn::ClassFunction;
use super::modp::Fp;
use super::table::CharacterTable;

const MAX_PRIME_ATTEMPTS: usize = 8;

/// Admissible primes in increasing order: `l = 1 mod e`, `l > 2 sqrt(n)`.
fn dixon_primes(n: u64, e: u64) -> impl Iterator<Item = u64> {
    let mut l = 1;
    std::iter::from_fn(move || loop {
        l += e;
        if l * l > 4 * n && is_prime(l) {
            return Some(l);
        }
    })
}

pub fn character_table(g: &UnitGroup) -> Result<CharacterTable> {
    let n = g.order() as u64;
    let e = g.exponent();
    let mut last = String::new();
    for l in dixon_primes(n, e).take(MAX_PRIME_ATTEMPTS) {
        match attempt(g, l) {
            Ok(t) => return Ok(t),
            Err(why) => last = format!("l = {l}: {why}"),
        }
    }
    Err(Error::TableFailure(last))
}

struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// `(M_j)_{ik}`: the number of `x` in `C_j` with `x^{-1} z_k` in `C_i`,
/// stored by columns as sparse `(i, count)` lists.
fn class_matrix(g: &UnitGroup, j: usize, fp: Fp) -> Vec<Vec<(usize, u64)>> {
    let cl = g.classes();
    let inverses: Vec<usize> = cl.get(j).members.iter().map(|&x| g.inv(x)).collect();
    (0..cl.len())
        .map(|k| {
            let z = cl.get(k).representative;
            let mut col: Vec<(usize, u64)> = Vec::new();
            for &xi in &inverses {
                let i = cl.class_of(g.mul(xi, z));
                match col.iter_mut().find(|(r, _)| *r == i) {
                    Some((_, c)) => *c += 1,
                    None => col.push((i, 1)),
                }
            }
            col.iter_mut().for_each(|(_, c)| *c %= fp.p);
            col
        })
        .collect()
}

fn apply(fp: Fp, m: &[Vec<(usize, u64)>], v: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; v.len()];
    for (col, &x) in m.iter().zip(v) {
        if x == 0 {
            continue;
        }
        for &(i, c) in col {
            out[i] = fp.add(out[i], fp.mul(c, x));
        }
    }
    out
}

/// Split `space` into eigenspaces of `m`; `None` if `m` does not act
/// diagonalizably on it.
fn split(fp: Fp, m: &[Vec<(usize, u64)>], space: Subspace) -> std::result::Result<Vec<Subspace>, String> {
    let s = space.rows.len();
    let images: Vec<Vec<u64>> = space.rows.iter().map(|v| apply(fp, m, v)).collect();
    // R[i][t] = (M v_t)[p_i]
    let restricted: Vec<Vec<u64>> = space.pivots.iter().map(|&p| images.iter().map(|w| w[p]).collect()).collect();
    let scalar = restricted.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(t, &x)| x == if i == t { restricted[0][0] } else { 0 }));
    if scalar {
        return Ok(vec![space]);
    }
    let cp = fp.charpoly(&restricted);
    let roots: Vec<u64> = (0..fp.p).filter(|&x| fp.eval(&cp, x) == 0).collect();
    if roots.len() == 1 {
        return Ok(vec![space]);
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().enumerate().map(|(t, &x)| if i == t { fp.sub(x, lambda) } else { x }).collect())
            .collect();
        let mut rows: Vec<Vec<u64>> = fp
            .nullspace(&shifted)
            .iter()
            .map(|c| {
                let mut v = vec![0; space.rows[0].len()];
                for (ct, vt) in c.iter().zip(&space.rows) {
                    for (x, y) in v.iter_mut().zip(vt) {
                        *x = fp.add(*x, fp.mul(*ct, *y));
                    }
                }
                v
            })
            .collect();
        let pivots = fp.rref(&mut rows);
        total += rows.len();
        out.push(Subspace { rows, pivots });
    }
    if total != s {
        return Err("class matrix is not diagonalizable on an eigenspace".into());
    }
    Ok(out)
}

fn attempt(g: &UnitGroup, l: u64) -> std::result::Result<CharacterTable, String> {
    let fp = Fp { p: l };
    let cl = g.classes();
    let r = cl.len();
    let n = g.order();
    let mut spaces = vec![Subspace { rows: (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect(), pivots: (0..r).collect() }];
    for j in 1..r {
        if spaces.iter().all(|s| s.rows.len() == 1) {
            break;
        }
        let m = class_matrix(g, j, fp);
        let mut next = Vec::new();
        for s in spaces {
            if s.rows.len() == 1 {
                next.push(s);
            } else {
                next.extend(split(fp, &m, s)?);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.rows.len() != 1) {
        return Err("class matrices do not separate the characters".into());
    }

    let sizes = cl.sizes();
    let size_inv: Vec<u64> = sizes.iter().map(|&s| fp.inv(fp.from_usize(s))).collect();
    let z = fp.primitive_root();
    let isqrt = (n as u64).sqrt();

    // power maps of the representatives, shared by all characters
    let orders: Vec<u64> = (0..r).map(|k| g.element_order(cl.get(k).representative)).collect();
    let power_classes: Vec<Vec<usize>> = (0..r).map(|k| (0..orders[k]).map(|t| cl.power_class(g, k, t)).collect()).collect();

    let mut characters = Vec::with_capacity(r);
    for s in &spaces {
        let w0 = s.rows[0][0];
        if w0 == 0 {
            return Err("eigenvector vanishes at the identity class".into());
        }
        let scale = fp.inv(w0);
        let w: Vec<u64> = s.rows[0].iter().map(|&x| fp.mul(x, scale)).collect();
        let denom = (0..r).fold(0, |acc, k| fp.add(acc, fp.mul(fp.mul(w[k], w[cl.inverse(k)]), size_inv[k])));
        if denom == 0 {
            return Err("degenerate central character".into());
        }
        let d2 = fp.mul(fp.from_usize(n), fp.inv(denom));
        let d = (1..=isqrt).find(|&d| fp.mul(d, d) == d2).ok_or("no integer degree fits")?;
        let modl: Vec<u64> = (0..r).map(|k| fp.mul(fp.mul(w[k], d), size_inv[k])).collect();

        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let o = orders[k];
            let zeta = fp.pow(z, (l - 1) / o);
            let zeta_inv = fp.inv(zeta);
            let o_inv = fp.inv(o % l);
            let mut mult = Vec::with_capacity(o as usize);
            let mut total = 0;
            for e in 0..o {
                let step = fp.pow(zeta_inv, e);
                let mut acc = 0;
                let mut pw = 1;
                for t in 0..o as usize {
                    acc = fp.add(acc, fp.mul(modl[power_classes[k][t]], pw));
                    pw = fp.mul(pw, step);
                }
                let m_e = fp.mul(acc, o_inv);
                if m_e > d {
                    return Err("eigenvalue multiplicity out of range".into());
                }
                total += m_e;
                mult.push(m_e as i64);
            }
            if total != d {
                return Err("multiplicities do not sum to the degree".into());
            }
            values.push(Cyclotomic::from_multiplicities(o, &mult));
        }
        characters.push(ClassFunction::new(values));
    }

    let degree_sum: i64 = characters.iter().map(|c| c.degree().unwrap_or(0).pow(2)).sum();
    if degree_sum != n as i64 {
        return Err(format!("degrees square-sum to {degree_sum}, not {n}"));
    }
    let e = g.exponent();
    characters.sort_by(|a, b| compare_characters(a, b, e));
    Ok(CharacterTable::assemble(g, characters, l, z))
}

/// Degree ascending, then value tuples in decreasing lexicographic order
/// inside Q(zeta_e); for p-groups this puts the trivial character first.
pub(crate) fn compare_characters(a: &ClassFunction, b: &ClassFunction, e: u64) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.values().iter().zip(b.values()) {
            match y.cmp_in(x, e) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    })
}
