//! Polarizations: subalgebras `B` with `f([B, B]) = 0` of the largest
//! possible dimension `dim A - rank(B_f)/2`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use nilrep_core::exactfield::{FiniteField, Gf};
use nilrep_core::nilalg::{FieldAlgebra, Subspace};

use crate::error::{fail, Result, Stage};
use crate::points;

/// Largest number of candidate subspaces the exhaustive search will visit.
const SEARCH_LIMIT: u128 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    Vergne,
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct Polarization {
    pub subspace: Subspace,
    pub rank: usize,
    pub method: Method,
}

/// `B_f(e_i, e_j) = f(e_i e_j - e_j e_i)`.
pub fn alternating_form(alg: &FieldAlgebra, f: &[Gf]) -> Vec<Vec<Gf>> {
    let n = alg.dim();
    (0..n).map(|i| (0..n).map(|j| points::dot(alg.field(), f, &alg.bracket(&alg.basis(i), &alg.basis(j)))).collect()).collect()
}

fn form_value(field: &FiniteField, form: &[Vec<Gf>], u: &[Gf], v: &[Gf]) -> Gf {
    let fv: Vec<Gf> = form.iter().map(|row| points::dot(field, row, v)).collect();
    points::dot(field, u, &fv)
}

pub fn form_rank(alg: &FieldAlgebra, form: &[Vec<Gf>]) -> usize {
    points::rank(alg.field(), form, alg.dim())
}

pub fn is_isotropic(alg: &FieldAlgebra, f: &[Gf], s: &Subspace) -> bool {
    let form = alternating_form(alg, f);
    let b = s.basis();
    b.iter().all(|u| b.iter().all(|v| form_value(alg.field(), &form, u, v).is_zero()))
}

/// A flag `V_1 < V_2 < ... < V_n = A`, one dimension at a time, refining
/// `A^{c-1} < ... < A^2 < A`; every `V_i` is a two-sided ideal.
fn adapted_basis(alg: &FieldAlgebra) -> Vec<Vec<Gf>> {
    let field = alg.field();
    let mut span = Subspace::zero(alg.dim());
    let mut out = Vec::new();
    for k in (1..alg.class().max(1)).rev() {
        for v in alg.power_ideal(k).basis() {
            if span.insert(field, v) {
                out.push(v.clone());
            }
        }
    }
    out
}

/// Sum over the flag of the radicals of `B_f` restricted to each `V_i`.
fn vergne_candidate(alg: &FieldAlgebra, form: &[Vec<Gf>]) -> Subspace {
    let field = alg.field();
    let u = adapted_basis(alg);
    let gram: Vec<Vec<Gf>> = u.iter().map(|a| u.iter().map(|b| form_value(field, form, a, b)).collect()).collect();
    let mut total = Subspace::zero(alg.dim());
    for i in 1..=u.len() {
        let rows: Vec<Vec<Gf>> = (0..i).map(|b| (0..i).map(|a| gram[a][b]).collect()).collect();
        for c in points::nullspace(field, &rows, i) {
            let v = (0..i).fold(alg.zero(), |acc, a| points::add(field, &acc, &points::scale(field, c[a], &u[a])));
            total.insert(field, &v);
        }
    }
    total
}

pub fn find_polarization(alg: &FieldAlgebra, f: &[Gf]) -> Result<Polarization> {
    let form = alternating_form(alg, f);
    let rank = form_rank(alg, &form);
    let target = alg.dim() - rank / 2;
    let candidate = vergne_candidate(alg, &form);
    if candidate.dim() == target && alg.is_subalgebra(&candidate) && is_isotropic(alg, f, &candidate) {
        return Ok(Polarization { subspace: candidate, rank, method: Method::Vergne });
    }
    match search(alg, f, target) {
        Some(s) => Ok(Polarization { subspace: s, rank, method: Method::Exhaustive }),
        None => fail(Stage::SearchExhausted, format!("no isotropic subalgebra of dimension {target}")),
    }
}

fn gaussian_binomial(q: u128, n: usize, d: usize) -> u128 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        num = num.saturating_mul(q.pow((n - i) as u32) - 1);
        den = den.saturating_mul(q.pow((i + 1) as u32) - 1);
    }
    num / den.max(1)
}

/// Every `d`-dimensional subspace of `F^n`, by reduced echelon form.
fn subspaces(field: &FiniteField, n: usize, d: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        for t in 0..points::count(field, free.len()) {
            let vals = points::point(field, free.len(), t);
            let mut rows: Vec<Vec<Gf>> = pivots
                .iter()
                .map(|&p| {
                    let mut v = vec![Gf(0); n];
                    v[p] = field.one();
                    v
                })
                .collect();
            for (&(r, c), &x) in free.iter().zip(&vals) {
                rows[r][c] = x;
            }
            out.push(Subspace::span(field, n, rows));
        }
        // next pivot set in lexicographic order
        let Some(i) = (0..d).rev().find(|&i| pivots[i] < n - d + i) else { break };
        pivots[i] += 1;
        for j in i + 1..d {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
    out
}

fn search(alg: &FieldAlgebra, f: &[Gf], d: usize) -> Option<Subspace> {
    let field = alg.field();
    if gaussian_binomial(field.order() as u128, alg.dim(), d) > SEARCH_LIMIT {
        return None;
    }
    subspaces(field, alg.dim(), d).into_iter().find(|s| alg.is_subalgebra(s) && is_isotropic(alg, f, s))
}

/// The largest isotropic subalgebra found by trying every subspace,
/// biggest dimension first.
pub fn exhaustive_polarization(alg: &FieldAlgebra, f: &[Gf]) -> Option<Subspace> {
    (0..=alg.dim()).rev().find_map(|d| search(alg, f, d))
}

/// Largest dimension of an isotropic subspace of `B_f`, by brute force.
pub fn max_isotropic_dim(alg: &FieldAlgebra, f: &[Gf]) -> usize {
    (0..=alg.dim())
        .rev()
        .find(|&d| subspaces(alg.field(), alg.dim(), d).iter().any(|s| is_isotropic(alg, f, s)))
        .unwrap_or(0)
}

/// `count` functionals with uniformly random coordinates.
pub fn random_functionals(field: &FiniteField, dim: usize, count: usize, seed: u64) -> Vec<Vec<Gf>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..dim).map(|_| Gf(rng.gen_range(0..field.order()))).collect()).collect()
}
