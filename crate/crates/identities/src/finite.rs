use serde::Serialize;

use nilrep_core::exactfield::{FiniteField, Gf};
use nilrep_core::nilalg::{FreeNilpotent, Quotient, Subspace};
use nilrep_core::unitgroup::{Subgroup, UnitGroup};
use nilrep_core::{Error, Result};

/// Default group-size cap for the Halasi explorer.
pub const HALASI_CAP: u128 = 1 << 16;

/// Largest number of pairs `(g, h)` the pairing check will enumerate.
const PAIR_CAP: usize = 1 << 24;

/// `(S_1, S_2)` for normal subgroups generated by `a` and `b`: the normal
/// closure of the commutators of the generators.
pub fn normal_commutator_subgroup(g: &UnitGroup, a: &[usize], b: &[usize]) -> Result<Subgroup> {
    let mut gens: Vec<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| g.comm(x, y)).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut s = Subgroup::closure(g, &gens)?;
    loop {
        let mut grown = false;
        for t in s.generators().to_vec() {
            for &x in g.generators() {
                let c = g.conj(x, t);
                if !s.contains(c) {
                    s = s.extend(g, c, g.order() as u128)?;
                    grown = true;
                }
            }
        }
        if !grown {
            return Ok(s);
        }
    }
}

fn point_index(f: &FiniteField, v: &[Gf]) -> usize {
    v.iter().fold(0, |acc, c| acc * f.order() as usize + c.0 as usize)
}

fn point(f: &FiniteField, d: usize, mut idx: usize) -> Vec<Gf> {
    let q = f.order() as usize;
    let mut v = vec![Gf(0); d];
    for slot in v.iter_mut().rev() {
        *slot = Gf((idx % q) as u32);
        idx /= q;
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    pub order: usize,
    pub m: usize,
    /// `|Q|` for `Q = (1+A^m)/(1+A, 1+A^m)`.
    pub q_order: usize,
    pub factors: bool,
    pub additive_left: bool,
    pub additive_right: bool,
    pub scaling: bool,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Checks, with values in `Q = (1+A^m)/(1+A, 1+A^m)` and no character in
/// sight, that `C(g, h) = ghg^{-1}h^{-1}` factors through
/// `A/A^2 x A^{m-1}/A^m` and is bilinear there.
pub fn finite_pairing_check(g: &UnitGroup, m: usize) -> Result<PairingReport> {
    assert!(m >= 2, "need m >= 2");
    let f = g.field();
    let alg = g.algebra();
    let am = g.power_subgroup(m);
    let k = normal_commutator_subgroup(g, g.generators(), am.generators())?;
    let top = g.power_subgroup(m - 1);
    if g.order().saturating_mul(top.order()) > PAIR_CAP {
        return Err(Error::CapExceeded { size: (g.order() * top.order()) as u128, cap: PAIR_CAP as u128 });
    }

    // cosets of K in 1+A^m
    let mut label = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for &h in am.elements() {
        if label[h] == u32::MAX {
            for &c in k.elements() {
                label[g.mul(h, c)] = reps.len() as u32;
            }
            reps.push(h);
        }
    }
    let qmul = |a: u32, b: u32| label[g.mul(reps[a as usize], reps[b as usize])];

    let q1 = Quotient::new(f, &Subspace::full(alg.dim()), &alg.power_ideal(2));
    let q2 = Quotient::new(f, &alg.power_ideal(m - 1), &alg.power_ideal(m));
    let (d1, d2) = (q1.dim(), q2.dim());
    let n1 = (f.order() as usize).pow(d1 as u32);
    let n2 = (f.order() as usize).pow(d2 as u32);
    let mut table = vec![u32::MAX; n1 * n2];
    let mut report = PairingReport {
        order: g.order(),
        m,
        q_order: reps.len(),
        factors: true,
        additive_left: true,
        additive_right: true,
        scaling: true,
        passed: false,
        witness: None,
    };
    let y_points: Vec<(usize, usize)> =
        top.elements().iter().map(|&h| (h, point_index(f, &q2.coords(f, &g.coords(h))))).collect();
    'outer: for x in 0..g.order() {
        let a = point_index(f, &q1.coords(f, &g.coords(x)));
        for &(y, b) in &y_points {
            let c = label[g.comm(x, y)];
            if c == u32::MAX {
                report.factors = false;
                report.witness = Some(format!("commutator of {x} and {y} lies outside 1+A^{m}"));
                break 'outer;
            }
            let slot = &mut table[a * n2 + b];
            if *slot == u32::MAX {
                *slot = c;
            } else if *slot != c {
                report.factors = false;
                report.witness = Some(format!("C({x}, {y}) differs from another representative of the same classes"));
                break 'outer;
            }
        }
    }
    if report.factors {
        let t = |x: &[Gf], y: &[Gf]| table[point_index(f, x) * n2 + point_index(f, y)];
        let add = |u: &[Gf], v: &[Gf]| -> Vec<Gf> { u.iter().zip(v).map(|(a, b)| f.add(*a, *b)).collect() };
        let scale = |c: Gf, u: &[Gf]| -> Vec<Gf> { u.iter().map(|a| f.mul(c, *a)).collect() };
        let xs: Vec<Vec<Gf>> = (0..n1).map(|i| point(f, d1, i)).collect();
        let ys: Vec<Vec<Gf>> = (0..n2).map(|i| point(f, d2, i)).collect();
        report.additive_left =
            xs.iter().all(|x1| xs.iter().all(|x2| ys.iter().all(|y| t(&add(x1, x2), y) == qmul(t(x1, y), t(x2, y)))));
        report.additive_right =
            xs.iter().all(|x| ys.iter().all(|y1| ys.iter().all(|y2| t(x, &add(y1, y2)) == qmul(t(x, y1), t(x, y2)))));
        report.scaling = f.elements().all(|l| xs.iter().all(|x| ys.iter().all(|y| t(&scale(l, x), y) == t(x, &scale(l, y)))));
        if !(report.additive_left && report.additive_right && report.scaling) {
            report.witness = Some("a bilinearity identity fails in Q".into());
        }
    }
    report.passed = report.factors && report.additive_left && report.additive_right && report.scaling;
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct HalasiReport {
    pub q: u32,
    pub generators: usize,
    pub class: usize,
    pub k: usize,
    /// `|(1+J, 1+J) ∩ (1+J^k)|`.
    pub lhs_order: usize,
    /// `|(1+J, 1+J^{k-1})|`.
    pub rhs_order: usize,
    pub contains: bool,
    pub equal: bool,
}

/// Compares `(1+J,1+J) ∩ (1+J^k)` with `(1+J,1+J^{k-1})` for `J` free
/// nilpotent over a finite field. The second is always inside the first;
/// equality is only reported.
pub fn halasi_explore(field: &FiniteField, gens: usize, n: usize, k: usize) -> Result<HalasiReport> {
    halasi_explore_with_cap(field, gens, n, k, HALASI_CAP)
}

pub fn halasi_explore_with_cap(field: &FiniteField, gens: usize, n: usize, k: usize, cap: u128) -> Result<HalasiReport> {
    assert!(k >= 2, "need k >= 2");
    let names: Vec<String> = (0..gens).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let free = FreeNilpotent::new(field.clone(), &refs, n)?;
    let g = UnitGroup::with_cap(free.into_algebra(), cap)?;
    let derived = normal_commutator_subgroup(&g, g.generators(), g.generators())?;
    let deep = g.power_subgroup(k);
    let lhs: Vec<usize> = derived.elements().iter().copied().filter(|&x| deep.contains(x)).collect();
    let rhs = normal_commutator_subgroup(&g, g.generators(), g.power_subgroup(k - 1).generators())?;
    let contains = rhs.elements().iter().all(|x| lhs.binary_search(x).is_ok());
    Ok(HalasiReport {
        q: field.order(),
        generators: gens,
        class: n,
        k,
        lhs_order: lhs.len(),
        rhs_order: rhs.order(),
        contains,
        equal: contains && lhs.len() == rhs.order(),
    })
}
