use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::Cyclotomic;
use crate::unitgroup::{Embedding, UnitGroup};

/// A function on a group that is constant on conjugacy classes, stored as
/// one value per class in the group's class order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunction {
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn trivial(g: &UnitGroup) -> Self {
        ClassFunction { values: vec![Cyclotomic::one(); g.classes().len()] }
    }

    /// `|G|` at the identity, zero elsewhere.
    pub fn regular(g: &UnitGroup) -> Self {
        let mut values = vec![Cyclotomic::zero(); g.classes().len()];
        values[0] = Cyclotomic::from_int(g.order() as i64);
        ClassFunction { values }
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn at(&self, g: &UnitGroup, x: usize) -> &Cyclotomic {
        &self.values[g.classes().class_of(x)]
    }

    /// Value at the identity class, as an integer when it is one.
    pub fn degree(&self) -> Option<i64> {
        self.values[0].as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn scale(&self, r: Rational64) -> Self {
        ClassFunction { values: self.values.iter().map(|v| v.scale(r)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        ClassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }
}

/// `|G|^{-1} sum_C |C| phi(C) conj(psi(C))`.
pub fn inner_product(g: &UnitGroup, phi: &ClassFunction, psi: &ClassFunction) -> Cyclotomic {
    let sizes = g.classes().sizes();
    let total: Cyclotomic =
        phi.values.iter().zip(&psi.values).zip(&sizes).map(|((a, b), &s)| (a * &b.conj()).scale(Rational64::from_integer(s as i64))).sum();
    total.scale(Rational64::new(1, g.order() as i64))
}

/// Checks that `emb` is an injective homomorphism from `h` into `g`.
pub fn check_embedding(h: &UnitGroup, emb: &Embedding, g: &UnitGroup) -> Result<()> {
    let err = |m: &str| Err(Error::NotASubgroup(m.to_string()));
    if emb.map().len() != h.order() || emb.apply(0) != 0 {
        return err("embedding does not match the source group");
    }
    let mut seen = vec![false; g.order()];
    for &x in emb.map() {
        if x >= g.order() || std::mem::replace(&mut seen[x], true) {
            return err("embedding is not injective");
        }
    }
    for x in 0..h.order() {
        for &s in h.generators() {
            if emb.apply(h.mul(x, s)) != g.mul(emb.apply(x), emb.apply(s)) {
                return err("embedding is not a homomorphism");
            }
        }
    }
    Ok(())
}

/// `Ind_H^G rho (g) = [G:H]/|C_g| sum_{h in C_g ∩ H} rho(h)`.
pub fn induce(h: &UnitGroup, emb: &Embedding, rho: &ClassFunction, g: &UnitGroup) -> Result<ClassFunction> {
    check_embedding(h, emb, g)?;
    let gc = g.classes();
    let hc = h.classes();
    let mut sums = vec![Cyclotomic::zero(); gc.len()];
    // group H by (H-class, G-class) first so each value is added once per pair
    let mut counts = std::collections::BTreeMap::new();
    for x in 0..h.order() {
        *counts.entry((gc.class_of(emb.apply(x)), hc.class_of(x))).or_insert(0i64) += 1;
    }
    for ((k, kh), c) in counts {
        sums[k] = &sums[k] + &rho.values[kh].scale(Rational64::from_integer(c));
    }
    let sizes = gc.sizes();
    let values = sums
        .into_iter()
        .zip(sizes)
        .map(|(s, size)| s.scale(Rational64::new(g.order() as i64, (h.order() * size) as i64)))
        .collect();
    Ok(ClassFunction { values })
}

pub fn restrict(chi: &ClassFunction, g: &UnitGroup, h: &UnitGroup, emb: &Embedding) -> Result<ClassFunction> {
    check_embedding(h, emb, g)?;
    let values = h.classes().classes().iter().map(|c| chi.at(g, emb.apply(c.representative)).clone()).collect();
    Ok(ClassFunction { values })
}

/// Mackey's test for a normal subgroup, run both ways: `<Ind rho, Ind rho> = 1`
/// and "no element outside H fixes rho under conjugation". Disagreement is
/// reported as an error.
pub fn mackey_irreducible(h: &UnitGroup, emb: &Embedding, rho: &ClassFunction, g: &UnitGroup) -> Result<bool> {
    check_embedding(h, emb, g)?;
    let image = emb.image(h, g);
    if !image.is_normal(g) {
        return Err(Error::NotNormal);
    }
    let ind = induce(h, emb, rho, g)?;
    let by_inner = inner_product(g, &ind, &ind) == Cyclotomic::one();

    let mut preimage = vec![usize::MAX; g.order()];
    for x in 0..h.order() {
        preimage[emb.apply(x)] = x;
    }
    let hc = h.classes();
    let moved_by = |x: usize| {
        let xinv = g.inv(x);
        hc.classes().iter().enumerate().any(|(k, c)| {
            let y = g.conj(xinv, emb.apply(c.representative));
            rho.values[hc.class_of(preimage[y])] != rho.values[k]
        })
    };
    let by_conjugates = image.left_transversal(g).into_iter().filter(|&x| !image.contains(x)).all(moved_by);
    if by_inner != by_conjugates {
        return Err(Error::TableFailure("the two forms of Mackey's criterion disagree".into()));
    }
    Ok(by_inner)
}

/// If `chi` acts by scalars on the elements `s`, the scalar character
/// `chi(s)/chi(1)` on each of them, in the same order.
pub fn scalar_on(chi: &ClassFunction, g: &UnitGroup, s: &[usize]) -> Option<Vec<Cyclotomic>> {
    let d = chi.degree()?;
    let d2 = Cyclotomic::from_int(d * d);
    let inv = Rational64::new(1, d);
    s.iter()
        .map(|&x| {
            let v = chi.at(g, x);
            (v * &v.conj() == d2).then(|| v.scale(inv))
        })
        .collect()
}
