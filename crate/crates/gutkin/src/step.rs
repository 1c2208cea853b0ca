//! One level of the descent: from an irreducible character of `1+A` to
//! the codimension-one ideal `A_1` it is induced across.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use nilrep_core::chars::{scalar_on, ClassFunction};
use nilrep_core::exactfield::{Cyclotomic, FiniteField, Gf};
use nilrep_core::nilalg::{Inclusion, Subspace};
use nilrep_core::unitgroup::{commutator_subgroup, Embedding, UnitGroup};

use crate::cache::{Cache, CommutatorSets};
use crate::error::{fail, Result, Stage};
use crate::points;

/// The scalar character `zeta` by which an irreducible character acts on
/// `1+A^m`, stored on every element of `1+A^m`.
#[derive(Clone, Debug)]
pub struct CentralCharacter {
    pub m: usize,
    elements: Vec<usize>,
    values: Vec<Cyclotomic>,
    // zeta(h) = zeta_E^{exponents}, E the exponent of the group
    exponents: Vec<u64>,
    order: u64,
}

impl CentralCharacter {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn at(&self, x: usize) -> Option<&Cyclotomic> {
        self.elements.binary_search(&x).ok().map(|i| &self.values[i])
    }

    fn exponent_at(&self, x: usize) -> Option<u64> {
        self.elements.binary_search(&x).ok().map(|i| self.exponents[i])
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// The trivial character of `1+A^m`.
    pub fn trivial(g: &UnitGroup, m: usize) -> Self {
        let elements = g.power_subgroup(m).elements().to_vec();
        let n = elements.len();
        CentralCharacter { m, elements, values: vec![Cyclotomic::one(); n], exponents: vec![0; n], order: g.exponent() }
    }
}

/// Smallest `m >= 1` with `chi` scalar on `1+A^m`, and the scalar
/// character there. Invariance under conjugation is checked against the
/// generators of `1+A` on every element of `1+A^m`.
pub fn minimal_scalar_level(g: &UnitGroup, chi: &ClassFunction) -> Result<CentralCharacter> {
    let e = g.exponent();
    for m in 1..=g.algebra().class().max(1) {
        let sub = g.power_subgroup(m);
        let Some(values) = scalar_on(chi, g, sub.elements()) else { continue };
        let mut exponents = Vec::with_capacity(values.len());
        for (v, &h) in values.iter().zip(sub.elements()) {
            match v.root_exponent(e) {
                Some(k) => exponents.push(k),
                None => return fail(Stage::NotInvariant, format!("zeta({h}) = {v} is not a root of unity")),
            }
        }
        let zeta = CentralCharacter { m, elements: sub.elements().to_vec(), values, exponents, order: e };
        for &x in g.generators() {
            for (&h, &k) in zeta.elements.iter().zip(&zeta.exponents) {
                if zeta.exponent_at(g.conj(x, h)) != Some(k) {
                    return fail(Stage::NotInvariant, format!("zeta moved by conjugating element {h} by {x}"));
                }
            }
        }
        return Ok(zeta);
    }
    fail(Stage::NotInvariant, "not scalar on the trivial subgroup")
}

/// `C(x, y) = zeta((1+x)(1+y)(1+x)^{-1}(1+y)^{-1})` on points of
/// `A/A^2` and `A^{m-1}/A^m`, as exponents of `zeta_p`.
#[derive(Clone)]
pub struct Pairing {
    pub m: usize,
    pub table: Vec<Vec<u32>>,
    sets: Arc<CommutatorSets>,
}

impl Pairing {
    pub fn left_dim(&self) -> usize {
        self.sets.q1.dim()
    }

    pub fn right_dim(&self) -> usize {
        self.sets.q2.dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().flatten().all(|&t| t == 0)
    }

    /// True if the well-definedness check covered every representative.
    pub fn exhaustive(&self) -> bool {
        self.sets.exhaustive
    }

    fn at(&self, f: &FiniteField, x: &[Gf], y: &[Gf]) -> u32 {
        self.table[points::index(f, x)][points::index(f, y)]
    }
}

pub fn commutator_pairing(cache: &Cache, g: &UnitGroup, zeta: &CentralCharacter) -> Result<Pairing> {
    let m = zeta.m;
    if m < 2 {
        return fail(Stage::NotWellDefined, "the pairing needs m >= 2");
    }
    let f = g.field();
    let p = f.p() as u64;
    let step = zeta.order / p;
    let sets = cache.commutators(g, m);
    let n1 = points::count(f, sets.q1.dim());
    let n2 = sets.n2;
    let mut table = vec![vec![0u32; n2]; n1];
    for a in 0..n1 {
        for b in 0..n2 {
            let c = sets.on_lifts[a * n2 + b];
            let Some(k) = zeta.exponent_at(c) else {
                return fail(Stage::NotWellDefined, format!("commutator {c} of points ({a}, {b}) lies outside 1+A^{m}"));
            };
            if k % step != 0 {
                return fail(Stage::NotBilinear, format!("C at points ({a}, {b}) is not a p-th root of unity"));
            }
            for &other in &sets.all[a * n2 + b] {
                if zeta.exponent_at(other) != Some(k) {
                    return fail(Stage::NotWellDefined, format!("points ({a}, {b}): commutators {c} and {other} differ under zeta"));
                }
            }
            table[a][b] = (k / step) as u32;
        }
    }
    let pairing = Pairing { m, table, sets };
    check_bilinear(f, &pairing)?;
    Ok(pairing)
}

/// The three bilinearity identities, over every point.
fn check_bilinear(f: &FiniteField, pr: &Pairing) -> Result<()> {
    let p = f.p();
    let (d1, d2) = (pr.left_dim(), pr.right_dim());
    let xs: Vec<Vec<Gf>> = (0..points::count(f, d1)).map(|i| points::point(f, d1, i)).collect();
    let ys: Vec<Vec<Gf>> = (0..points::count(f, d2)).map(|i| points::point(f, d2, i)).collect();
    for x1 in &xs {
        for x2 in &xs {
            let s = points::add(f, x1, x2);
            for y in &ys {
                if pr.at(f, &s, y) != (pr.at(f, x1, y) + pr.at(f, x2, y)) % p {
                    return fail(Stage::NotBilinear, format!("additivity in x fails at {:?} + {:?}, {:?}", points::raw(x1), points::raw(x2), points::raw(y)));
                }
            }
        }
    }
    for x in &xs {
        for y1 in &ys {
            for y2 in &ys {
                let s = points::add(f, y1, y2);
                if pr.at(f, x, &s) != (pr.at(f, x, y1) + pr.at(f, x, y2)) % p {
                    return fail(Stage::NotBilinear, format!("additivity in y fails at {:?}, {:?} + {:?}", points::raw(x), points::raw(y1), points::raw(y2)));
                }
            }
        }
    }
    for lambda in f.elements() {
        for x in &xs {
            let lx = points::scale(f, lambda, x);
            for y in &ys {
                if pr.at(f, &lx, y) != pr.at(f, x, &points::scale(f, lambda, y)) {
                    return fail(Stage::NotBilinear, format!("scaling by {} fails at {:?}, {:?}", lambda.0, points::raw(x), points::raw(y)));
                }
            }
        }
    }
    Ok(())
}

/// The matrix of `Phi: A/A^2 -> (A^{m-1}/A^m)^*`, with `C(x, y) =
/// psi(x^T Phi y)`.
pub fn phi_map(g: &UnitGroup, pairing: &Pairing) -> Result<Vec<Vec<Gf>>> {
    phi_map_with(g, pairing, g.field().one())
}

/// As [`phi_map`] but identifying characters through `psi_a(x) = psi(a x)`.
pub fn phi_map_with(g: &UnitGroup, pairing: &Pairing, a: Gf) -> Result<Vec<Vec<Gf>>> {
    let f = g.field();
    let (d1, d2) = (pairing.left_dim(), pairing.right_dim());
    let unit = |d: usize, i: usize| {
        let mut v = vec![Gf(0); d];
        v[i] = f.one();
        v
    };
    let mut phi = vec![vec![Gf(0); d2]; d1];
    for (i, row) in phi.iter_mut().enumerate() {
        let x = unit(d1, i);
        for (j, slot) in row.iter_mut().enumerate() {
            let y = unit(d2, j);
            let found = f.elements().find(|&c| {
                f.elements().all(|t| pairing.at(f, &x, &points::scale(f, t, &y)) == f.psi_exponent(a, f.mul(c, t)))
            });
            match found {
                Some(c) => *slot = c,
                None => return fail(Stage::NotLinear, format!("C(e{i}, - e{j}) is not an additive character of F")),
            }
        }
    }
    for xi in 0..points::count(f, d1) {
        let x = points::point(f, d1, xi);
        let fx: Vec<Gf> = (0..d2).map(|j| (0..d1).fold(Gf(0), |acc, i| f.add(acc, f.mul(x[i], phi[i][j])))).collect();
        for yi in 0..points::count(f, d2) {
            let y = points::point(f, d2, yi);
            if pairing.table[xi][yi] != f.psi_exponent(a, points::dot(f, &fx, &y)) {
                return fail(Stage::NotLinear, format!("C({:?}, {:?}) disagrees with Phi", points::raw(&x), points::raw(&y)));
            }
        }
    }
    Ok(phi)
}

fn apply_phi(f: &FiniteField, phi: &[Vec<Gf>], v: &[Gf]) -> Vec<Gf> {
    phi.iter().map(|row| points::dot(f, row, v)).collect()
}

/// First line `L` of `A^{m-1}/A^m` (normalized direction vectors, by
/// leading position then lexicographically) on which `Phi` is nonzero.
pub fn choose_line(f: &FiniteField, phi: &[Vec<Gf>], d2: usize) -> Result<Vec<Gf>> {
    points::normalized(f, d2)
        .into_iter()
        .find(|v| apply_phi(f, phi, v).iter().any(|c| !c.is_zero()))
        .map_or_else(|| fail(Stage::NoLineFound, "Phi vanishes on every line"), Ok)
}

/// `A_1`, the preimage of the kernel of `x -> Phi(x)|_L`, and `U`, the
/// preimage of `L` in `A^{m-1}`.
pub fn build_ideals(g: &UnitGroup, pairing: &Pairing, phi: &[Vec<Gf>], line: &[Gf]) -> Result<(Subspace, Subspace)> {
    let f = g.field();
    let alg = g.algebra();
    let w = apply_phi(f, phi, line);
    let kernel = points::nullspace(f, &[w], pairing.left_dim());
    let a1 = pairing.sets.q1.preimage(f, &kernel);
    let u = pairing.sets.q2.preimage(f, &[line.to_vec()]);
    if a1.dim() + 1 != alg.dim() {
        return fail(Stage::NotAnIdeal, format!("A_1 has dimension {} in dimension {}", a1.dim(), alg.dim()));
    }
    if !alg.is_ideal(&a1) || !alg.is_ideal(&u) {
        return fail(Stage::NotAnIdeal, "A_1 or U is not a two-sided ideal");
    }
    if !u.is_subspace_of(f, &a1) {
        return fail(Stage::NotAnIdeal, "U is not contained in A_1");
    }
    Ok((a1, u))
}

/// The characters of `1+U` extending `zeta`, with the orbit and stabilizer
/// data that were checked.
#[derive(Clone, Debug, Serialize)]
pub struct Extensions {
    pub count: usize,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
}

pub fn extension_set(cache: &Cache, g: &UnitGroup, u: &Subspace, a1: &Subspace, zeta: &CentralCharacter) -> Result<Extensions> {
    let (alg_u, inc) = g.algebra().subalgebra(u)?;
    let hu = cache.group(alg_u)?;
    let emb = Embedding::from_inclusion(&hu, g, &inc);
    let mut pre = vec![usize::MAX; g.order()];
    for x in 0..hu.order() {
        pre[emb.apply(x)] = x;
    }

    let image = emb.image(&hu, g);
    for c in commutator_subgroup(g, &image, &image)?.elements() {
        if zeta.exponent_at(*c) != Some(0) {
            return fail(Stage::EmptyExtensionSet, format!("zeta is nontrivial on the commutator {c} of 1+U"));
        }
    }

    let lin = cache.linear_characters(&hu)?;
    let n = lin.exponent();
    let e = zeta.order;
    let agrees = |c: &[u64]| {
        zeta.elements.iter().zip(&zeta.exponents).all(|(&h, &k)| (lin.exponent_at(c, pre[h]) * e) % (n * e) == (k * n) % (n * e))
    };
    let extensions: Vec<usize> = (0..lin.len()).filter(|&i| agrees(&lin.label(i))).collect();
    if extensions.is_empty() {
        return fail(Stage::EmptyExtensionSet, "no character of 1+U restricts to zeta");
    }

    let moved = |c: &[u64], x: usize| -> usize {
        let xinv = g.inv(x);
        lin.generators().iter().zip(lin.orders()).fold(0usize, |acc, (&a, &o)| {
            let y = pre[g.conj(xinv, emb.apply(a))];
            let k = lin.exponent_at(c, y) / (n / o);
            acc * o as usize + k as usize
        })
    };
    let first = lin.label(extensions[0]);
    let mut orbit: Vec<usize> = (0..g.order()).map(|x| moved(&first, x)).collect();
    orbit.sort_unstable();
    orbit.dedup();
    if orbit != extensions {
        return fail(
            Stage::MultipleOrbits,
            format!("{} extensions but the orbit of the first has {}", extensions.len(), orbit.len()),
        );
    }
    let h1 = g.subgroup_of(a1)?;
    for &i in &extensions {
        let c = lin.label(i);
        let stab: Vec<usize> = (0..g.order()).filter(|&x| moved(&c, x) == i).collect();
        if stab != h1.elements() {
            return fail(Stage::WrongStabilizer, format!("extension {i} has stabilizer of order {}", stab.len()));
        }
    }
    Ok(Extensions { count: extensions.len(), orbit_size: orbit.len(), stabilizer_order: h1.order() })
}

pub(crate) fn value_map(v: &Cyclotomic) -> BTreeMap<String, String> {
    v.coefficient_map()
}

/// A value of a character at a group element written in the top-level
/// algebra's coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementValue {
    pub element: Vec<u32>,
    pub value: BTreeMap<String, String>,
}

/// Transcript of one level of the descent, vectors in the coordinates of
/// the top-level algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GutkinStep {
    pub dim: usize,
    pub degree: i64,
    pub m: usize,
    pub zeta: Vec<ElementValue>,
    pub pairing: Vec<Vec<u32>>,
    pub phi: Vec<Vec<u32>>,
    pub line: Vec<u32>,
    pub a1: Vec<Vec<u32>>,
    pub u: Vec<Vec<u32>>,
    pub extensions: usize,
    pub constituent: usize,
}

impl GutkinStep {
    pub(crate) fn push_through(&mut self, f: &FiniteField, inc: &Inclusion) {
        let map = |v: &mut Vec<u32>| {
            let x: Vec<Gf> = v.iter().map(|&c| Gf(c)).collect();
            *v = points::raw(&inc.apply(f, &x));
        };
        self.zeta.iter_mut().for_each(|z| map(&mut z.element));
        self.a1.iter_mut().for_each(map);
        self.u.iter_mut().for_each(map);
    }
}

/// Result of one level: the transcript and the ideal `A_1`.
pub(crate) struct StepOutcome {
    pub record: GutkinStep,
    pub a1: Subspace,
}

pub(crate) fn run_step(cache: &Cache, g: &UnitGroup, chi: &ClassFunction) -> Result<StepOutcome> {
    let f = g.field();
    let zeta = minimal_scalar_level(g, chi)?;
    let pairing = commutator_pairing(cache, g, &zeta)?;
    if pairing.is_trivial() {
        return fail(Stage::NotBilinear, format!("the pairing vanishes although chi is not scalar on 1+A^{}", zeta.m - 1));
    }
    let phi = phi_map(g, &pairing)?;
    let line = choose_line(f, &phi, pairing.right_dim())?;
    let (a1, u) = build_ideals(g, &pairing, &phi, &line)?;
    let ext = extension_set(cache, g, &u, &a1, &zeta)?;
    let sub = g.power_subgroup(zeta.m);
    let zeta_record = sub
        .generators()
        .iter()
        .map(|&h| ElementValue { element: points::raw(&g.coords(h)), value: value_map(zeta.at(h).expect("generator of 1+A^m")) })
        .collect();
    let record = GutkinStep {
        dim: g.dim(),
        degree: chi.degree().unwrap_or(0),
        m: zeta.m,
        zeta: zeta_record,
        pairing: pairing.table.clone(),
        phi: phi.iter().map(|r| points::raw(r)).collect(),
        line: points::raw(&line),
        a1: a1.basis().iter().map(|v| points::raw(v)).collect(),
        u: u.basis().iter().map(|v| points::raw(v)).collect(),
        extensions: ext.count,
        constituent: 0,
    };
    Ok(StepOutcome { record, a1 })
}
