use std::sync::{Arc, OnceLock};

use crate::error::{check_cap, Error, Result};
use crate::exactfield::{FiniteField, Gf};
use crate::nilalg::{FieldAlgebra, Inclusion, Quotient, Subspace};

use super::classes::ConjugacyClasses;
use super::subgroup::Subgroup;

pub const DEFAULT_GROUP_CAP: u128 = 1 << 20;

/// The group `1+A` of a nilpotent algebra over a finite field. Elements are
/// numbered by their coordinate vectors read as base-q numerals, first
/// coordinate most significant, so index order is lexicographic order.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    alg: Arc<FieldAlgebra>,
    q: usize,
    size: usize,
    generators: Arc<OnceLock<Vec<usize>>>,
    classes: Arc<OnceLock<ConjugacyClasses>>,
    exponent: Arc<OnceLock<u64>>,
}

impl PartialEq for UnitGroup {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg
    }
}

impl UnitGroup {
    pub fn new(alg: FieldAlgebra) -> Result<Self> {
        Self::with_cap(alg, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(alg: FieldAlgebra, cap: u128) -> Result<Self> {
        check_cap(alg.size(), cap)?;
        let q = alg.field().order() as usize;
        let size = alg.size() as usize;
        Ok(UnitGroup {
            alg: Arc::new(alg),
            q,
            size,
            generators: Default::default(),
            classes: Default::default(),
            exponent: Default::default(),
        })
    }

    pub fn algebra(&self) -> &FieldAlgebra {
        &self.alg
    }

    pub fn field(&self) -> &FiniteField {
        self.alg.field()
    }

    pub fn order(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index(&self, x: &[Gf]) -> usize {
        x.iter().fold(0, |acc, c| acc * self.q + c.0 as usize)
    }

    pub fn coords(&self, mut idx: usize) -> Vec<Gf> {
        let mut out = vec![Gf(0); self.dim()];
        for slot in out.iter_mut().rev() {
            *slot = Gf((idx % self.q) as u32);
            idx /= self.q;
        }
        out
    }

    /// All elements in canonical order, as coordinate vectors of `x` in `1+x`.
    pub fn elements(&self) -> impl Iterator<Item = Vec<Gf>> + '_ {
        (0..self.size).map(|i| self.coords(i))
    }

    /// Coordinates of `x` with each field entry as its prime-field
    /// coefficient list, the form used in reports.
    pub fn element_json(&self, x: usize) -> Vec<Vec<u32>> {
        let f = self.field();
        self.coords(x).into_iter().map(|c| f.coeffs(c)).collect()
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.index(&self.alg.unit_mul(&self.coords(g), &self.coords(h)))
    }

    pub fn inv(&self, g: usize) -> usize {
        self.index(&self.alg.unit_inv(&self.coords(g)))
    }

    /// `g h g^{-1} h^{-1}`.
    pub fn comm(&self, g: usize, h: usize) -> usize {
        self.index(&self.alg.unit_comm(&self.coords(g), &self.coords(h)))
    }

    /// `g h g^{-1}`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        let x = self.coords(g);
        let gh = self.alg.unit_mul(&x, &self.coords(h));
        self.index(&self.alg.unit_mul(&gh, &self.alg.unit_inv(&x)))
    }

    pub fn pow(&self, g: usize, e: u64) -> usize {
        let mut acc = self.alg.zero();
        let mut base = self.coords(g);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.alg.unit_mul(&acc, &base);
            }
            base = self.alg.unit_mul(&base, &base);
            e >>= 1;
        }
        self.index(&acc)
    }

    /// Order of `g`, always a power of p.
    pub fn element_order(&self, g: usize) -> u64 {
        let p = self.field().p() as u64;
        let mut x = g;
        let mut ord = 1;
        while x != 0 {
            x = self.pow(x, p);
            ord *= p;
        }
        ord
    }

    pub fn exponent(&self) -> u64 {
        *self.exponent.get_or_init(|| (0..self.size).map(|g| self.element_order(g)).max().unwrap_or(1))
    }

    /// A small generating set: elements `1 + c e_i` for `c` running over a
    /// prime-field basis of F_q, kept only when they enlarge the subgroup
    /// generated so far.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let f = self.field();
            let mut candidates = Vec::new();
            for i in 0..self.dim() {
                for j in 0..f.k() {
                    let mut x = self.alg.zero();
                    x[i] = f.pow(f.x(), j as u64);
                    if f.k() == 1 {
                        x[i] = f.one();
                    }
                    candidates.push(self.index(&x));
                }
            }
            candidates.extend(0..self.size);
            Subgroup::greedy_generators(self, candidates, self.size)
        })
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| ConjugacyClasses::compute(self))
    }

    /// The subgroup `1+S` for a subalgebra `S` of the underlying algebra.
    pub fn subgroup_of(&self, s: &Subspace) -> Result<Subgroup> {
        if !self.alg.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        let f = self.field();
        let mut elements: Vec<usize> = s.elements(f).iter().map(|v| self.index(v)).collect();
        elements.sort_unstable();
        let gens = s.basis().iter().flat_map(|v| {
            (0..f.k()).map(move |j| {
                let c = if f.k() == 1 { f.one() } else { f.pow(f.x(), j as u64) };
                v.iter().map(|x| f.mul(c, *x)).collect::<Vec<_>>()
            })
        });
        let hints: Vec<usize> = gens.map(|v| self.index(&v)).collect();
        Ok(Subgroup::from_elements(self, elements, &hints))
    }

    /// Whole group as a subgroup.
    pub fn as_subgroup(&self) -> Subgroup {
        Subgroup::from_parts(self, (0..self.size).collect(), self.generators().to_vec())
    }

    /// `1+A^m`.
    pub fn power_subgroup(&self, m: usize) -> Subgroup {
        self.subgroup_of(&self.alg.power_ideal(m)).expect("powers are subalgebras")
    }
}

/// An injective homomorphism `1+B -> 1+A` induced by an algebra inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn from_inclusion(source: &UnitGroup, target: &UnitGroup, inc: &Inclusion) -> Self {
        let f = target.field();
        let map = (0..source.order()).map(|h| target.index(&inc.apply(f, &source.coords(h)))).collect();
        Embedding { map }
    }

    pub fn identity(g: &UnitGroup) -> Self {
        Embedding { map: (0..g.order()).collect() }
    }

    pub fn apply(&self, h: usize) -> usize {
        self.map[h]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `outer` after `self`.
    pub fn then(&self, outer: &Embedding) -> Embedding {
        Embedding { map: self.map.iter().map(|&h| outer.map[h]).collect() }
    }

    /// Image as a subgroup of the target.
    pub fn image(&self, source: &UnitGroup, target: &UnitGroup) -> Subgroup {
        let mut elements = self.map.clone();
        elements.sort_unstable();
        let gens = source.generators().iter().map(|&g| self.map[g]).collect();
        Subgroup::from_parts(target, elements, gens)
    }
}

/// `1+B` for a subalgebra `B`, as a group in its own right with its
/// embedding into `1+A`.
pub fn subalgebra_group(g: &UnitGroup, b: &Subspace) -> Result<(UnitGroup, Embedding, Inclusion)> {
    let (alg, inc) = g.algebra().subalgebra(b)?;
    let h = UnitGroup::new(alg)?;
    let emb = Embedding::from_inclusion(&h, g, &inc);
    Ok((h, emb, inc))
}

/// `(1+A)/(1+I)` realized as `1+(A/I)`, with the projection on element
/// indices.
pub fn quotient_group(g: &UnitGroup, ideal: &Subspace) -> Result<(UnitGroup, Vec<usize>, Quotient)> {
    let (alg, quot) = g.algebra().quotient_algebra(ideal)?;
    let qg = UnitGroup::new(alg)?;
    let f = g.field();
    let proj = (0..g.order()).map(|x| qg.index(&quot.coords(f, &g.coords(x)))).collect();
    Ok((qg, proj, quot))
}
