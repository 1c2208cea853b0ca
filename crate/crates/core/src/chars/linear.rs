//! Degree-one characters through the abelianization `G/(G,G)`.

use crate::error::{Error, Result};
use crate::exactfield::Cyclotomic;
use crate::unitgroup::{commutator_subgroup, Subgroup, UnitGroup};

use super::classfn::ClassFunction;

/// The abelianization written as a product of cyclic groups `<a_j>` of
/// orders `o_j` (non-increasing). Linear characters are indexed by tuples
/// `c` with `chi_c(prod a_j^{e_j}) = prod zeta_{o_j}^{c_j e_j}`.
#[derive(Clone, Debug)]
pub struct LinearCharacters {
    derived: Subgroup,
    coset_of: Vec<u32>,
    coset_exponents: Vec<Vec<u64>>,
    generators: Vec<usize>,
    orders: Vec<u64>,
}

impl LinearCharacters {
    pub fn compute(g: &UnitGroup) -> Result<Self> {
        let all = g.as_subgroup();
        let derived = commutator_subgroup(g, &all, &all)?;
        let n = g.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &d in derived.elements() {
                coset_of[g.mul(x, d)] = c;
            }
        }
        let nq = reps.len();
        let qmul = |a: usize, b: usize| coset_of[g.mul(reps[a], reps[b])] as usize;
        let qpow = |a: usize, e: u64| (0..e).fold(0usize, |acc, _| qmul(acc, a));

        // span of the chosen generators: coset -> exponent tuple
        let mut span: Vec<Option<Vec<u64>>> = vec![None; nq];
        span[0] = Some(Vec::new());
        let mut gens: Vec<usize> = Vec::new();
        let mut orders: Vec<u64> = Vec::new();
        while span.iter().filter(|s| s.is_some()).count() < nq {
            // element of largest order modulo the current span
            let rel_order = |b: usize| {
                let mut o = 1;
                let mut y = b;
                while span[y].is_none() {
                    y = qmul(y, b);
                    o += 1;
                }
                (o, y)
            };
            let (b, o, bo) = (0..nq)
                .map(|b| {
                    let (o, y) = rel_order(b);
                    (b, o, y)
                })
                .max_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)))
                .expect("nonempty");
            let s = span[bo].clone().expect("in span");
            let mut b2 = b;
            for (j, &sj) in s.iter().enumerate() {
                if sj % o != 0 {
                    return Err(Error::TableFailure("abelian decomposition failed to split".into()));
                }
                let shift = (orders[j] - (sj / o) % orders[j]) % orders[j];
                b2 = qmul(b2, qpow(gens[j], shift));
            }
            if qpow(b2, o) != 0 {
                return Err(Error::TableFailure("lifted generator has the wrong order".into()));
            }
            gens.push(b2);
            orders.push(o);
            // rebuild the span with the new generator
            let old: Vec<(usize, Vec<u64>)> = span.iter().enumerate().filter_map(|(i, s)| s.clone().map(|s| (i, s))).collect();
            let mut fresh: Vec<Option<Vec<u64>>> = vec![None; nq];
            let mut power = 0usize;
            for e in 0..o {
                for (x, ex) in &old {
                    let y = qmul(*x, power);
                    let mut tuple = ex.clone();
                    tuple.resize(gens.len() - 1, 0);
                    tuple.push(e);
                    if fresh[y].is_some() {
                        return Err(Error::TableFailure("abelian decomposition is not direct".into()));
                    }
                    fresh[y] = Some(tuple);
                }
                power = qmul(power, b2);
            }
            span = fresh;
        }
        let coset_exponents = span.into_iter().map(|s| s.expect("complete")).collect();
        let generators = gens.iter().map(|&c| reps[c]).collect();
        Ok(LinearCharacters { derived, coset_of, coset_exponents, generators, orders })
    }

    pub fn derived_subgroup(&self) -> &Subgroup {
        &self.derived
    }

    pub fn len(&self) -> usize {
        self.orders.iter().product::<u64>() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Group elements whose images generate the abelianization.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Exponent of the abelianization.
    pub fn exponent(&self) -> u64 {
        self.orders.first().copied().unwrap_or(1)
    }

    /// Index tuple of the `i`-th character, first coordinate most significant.
    pub fn label(&self, mut i: usize) -> Vec<u64> {
        let mut c = vec![0; self.orders.len()];
        for (slot, &o) in c.iter_mut().zip(&self.orders).rev() {
            *slot = i as u64 % o;
            i /= o as usize;
        }
        c
    }

    /// `k` with `chi_c(x) = zeta_N^k`, `N` the exponent.
    pub fn exponent_at(&self, c: &[u64], x: usize) -> u64 {
        let n = self.exponent();
        let ex = &self.coset_exponents[self.coset_of[x] as usize];
        ex.iter().zip(c).zip(&self.orders).map(|((e, ci), o)| e * ci % o * (n / o)).sum::<u64>() % n
    }

    pub fn value(&self, c: &[u64], x: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.exponent(), self.exponent_at(c, x) as i64)
    }

    pub fn class_function(&self, g: &UnitGroup, c: &[u64]) -> ClassFunction {
        ClassFunction::new(g.classes().classes().iter().map(|k| self.value(c, k.representative)).collect())
    }

    pub fn all(&self, g: &UnitGroup) -> Vec<ClassFunction> {
        (0..self.len()).map(|i| self.class_function(g, &self.label(i))).collect()
    }
}

pub fn linear_characters(g: &UnitGroup) -> Result<Vec<ClassFunction>> {
    Ok(LinearCharacters::compute(g)?.all(g))
}
