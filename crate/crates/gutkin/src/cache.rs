use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use nilrep_core::chars::{character_table, CharacterTable, LinearCharacters};
use nilrep_core::nilalg::{FieldAlgebra, Quotient, Subspace};
use nilrep_core::unitgroup::UnitGroup;

use crate::error::Result;
use crate::points;

/// Above this many (g, h) pairs the well-definedness check only shifts
/// coset representatives by basis vectors.
const EXHAUSTIVE_PAIRS: usize = 1 << 23;

/// Groups, character tables and commutator data shared by a batch of
/// decompositions, keyed by the algebra's serialization.
#[derive(Default)]
pub struct Cache {
    groups: Mutex<HashMap<String, UnitGroup>>,
    tables: Mutex<HashMap<String, Arc<CharacterTable>>>,
    linear: Mutex<HashMap<String, Arc<LinearCharacters>>>,
    commutators: Mutex<HashMap<(String, usize), Arc<CommutatorSets>>>,
}

/// For each pair of points of `A/A^2` and `A^{m-1}/A^m`, every commutator
/// `(1+x)(1+y)(1+x)^{-1}(1+y)^{-1}` over the representatives examined.
pub struct CommutatorSets {
    pub(crate) q1: Quotient,
    pub(crate) q2: Quotient,
    pub(crate) n2: usize,
    pub(crate) on_lifts: Vec<usize>,
    pub(crate) all: Vec<Vec<usize>>,
    pub(crate) exhaustive: bool,
}

impl Cache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn group(&self, alg: FieldAlgebra) -> Result<UnitGroup> {
        let key = alg.to_json();
        if let Some(g) = self.groups.lock().unwrap().get(&key) {
            return Ok(g.clone());
        }
        let g = UnitGroup::new(alg)?;
        Ok(self.groups.lock().unwrap().entry(key).or_insert(g).clone())
    }

    pub fn table(&self, g: &UnitGroup) -> Result<Arc<CharacterTable>> {
        let key = g.algebra().to_json();
        if let Some(t) = self.tables.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let t = Arc::new(character_table(g)?);
        Ok(self.tables.lock().unwrap().entry(key).or_insert(t).clone())
    }

    pub fn linear_characters(&self, g: &UnitGroup) -> Result<Arc<LinearCharacters>> {
        let key = g.algebra().to_json();
        if let Some(l) = self.linear.lock().unwrap().get(&key) {
            return Ok(l.clone());
        }
        let l = Arc::new(LinearCharacters::compute(g)?);
        Ok(self.linear.lock().unwrap().entry(key).or_insert(l).clone())
    }

    pub(crate) fn commutators(&self, g: &UnitGroup, m: usize) -> Arc<CommutatorSets> {
        let key = (g.algebra().to_json(), m);
        if let Some(c) = self.commutators.lock().unwrap().get(&key) {
            return c.clone();
        }
        let c = Arc::new(CommutatorSets::compute(g, m));
        self.commutators.lock().unwrap().entry(key).or_insert(c).clone()
    }
}

impl CommutatorSets {
    fn compute(g: &UnitGroup, m: usize) -> Self {
        let alg = g.algebra();
        let f = g.field();
        let n = alg.dim();
        let a2 = alg.power_ideal(2);
        let top2 = alg.power_ideal(m - 1);
        let am = alg.power_ideal(m);
        let q1 = Quotient::new(f, &Subspace::full(n), &a2);
        let q2 = Quotient::new(f, &top2, &am);
        let n1 = points::count(f, q1.dim());
        let n2 = points::count(f, q2.dim());
        let mut all = vec![Vec::new(); n1 * n2];
        let mut on_lifts = Vec::with_capacity(n1 * n2);
        for a in 0..n1 {
            let x = g.index(&q1.lift(f, &points::point(f, q1.dim(), a)));
            for b in 0..n2 {
                let y = g.index(&q2.lift(f, &points::point(f, q2.dim(), b)));
                on_lifts.push(g.comm(x, y));
            }
        }
        let hs: Vec<usize> = top2.elements(f).iter().map(|v| g.index(v)).collect();
        let exhaustive = g.order() * hs.len() <= EXHAUSTIVE_PAIRS;
        let (xs, ys): (Vec<usize>, Vec<usize>) = if exhaustive {
            ((0..g.order()).collect(), hs)
        } else {
            (shifted_lifts(g, &q1, &a2), shifted_lifts(g, &q2, &am))
        };
        for &x in &xs {
            let a = points::index(f, &q1.coords(f, &g.coords(x)));
            for &y in &ys {
                let b = points::index(f, &q2.coords(f, &g.coords(y)));
                all[a * n2 + b].push(g.comm(x, y));
            }
        }
        for s in &mut all {
            s.sort_unstable();
            s.dedup();
        }
        CommutatorSets { q1, q2, n2, on_lifts, all, exhaustive }
    }
}

/// Each canonical lift plus its translates by the basis of `bottom`.
fn shifted_lifts(g: &UnitGroup, q: &Quotient, bottom: &Subspace) -> Vec<usize> {
    let f = g.field();
    let mut out = Vec::new();
    for a in 0..points::count(f, q.dim()) {
        let x = q.lift(f, &points::point(f, q.dim(), a));
        out.push(g.index(&x));
        for b in bottom.basis() {
            out.push(g.index(&points::add(f, &x, b)));
        }
    }
    out
}
