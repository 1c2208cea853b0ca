use rayon::prelude::*;
use serde::Serialize;

use nilrep_core::chars::{induce, inner_product, mackey_irreducible, restrict, ClassFunction};
use nilrep_core::exactfield::Cyclotomic;
use nilrep_core::nilalg::{Inclusion, Subspace};
use nilrep_core::unitgroup::{Embedding, UnitGroup};

use crate::cache::Cache;
use crate::error::{fail, GutkinError, Result, Stage};
use crate::points;
use crate::step::{run_step, value_map, ElementValue, GutkinStep};

/// `chi = Ind_{1+B}^{1+A} alpha` with `alpha` linear, reached through a
/// chain of codimension-one ideals `A = A_0 > A_1 > ... > A_r = B`.
#[derive(Clone, Debug, Serialize)]
pub struct MonomialDatum {
    pub degree: i64,
    pub dim_a: usize,
    pub dim_b: usize,
    /// Bases of `A_0, ..., A_r` in the coordinates of `A`.
    pub chain: Vec<Vec<Vec<u32>>>,
    /// `alpha` on generators of the abelianization of `1+B`.
    pub alpha: Vec<ElementValue>,
    pub transcript: Vec<GutkinStep>,
    pub verified: bool,
    #[serde(skip)]
    pub alpha_character: ClassFunction,
    #[serde(skip)]
    pub b_group: Option<UnitGroup>,
    #[serde(skip)]
    pub embedding: Option<Embedding>,
}

impl MonomialDatum {
    pub fn b(&self) -> &[Vec<u32>] {
        self.chain.last().expect("chain starts at A")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("data serialize")
    }
}

struct Partial {
    b_group: UnitGroup,
    emb: Embedding,
    inc: Inclusion,
    alpha: ClassFunction,
    chain: Vec<Subspace>,
    steps: Vec<GutkinStep>,
}

fn with_transcript(err: GutkinError, steps: &[GutkinStep]) -> GutkinError {
    match err {
        GutkinError::VerificationFailed { stage, witness, mut transcript } => {
            let mut all = steps.to_vec();
            all.append(&mut transcript);
            GutkinError::VerificationFailed { stage, witness, transcript: all }
        }
        other => other,
    }
}

fn descend(cache: &Cache, g: &UnitGroup, chi: &ClassFunction) -> Result<Partial> {
    let f = g.field();
    if chi.degree() == Some(1) {
        return Ok(Partial {
            b_group: g.clone(),
            emb: Embedding::identity(g),
            inc: Inclusion::identity(g.dim()),
            alpha: chi.clone(),
            chain: vec![Subspace::full(g.dim())],
            steps: Vec::new(),
        });
    }
    let outcome = run_step(cache, g, chi)?;
    let mut record = outcome.record;
    let fail_here = |stage, witness: String, record: &GutkinStep| -> Result<Partial> {
        fail(stage, witness).map_err(|e| with_transcript(e, std::slice::from_ref(record)))
    };

    let (alg1, inc1) = g.algebra().subalgebra(&outcome.a1)?;
    let h = cache.group(alg1)?;
    let emb1 = Embedding::from_inclusion(&h, g, &inc1);
    let table = cache.table(&h)?;
    let res = restrict(chi, g, &h, &emb1)?;
    let Some((k, rho)) = table.characters().iter().enumerate().find(|(_, rho)| !inner_product(&h, &res, rho).is_zero()) else {
        return fail_here(Stage::Induction, "restriction to 1+A_1 has no constituent".into(), &record);
    };
    record.constituent = k;
    if !mackey_irreducible(&h, &emb1, rho, g)? {
        return fail_here(Stage::Mackey, format!("constituent {k} of the restriction induces reducibly"), &record);
    }
    if induce(&h, &emb1, rho, g)? != *chi {
        return fail_here(Stage::Induction, format!("constituent {k} does not induce to chi"), &record);
    }

    let inner = descend(cache, &h, rho).map_err(|e| with_transcript(e, std::slice::from_ref(&record)))?;
    let mut steps = vec![record];
    for mut s in inner.steps {
        s.push_through(f, &inc1);
        steps.push(s);
    }
    let mut chain = vec![Subspace::full(g.dim())];
    for s in &inner.chain {
        chain.push(Subspace::span(f, g.dim(), s.basis().iter().map(|v| inc1.apply(f, v))));
    }
    Ok(Partial {
        b_group: inner.b_group,
        emb: inner.emb.then(&emb1),
        inc: inner.inc.then(f, &inc1),
        alpha: inner.alpha,
        chain,
        steps,
    })
}

pub fn gutkin_decompose(g: &UnitGroup, chi: &ClassFunction) -> Result<MonomialDatum> {
    gutkin_decompose_with(&Cache::new(), g, chi)
}

pub fn gutkin_decompose_with(cache: &Cache, g: &UnitGroup, chi: &ClassFunction) -> Result<MonomialDatum> {
    if inner_product(g, chi, chi) != Cyclotomic::one() || chi.degree().is_none() {
        return fail(Stage::NotIrreducible, "<chi, chi> != 1");
    }
    let p = descend(cache, g, chi)?;
    let f = g.field();
    let degree = chi.degree().expect("checked");
    let dim_b = p.b_group.dim();
    let failed = |stage, witness: String| fail(stage, witness).map_err(|e| with_transcript(e, &p.steps));
    if p.alpha.degree() != Some(1) {
        return failed(Stage::Induction, "alpha is not linear".into());
    }
    if induce(&p.b_group, &p.emb, &p.alpha, g)? != *chi {
        return failed(Stage::Induction, "Ind alpha differs from chi".into());
    }
    let q = f.order() as i64;
    if q.checked_pow((g.dim() - dim_b) as u32) != Some(degree) {
        return failed(Stage::Degree, format!("degree {degree} but index q^{}", g.dim() - dim_b));
    }
    let lin = cache.linear_characters(&p.b_group)?;
    let alpha = lin
        .generators()
        .iter()
        .map(|&x| ElementValue {
            element: points::raw(&p.inc.apply(f, &p.b_group.coords(x))),
            value: value_map(p.alpha.at(&p.b_group, x)),
        })
        .collect();
    Ok(MonomialDatum {
        degree,
        dim_a: g.dim(),
        dim_b,
        chain: p.chain.iter().map(|s| s.basis().iter().map(|v| points::raw(v)).collect()).collect(),
        alpha,
        transcript: p.steps,
        verified: true,
        alpha_character: p.alpha,
        b_group: Some(p.b_group),
        embedding: Some(p.emb),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GutkinReport {
    pub order: usize,
    pub q: u32,
    pub dim: usize,
    pub degrees: Vec<i64>,
    pub verified: usize,
    pub degrees_are_powers_of_q: bool,
    pub characters: Vec<MonomialDatum>,
}

impl GutkinReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Decomposes every irreducible character of `1+A` from the oracle table.
pub fn verify_gutkin_all(g: &UnitGroup) -> Result<GutkinReport> {
    verify_gutkin_all_with(&Cache::new(), g)
}

pub fn verify_gutkin_all_with(cache: &Cache, g: &UnitGroup) -> Result<GutkinReport> {
    let table = cache.table(g)?;
    let data: Vec<MonomialDatum> =
        table.characters().par_iter().map(|chi| gutkin_decompose_with(cache, g, chi)).collect::<Result<_>>()?;
    let q = g.field().order();
    let degrees = table.degrees();
    let powers = degrees.iter().all(|&d| {
        let mut d = d;
        while d > 1 && d % q as i64 == 0 {
            d /= q as i64;
        }
        d == 1
    });
    Ok(GutkinReport {
        order: g.order(),
        q,
        dim: g.dim(),
        verified: data.iter().filter(|d| d.verified).count(),
        degrees,
        degrees_are_powers_of_q: powers,
        characters: data,
    })
}
