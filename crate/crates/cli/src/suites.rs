use serde::Serialize;
use serde_json::{json, Value};

use nilrep_core::chars::character_table;
use nilrep_core::unitgroup::{check_commutator_theorem, UnitGroup};
use nilrep_gutkin::{
    exhaustive_polarization, find_polarization, is_isotropic, random_functionals, verify_gutkin_all_with, Cache, GutkinError,
};
use nilrep_identities::{additivity_defect_check, finite_pairing_check, lemma_auxiliary_check, scaling_defect_check};

use crate::catalog::{tally, CatalogEntry};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tables,
    Gutkin,
    Commutators,
    Identities,
    Polarize,
    All,
}

impl Suite {
    pub fn needs_gutkin(self) -> bool {
        matches!(self, Suite::Gutkin | Suite::Polarize)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub target: String,
    pub order: usize,
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Parts of the suite left out because of `--no-gutkin`.
    pub skipped: Vec<Suite>,
}

fn check(name: impl Into<String>, passed: bool, detail: Value) -> Check {
    Check { name: name.into(), passed, detail }
}

pub fn tables(entry: &CatalogEntry, g: &UnitGroup) -> Result<Vec<Check>, CliError> {
    let t = character_table(g)?;
    let orth = t.check_orthogonality(g);
    let degrees = t.degrees();
    let mut out = vec![check(
        "orthogonality",
        orth.is_ok(),
        json!({ "classes": t.len(), "dixon_prime": t.prime(), "error": orth.err() }),
    )];
    if let Some(ok) = entry.check_expected(&degrees) {
        out.push(check("expected-degrees", ok, json!({ "found": tally(&degrees), "expected": entry.expected })));
    }
    Ok(out)
}

pub fn gutkin(entry: &CatalogEntry, g: &UnitGroup) -> Result<Vec<Check>, CliError> {
    match verify_gutkin_all_with(&Cache::new(), g) {
        Ok(report) => {
            let mut out = vec![check(
                "gutkin",
                report.verified == report.characters.len() && report.degrees_are_powers_of_q,
                serde_json::to_value(&report).expect("reports serialize"),
            )];
            if let Some(ok) = entry.check_expected(&report.degrees) {
                out.push(check("expected-degrees", ok, json!({ "found": tally(&report.degrees), "expected": entry.expected })));
            }
            Ok(out)
        }
        Err(GutkinError::VerificationFailed { stage, witness, transcript }) => Ok(vec![check(
            "gutkin",
            false,
            json!({ "stage": stage, "witness": witness, "transcript": transcript }),
        )]),
        Err(GutkinError::Core(e)) => Err(e.into()),
    }
}

pub fn commutators(g: &UnitGroup) -> Result<Vec<Check>, CliError> {
    let class = g.algebra().class();
    let mut out = Vec::new();
    for m in 1..=class {
        for n in 1..=class {
            if m + n > class + 1 {
                continue;
            }
            let c = check_commutator_theorem(g, m, n)?;
            out.push(check(format!("commutator({m},{n})"), c.holds, serde_json::to_value(&c).expect("serializes")));
        }
    }
    Ok(out)
}

pub fn identities(g: &UnitGroup) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for m in 2..=g.algebra().class() {
        let r = finite_pairing_check(g, m)?;
        out.push(check(format!("finite-pairing(m={m})"), r.passed, serde_json::to_value(&r).expect("serializes")));
    }
    out.extend(symbolic()?);
    Ok(out)
}

/// Target-independent exact checks over Z and Z[lambda].
pub fn symbolic() -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    let mut failures = Vec::new();
    let mut count = 0;
    for gens in 1..=3 {
        for n in 3..=5 {
            for m in 2..n {
                let r = lemma_auxiliary_check(gens, n, m)?;
                count += 1;
                if !r.passed {
                    failures.push(serde_json::to_value(&r).expect("serializes"));
                }
            }
        }
    }
    out.push(check("lemma-auxiliary", failures.is_empty(), json!({ "cases": count, "failures": failures })));
    for m in 2..=4 {
        let a = additivity_defect_check(m)?;
        out.push(check(format!("additivity-defect(m={m})"), a.passed, serde_json::to_value(&a).expect("serializes")));
        let s = scaling_defect_check(m)?;
        out.push(check(format!("scaling-defect(m={m})"), s.passed, serde_json::to_value(&s).expect("serializes")));
    }
    Ok(out)
}

pub const FUNCTIONALS: usize = 100;

pub fn polarize(g: &UnitGroup, seed: u64) -> Result<Vec<Check>, CliError> {
    let alg = g.algebra();
    let field = alg.field();
    let compare = alg.dim() <= 4 && field.order() == 2;
    let mut failures = Vec::new();
    let mut methods = [0usize; 2];
    for (i, f) in random_functionals(field, alg.dim(), FUNCTIONALS, seed).iter().enumerate() {
        let p = match find_polarization(alg, f) {
            Ok(p) => p,
            Err(e) => {
                failures.push(json!({ "functional": i, "error": e.to_string() }));
                continue;
            }
        };
        methods[(p.method == nilrep_gutkin::Method::Exhaustive) as usize] += 1;
        let dim_ok = p.subspace.dim() == alg.dim() - p.rank / 2;
        let ok = dim_ok && alg.is_subalgebra(&p.subspace) && is_isotropic(alg, f, &p.subspace);
        let matches = !compare || exhaustive_polarization(alg, f).map(|s| s.dim()) == Some(p.subspace.dim());
        if !(ok && matches) {
            failures.push(json!({ "functional": i, "dimension": p.subspace.dim(), "rank": p.rank, "matches_search": matches }));
        }
    }
    Ok(vec![check(
        "polarization",
        failures.is_empty(),
        json!({
            "seed": seed,
            "functionals": FUNCTIONALS,
            "flag_construction": methods[0],
            "search_fallback": methods[1],
            "compared_with_search": compare,
            "failures": failures,
        }),
    )])
}

pub fn run(entry: &CatalogEntry, g: &UnitGroup, suite: Suite, seed: u64, gutkin_enabled: bool) -> Result<Report, CliError> {
    if suite.needs_gutkin() && !gutkin_enabled {
        return Err(CliError::Usage(format!("suite {suite:?} needs the monomial construction, disabled by --no-gutkin")));
    }
    let mut checks = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Tables) {
        checks.extend(tables(entry, g)?);
    }
    let mut skipped = Vec::new();
    if want(Suite::Gutkin) {
        if gutkin_enabled {
            checks.extend(gutkin(entry, g)?);
        } else {
            skipped.push(Suite::Gutkin);
        }
    }
    if want(Suite::Commutators) {
        checks.extend(commutators(g)?);
    }
    if want(Suite::Identities) {
        checks.extend(identities(g)?);
    }
    if want(Suite::Polarize) {
        if gutkin_enabled {
            checks.extend(polarize(g, seed)?);
        } else {
            skipped.push(Suite::Polarize);
        }
    }
    Ok(Report { target: entry.name.clone(), order: g.order(), suite, passed: checks.iter().all(|c| c.passed), checks, skipped })
}
