use std::path::{Path, PathBuf};

use serde::Serialize;

use nilrep_core::exactfield::FiniteField;
use nilrep_core::nilalg::{strictly_upper_triangular, AnyAlgebra, FieldAlgebra, FreeNilpotent};
use nilrep_core::Error;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Constructor {
    Ul { n: usize, q: u32 },
    Free { q: u32, generators: usize, class: usize },
    File { path: PathBuf },
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub constructor: Constructor,
    /// Expected `(degree, multiplicity)` pairs, when known in advance.
    pub expected: Option<Vec<(i64, usize)>>,
}

pub const BUILTIN: [&str; 6] = ["ul(3,2)", "ul(3,3)", "ul(3,4)", "ul(4,2)", "free(2,2,3)", "free(3,2,3)"];

pub fn builtin() -> Vec<CatalogEntry> {
    BUILTIN.iter().map(|n| resolve(n).expect("built-in names parse")).collect()
}

/// `F_q` for a prime power `q`.
pub fn field_of_order(q: u32) -> Result<FiniteField, CliError> {
    let p = (2..=q).find(|p| q % p == 0).ok_or_else(|| CliError::Usage(format!("{q} is not a prime power")))?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    if r != 1 {
        return Err(CliError::Usage(format!("{q} is not a prime power")));
    }
    FiniteField::new(p, k).map_err(CliError::from)
}

fn args(s: &str, prefix: &str) -> Option<Vec<usize>> {
    let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// A catalog name `ul(n,q)` or `free(q,g,n)`, or the path of an algebra file.
pub fn resolve(target: &str) -> Result<CatalogEntry, CliError> {
    let target = target.trim();
    if let Some(a) = args(target, "ul") {
        let [n, q] = a[..] else { return Err(CliError::Usage(format!("ul takes two arguments: {target}"))) };
        return Ok(CatalogEntry {
            name: format!("ul({n},{q})"),
            constructor: Constructor::Ul { n, q: q as u32 },
            expected: expected_ul(n, q as i64),
        });
    }
    if let Some(a) = args(target, "free") {
        let [q, g, n] = a[..] else { return Err(CliError::Usage(format!("free takes three arguments: {target}"))) };
        return Ok(CatalogEntry {
            name: format!("free({q},{g},{n})"),
            constructor: Constructor::Free { q: q as u32, generators: g, class: n },
            expected: expected_free(q as i64, g, n),
        });
    }
    let path = Path::new(target);
    if path.exists() {
        let name = path.file_stem().map_or_else(|| target.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok(CatalogEntry { name, constructor: Constructor::File { path: path.to_path_buf() }, expected: None });
    }
    Err(CliError::Usage(format!("unknown target {target}: expected ul(n,q), free(q,g,n) or an algebra file")))
}

// Heisenberg groups: q^2 linear characters and q-1 of degree q.
fn expected_ul(n: usize, q: i64) -> Option<Vec<(i64, usize)>> {
    match (n, q) {
        (3, q) => Some(vec![(1, (q * q) as usize), (q, (q - 1) as usize)]),
        (4, 2) => Some(vec![(1, 8), (2, 6), (4, 2)]),
        _ => None,
    }
}

// Two generators, class 3: (G,G) has order q inside the central 1+A^2.
fn expected_free(q: i64, g: usize, n: usize) -> Option<Vec<(i64, usize)>> {
    (g == 2 && n == 3).then(|| vec![(1, q.pow(5) as usize), (q, (q.pow(4) - q.pow(3)) as usize)])
}

fn generator_names(g: usize) -> Vec<String> {
    if g <= 3 {
        ["x", "y", "z"][..g].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=g).map(|i| format!("x{i}")).collect()
    }
}

impl CatalogEntry {
    pub fn build(&self) -> Result<FieldAlgebra, CliError> {
        match &self.constructor {
            Constructor::Ul { n, q } => Ok(strictly_upper_triangular(&field_of_order(*q)?, *n)?),
            Constructor::Free { q, generators, class } => {
                let names = generator_names(*generators);
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                Ok(FreeNilpotent::new(field_of_order(*q)?, &refs, *class)?.into_algebra())
            }
            Constructor::File { path } => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                match AnyAlgebra::from_json(&text)? {
                    AnyAlgebra::Field(a) => Ok(a),
                    _ => Err(CliError::Usage(format!("{}: unit groups need a finite coefficient field", path.display()))),
                }
            }
        }
    }

    /// Degrees as `(degree, multiplicity)` pairs in increasing degree.
    pub fn check_expected(&self, degrees: &[i64]) -> Option<bool> {
        let expected = self.expected.as_ref()?;
        Some(tally(degrees) == *expected)
    }
}

pub fn tally(degrees: &[i64]) -> Vec<(i64, usize)> {
    let mut out: Vec<(i64, usize)> = Vec::new();
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    for d in sorted {
        match out.last_mut() {
            Some((e, c)) if *e == d => *c += 1,
            _ => out.push((d, 1)),
        }
    }
    out
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. }
            | Error::Parse(_)
            | Error::Invalid(_)
            | Error::NotNilpotent(_)
            | Error::NotAssociative(..)
            | Error::NotPrime(_) => CliError::Usage(e.to_string()),
            other => CliError::Falsified(other.to_string()),
        }
    }
}
