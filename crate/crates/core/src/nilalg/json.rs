//! The algebra file format:
//! `{"ring": {...}, "dim": d, "sc": [[i, j, k, "c"], ...], "labels": [...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::FiniteField;

use super::algebra::Algebra;
use super::ring::{Integers, LambdaPolys, Ring, RingDescriptor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub ring: RingDescriptor,
    pub dim: usize,
    pub sc: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

impl<R: Ring> Algebra<R> {
    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            ring: self.ring().descriptor(),
            dim: self.dim(),
            sc: self
                .structure_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, self.ring().format(&c)))
                .collect(),
            labels: Some(self.labels().to_vec()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra files always serialize")
    }
}

/// An algebra over any of the supported coefficient rings.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyAlgebra {
    Field(Algebra<FiniteField>),
    Integers(Algebra<Integers>),
    Polynomials(Algebra<LambdaPolys>),
}

fn build<R: Ring>(ring: R, file: &AlgebraFile) -> Result<Algebra<R>> {
    let sc = file
        .sc
        .iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, ring.parse(c)?)))
        .collect::<Result<Vec<_>>>()?;
    Algebra::from_sc(ring, file.dim, &sc, file.labels.clone())
}

impl AnyAlgebra {
    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        Ok(match &file.ring {
            RingDescriptor::FiniteField(d) => AnyAlgebra::Field(build(FiniteField::from_descriptor(d)?, file)?),
            RingDescriptor::Integers => AnyAlgebra::Integers(build(Integers, file)?),
            RingDescriptor::IntegerPolynomials { var } => {
                AnyAlgebra::Polynomials(build(LambdaPolys { var: var.clone() }, file)?)
            }
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyAlgebra::Field(a) => a.to_json(),
            AnyAlgebra::Integers(a) => a.to_json(),
            AnyAlgebra::Polynomials(a) => a.to_json(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Field(a) => a.dim(),
            AnyAlgebra::Integers(a) => a.dim(),
            AnyAlgebra::Polynomials(a) => a.dim(),
        }
    }

    pub fn class(&self) -> usize {
        match self {
            AnyAlgebra::Field(a) => a.class(),
            AnyAlgebra::Integers(a) => a.class(),
            AnyAlgebra::Polynomials(a) => a.class(),
        }
    }

    pub fn as_field(&self) -> Option<&Algebra<FiniteField>> {
        match self {
            AnyAlgebra::Field(a) => Some(a),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilalg::free::FreeNilpotent;
    use crate::nilalg::ops::strictly_upper_triangular;

    #[test]
    fn round_trip_field_algebra() {
        let f = FiniteField::new(2, 2).unwrap();
        let a = strictly_upper_triangular(&f, 3).unwrap();
        let text = a.to_json();
        assert!(text.contains("\"kind\": \"finite-field\""));
        let back = AnyAlgebra::from_json(&text).unwrap();
        assert_eq!(back.as_field().unwrap(), &a);
        assert_eq!(back.class(), 3);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn round_trip_symbolic() {
        let j = FreeNilpotent::new(LambdaPolys::default(), &["x", "y"], 3).unwrap();
        let text = j.algebra().to_json();
        let back = AnyAlgebra::from_json(&text).unwrap();
        assert_eq!(back.dim(), 6);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn rejects_bad_input() {
        let idem = r#"{"ring":{"kind":"integers"},"dim":1,"sc":[[0,0,0,"1"]]}"#;
        assert_eq!(AnyAlgebra::from_json(idem).unwrap_err(), Error::NotNilpotent(1));
        let range = r#"{"ring":{"kind":"integers"},"dim":1,"sc":[[0,0,3,"1"]]}"#;
        assert!(matches!(AnyAlgebra::from_json(range), Err(Error::Invalid(_))));
        assert!(matches!(AnyAlgebra::from_json("{"), Err(Error::Parse(_))));
        let sq0 = r#"{"ring":{"kind":"integers"},"dim":1,"sc":[]}"#;
        assert_eq!(AnyAlgebra::from_json(sq0).unwrap().class(), 2);
    }
}
