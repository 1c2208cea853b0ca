//! Coefficient rings: finite fields, the integers, and Z[lambda].

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{FieldDescriptor, FiniteField, Gf};

/// Exact commutative ring without zero divisors.
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn descriptor(&self) -> RingDescriptor;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RingDescriptor {
    FiniteField(FieldDescriptor),
    Integers,
    IntegerPolynomials { var: String },
}

impl Ring for FiniteField {
    type Elem = Gf;

    fn zero(&self) -> Gf {
        Gf(0)
    }
    fn one(&self) -> Gf {
        Gf(1)
    }
    fn add(&self, a: &Gf, b: &Gf) -> Gf {
        FiniteField::add(self, *a, *b)
    }
    fn neg(&self, a: &Gf) -> Gf {
        FiniteField::neg(self, *a)
    }
    fn mul(&self, a: &Gf, b: &Gf) -> Gf {
        FiniteField::mul(self, *a, *b)
    }
    fn is_zero(&self, a: &Gf) -> bool {
        a.is_zero()
    }
    fn from_int(&self, n: i64) -> Gf {
        FiniteField::from_int(self, n)
    }
    fn format(&self, a: &Gf) -> String {
        FiniteField::format(self, *a)
    }
    fn parse(&self, s: &str) -> Result<Gf> {
        FiniteField::parse(self, s)
    }
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::FiniteField(FiniteField::descriptor(self))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn from_int(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<BigInt> {
        s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    }
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }
}

/// Polynomial in lambda with integer coefficients, low degree first, no
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly(Vec<BigInt>);

impl LambdaPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        LambdaPoly(c)
    }

    pub fn constant(n: BigInt) -> Self {
        Self::new(vec![n])
    }

    pub fn lambda() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// The ring Z[lambda].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPolys {
    pub var: String,
}

impl Default for LambdaPolys {
    fn default() -> Self {
        LambdaPolys { var: "lambda".into() }
    }
}

impl Ring for LambdaPolys {
    type Elem = LambdaPoly;

    fn zero(&self) -> LambdaPoly {
        LambdaPoly::default()
    }
    fn one(&self) -> LambdaPoly {
        LambdaPoly::constant(BigInt::one())
    }
    fn add(&self, a: &LambdaPoly, b: &LambdaPoly) -> LambdaPoly {
        let n = a.0.len().max(b.0.len());
        let z = BigInt::zero();
        LambdaPoly::new((0..n).map(|i| a.0.get(i).unwrap_or(&z) + b.0.get(i).unwrap_or(&z)).collect())
    }
    fn neg(&self, a: &LambdaPoly) -> LambdaPoly {
        LambdaPoly(a.0.iter().map(|c| -c).collect())
    }
    fn mul(&self, a: &LambdaPoly, b: &LambdaPoly) -> LambdaPoly {
        if a.0.is_empty() || b.0.is_empty() {
            return LambdaPoly::default();
        }
        let mut out = vec![BigInt::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        LambdaPoly::new(out)
    }
    fn is_zero(&self, a: &LambdaPoly) -> bool {
        a.0.is_empty()
    }
    fn from_int(&self, n: i64) -> LambdaPoly {
        LambdaPoly::constant(BigInt::from(n))
    }
    fn format(&self, a: &LambdaPoly) -> String {
        if a.0.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in a.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{e}", self.var),
            };
            if e == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
    fn parse(&self, s: &str) -> Result<LambdaPoly> {
        parse_lambda_poly(s, &self.var)
    }
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::IntegerPolynomials { var: self.var.clone() }
    }
}

fn parse_lambda_poly(s: &str, var: &str) -> Result<LambdaPoly> {
    let err = || Error::Parse(format!("not a polynomial in {var}: {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err());
    }
    // split into signed terms
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<BigInt> = Vec::new();
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, term.strip_prefix('+').unwrap_or(&term)),
        };
        if body.is_empty() {
            return Err(err());
        }
        let (coef, exp) = if let Some(pos) = body.find(var) {
            let coef_part = body[..pos].trim_end_matches('*');
            let coef = if coef_part.is_empty() { BigInt::one() } else { coef_part.parse().map_err(|_| err())? };
            let rest = &body[pos + var.len()..];
            let exp = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^').ok_or_else(err)?.parse::<usize>().map_err(|_| err())?
            };
            (coef, exp)
        } else {
            (body.parse::<BigInt>().map_err(|_| err())?, 0)
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += if neg { -coef } else { coef };
    }
    Ok(LambdaPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_poly_format_and_parse() {
        let r = LambdaPolys::default();
        let p = r.add(&r.mul(&LambdaPoly::lambda(), &LambdaPoly::lambda()), &r.from_int(-3));
        let p = r.add(&p, &r.neg(&LambdaPoly::lambda()));
        let s = r.format(&p);
        assert_eq!(s, "lambda^2 - lambda - 3");
        assert_eq!(r.parse(&s).unwrap(), p);
        assert_eq!(r.parse("2*lambda^3+1").unwrap().degree(), Some(3));
        assert_eq!(r.parse("0").unwrap(), r.zero());
        assert!(r.parse("x+1").is_err());
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(-1));
    }

    #[test]
    fn descriptors_serialize_with_kind_tag() {
        let f = FiniteField::new(2, 2).unwrap();
        let j = serde_json::to_string(&Ring::descriptor(&f)).unwrap();
        assert_eq!(j, r#"{"kind":"finite-field","p":2,"k":2,"modulus":[1,1,1]}"#);
        assert_eq!(serde_json::to_string(&Integers.descriptor()).unwrap(), r#"{"kind":"integers"}"#);
        let back: RingDescriptor = serde_json::from_str(r#"{"kind":"integer-polynomials","var":"lambda"}"#).unwrap();
        assert_eq!(back, LambdaPolys::default().descriptor());
    }
}
