//! Finite fields GF(p^k) in a polynomial basis.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_i` is the coefficient of `x^i`. Ordering elements by this integer
//! is the canonical enumeration order (lexicographic on the coefficient
//! vector read from the highest degree down).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};

use super::cyclotomic::Cyclotomic;

pub const DEFAULT_FIELD_CAP: u64 = 1 << 16;

/// An element of some [`FiniteField`], identified by its canonical index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Gf(pub u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Serialized form of a field: `{"p": 2, "k": 2, "modulus": [1, 1, 1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp[i] = g^i for the primitive element g; log[0] is unused
    exp: Arc<Vec<u32>>,
    log: Arc<Vec<u32>>,
    add_table: Option<Arc<Vec<u32>>>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Polynomials over Z/p, low-to-high coefficients, no trailing zeros.
fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead = *b.last().expect("nonzero divisor");
    let lead_inv = modpow(lead as u64, (p - 2) as u64, p as u64) as u32;
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + ai as u64 * bj as u64) % p as u64) as u32;
        }
    }
    poly_rem(&prod, modulus, p)
}

pub(crate) fn modpow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn digits(mut n: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Monic `f` of degree `k` is irreducible iff no monic polynomial of degree
/// `1..=k/2` divides it.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let k = f.len() as u32 - 1;
    if k <= 1 {
        return k == 1;
    }
    for deg in 1..=k / 2 {
        for low in 0..p.pow(deg) {
            let mut g = digits(low, p, deg);
            g.push(1);
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// GF(p^k) with the lexicographically smallest monic irreducible modulus.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        Self::with_cap(p, k, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(p: u32, k: u32, cap: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 {
            return Err(Error::Invalid("field degree must be positive".into()));
        }
        let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        check_cap(q, cap as u128)?;
        let modulus = (0..p.pow(k))
            .map(|low| {
                let mut f = digits(low, p, k);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");
        Ok(Self::build(p, k, modulus))
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        if !is_prime(d.p as u64) {
            return Err(Error::NotPrime(d.p as u64));
        }
        if d.modulus.len() != d.k as usize + 1
            || d.modulus.last() != Some(&1)
            || d.modulus.iter().any(|&c| c >= d.p)
        {
            return Err(Error::Invalid(format!("bad modulus {:?}", d.modulus)));
        }
        check_cap((d.p as u128).pow(d.k), DEFAULT_FIELD_CAP as u128)?;
        if !is_irreducible(&d.modulus, d.p) {
            return Err(Error::Invalid(format!("modulus {:?} is reducible", d.modulus)));
        }
        Ok(Self::build(d.p, d.k, d.modulus.clone()))
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(k);
        let n = (q - 1) as u64;
        let mulmod = |a: u32, b: u32| -> u32 {
            let r = poly_mulmod(&digits(a, p, k), &digits(b, p, k), &modulus, p);
            undigits(&r, p)
        };
        let powmod = |g: u32, mut e: u64| -> u32 {
            let mut acc = 1u32;
            let mut base = g;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, base);
                }
                base = mulmod(base, base);
                e >>= 1;
            }
            acc
        };
        let factors = prime_factors(n);
        let generator = (1..q)
            .find(|&g| factors.iter().all(|&r| powmod(g, n / r) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..n as u32 {
            exp.push(cur);
            log[cur as usize] = i;
            cur = mulmod(cur, generator);
        }
        let mut field = FiniteField { p, k, q, modulus, exp: Arc::new(exp), log: Arc::new(log), add_table: None };
        if q <= 256 {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.add_digits(a, b);
                }
            }
            field.add_table = Some(Arc::new(table));
        }
        field
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { p: self.p, k: self.k, modulus: self.modulus.clone() }
    }

    pub fn zero(&self) -> Gf {
        Gf(0)
    }

    pub fn one(&self) -> Gf {
        Gf(1)
    }

    /// The class of `x` (only meaningful for `k > 1`).
    pub fn x(&self) -> Gf {
        if self.k > 1 {
            Gf(self.p)
        } else {
            self.from_int(-(self.modulus[0] as i64))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf> + Clone {
        (0..self.q).map(Gf)
    }

    pub fn from_int(&self, n: i64) -> Gf {
        Gf(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Gf> {
        if c.len() > self.k as usize || c.iter().any(|&d| d >= self.p) {
            return Err(Error::Invalid(format!("bad field coefficients {c:?}")));
        }
        Ok(Gf(undigits(c, self.p)))
    }

    pub fn coeffs(&self, a: Gf) -> Vec<u32> {
        digits(a.0, self.p, self.k)
    }

    pub fn contains(&self, a: Gf) -> bool {
        a.0 < self.q
    }

    /// True when `a` lies in the prime subfield.
    pub fn in_prime_field(&self, a: Gf) -> bool {
        a.0 < self.p
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        match &self.add_table {
            Some(t) => Gf(t[(a.0 * self.q + b.0) as usize]),
            None => Gf(self.add_digits(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: Gf) -> Gf {
        if self.p == 2 {
            return a;
        }
        let c: Vec<u32> = self.coeffs(a).into_iter().map(|d| (self.p - d) % self.p).collect();
        Gf(undigits(&c, self.p))
    }

    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf(0);
        }
        let n = self.q - 1;
        let e = (self.log[a.0 as usize] + self.log[b.0 as usize]) % n;
        Gf(self.exp[e as usize])
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(Gf(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Gf, e: u64) -> Gf {
        if e == 0 {
            return Gf(1);
        }
        if a.0 == 0 {
            return Gf(0);
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64 * (e % n) % n;
        Gf(self.exp[l as usize])
    }

    /// Multiplication straight from the polynomial definition, bypassing the
    /// log tables.
    pub fn mul_poly(&self, a: Gf, b: Gf) -> Gf {
        let r = poly_mulmod(&self.coeffs(a), &self.coeffs(b), &self.modulus, self.p);
        Gf(undigits(&r, self.p))
    }

    pub fn frobenius(&self, a: Gf) -> Gf {
        self.pow(a, self.p as u64)
    }

    /// Absolute trace to the prime field, returned as a residue mod p.
    pub fn trace(&self, a: Gf) -> u32 {
        let mut acc = Gf(0);
        let mut cur = a;
        for _ in 0..self.k {
            acc = self.add(acc, cur);
            cur = self.frobenius(cur);
        }
        debug_assert!(self.in_prime_field(acc));
        acc.0
    }

    /// psi(x) = zeta_p^{Tr(x)}, the fixed nontrivial additive character.
    pub fn psi(&self, x: Gf) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.p as u64, self.trace(x) as i64)
    }

    /// The additive character psi_a(x) = psi(a x).
    pub fn additive_character(&self, a: Gf) -> impl Fn(Gf) -> Cyclotomic + '_ {
        move |x| self.psi(self.mul(a, x))
    }

    /// Exponent `t` with psi_a(x) = zeta_p^t.
    pub fn psi_exponent(&self, a: Gf, x: Gf) -> u32 {
        self.trace(self.mul(a, x))
    }

    pub fn format(&self, a: Gf) -> String {
        a.0.to_string()
    }

    pub fn parse(&self, s: &str) -> Result<Gf> {
        let s = s.trim();
        if let Ok(n) = s.parse::<i64>() {
            if self.k == 1 {
                return Ok(self.from_int(n));
            }
            if n >= 0 && (n as u64) < self.q as u64 {
                return Ok(Gf(n as u32));
            }
        }
        Err(Error::Parse(format!("not an element of GF({}): {s:?}", self.q)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.add(Gf(1), Gf(1)), Gf(0));
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.inv(Gf(2)).unwrap(), Gf(2));
        assert_eq!(f3.order(), 3);
    }

    #[test]
    fn gf4_modulus_is_the_unique_irreducible_quadratic() {
        // exhaustive: monic quadratics over Z/2 are x^2, x^2+1, x^2+x, x^2+x+1
        let irreducible: Vec<u32> = (0..4)
            .filter(|&low| {
                let mut f = digits(low, 2, 2);
                f.push(1);
                // a quadratic is irreducible iff it has no root
                (0..2).all(|r| (f[0] + f[1] * r + r * r) % 2 != 0)
            })
            .collect();
        assert_eq!(irreducible, vec![3]);
        let f4 = FiniteField::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let x = f4.x();
        // x*x = x + 1
        assert_eq!(f4.mul(x, x), f4.add(x, f4.one()));
    }

    #[test]
    fn errors() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(FiniteField::new(2, 17), Err(Error::CapExceeded { .. })));
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.inv(Gf(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn traces() {
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f2.trace(Gf(1)), 1);
        let f4 = FiniteField::new(2, 2).unwrap();
        assert_eq!(f4.trace(f4.one()), 0);
        assert_eq!(f4.trace(f4.x()), 1);
    }

    #[test]
    fn table_arithmetic_matches_polynomial_arithmetic() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3), (7, 2)] {
            let f = FiniteField::new(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_poly(a, b));
                }
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                assert_eq!(f.add(a, f.neg(a)), f.zero());
            }
        }
    }

    #[test]
    fn frobenius_is_additive_up_to_81() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 2)] {
            let f = FiniteField::new(p, k).unwrap();
            assert!(f.order() <= 81);
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                }
            }
        }
    }

    #[test]
    fn character_sums_vanish_for_nontrivial_psi() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (3, 4)] {
            let f = FiniteField::new(p, k).unwrap();
            for a in f.elements() {
                let psi = f.additive_character(a);
                let total = f.elements().fold(Cyclotomic::zero(), |acc, x| &acc + &psi(x));
                let expected = if a.is_zero() { Cyclotomic::from_int(f.order() as i64) } else { Cyclotomic::zero() };
                assert_eq!(total, expected, "GF({}) a={a:?}", f.order());
            }
        }
    }

    #[test]
    fn additive_characters_are_distinct_homomorphisms() {
        let f = FiniteField::new(3, 2).unwrap();
        let tables: Vec<Vec<u32>> =
            f.elements().map(|a| f.elements().map(|x| f.psi_exponent(a, x)).collect()).collect();
        for (i, t) in tables.iter().enumerate() {
            for (j, u) in tables.iter().enumerate() {
                assert_eq!(i == j, t == u);
            }
        }
        for a in f.elements() {
            for x in f.elements() {
                for y in f.elements() {
                    let lhs = f.psi_exponent(a, f.add(x, y));
                    let rhs = (f.psi_exponent(a, x) + f.psi_exponent(a, y)) % 3;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f2.additive_character(Gf(1))(Gf(1)), Cyclotomic::from_int(-1));
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.additive_character(Gf(1))(Gf(1)), Cyclotomic::root_of_unity(3, 1));
        assert_eq!(f3.additive_character(Gf(0))(Gf(2)), Cyclotomic::one());
    }

    #[test]
    fn descriptor_round_trip() {
        let f = FiniteField::new(3, 2).unwrap();
        let json = serde_json::to_string(&f.descriptor()).unwrap();
        assert_eq!(json, r#"{"p":3,"k":2,"modulus":[1,0,1]}"#);
        let back: FieldDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(FiniteField::from_descriptor(&back).unwrap(), f);
        let bad = FieldDescriptor { p: 2, k: 2, modulus: vec![1, 0, 1] };
        assert!(FiniteField::from_descriptor(&bad).is_err());
    }
}
