//! Exact elements of Q(zeta_N) in the power basis `1, z, ..., z^{phi(N)-1}`
//! modulo the N-th cyclotomic polynomial.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::gf::prime_factors;

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut r = num.to_vec();
    let dn = den.len();
    let mut q = vec![0i64; r.len() + 1 - dn];
    for i in (0..q.len()).rev() {
        let c = r[i + dn - 1];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                r[i + j] -= c * d;
            }
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

fn compute_cyclotomic_poly(n: u64) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            poly = poly_div_exact(&poly, &cyclotomic_poly(d));
        }
    }
    poly
}

/// Coefficients (low to high) of the n-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = Arc::new(compute_cyclotomic_poly(n));
    cache.lock().unwrap().insert(n, p.clone());
    p
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, &p| acc / p * (p - 1))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational64>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational64::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational64::from_integer(n))
    }

    pub fn from_rational(r: Rational64) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    /// zeta_n^e.
    pub fn root_of_unity(n: u64, e: i64) -> Self {
        assert!(n > 0);
        let e = e.rem_euclid(n as i64) as usize;
        let mut dense = vec![Rational64::zero(); e + 1];
        dense[e] = Rational64::one();
        Self::from_dense(n, dense)
    }

    /// Reduce an arbitrary polynomial in zeta_n to normal form.
    pub fn from_dense(n: u64, mut dense: Vec<Rational64>) -> Self {
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        for i in (deg..dense.len()).rev() {
            let c = dense[i];
            if c.is_zero() {
                continue;
            }
            for (t, &ct) in phi.iter().enumerate().take(deg) {
                if ct != 0 {
                    dense[i - deg + t] -= c * ct;
                }
            }
            dense[i] = Rational64::zero();
        }
        dense.resize(deg, Rational64::zero());
        Cyclotomic { order: n, coeffs: dense }.canonical()
    }

    /// Integer multiplicities `m[e]` of zeta_n^e.
    pub fn from_multiplicities(n: u64, m: &[i64]) -> Self {
        Self::from_dense(n, m.iter().map(|&c| Rational64::from_integer(c)).collect())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_rational(&self) -> Option<Rational64> {
        self.is_rational().then(|| self.coeffs[0])
    }

    // Shrink the order while the value stays inside a smaller cyclotomic field.
    fn canonical(mut self) -> Self {
        loop {
            let n = self.order;
            if n == 1 {
                return self;
            }
            if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
                let c0 = self.coeffs.first().copied().unwrap_or_else(Rational64::zero);
                return Cyclotomic { order: 1, coeffs: vec![c0] };
            }
            if n % 4 == 2 {
                // Q(zeta_{2m}) = Q(zeta_m) for odd m, via zeta_{2m} = -zeta_m^{(m+1)/2}
                let m = n / 2;
                let mut dense = vec![Rational64::zero(); m as usize];
                let half = (m + 1) / 2;
                for (i, &c) in self.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let j = (i as u64 * half % m) as usize;
                    dense[j] += if i % 2 == 0 { c } else { -c };
                }
                self = Self::from_dense_raw(m, dense);
                continue;
            }
            let shrink = prime_factors(n).into_iter().find(|&p| {
                n % (p * p) == 0
                    && self.coeffs.iter().enumerate().all(|(i, c)| c.is_zero() || i as u64 % p == 0)
            });
            match shrink {
                // Phi_n(x) = Phi_{n/p}(x^p) when p^2 | n, so this is exact
                Some(p) => {
                    let coeffs = self.coeffs.iter().step_by(p as usize).copied().collect();
                    self = Cyclotomic { order: n / p, coeffs };
                }
                None => return self,
            }
        }
    }

    fn from_dense_raw(n: u64, mut dense: Vec<Rational64>) -> Self {
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        for i in (deg..dense.len()).rev() {
            let c = dense[i];
            if c.is_zero() {
                continue;
            }
            for (t, &ct) in phi.iter().enumerate().take(deg) {
                if ct != 0 {
                    dense[i - deg + t] -= c * ct;
                }
            }
            dense[i] = Rational64::zero();
        }
        dense.resize(deg, Rational64::zero());
        Cyclotomic { order: n, coeffs: dense }
    }

    /// Coefficient vector of this value viewed inside Q(zeta_m), `order | m`.
    pub fn embed(&self, m: u64) -> Vec<Rational64> {
        assert_eq!(m % self.order, 0, "Q(zeta_{}) does not embed in Q(zeta_{m})", self.order);
        if m == self.order {
            return self.coeffs.clone();
        }
        let step = (m / self.order) as usize;
        let mut dense = vec![Rational64::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            dense[i * step] = c;
        }
        Self::from_dense_raw(m, dense).coeffs
    }

    fn dense_in(&self, m: u64) -> Vec<Rational64> {
        self.embed(m)
    }

    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut dense = vec![Rational64::zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            dense[(n - i) % n] += c;
        }
        Self::from_dense(self.order, dense)
    }

    pub fn scale(&self, r: Rational64) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|&c| c * r).collect() }.canonical()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// If this is a root of unity zeta_n^e with `n` the given order, its
    /// exponent.
    pub fn root_exponent(&self, n: u64) -> Option<u64> {
        if n % self.order != 0 {
            return None;
        }
        (0..n).find(|&e| *self == Self::root_of_unity(n, e as i64))
    }

    /// Total order used to sort values of a fixed field Q(zeta_m).
    pub fn cmp_in(&self, other: &Self, m: u64) -> Ordering {
        self.embed(m).cmp(&other.embed(m))
    }

    /// Render as an exact expression in `zeta<N>`.
    pub fn to_expr(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            let term = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => zeta_power(self.order, i),
                (_, false) => format!("{mag}*{}", zeta_power(self.order, i)),
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Sparse `exponent -> "rational"` map, used for JSON output.
    pub fn coefficient_map(&self) -> std::collections::BTreeMap<String, String> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i.to_string(), c.to_string()))
            .collect()
    }
}

fn zeta_power(n: u64, i: usize) -> String {
    if i == 1 {
        format!("zeta{n}")
    } else {
        format!("zeta{n}^{i}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let m = self.order.lcm(&other.order);
        self.dense_in(m) == other.dense_in(m)
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let m = self.order.lcm(&rhs.order);
        let a = self.dense_in(m);
        let b = rhs.dense_in(m);
        let coeffs = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        Cyclotomic { order: m, coeffs }.canonical()
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let m = self.order.lcm(&rhs.order);
        let a = self.dense_in(m);
        let b = rhs.dense_in(m);
        let mut prod = vec![Rational64::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_dense(m, prod)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}
