use std::fmt;

use crate::error::{Error, Result};

use super::ring::Ring;

/// Coordinate vector of an algebra element.
pub type Vector<R> = Vec<<R as Ring>::Elem>;

/// A finite-rank nilpotent associative algebra given by structure constants
/// `e_i e_j = sum_k c_ijk e_k`.
#[derive(Clone)]
pub struct Algebra<R: Ring> {
    ring: R,
    dim: usize,
    labels: Vec<String>,
    // products[i * dim + j] = sparse expansion of e_i e_j, sorted by k
    products: Vec<Vec<(usize, R::Elem)>>,
    class: usize,
    grading: Option<Vec<usize>>,
}

impl<R: Ring> fmt::Debug for Algebra<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("ring", &self.ring.descriptor())
            .field("dim", &self.dim)
            .field("class", &self.class)
            .field("labels", &self.labels)
            .finish()
    }
}

impl<R: Ring> PartialEq for Algebra<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.dim == other.dim && self.products == other.products
    }
}

pub(crate) fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl<R: Ring> Algebra<R> {
    /// Build from sparse structure constants `(i, j, k, c)`, checking
    /// associativity on every basis triple and computing the nilpotence
    /// class. Repeated `(i, j, k)` entries are summed.
    pub fn from_sc(ring: R, dim: usize, sc: &[(usize, usize, usize, R::Elem)], labels: Option<Vec<String>>) -> Result<Self> {
        let alg = Self::from_sc_unchecked(ring, dim, sc, labels)?;
        alg.check_associative()?;
        let class = alg.compute_class()?;
        Ok(Algebra { class, ..alg })
    }

    pub(crate) fn from_sc_unchecked(
        ring: R,
        dim: usize,
        sc: &[(usize, usize, usize, R::Elem)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        if labels.len() != dim {
            return Err(Error::Invalid(format!("{} labels for dimension {dim}", labels.len())));
        }
        let mut products = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in sc {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Invalid(format!("structure constant index ({i},{j},{k}) out of range for dimension {dim}")));
            }
            let slot: &mut Vec<(usize, R::Elem)> = &mut products[i * dim + j];
            match slot.iter_mut().find(|(kk, _)| kk == k) {
                Some((_, acc)) => *acc = ring.add(acc, c),
                None => slot.push((*k, c.clone())),
            }
        }
        for slot in products.iter_mut() {
            slot.retain(|(_, c)| !ring.is_zero(c));
            slot.sort_by_key(|(k, _)| *k);
        }
        Ok(Algebra { ring, dim, labels, products, class: 0, grading: None })
    }

    pub(crate) fn with_class(mut self, class: usize) -> Self {
        self.class = class;
        self
    }

    pub(crate) fn with_grading(mut self, grading: Vec<usize>) -> Self {
        self.grading = Some(grading);
        self
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Smallest `n` with `A^n = 0`.
    pub fn class(&self) -> usize {
        self.class
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Degree of each basis element, when the algebra is graded (free
    /// nilpotent algebras).
    pub fn grading(&self) -> Option<&[usize]> {
        self.grading.as_deref()
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, R::Elem)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.products[i * self.dim + j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, R::Elem)] {
        &self.products[i * self.dim + j]
    }

    pub fn zero(&self) -> Vector<R> {
        vec![self.ring.zero(); self.dim]
    }

    pub fn basis(&self, i: usize) -> Vector<R> {
        let mut v = self.zero();
        v[i] = self.ring.one();
        v
    }

    pub fn is_zero(&self, a: &[R::Elem]) -> bool {
        a.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn add(&self, a: &[R::Elem], b: &[R::Elem]) -> Vector<R> {
        a.iter().zip(b).map(|(x, y)| self.ring.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[R::Elem], b: &[R::Elem]) -> Vector<R> {
        a.iter().zip(b).map(|(x, y)| self.ring.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &[R::Elem]) -> Vector<R> {
        a.iter().map(|x| self.ring.neg(x)).collect()
    }

    pub fn scale(&self, c: &R::Elem, a: &[R::Elem]) -> Vector<R> {
        a.iter().map(|x| self.ring.mul(c, x)).collect()
    }

    pub fn mul(&self, a: &[R::Elem], b: &[R::Elem]) -> Vector<R> {
        let mut out = self.zero();
        let nz_b: Vec<usize> = (0..self.dim).filter(|&j| !self.ring.is_zero(&b[j])).collect();
        for (i, ai) in a.iter().enumerate() {
            if self.ring.is_zero(ai) {
                continue;
            }
            for &j in &nz_b {
                let entries = &self.products[i * self.dim + j];
                if entries.is_empty() {
                    continue;
                }
                let coef = self.ring.mul(ai, &b[j]);
                for (k, c) in entries {
                    out[*k] = self.ring.add(&out[*k], &self.ring.mul(&coef, c));
                }
            }
        }
        out
    }

    /// Lie bracket `[a, b] = ab - ba`.
    pub fn bracket(&self, a: &[R::Elem], b: &[R::Elem]) -> Vector<R> {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    /// `(1+a)(1+b) = 1 + (a + b + ab)`, on the `x` parts.
    pub fn unit_mul(&self, a: &[R::Elem], b: &[R::Elem]) -> Vector<R> {
        let ab = self.mul(a, b);
        a.iter().zip(b).zip(&ab).map(|((x, y), z)| self.ring.add(&self.ring.add(x, y), z)).collect()
    }

    /// `(1+a)^{-1} = 1 + sum_{i>=1} (-a)^i`, finite by nilpotence.
    pub fn unit_inv(&self, a: &[R::Elem]) -> Vector<R> {
        let neg = self.neg(a);
        let mut term = neg.clone();
        let mut acc = neg.clone();
        while !self.is_zero(&term) {
            term = self.mul(&term, &neg);
            acc = self.add(&acc, &term);
        }
        acc
    }

    /// Group commutator `g h g^{-1} h^{-1}` of `g = 1+a`, `h = 1+b`.
    pub fn unit_comm(&self, a: &[R::Elem], b: &[R::Elem]) -> Vector<R> {
        let gh = self.unit_mul(a, b);
        let ginv = self.unit_inv(a);
        let hinv = self.unit_inv(b);
        self.unit_mul(&self.unit_mul(&gh, &ginv), &hinv)
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_vector(&self, v: &[R::Elem]) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            if *c == self.ring.one() {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("({})*{}", self.ring.format(c), self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn check_associative(&self) -> Result<()> {
        for i in 0..self.dim {
            let ei = self.basis(i);
            for j in 0..self.dim {
                let eij = self.mul(&ei, &self.basis(j));
                for k in 0..self.dim {
                    let ek = self.basis(k);
                    let lhs = self.mul(&eij, &ek);
                    let rhs = self.mul(&ei, &self.mul(&self.basis(j), &ek));
                    if lhs != rhs {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Nilpotence class, computed over the fraction field with
    /// fraction-free elimination so any of the coefficient domains work.
    pub(crate) fn compute_class(&self) -> Result<usize> {
        if self.dim == 0 {
            return Ok(1);
        }
        let mut current: Vec<Vector<R>> = (0..self.dim).map(|i| self.basis(i)).collect();
        let mut n = 1;
        while !current.is_empty() {
            let mut next = FractionFreeEchelon::new(self.ring.clone());
            for row in &current {
                for j in 0..self.dim {
                    next.insert(self.mul(row, &self.basis(j)));
                }
            }
            if next.rank() == current.len() {
                return Err(Error::NotNilpotent(current.len()));
            }
            current = next.into_rows();
            n += 1;
        }
        Ok(n)
    }
}

/// Row echelon form over an integral domain without division.
pub(crate) struct FractionFreeEchelon<R: Ring> {
    ring: R,
    rows: Vec<(usize, Vector<R>)>,
}

impl<R: Ring> FractionFreeEchelon<R> {
    pub(crate) fn new(ring: R) -> Self {
        FractionFreeEchelon { ring, rows: Vec::new() }
    }

    /// Returns true when `v` was independent of the rows so far.
    pub(crate) fn insert(&mut self, mut v: Vector<R>) -> bool {
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if self.ring.is_zero(&c) {
                continue;
            }
            let lead = &row[*pivot];
            v = v
                .iter()
                .zip(row)
                .map(|(x, r)| self.ring.sub(&self.ring.mul(lead, x), &self.ring.mul(&c, r)))
                .collect();
        }
        match v.iter().position(|c| !self.ring.is_zero(c)) {
            Some(p) => {
                let at = self.rows.partition_point(|(q, _)| *q < p);
                self.rows.insert(at, (p, v));
                true
            }
            None => false,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn into_rows(self) -> Vec<Vector<R>> {
        self.rows.into_iter().map(|(_, r)| r).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{FiniteField, Gf};
    use crate::nilalg::ring::Integers;
    use num_bigint::BigInt;

    fn ul3(f: &FiniteField) -> Algebra<FiniteField> {
        // e1 = e12, e2 = e23, e3 = e13
        Algebra::from_sc(f.clone(), 3, &[(0, 1, 2, Gf(1))], None).unwrap()
    }

    #[test]
    fn from_sc_examples() {
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(ul3(&f2).class(), 3);
        let idem = Algebra::from_sc(f2.clone(), 1, &[(0, 0, 0, Gf(1))], None);
        assert_eq!(idem.unwrap_err(), Error::NotNilpotent(1));
        let sq0 = Algebra::<FiniteField>::from_sc(f2.clone(), 1, &[], None).unwrap();
        assert_eq!(sq0.class(), 2);
        let zero = Algebra::<FiniteField>::from_sc(f2.clone(), 0, &[], None).unwrap();
        assert_eq!(zero.class(), 1);
    }

    #[test]
    fn rejects_nonassociative() {
        let f2 = FiniteField::new(2, 1).unwrap();
        // e1 e1 = e2 but e1 e2 = e3 while e2 e1 = 0
        let err = Algebra::from_sc(f2, 3, &[(0, 0, 1, Gf(1)), (0, 1, 2, Gf(1))], None).unwrap_err();
        assert!(matches!(err, Error::NotAssociative(..)));
    }

    #[test]
    fn rejects_bad_indices() {
        let err = Algebra::from_sc(Integers, 2, &[(0, 2, 1, BigInt::from(1))], None).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn bracket_and_units() {
        let f2 = FiniteField::new(2, 1).unwrap();
        let a = ul3(&f2);
        let (e1, e2, e3) = (a.basis(0), a.basis(1), a.basis(2));
        assert_eq!(a.bracket(&e1, &e2), e3);
        assert!(a.is_zero(&a.bracket(&e1, &e1)));
        let g = a.add(&e1, &e2);
        assert_eq!(a.unit_inv(&g), a.add(&g, &e3));
        assert_eq!(a.unit_comm(&e1, &e2), e3);
        assert!(a.is_zero(&a.unit_mul(&e3, &e3)));
    }

    #[test]
    fn integer_class_over_fraction_field() {
        // 2 e1 e1 = e2: nilpotent of class 3 over Z
        let a = Algebra::from_sc(Integers, 2, &[(0, 0, 1, BigInt::from(2))], None).unwrap();
        assert_eq!(a.class(), 3);
    }
}
