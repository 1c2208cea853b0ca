//! Subspace-level operations on algebras over a finite field.

use crate::error::{Error, Result};
use crate::exactfield::{FiniteField, Gf};

use super::algebra::Algebra;
use super::subspace::{Quotient, Subspace};

pub type FieldAlgebra = Algebra<FiniteField>;

/// Linear map from a subalgebra's coordinates into the ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    /// Image of each basis vector of the subalgebra, in ambient coordinates.
    pub images: Vec<Vec<Gf>>,
}

impl Inclusion {
    pub fn identity(dim: usize) -> Self {
        Inclusion { images: Subspace::full(dim).basis().to_vec() }
    }

    pub fn apply(&self, f: &FiniteField, coords: &[Gf]) -> Vec<Gf> {
        let n = self.images.first().map_or(0, Vec::len);
        let mut out = vec![Gf(0); n];
        for (c, img) in coords.iter().zip(&self.images) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(img) {
                *x = f.add(*x, f.mul(*c, *y));
            }
        }
        out
    }

    /// `outer` after `self`.
    pub fn then(&self, f: &FiniteField, outer: &Inclusion) -> Inclusion {
        Inclusion { images: self.images.iter().map(|v| outer.apply(f, v)).collect() }
    }

    pub fn source_dim(&self) -> usize {
        self.images.len()
    }
}

impl FieldAlgebra {
    pub fn field(&self) -> &FiniteField {
        self.ring()
    }

    /// Number of elements `q^d`, saturating.
    pub fn size(&self) -> u128 {
        (self.field().order() as u128).checked_pow(self.dim() as u32).unwrap_or(u128::MAX)
    }

    fn products_with_basis(&self, rows: &[Vec<Gf>], left: bool, right: bool) -> Vec<Vec<Gf>> {
        let mut out = Vec::new();
        for r in rows {
            for j in 0..self.dim() {
                let e = self.basis(j);
                if right {
                    out.push(self.mul(r, &e));
                }
                if left {
                    out.push(self.mul(&e, r));
                }
            }
        }
        out
    }

    /// `A^m`, the span of all m-fold products.
    pub fn power_ideal(&self, m: usize) -> Subspace {
        assert!(m >= 1, "powers start at A^1");
        let f = self.field();
        let mut cur = Subspace::full(self.dim());
        for _ in 1..m {
            if cur.dim() == 0 {
                break;
            }
            let prods = self.products_with_basis(cur.basis(), false, true);
            cur = Subspace::span(f, self.dim(), prods);
        }
        cur
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let f = self.field();
        s.basis().iter().all(|a| s.basis().iter().all(|b| s.contains(f, &self.mul(a, b))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let f = self.field();
        self.products_with_basis(s.basis(), true, true).iter().all(|v| s.contains(f, v))
    }

    /// Smallest subalgebra containing `gens`.
    pub fn subalgebra_closure(&self, gens: &[Vec<Gf>]) -> Subspace {
        let f = self.field();
        let mut s = Subspace::span(f, self.dim(), gens);
        loop {
            let basis = s.basis().to_vec();
            let mut grew = false;
            for a in &basis {
                for b in &basis {
                    grew |= s.insert(f, &self.mul(a, b));
                }
            }
            if !grew {
                return s;
            }
        }
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[Vec<Gf>]) -> Subspace {
        let f = self.field();
        let mut s = Subspace::span(f, self.dim(), gens);
        loop {
            let prods = self.products_with_basis(s.basis(), true, true);
            let mut grew = false;
            for v in prods {
                grew |= s.insert(f, &v);
            }
            if !grew {
                return s;
            }
        }
    }

    /// The subalgebra `s` as an algebra in its own right, in the echelon
    /// basis of `s`, together with its inclusion.
    pub fn subalgebra(&self, s: &Subspace) -> Result<(FieldAlgebra, Inclusion)> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        let f = self.field();
        let basis = s.basis();
        let mut sc = Vec::new();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let c = s.coords(f, &self.mul(a, b)).expect("closed under products");
                for (k, ck) in c.into_iter().enumerate() {
                    if !ck.is_zero() {
                        sc.push((i, j, k, ck));
                    }
                }
            }
        }
        let labels = basis.iter().map(|v| self.format_vector(v)).collect();
        let alg = Algebra::from_sc_unchecked(f.clone(), basis.len(), &sc, Some(labels))?;
        let class = alg.compute_class()?;
        Ok((alg.with_class(class), Inclusion { images: basis.to_vec() }))
    }

    /// `A / I` on the complement basis of `I`, and the quotient map.
    pub fn quotient_algebra(&self, ideal: &Subspace) -> Result<(FieldAlgebra, Quotient)> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let f = self.field();
        let q = Quotient::new(f, &Subspace::full(self.dim()), ideal);
        let reps = q.complement();
        let mut sc = Vec::new();
        for (i, a) in reps.iter().enumerate() {
            for (j, b) in reps.iter().enumerate() {
                for (k, ck) in q.coords(f, &self.mul(a, b)).into_iter().enumerate() {
                    if !ck.is_zero() {
                        sc.push((i, j, k, ck));
                    }
                }
            }
        }
        let labels = reps.iter().map(|v| format!("[{}]", self.format_vector(v))).collect();
        let alg = Algebra::from_sc_unchecked(f.clone(), q.dim(), &sc, Some(labels))?;
        let class = alg.compute_class()?;
        Ok((alg.with_class(class), q))
    }
}

/// Strictly upper triangular `n x n` matrices over `f`, basis `e_ij` ordered
/// by superdiagonal `j - i` and then by row, so `A^m` is spanned by the last
/// basis vectors.
pub fn strictly_upper_triangular(f: &FiniteField, n: usize) -> Result<FieldAlgebra> {
    if n < 2 {
        return Err(Error::Invalid("strictly upper triangular algebras need n >= 2".into()));
    }
    let mut pairs = Vec::new();
    for diag in 1..n {
        for i in 0..n - diag {
            pairs.push((i, i + diag));
        }
    }
    let index = |i: usize, j: usize| pairs.iter().position(|&pq| pq == (i, j)).unwrap();
    let mut sc = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            if j == k {
                sc.push((a, b, index(i, l), f.one()));
            }
        }
    }
    let labels = pairs
        .iter()
        .map(|&(i, j)| if n < 10 { format!("e{}{}", i + 1, j + 1) } else { format!("e{}_{}", i + 1, j + 1) })
        .collect();
    let alg = Algebra::from_sc_unchecked(f.clone(), pairs.len(), &sc, Some(labels))?;
    Ok(alg.with_class(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FiniteField {
        FiniteField::new(2, 1).unwrap()
    }

    #[test]
    fn upper_triangular_examples() {
        let f = f2();
        let a2 = strictly_upper_triangular(&f, 2).unwrap();
        assert_eq!((a2.dim(), a2.power_ideal(2).dim()), (1, 0));
        let a3 = strictly_upper_triangular(&f, 3).unwrap();
        assert_eq!(a3.dim(), 3);
        assert_eq!(a3.power_ideal(2).dim(), 1);
        assert_eq!(a3.class(), 3);
        assert_eq!(a3.compute_class().unwrap(), 3);
        assert_eq!(a3.labels(), &["e12", "e23", "e13"]);
        let a4 = strictly_upper_triangular(&f, 4).unwrap();
        assert_eq!(a4.dim(), 6);
        assert_eq!(a4.compute_class().unwrap(), 4);
        assert_eq!(a4.power_ideal(3), Subspace::span(&f, 6, [a4.basis(5)]));
        a4.check_associative().unwrap();
    }

    #[test]
    fn closures() {
        let f = f2();
        let a = strictly_upper_triangular(&f, 3).unwrap();
        let e12 = a.basis(0);
        assert_eq!(a.subalgebra_closure(&[e12.clone()]), Subspace::span(&f, 3, [e12.clone()]));
        let all: Vec<_> = (0..3).map(|i| a.basis(i)).collect();
        assert_eq!(a.subalgebra_closure(&all), Subspace::full(3));
        assert_eq!(a.ideal_closure(&[e12.clone()]), Subspace::span(&f, 3, [e12.clone(), a.basis(2)]));
        let s = a.ideal_closure(&[e12.clone()]);
        assert_eq!(a.ideal_closure(s.basis()), s);
    }

    #[test]
    fn quotients() {
        let f = f2();
        let a = strictly_upper_triangular(&f, 3).unwrap();
        let (q, _) = a.quotient_algebra(&a.power_ideal(2)).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.structure_constants().is_empty());
        assert_eq!(q.class(), 2);
        let (z, _) = a.quotient_algebra(&Subspace::full(3)).unwrap();
        assert_eq!(z.dim(), 0);
        let (same, _) = a.quotient_algebra(&Subspace::zero(3)).unwrap();
        assert_eq!(same.structure_constants(), a.structure_constants());
        let not_ideal = Subspace::span(&f, 3, [a.basis(0)]);
        assert_eq!(a.quotient_algebra(&not_ideal).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn subalgebra_as_algebra() {
        let f = f2();
        let a = strictly_upper_triangular(&f, 4).unwrap();
        let sq = a.power_ideal(2);
        let (b, inc) = a.subalgebra(&sq).unwrap();
        assert_eq!(b.dim(), 3);
        assert_eq!(b.class(), 2);
        for i in 0..3 {
            for j in 0..3 {
                let lhs = inc.apply(&f, &b.mul(&b.basis(i), &b.basis(j)));
                let rhs = a.mul(&inc.images[i], &inc.images[j]);
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(a.subalgebra(&Subspace::span(&f, 6, [a.basis(0), a.basis(1)])).unwrap_err(), Error::NotASubalgebra);
    }
}
