//! Subspaces of F_q^d in reduced row echelon form, and quotients of one
//! subspace by another.

use serde::{Deserialize, Serialize};

use crate::exactfield::{FiniteField, Gf};

/// A subspace of `F^d`, stored as its reduced row echelon basis. Two
/// subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Gf>>,
    pivots: Vec<usize>,
}

fn reduce_against(f: &FiniteField, rows: &[Vec<Gf>], pivots: &[usize], v: &mut [Gf]) {
    for (row, &p) in rows.iter().zip(pivots) {
        let c = v[p];
        if c.is_zero() {
            continue;
        }
        for (x, r) in v.iter_mut().zip(row) {
            if !r.is_zero() {
                *x = f.sub(*x, f.mul(c, *r));
            }
        }
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| Gf((i == j) as u32)).collect())
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn span<I, V>(f: &FiniteField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Gf]>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(f, v.as_ref());
        }
        s
    }

    /// Add a vector to the span; returns true if the dimension grew.
    pub fn insert(&mut self, f: &FiniteField, v: &[Gf]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut v = v.to_vec();
        reduce_against(f, &self.rows, &self.pivots, &mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = f.inv(v[p]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // clear column p from the existing rows
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = f.sub(*x, f.mul(c, *y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Gf>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, f: &FiniteField, v: &[Gf]) -> Option<Vec<Gf>> {
        let c: Vec<Gf> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut rest = v.to_vec();
        reduce_against(f, &self.rows, &self.pivots, &mut rest);
        rest.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn contains(&self, f: &FiniteField, v: &[Gf]) -> bool {
        self.coords(f, v).is_some()
    }

    /// The vector with the given coordinates in the echelon basis.
    pub fn combine(&self, f: &FiniteField, coords: &[Gf]) -> Vec<Gf> {
        let mut out = vec![Gf(0); self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in out.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(*c, *r));
            }
        }
        out
    }

    pub fn is_subspace_of(&self, f: &FiniteField, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(f, r))
    }

    pub fn sum(&self, f: &FiniteField, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(f, r);
        }
        s
    }

    pub fn intersection(&self, f: &FiniteField, other: &Subspace) -> Subspace {
        // kernel of (a, b) -> a - b on self x other, via the Zassenhaus trick
        let d = self.ambient;
        let mut big = Subspace::zero(2 * d);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend_from_slice(r);
            big.insert(f, &v);
        }
        for r in &other.rows {
            let mut v = r.clone();
            v.extend(std::iter::repeat(Gf(0)).take(d));
            big.insert(f, &v);
        }
        let tails = big
            .rows
            .iter()
            .zip(&big.pivots)
            .filter(|(_, &p)| p >= d)
            .map(|(r, _)| r[d..].to_vec())
            .collect::<Vec<_>>();
        Subspace::span(f, d, tails)
    }

    /// Every vector of the subspace, ordered by coordinate tuple.
    pub fn elements(&self, f: &FiniteField) -> Vec<Vec<Gf>> {
        let q = f.order() as usize;
        let n = q.pow(self.dim() as u32);
        (0..n)
            .map(|mut idx| {
                let mut c = vec![Gf(0); self.dim()];
                for slot in c.iter_mut().rev() {
                    *slot = Gf((idx % q) as u32);
                    idx /= q;
                }
                self.combine(f, &c)
            })
            .collect()
    }
}

/// The quotient `top / bottom` with a fixed complement basis: the rows of
/// `top`'s echelon basis whose pivots are not pivots of `bottom`.
#[derive(Clone, Debug)]
pub struct Quotient {
    top: Subspace,
    bottom: Subspace,
    complement: Vec<Vec<Gf>>,
    // rows of bottom and complement, by pivot; Some(i) tags complement row i
    system: Vec<(usize, Vec<Gf>, Option<usize>)>,
}

impl Quotient {
    /// Requires `bottom` to be contained in `top`.
    pub fn new(f: &FiniteField, top: &Subspace, bottom: &Subspace) -> Self {
        assert!(bottom.is_subspace_of(f, top), "quotient of non-nested subspaces");
        let mut system: Vec<(usize, Vec<Gf>, Option<usize>)> =
            bottom.pivots.iter().zip(&bottom.rows).map(|(&p, r)| (p, r.clone(), None)).collect();
        let mut complement = Vec::new();
        for (&p, r) in top.pivots.iter().zip(&top.rows) {
            if !bottom.pivots.contains(&p) {
                system.push((p, r.clone(), Some(complement.len())));
                complement.push(r.clone());
            }
        }
        system.sort_by_key(|(p, _, _)| *p);
        Quotient { top: top.clone(), bottom: bottom.clone(), complement, system }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn top(&self) -> &Subspace {
        &self.top
    }

    pub fn bottom(&self) -> &Subspace {
        &self.bottom
    }

    /// Representatives of the quotient basis.
    pub fn complement(&self) -> &[Vec<Gf>] {
        &self.complement
    }

    /// Coordinates of the class of `v` (which must lie in `top`).
    pub fn coords(&self, f: &FiniteField, v: &[Gf]) -> Vec<Gf> {
        let mut rest = v.to_vec();
        let mut out = vec![Gf(0); self.dim()];
        for (p, row, tag) in &self.system {
            let c = rest[*p];
            if c.is_zero() {
                continue;
            }
            for (x, r) in rest.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = f.sub(*x, f.mul(c, *r));
                }
            }
            if let Some(i) = tag {
                out[*i] = c;
            }
        }
        debug_assert!(rest.iter().all(|x| x.is_zero()), "vector outside the top space");
        out
    }

    /// The canonical representative with the given quotient coordinates.
    pub fn lift(&self, f: &FiniteField, coords: &[Gf]) -> Vec<Gf> {
        let mut out = vec![Gf(0); self.top.ambient];
        for (c, row) in coords.iter().zip(&self.complement) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in out.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(*c, *r));
            }
        }
        out
    }

    /// The subspace of `top` lying over a subspace of the quotient given by
    /// coordinate vectors.
    pub fn preimage(&self, f: &FiniteField, quotient_vectors: &[Vec<Gf>]) -> Subspace {
        let mut s = self.bottom.clone();
        for v in quotient_vectors {
            s.insert(f, &self.lift(f, v));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f3() -> FiniteField {
        FiniteField::new(3, 1).unwrap()
    }

    fn g(v: &[u32]) -> Vec<Gf> {
        v.iter().map(|&x| Gf(x)).collect()
    }

    #[test]
    fn echelon_is_canonical() {
        let f = f3();
        let a = Subspace::span(&f, 3, [g(&[1, 2, 0]), g(&[0, 1, 1])]);
        let b = Subspace::span(&f, 3, [g(&[1, 0, 1]), g(&[2, 1, 0]), g(&[1, 2, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&f, &g(&[1, 0, 1])));
        assert!(!a.contains(&f, &g(&[0, 0, 1])));
    }

    #[test]
    fn quotient_coordinates() {
        let f = f3();
        let top = Subspace::full(3);
        let bottom = Subspace::span(&f, 3, [g(&[0, 1, 1])]);
        let q = Quotient::new(&f, &top, &bottom);
        assert_eq!(q.dim(), 2);
        for v in top.elements(&f) {
            let c = q.coords(&f, &v);
            let back = q.lift(&f, &c);
            let diff: Vec<Gf> = v.iter().zip(&back).map(|(x, y)| f.sub(*x, *y)).collect();
            assert!(bottom.contains(&f, &diff));
        }
        assert_eq!(q.coords(&f, &g(&[0, 2, 2])), g(&[0, 0]));
    }

    #[test]
    fn intersection_and_sum() {
        let f = f3();
        let a = Subspace::span(&f, 3, [g(&[1, 0, 0]), g(&[0, 1, 0])]);
        let b = Subspace::span(&f, 3, [g(&[0, 1, 0]), g(&[0, 0, 1])]);
        assert_eq!(a.intersection(&f, &b), Subspace::span(&f, 3, [g(&[0, 1, 0])]));
        assert_eq!(a.sum(&f, &b), Subspace::full(3));
    }

    proptest! {
        #[test]
        fn dimension_formula(vs in prop::collection::vec(prop::collection::vec(0u32..3, 4), 0..5),
                             ws in prop::collection::vec(prop::collection::vec(0u32..3, 4), 0..5)) {
            let f = f3();
            let a = Subspace::span(&f, 4, vs.iter().map(|v| g(v)));
            let b = Subspace::span(&f, 4, ws.iter().map(|v| g(v)));
            let s = a.sum(&f, &b);
            let i = a.intersection(&f, &b);
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(i.is_subspace_of(&f, &a) && i.is_subspace_of(&f, &b));
            for v in a.basis() {
                let c = a.coords(&f, v).unwrap();
                prop_assert_eq!(&a.combine(&f, &c), v);
            }
        }
    }
}
