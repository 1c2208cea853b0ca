//! Free nilpotent algebras: words of length `1..n` in an ordered alphabet,
//! multiplied by concatenation and truncated at length `n`.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::algebra::{Algebra, Vector};
use super::ring::Ring;

pub const FREE_DIM_CAP: usize = 400;

#[derive(Clone, Debug)]
pub struct FreeNilpotent<R: Ring> {
    algebra: Algebra<R>,
    generators: Vec<String>,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

/// Number of nonempty words of length `< n` over `g` letters, saturating.
pub fn free_dim(g: usize, n: usize) -> usize {
    let mut total = 0usize;
    let mut layer = 1usize;
    for _ in 1..n {
        layer = layer.saturating_mul(g);
        total = total.saturating_add(layer);
    }
    total
}

impl<R: Ring> FreeNilpotent<R> {
    pub fn new(ring: R, generators: &[&str], n: usize) -> Result<Self> {
        Self::with_cap(ring, generators, n, FREE_DIM_CAP)
    }

    pub fn with_cap(ring: R, generators: &[&str], n: usize, cap: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Invalid("free algebra needs at least one generator".into()));
        }
        if n < 2 {
            return Err(Error::Invalid("free nilpotent algebra needs class n >= 2".into()));
        }
        let g = generators.len();
        let dim = free_dim(g, n);
        if dim > cap {
            return Err(Error::CapExceeded { size: dim as u128, cap: cap as u128 });
        }
        // length first, then lexicographic in generator order
        let mut words: Vec<Vec<usize>> = Vec::with_capacity(dim);
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 1..n {
            layer = layer
                .iter()
                .flat_map(|w| {
                    (0..g).map(move |x| {
                        let mut w = w.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
            words.extend(layer.iter().cloned());
        }
        let index: HashMap<Vec<usize>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut sc = Vec::new();
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                if u.len() + v.len() < n {
                    let mut uv = u.clone();
                    uv.extend_from_slice(v);
                    sc.push((i, j, index[&uv], ring.one()));
                }
            }
        }
        let sep = if generators.iter().all(|s| s.chars().count() == 1) { "" } else { "*" };
        let labels = words.iter().map(|w| w.iter().map(|&x| generators[x]).collect::<Vec<_>>().join(sep)).collect();
        let grading = words.iter().map(Vec::len).collect();
        // associativity of concatenation needs no check
        let algebra = Algebra::from_sc_unchecked(ring, dim, &sc, Some(labels))?.with_class(n).with_grading(grading);
        Ok(FreeNilpotent { algebra, generators: generators.iter().map(|s| s.to_string()).collect(), words, index })
    }

    pub fn algebra(&self) -> &Algebra<R> {
        &self.algebra
    }

    pub fn into_algebra(self) -> Algebra<R> {
        self.algebra
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn word_index(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// The basis vector of a word, or zero if the word is too long.
    pub fn word(&self, word: &[usize]) -> Vector<R> {
        let mut v = self.algebra.zero();
        if let Some(i) = self.word_index(word) {
            v[i] = self.algebra.ring().one();
        }
        v
    }

    pub fn generator(&self, x: usize) -> Vector<R> {
        self.word(&[x])
    }

    /// True when every coefficient on words of length `<= m` vanishes,
    /// i.e. the element lies in `J^{m+1}`.
    pub fn in_power(&self, v: &[R::Elem], m_plus_one: usize) -> bool {
        let ring = self.algebra.ring();
        self.words.iter().zip(v).all(|(w, c)| w.len() >= m_plus_one || ring.is_zero(c))
    }

    /// Nonzero coefficients as `(word label, coefficient)` pairs.
    pub fn dump(&self, v: &[R::Elem]) -> Vec<(String, String)> {
        let ring = self.algebra.ring();
        v.iter()
            .enumerate()
            .filter(|(_, c)| !ring.is_zero(c))
            .map(|(i, c)| (self.algebra.labels()[i].clone(), ring.format(c)))
            .collect()
    }
}
