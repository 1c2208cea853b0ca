//! Dense linear algebra over a prime field F_l with `l < 2^32`.

use crate::exactfield::{modpow, prime_factors};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, a: u64, e: u64) -> u64 {
        modpow(a, e, self.p)
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverting zero mod {}", self.p);
        modpow(a, self.p - 2, self.p)
    }

    pub fn from_usize(self, n: usize) -> u64 {
        n as u64 % self.p
    }

    pub fn primitive_root(self) -> u64 {
        let factors = prime_factors(self.p - 1);
        (2..self.p)
            .find(|&z| factors.iter().all(|&q| modpow(z, (self.p - 1) / q, self.p) != 1))
            .unwrap_or(1)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, i);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c] == 0 {
                    continue;
                }
                let u = row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = self.sub(*x, self.mul(u, *y));
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : m v = 0}` for a square matrix `m`.
    pub fn nullspace(self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = m.len();
        let mut rows = m.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; n];
                v[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = self.sub(0, row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - m)`, low degree first, via
    /// reduction to Hessenberg form.
    pub fn charpoly(self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut h = m.to_vec();
        for k in 1..n.saturating_sub(1) {
            let Some(i) = (k..n).find(|&i| h[i][k - 1] != 0) else {
                continue;
            };
            if i != k {
                h.swap(i, k);
                for row in h.iter_mut() {
                    row.swap(i, k);
                }
            }
            let inv = self.inv(h[k][k - 1]);
            for i in k + 1..n {
                let u = self.mul(h[i][k - 1], inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = self.mul(u, h[k][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[k] = self.add(row[k], t);
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            // (x - h_mm) p_{m-1}
            let prev = &polys[m - 1];
            let mut pm = vec![0; m + 1];
            for (d, &c) in prev.iter().enumerate() {
                pm[d + 1] = self.add(pm[d + 1], c);
                pm[d] = self.sub(pm[d], self.mul(h[m - 1][m - 1], c));
            }
            let mut t = 1;
            for i in 1..m {
                t = self.mul(t, h[m - i][m - i - 1]);
                let coef = self.mul(t, h[m - i - 1][m - 1]);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[m - i - 1].iter().enumerate() {
                    pm[d] = self.sub(pm[d], self.mul(coef, c));
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}
