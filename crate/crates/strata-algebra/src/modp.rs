//! Gaussian elimination over ℤ/p for prime p.

use crate::matrix::IntMatrix;
use crate::AlgebraError;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub fn validate_prime(p: u64) -> Result<(), AlgebraError> {
    if p < 2 {
        return Err(AlgebraError::NotPrime(p));
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return Err(AlgebraError::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

/// Row-major matrix with entries in `0..p`. The modulus is assumed prime and
/// small enough that `u128` products cannot overflow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    pub p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl ModMatrix {
    pub fn from_int(m: &IntMatrix, p: u64) -> Self {
        let red = m.mod_reduced(p);
        let entries = (0..m.rows())
            .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
            .map(|(r, c)| red.get(r, c).to_u64().expect("reduced entry fits u64"))
            .collect();
        ModMatrix { p, rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v;
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // Fermat: a^(p-2) mod p.
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_mod(acc, base);
            }
            base = self.mul_mod(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    pub(crate) fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            for c in 0..self.cols {
                let tmp = self.get(row, c);
                self.set(row, c, self.get(pr, c));
                self.set(pr, c, tmp);
            }
            let inv = self.inv_mod(self.get(row, col));
            for c in 0..self.cols {
                let v = self.mul_mod(self.get(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) != 0 {
                    let f = self.get(r, col);
                    for c in 0..self.cols {
                        let v = (self.get(r, c) + self.p - self.mul_mod(f, self.get(row, c))) % self.p;
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the nullspace, as columns with entries lifted into `0..p`.
    pub fn kernel_basis(&self) -> IntMatrix {
        let mut e = self.clone();
        let pivots = e.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = IntMatrix::zeros(self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, BigInt::from(1));
            for (pr, &pc) in pivots.iter().enumerate() {
                let v = e.get(pr, fc);
                if v != 0 {
                    k.set(pc, j, BigInt::from(self.p - v));
                }
            }
        }
        k
    }

    /// One solution of `self * X = B` mod p, if consistent.
    pub fn solve_matrix(&self, b: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.rows, b.rows(), "solve shape");
        let bm = ModMatrix::from_int(b, self.p);
        // Eliminate on the augmented matrix [self | b].
        let mut entries = Vec::with_capacity(self.rows * (self.cols + bm.cols));
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries.push(self.get(r, c));
            }
            for c in 0..bm.cols {
                entries.push(bm.get(r, c));
            }
        }
        let mut aug = ModMatrix { p: self.p, rows: self.rows, cols: self.cols + bm.cols, entries };
        let pivots = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None; // a pivot in the augmented block: inconsistent
        }
        let mut x = IntMatrix::zeros(self.cols, bm.cols);
        for (pr, &pc) in pivots.iter().enumerate() {
            for j in 0..bm.cols {
                let v = aug.get(pr, self.cols + j);
                if v != 0 {
                    x.set(pc, j, BigInt::from(v));
                }
            }
        }
        Some(x)
    }
}
