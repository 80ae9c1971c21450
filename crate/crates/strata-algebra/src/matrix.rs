//! Dense matrices of arbitrary-precision integers.

use crate::AlgebraError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A dense row-major matrix over ℤ. Sizes in this crate are desk-scale
/// (hundreds of rows at most), so density costs nothing and keeps the
/// elimination code simple.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Convenience constructor for tests and fixtures.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn neg(&self) -> Self {
        IntMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        IntMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * k)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        IntMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape");
        IntMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "mul shape {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let mut m = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = m.get(r, c) + a * b;
                        m.set(r, c, cur);
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "mul_vec shape");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn col(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn set_col(&mut self, c: usize, v: &[BigInt]) {
        assert_eq!(v.len(), self.rows, "set_col shape");
        for (r, x) in v.iter().enumerate() {
            self.set(r, c, x.clone());
        }
    }

    pub fn column_matrix(v: &[BigInt]) -> Self {
        IntMatrix::from_fn(v.len(), 1, |r, _| v[r].clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack shape");
        IntMatrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Keeps the selected rows, in the order given.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        IntMatrix::from_fn(rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    /// Keeps the selected columns, in the order given.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        IntMatrix::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    /// Coordinate inclusion of the selected basis vectors: a `rows × sel.len()`
    /// matrix whose j-th column is the unit vector at `sel[j]`.
    pub fn coordinate_inclusion(rows: usize, sel: &[usize]) -> Self {
        let mut m = IntMatrix::zeros(rows, sel.len());
        for (j, &i) in sel.iter().enumerate() {
            assert!(i < rows, "selector out of range");
            m.set(i, j, BigInt::one());
        }
        m
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    /// row_i += q * row_j
    pub fn add_row_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        assert_ne!(i, j);
        for c in 0..self.cols {
            let v = self.get(i, c) + q * self.get(j, c);
            self.set(i, c, v);
        }
    }

    /// col_i += q * col_j
    pub fn add_col_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        assert_ne!(i, j);
        for r in 0..self.rows {
            let v = self.get(r, i) + q * self.get(r, j);
            self.set(r, i, v);
        }
    }

    /// Entry-wise reduction into `0..p`.
    pub fn mod_reduced(&self, p: u64) -> Self {
        let m = BigInt::from(p);
        IntMatrix::from_fn(self.rows, self.cols, |r, c| {
            let mut v = self.get(r, c) % &m;
            if v.is_negative() {
                v += &m;
            }
            v
        })
    }

    /// Sparse `row col value` lines, one per nonzero entry.
    pub fn to_triplets(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    out.push_str(&format!("{} {} {}\n", r, c, v));
                }
            }
        }
        out
    }

    pub fn from_triplets(rows: usize, cols: usize, text: &str) -> Result<Self, AlgebraError> {
        let mut m = IntMatrix::zeros(rows, cols);
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let bad = || AlgebraError::Triplet(line.to_string());
            let r: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let c: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let v: BigInt = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if r >= rows || c >= cols || it.next().is_some() {
                return Err(bad());
            }
            m.set(r, c, v);
        }
        Ok(m)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
