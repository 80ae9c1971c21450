//! Smith normal form with full transform bookkeeping.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `u * m * v = s` with `s` diagonal (invariant factors, each dividing the
/// next) and `u`, `v` unimodular. The inverses are tracked alongside so that
/// kernels, solutions and quotient bases come out of one decomposition.
pub struct SmithNormalForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

struct Work {
    s: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    u_inv: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.s.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.s.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        self.s.add_row_multiple(i, j, q);
        self.u.add_row_multiple(i, j, q);
        self.u_inv.add_col_multiple(j, i, &-q);
    }

    /// col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        self.s.add_col_multiple(i, j, q);
        self.v.add_col_multiple(i, j, q);
        self.v_inv.add_row_multiple(j, i, &-q);
    }
}

/// Deterministic Smith normal form: the pivot is always a nonzero entry of
/// minimal absolute value in the remaining block, ties broken by (row, col)
/// index, so identical inputs give identical transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        s: m.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        u_inv: IntMatrix::identity(rows),
        v_inv: IntMatrix::identity(cols),
    };

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_abs_pivot(&w.s, t) else {
            break;
        };
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        if w.s.get(t, t).is_negative() {
            w.negate_row(t);
        }

        // Reduce row and column t until the pivot is alone, re-pivoting on
        // any nonzero remainder (each pass strictly shrinks the pivot).
        loop {
            let mut dirty = false;
            for r in (0..rows).filter(|&r| r != t) {
                if !w.s.get(r, t).is_zero() {
                    let q = -w.s.get(r, t).div_floor(w.s.get(t, t));
                    w.add_row(r, t, &q);
                    if !w.s.get(r, t).is_zero() {
                        // Remainder is a smaller candidate pivot.
                        w.swap_rows(t, r);
                        dirty = true;
                    }
                }
            }
            for c in (0..cols).filter(|&c| c != t) {
                if !w.s.get(t, c).is_zero() {
                    let q = -w.s.get(t, c).div_floor(w.s.get(t, t));
                    w.add_col(c, t, &q);
                    if !w.s.get(t, c).is_zero() {
                        w.swap_cols(t, c);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide the rest of the block for the invariant
            // factor chain; drag any offending row in and keep reducing.
            let offender = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !w.s.get(r, c).mod_floor(w.s.get(t, t)).is_zero());
            match offender {
                Some((r, _)) => {
                    w.add_row(t, r, &BigInt::from(1));
                    dirty = true;
                }
                None => {}
            }
            if !dirty {
                break;
            }
        }
        t += 1;
    }

    let rank = (0..rows.min(cols)).take_while(|&i| !w.s.get(i, i).is_zero()).count();
    SmithNormalForm { s: w.s, u: w.u, v: w.v, u_inv: w.u_inv, v_inv: w.v_inv, rank }
}

fn min_abs_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for r in t..s.rows() {
        for c in t..s.cols() {
            let v = s.get(r, c);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((b, _, _)) if *b <= a => {}
                _ => best = Some((a, r, c)),
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Rank of an integer matrix (which is also its rank over ℚ).
pub fn integer_rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank
}

/// A saturated ℤ-basis of `{x : m x = 0}`, as columns. Saturated means the
/// basis also spans the rational kernel, so the same matrix serves over ℚ.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let free: Vec<usize> = (snf.rank..m.cols()).collect();
    snf.v.select_cols(&free)
}

/// One integer solution of `m x = b`, if any.
pub fn solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let x = solve_matrix(m, &IntMatrix::column_matrix(b))?;
    Some(x.col(0))
}

/// Integer solutions of `m X = B`, column by column, if all exist.
pub fn solve_matrix(m: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(m.rows(), b.rows(), "solve shape");
    let snf = smith_normal_form(m);
    let ub = snf.u.mul(b);
    let mut y = IntMatrix::zeros(m.cols(), b.cols());
    for c in 0..b.cols() {
        for r in 0..m.rows() {
            let rhs = ub.get(r, c);
            if r < snf.rank {
                let (q, rem) = rhs.div_mod_floor(snf.s.get(r, r));
                if !rem.is_zero() {
                    return None;
                }
                y.set(r, c, q);
            } else if !rhs.is_zero() {
                return None;
            }
        }
    }
    Some(snf.v.mul(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(s: &IntMatrix) -> Vec<BigInt> {
        (0..s.rows().min(s.cols())).map(|i| s.get(i, i).clone()).collect()
    }

    fn check_transforms(m: &IntMatrix, snf: &SmithNormalForm) {
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.s);
        assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(m.rows()));
        assert_eq!(snf.v.mul(&snf.v_inv), IntMatrix::identity(m.cols()));
        // Divisibility chain of the invariant factors.
        for i in 1..snf.rank {
            use num_integer::Integer;
            assert!(snf.s.get(i, i).mod_floor(snf.s.get(i - 1, i - 1)).is_zero());
        }
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        check_transforms(&m, &snf);
        assert_eq!(diag_of(&snf.s), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_matrix_stays_zero() {
        let m = IntMatrix::zeros(3, 2);
        let snf = smith_normal_form(&m);
        check_transforms(&m, &snf);
        assert_eq!(snf.rank, 0);
        assert!(snf.s.is_zero());
    }

    #[test]
    fn empty_shapes() {
        for m in [IntMatrix::zeros(0, 4), IntMatrix::zeros(4, 0), IntMatrix::zeros(0, 0)] {
            let snf = smith_normal_form(&m);
            check_transforms(&m, &snf);
            assert_eq!(snf.rank, 0);
        }
    }

    #[test]
    fn kernel_of_multiplication_by_two_is_trivial() {
        // Over ℤ the kernel of (2) is 0 even though it is everything mod 2.
        let m = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(kernel_basis(&m).cols(), 0);
    }

    #[test]
    fn solve_respects_divisibility() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(
            solve(&m, &[BigInt::from(4), BigInt::from(9)]),
            Some(vec![BigInt::from(2), BigInt::from(3)])
        );
        assert_eq!(solve(&m, &[BigInt::from(1), BigInt::from(0)]), None);
    }

    #[test]
    fn negative_entries_normalize() {
        let m = IntMatrix::from_rows(&[vec![-4, -6], vec![2, 2]]);
        let snf = smith_normal_form(&m);
        check_transforms(&m, &snf);
        assert_eq!(diag_of(&snf.s), vec![BigInt::from(2), BigInt::from(2)]);
    }
}
