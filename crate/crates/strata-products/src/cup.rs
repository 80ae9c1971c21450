//! Cup product on blown-up cochains.
//!
//! On one factor the product of dual cells concatenates two ordered faces
//! that share a pivot vertex, with the sign (−1)^{k·ℓ} of their dimensions.
//! On a coned factor the apex flag decides: an open factor (ε = 0) splices
//! with the next factor's face, a closed factor (ε = 1) only absorbs the
//! bare apex cell. Factors are combined with the Koszul sign of the
//! interleaving.

use crate::ProductsError;
use num_bigint::BigInt;
use strata_blowup::{BlownUpCochain, BlowupFace};
use strata_complex::WeightedComplex;

/// Concatenates two ordered faces when the last vertex of `f` is the first
/// vertex of `g`. Faces of a common simplex are disjoint away from that
/// pivot, so the result is again ordered.
fn splice(f: &[usize], g: &[usize]) -> Option<Vec<usize>> {
    if f.last()? != g.first()? {
        return None;
    }
    let mut out = f.to_vec();
    out.extend_from_slice(&g[1..]);
    Some(out)
}

/// Cup product of two basis cells supported on the blow-up of a common
/// regular simplex. Returns the signed basis cell, or `None` when a factor
/// pair is incompatible.
pub fn cup_local(a: &BlowupFace, b: &BlowupFace) -> Option<(i64, BlowupFace)> {
    debug_assert_eq!(a.n(), b.n(), "cells of one complex");
    let n = a.n();
    // Koszul sign for moving each factor of `b` across the later factors
    // of `a`.
    let mut exp = 0i64;
    for i in 1..=n {
        for j in 0..i {
            exp += a.term(i) * b.term(j);
        }
    }
    let mut blocks = Vec::with_capacity(n + 1);
    let mut eps = Vec::with_capacity(n);
    for i in 0..n {
        if a.eps(i) == 0 {
            blocks.push(splice(a.block(i), b.block(i))?);
            eps.push(b.eps(i));
            exp += a.term(i) * b.term(i);
        } else if b.block(i).is_empty() {
            // A closed factor absorbs the bare apex cell (degree 0, no sign).
            blocks.push(a.block(i).to_vec());
            eps.push(1);
        } else {
            return None;
        }
    }
    blocks.push(splice(a.block(n), b.block(n))?);
    exp += a.term(n) * b.term(n);
    let face = BlowupFace::new(blocks, eps).expect("spliced blocks satisfy the cell coding");
    Some((if exp % 2 == 0 { 1 } else { -1 }, face))
}

/// Cup product of global blown-up cochains, extended bilinearly over the
/// basis. A pair of cells contributes only when the union of their
/// underlying simplices is again a simplex of the complex; the product is
/// then the restriction-compatible local product on every simplex
/// containing both.
pub fn cup(
    cx: &WeightedComplex,
    a: &BlownUpCochain,
    b: &BlownUpCochain,
) -> Result<BlownUpCochain, ProductsError> {
    if a.ring != b.ring {
        return Err(ProductsError::RingMismatch);
    }
    let mut out = BlownUpCochain::zero(a.ring, a.degree + b.degree);
    for (fa, ca) in a.iter() {
        for (fb, cb) in b.iter() {
            if let Some((sign, face)) = cup_local(fa, fb) {
                if cx.contains_simplex(&face.join()) {
                    out.add_term(face, &(ca * cb * BigInt::from(sign)));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use strata_algebra::Ring;
    use strata_blowup::{enumerate_all, unit_cochain};
    use strata_complex::fixtures;

    fn cell(blocks: Vec<Vec<usize>>, eps: Vec<u8>) -> BlowupFace {
        BlowupFace::new(blocks, eps).unwrap()
    }

    #[test]
    fn adjacent_edges_multiply_to_the_triangle() {
        // Fully regular 2-simplex [0,1,2]: 1_{[0,1]} ∪ 1_{[1,2]} = −1_{[0,1,2]},
        // while the pair in the opposite order has no shared pivot.
        let e01 = cell(vec![vec![], vec![], vec![0, 1]], vec![1, 1]);
        let e12 = cell(vec![vec![], vec![], vec![1, 2]], vec![1, 1]);
        let t = cell(vec![vec![], vec![], vec![0, 1, 2]], vec![1, 1]);
        assert_eq!(cup_local(&e01, &e12), Some((-1, t)));
        assert_eq!(cup_local(&e12, &e01), None);
    }

    #[test]
    fn closed_cone_factor_absorbs_the_apex_cell() {
        // cone_two_points: apex 0 (weight 0), points 1 and 2 (weight 1).
        let f1 = cell(vec![vec![0], vec![1]], vec![1]);
        let apex_a = cell(vec![vec![], vec![1]], vec![1]);
        assert_eq!(cup_local(&f1, &apex_a), Some((1, f1.clone())));

        // An open factor needs a real pivot, so the apex cell annihilates it.
        let f0 = cell(vec![vec![0], vec![1]], vec![0]);
        assert_eq!(cup_local(&f0, &apex_a), None);
        // And a closed factor rejects everything except the bare apex.
        let v0 = cell(vec![vec![0], vec![1]], vec![0]);
        assert_eq!(cup_local(&f1, &v0), None);
    }

    #[test]
    fn open_cone_factor_splices_and_keeps_the_right_flag() {
        // ({0},0)·(a) ∪ ({0},1)·(a) = ({0},1)·(a): pivot 0 shared in the cone
        // factor, flag taken from the right cell, and sign +1 because every
        // factor of the left cell has degree 0.
        let left = cell(vec![vec![0], vec![1]], vec![0]);
        let right = cell(vec![vec![0], vec![1]], vec![1]);
        let got = cup_local(&left, &right);
        assert_eq!(got, Some((1, right.clone())));
    }

    #[test]
    fn unit_cochain_is_a_two_sided_identity() {
        for cx in [fixtures::cone_two_points(), fixtures::cone_circle(), fixtures::fake_s2()] {
            let unit = unit_cochain(&cx, Ring::Z);
            for layer in enumerate_all(&cx) {
                for face in layer {
                    let w = BlownUpCochain::basis(Ring::Z, face);
                    assert_eq!(cup(&cx, &unit, &w).unwrap(), w);
                    assert_eq!(cup(&cx, &w, &unit).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn rings_must_match() {
        let cx = fixtures::cone_two_points();
        let a = unit_cochain(&cx, Ring::Z);
        let b = unit_cochain(&cx, Ring::Q);
        assert!(matches!(cup(&cx, &a, &b), Err(ProductsError::RingMismatch)));
    }
}
