//! Evaluation of blown-up cochains against fundamental prism cells.
//!
//! A regular simplex and its prism have the same dimension, so reading off
//! the coefficient of the fundamental cell turns a blown-up k-cochain into
//! a functional on regular k-simplices. On allowable cochains this is a
//! chain map into the tame cochains of the complementary perversity.

use crate::prism::{fundamental_cell, koszul_weave, SimplexChain};
use crate::ProductsError;
use num_bigint::BigInt;
use num_traits::Zero;
use strata_blowup::BlownUpCochain;
use strata_complex::{FilteredSimplex, WeightedComplex};

/// The evaluation of `omega` on the fundamental prism cell of `sigma`:
/// its coefficient there, under the Koszul sign of the weave; zero whenever
/// the degrees disagree.
pub fn chi_value(
    omega: &BlownUpCochain,
    sigma: &FilteredSimplex,
) -> Result<BigInt, ProductsError> {
    if !sigma.is_regular() {
        return Err(ProductsError::NotRegular(sigma.to_string()));
    }
    let cell = fundamental_cell(sigma)?;
    if omega.degree != cell.dim() {
        return Ok(BigInt::zero());
    }
    let sign = if koszul_weave(&cell) % 2 == 0 { 1 } else { -1 };
    Ok(omega.coefficient(&cell) * sign)
}

/// The whole functional, recorded against the basis of regular simplices in
/// the cochain's degree.
pub fn chi(cx: &WeightedComplex, omega: &BlownUpCochain) -> SimplexChain {
    let mut out = SimplexChain::zero(omega.ring, omega.degree);
    if omega.degree < 0 {
        return out;
    }
    for verts in cx.faces_of_dim(omega.degree as usize) {
        if !cx.is_regular_simplex(verts) {
            continue;
        }
        let s = cx.join_decomposition(verts).unwrap();
        let v = chi_value(omega, &s).unwrap();
        if !v.is_zero() {
            out.add_term(s, &v);
        }
    }
    out
}
