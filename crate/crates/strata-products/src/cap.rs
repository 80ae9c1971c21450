//! Cap product from blown-up cochains into tame chains.
//!
//! Over one regular simplex the cap pairs the restricted cochain with the
//! fundamental prism cell and collapses the result; the back faces always
//! keep their top block, so the output lives on regular simplices. The
//! global cap extends linearly over a chain.

use crate::prism::{cap_blowup, mu_push_cell};
use crate::ProductsError;
use num_bigint::BigInt;
use strata_blowup::BlownUpCochain;
use strata_chains::{is_allowable, is_tame, simplex_label, TameChain};
use strata_complex::{FilteredSimplex, Perversity, WeightedComplex};

/// Cap of a cochain against one regular simplex of the complex.
pub fn cap_simplex(
    cx: &WeightedComplex,
    omega: &BlownUpCochain,
    sigma: &FilteredSimplex,
) -> Result<TameChain, ProductsError> {
    if !sigma.is_regular() {
        return Err(ProductsError::NotRegular(simplex_label(cx, &sigma.vertices())));
    }
    let local = omega.restrict_to_simplex(&sigma.vertices());
    let mut out = TameChain::zero(omega.ring, sigma.dim() - omega.degree);
    for (cell, coeff) in local.iter() {
        if let Some((sign, back)) = cap_blowup(cell, sigma) {
            let simplex = mu_push_cell(&back).expect("back faces always collapse");
            out.add_term(simplex, &(coeff * BigInt::from(sign)));
        }
    }
    Ok(out)
}

/// Cap of a cochain against a chain on regular simplices, extended
/// bilinearly. Total: no allowability is required for the formula or for
/// the Leibniz and exchange identities it satisfies.
pub fn cap_chain(
    cx: &WeightedComplex,
    omega: &BlownUpCochain,
    xi: &TameChain,
) -> Result<TameChain, ProductsError> {
    if omega.ring != xi.ring {
        return Err(ProductsError::RingMismatch);
    }
    let mut out = TameChain::zero(omega.ring, xi.degree - omega.degree);
    for (sigma, c) in xi.iter() {
        for (s, v) in cap_simplex(cx, omega, sigma)?.iter() {
            out.add_term(s.clone(), &(v * c));
        }
    }
    Ok(out)
}

/// The intersection cap: the chain must be a tame intersection chain for
/// the given perversity, meaning an allowable chain of regular simplices
/// whose regular-part boundary is again allowable.
pub fn cap(
    cx: &WeightedComplex,
    qbar: &Perversity,
    omega: &BlownUpCochain,
    xi: &TameChain,
) -> Result<TameChain, ProductsError> {
    if !xi.support().all(|s| is_tame(cx, s, qbar)) {
        return Err(ProductsError::NotAllowable);
    }
    let boundary = xi.boundary(cx)?;
    if !boundary.support().all(|s| is_allowable(cx, s, qbar)) {
        return Err(ProductsError::NotAllowable);
    }
    cap_chain(cx, omega, xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use strata_algebra::Ring;
    use strata_blowup::{unit_cochain, BlowupFace};
    use strata_complex::{fixtures, PValue};

    #[test]
    fn unit_cochain_caps_to_the_identity() {
        let cx = fixtures::cone_circle();
        let unit = unit_cochain(&cx, Ring::Z);
        for verts in cx.all_faces() {
            if !cx.is_regular_simplex(verts) {
                continue;
            }
            let s = cx.join_decomposition(verts).unwrap();
            let got = cap_simplex(&cx, &unit, &s).unwrap();
            assert_eq!(got, TameChain::basis(Ring::Z, s));
        }
    }

    #[test]
    fn top_cochain_caps_the_cone_triangle_to_a_corner() {
        // On [apex, a, b] of the cone over the circle the only surviving
        // cell of degree two is the full prism cell, and it caps to the far
        // corner [b] with sign −1.
        let cx = fixtures::cone_circle();
        let s = cx.join_decomposition(&[0, 1, 2]).unwrap();
        let top = BlowupFace::new(vec![vec![0], vec![], vec![1, 2]], vec![1, 1]).unwrap();
        let omega = BlownUpCochain::basis(Ring::Z, top);
        let got = cap_simplex(&cx, &omega, &s).unwrap();
        let corner = FilteredSimplex::new(vec![vec![], vec![], vec![2]]);
        assert_eq!(got.coefficient(&corner), BigInt::from(-1));
        assert_eq!(got.iter().count(), 1);
    }

    #[test]
    fn cap_requires_a_regular_simplex() {
        let cx = fixtures::cone_circle();
        let apex = FilteredSimplex::new(vec![vec![0], vec![], vec![]]);
        let unit = unit_cochain(&cx, Ring::Z);
        assert!(matches!(cap_simplex(&cx, &unit, &apex), Err(ProductsError::NotRegular(_))));
    }

    #[test]
    fn checked_cap_rejects_chains_outside_the_perversity() {
        // [apex, a] has perverse degree 0 along the apex stratum but the
        // zero perversity only allows dim − 2, so the edge is not tame.
        let cx = fixtures::cone_circle();
        let zero = Perversity::zero(&cx);
        let edge = cx.join_decomposition(&[0, 1]).unwrap();
        let xi = TameChain::basis(Ring::Z, edge);
        let unit = unit_cochain(&cx, Ring::Z);
        assert!(matches!(cap(&cx, &zero, &unit, &xi), Err(ProductsError::NotAllowable)));

        // With the apex bound raised to 1 the edge is tame and the cap goes
        // through.
        let sid = cx.singular_strata().next().unwrap().id;
        let loose = Perversity::per_stratum(&cx, &[(sid, PValue::Fin(1))]).unwrap();
        let xi2 = TameChain::basis(Ring::Z, cx.join_decomposition(&[0, 1]).unwrap());
        assert!(cap(&cx, &loose, &unit, &xi2).is_ok());
    }
}
