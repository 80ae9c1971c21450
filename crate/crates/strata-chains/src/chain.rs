//! Chains of regular simplices and the regular-part differential.

use crate::ChainsError;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use strata_algebra::Ring;
use strata_complex::{FilteredSimplex, WeightedComplex};

/// The regular part of the simplicial boundary: the boundary faces that
/// still touch the top weight, with their usual alternating signs. When the
/// top block has dimension at least one every face qualifies; when it is a
/// single vertex, the face deleting that vertex is dropped.
pub fn gd(
    cx: &WeightedComplex,
    simplex: &FilteredSimplex,
) -> Result<Vec<(i64, FilteredSimplex)>, ChainsError> {
    if !cx.is_regular_simplex(&simplex.vertices()) {
        return Err(ChainsError::NotRegular(simplex.to_string()));
    }
    Ok(cx
        .boundary(simplex)
        .into_iter()
        .filter(|(_, f)| cx.is_regular_simplex(&f.vertices()))
        .collect())
}

/// A finitely supported combination of regular simplices in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameChain {
    pub ring: Ring,
    pub degree: i64,
    coeffs: BTreeMap<FilteredSimplex, BigInt>,
}

impl TameChain {
    pub fn zero(ring: Ring, degree: i64) -> Self {
        TameChain { ring, degree, coeffs: BTreeMap::new() }
    }

    pub fn basis(ring: Ring, simplex: FilteredSimplex) -> Self {
        let mut c = TameChain::zero(ring, simplex.dim());
        c.add_term(simplex, &BigInt::from(1));
        c
    }

    pub fn from_terms(
        ring: Ring,
        degree: i64,
        terms: impl IntoIterator<Item = (FilteredSimplex, BigInt)>,
    ) -> Self {
        let mut c = TameChain::zero(ring, degree);
        for (s, v) in terms {
            c.add_term(s, &v);
        }
        c
    }

    pub fn add_term(&mut self, simplex: FilteredSimplex, value: &BigInt) {
        debug_assert_eq!(simplex.dim(), self.degree, "support must sit in one degree");
        let entry = self.coeffs.entry(simplex.clone()).or_insert_with(BigInt::zero);
        *entry = self.ring.reduce(&(&*entry + value));
        if entry.is_zero() {
            self.coeffs.remove(&simplex);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, simplex: &FilteredSimplex) -> BigInt {
        self.coeffs.get(simplex).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FilteredSimplex, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &FilteredSimplex> {
        self.coeffs.keys()
    }

    pub fn add(&self, other: &TameChain) -> TameChain {
        debug_assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (s, v) in &other.coeffs {
            out.add_term(s.clone(), v);
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> TameChain {
        TameChain::from_terms(
            self.ring,
            self.degree,
            self.coeffs.iter().map(|(f, v)| (f.clone(), v * s)),
        )
    }

    /// The regular-part differential, extended linearly.
    pub fn boundary(&self, cx: &WeightedComplex) -> Result<TameChain, ChainsError> {
        let mut out = TameChain::zero(self.ring, self.degree - 1);
        for (simplex, coeff) in &self.coeffs {
            for (sign, face) in gd(cx, simplex)? {
                out.add_term(face, &(coeff * sign));
            }
        }
        Ok(out)
    }
}
