//! Blown-up cochains, vertex adjunction, and the differential computed two
//! independent ways.

use crate::face::{normalize_word, BlowupFace, Letter};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use strata_algebra::Ring;
use strata_complex::WeightedComplex;

/// Something that can be adjoined to a cell: a real vertex of the complex,
/// or the virtual apex of a cone factor below the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjoined {
    Vertex(usize),
    VirtualApex(usize),
}

/// A finitely supported map from basis cells of one degree to coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlownUpCochain {
    pub ring: Ring,
    pub degree: i64,
    coeffs: BTreeMap<BlowupFace, BigInt>,
}

impl BlownUpCochain {
    pub fn zero(ring: Ring, degree: i64) -> Self {
        BlownUpCochain { ring, degree, coeffs: BTreeMap::new() }
    }

    pub fn basis(ring: Ring, face: BlowupFace) -> Self {
        let mut c = BlownUpCochain::zero(ring, face.dim());
        c.add_term(face, &BigInt::from(1));
        c
    }

    pub fn from_terms(
        ring: Ring,
        degree: i64,
        terms: impl IntoIterator<Item = (BlowupFace, BigInt)>,
    ) -> Self {
        let mut c = BlownUpCochain::zero(ring, degree);
        for (f, v) in terms {
            c.add_term(f, &v);
        }
        c
    }

    pub fn add_term(&mut self, face: BlowupFace, value: &BigInt) {
        debug_assert_eq!(face.dim(), self.degree, "support must sit in one degree");
        let entry = self.coeffs.entry(face).or_insert_with(BigInt::zero);
        *entry = self.ring.reduce(&(&*entry + value));
        if entry.is_zero() {
            let dead: Vec<BlowupFace> =
                self.coeffs.iter().filter(|(_, v)| v.is_zero()).map(|(f, _)| f.clone()).collect();
            for f in dead {
                self.coeffs.remove(&f);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, face: &BlowupFace) -> BigInt {
        self.coeffs.get(face).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BlowupFace, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &BlowupFace> {
        self.coeffs.keys()
    }

    pub fn add(&self, other: &BlownUpCochain) -> BlownUpCochain {
        debug_assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (f, v) in &other.coeffs {
            out.add_term(f.clone(), v);
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> BlownUpCochain {
        BlownUpCochain::from_terms(
            self.ring,
            self.degree,
            self.coeffs.iter().map(|(f, v)| (f.clone(), v * s)),
        )
    }

    /// Restriction to the blow-up of one simplex: keeps the cells whose
    /// underlying simplex is a face of it.
    pub fn restrict_to_simplex(&self, simplex: &[usize]) -> BlownUpCochain {
        BlownUpCochain::from_terms(
            self.ring,
            self.degree,
            self.coeffs
                .iter()
                .filter(|(f, _)| f.join().iter().all(|v| simplex.contains(v)))
                .map(|(f, v)| (f.clone(), v.clone())),
        )
    }

    /// Right adjunction of a vertex: the Koszul sign for skipping the
    /// factors above the target weight, times the factor-level star
    /// 1_G ∗ e = (−1)^{|G|} 1_{[G,e]} with the word normalized. Cells whose
    /// enlarged simplex leaves the complex are dropped.
    pub fn adjoin_vertex(&self, cx: &WeightedComplex, e: Adjoined) -> BlownUpCochain {
        let mut out = BlownUpCochain::zero(self.ring, self.degree + 1);
        for (face, coeff) in &self.coeffs {
            if let Some((sign, new_face)) = adjoin_to_face(cx, face, e) {
                out.add_term(new_face, &(coeff * sign));
            }
        }
        out
    }

    /// The differential δ1 = (−1)^{|(F,ε)|}(Σ_e 1∗e + Σ_{i<n} 1∗vᵢ), extended
    /// linearly.
    pub fn differential(&self, cx: &WeightedComplex) -> BlownUpCochain {
        let mut out = BlownUpCochain::zero(self.ring, self.degree + 1);
        for (face, coeff) in &self.coeffs {
            let prefix = if face.dim() % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
            let c = coeff * prefix;
            for e in 0..cx.vertex_count() {
                if let Some((sign, new_face)) = adjoin_to_face(cx, face, Adjoined::Vertex(e)) {
                    out.add_term(new_face, &(&c * sign));
                }
            }
            for i in 0..face.n() {
                if let Some((sign, new_face)) = adjoin_to_face(cx, face, Adjoined::VirtualApex(i)) {
                    out.add_term(new_face, &(&c * sign));
                }
            }
        }
        out
    }

    /// The same differential assembled factor-by-factor: the dual boundary
    /// of each tensor slot with the Koszul prefix (−1)^{|(F,ε)|_{<i}}. Kept
    /// as an independent cross-check of `differential`.
    pub fn differential_by_factors(&self, cx: &WeightedComplex) -> BlownUpCochain {
        let n = cx.formal_dimension();
        let mut out = BlownUpCochain::zero(self.ring, self.degree + 1);
        for (face, coeff) in &self.coeffs {
            for i in 0..=n {
                let prefix = if face.sum_lt(i) % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                let mut letters: Vec<Letter> = (0..cx.vertex_count())
                    .filter(|&v| cx.vertex_weight(v) == i)
                    .map(Letter::Vertex)
                    .collect();
                if i < n {
                    letters.push(Letter::Apex);
                }
                for letter in letters {
                    let mut word = face.word(i);
                    word.push(letter);
                    let Some((sign, sorted)) = normalize_word(&word) else {
                        continue;
                    };
                    let new_face = face.with_word(i, &sorted).expect("valid rebuilt cell");
                    if matches!(letter, Letter::Vertex(_))
                        && !cx.contains_simplex(&new_face.join())
                    {
                        continue;
                    }
                    out.add_term(new_face, &(coeff * &prefix * sign));
                }
            }
        }
        out
    }
}

/// Adjunction of one letter to one cell, with the global and factor signs.
fn adjoin_to_face(
    cx: &WeightedComplex,
    face: &BlowupFace,
    e: Adjoined,
) -> Option<(i64, BlowupFace)> {
    let (factor, letter) = match e {
        Adjoined::Vertex(v) => (cx.vertex_weight(v), Letter::Vertex(v)),
        Adjoined::VirtualApex(l) => {
            debug_assert!(l < face.n(), "virtual apex index below the top");
            (l, Letter::Apex)
        }
    };
    let global = face.sum_gt(factor);
    let star = face.term(factor); // dim of the factor cell
    let mut word = face.word(factor);
    word.push(letter);
    let (reorder, sorted) = normalize_word(&word)?;
    let new_face = face.with_word(factor, &sorted).expect("valid rebuilt cell");
    if matches!(e, Adjoined::Vertex(_)) && !cx.contains_simplex(&new_face.join()) {
        return None;
    }
    let sign = if (global + star) % 2 == 0 { reorder } else { -reorder };
    Some((sign, new_face))
}

/// The unit: the sum of every degree-0 basis cell with coefficient 1. It is
/// a cocycle and the identity for the cup product.
pub fn unit_cochain(cx: &WeightedComplex, ring: Ring) -> BlownUpCochain {
    BlownUpCochain::from_terms(
        ring,
        0,
        crate::face::enumerate_basis(cx, 0)
            .into_iter()
            .map(|f| (f, BigInt::from(1))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::enumerate_basis;
    use strata_complex::fixtures;

    fn cone_two_points() -> WeightedComplex {
        fixtures::cone_two_points()
    }

    fn face(blocks: Vec<Vec<usize>>, eps: Vec<u8>) -> BlowupFace {
        BlowupFace::new(blocks, eps).unwrap()
    }

    #[test]
    fn frozen_differential_on_the_cone_over_two_points() {
        // Vertices: apex=0 (weight 0), a=1, b=2 (weight 1).
        let cx = cone_two_points();
        let ring = Ring::Z;
        // δ1_{(∅;1)(a)} = −1_{(apex;1)(a)}
        let d = BlownUpCochain::basis(ring, face(vec![vec![], vec![1]], vec![1])).differential(&cx);
        assert_eq!(d.coefficient(&face(vec![vec![0], vec![1]], vec![1])), BigInt::from(-1));
        assert_eq!(d.iter().count(), 1);
        // δ1_{(apex;0)(a)} = +1_{(apex;1)(a)}
        let d = BlownUpCochain::basis(ring, face(vec![vec![0], vec![1]], vec![0])).differential(&cx);
        assert_eq!(d.coefficient(&face(vec![vec![0], vec![1]], vec![1])), BigInt::from(1));
        assert_eq!(d.iter().count(), 1);
        // Top cells are closed.
        let d = BlownUpCochain::basis(ring, face(vec![vec![0], vec![2]], vec![1])).differential(&cx);
        assert!(d.is_zero());
    }

    #[test]
    fn unit_is_a_cocycle_everywhere() {
        for cx in [
            cone_two_points(),
            fixtures::cone_circle(),
            fixtures::fake_s2(),
            fixtures::random_complex(11, 6, 2),
        ] {
            let lambda = unit_cochain(&cx, Ring::Z);
            assert!(lambda.differential(&cx).is_zero());
            assert!(!lambda.is_zero());
        }
    }

    #[test]
    fn both_differential_routes_agree_on_basis_cells() {
        for cx in [cone_two_points(), fixtures::cone_circle(), fixtures::fake_s2()] {
            for degree in 0..=cx.geometric_dimension() as i64 {
                for f in enumerate_basis(&cx, degree) {
                    let c = BlownUpCochain::basis(Ring::Z, f);
                    assert_eq!(c.differential(&cx), c.differential_by_factors(&cx));
                }
            }
        }
    }

    #[test]
    fn differential_squares_to_zero() {
        for cx in [cone_two_points(), fixtures::cone_circle(), fixtures::fake_s2()] {
            for degree in 0..=cx.geometric_dimension() as i64 {
                for f in enumerate_basis(&cx, degree) {
                    let c = BlownUpCochain::basis(Ring::Z, f);
                    assert!(c.differential(&cx).differential(&cx).is_zero());
                }
            }
        }
    }

    #[test]
    fn adjunctions_anticommute() {
        let cx = fixtures::cone_circle();
        let mut letters: Vec<Adjoined> = (0..cx.vertex_count()).map(Adjoined::Vertex).collect();
        for i in 0..cx.formal_dimension() {
            letters.push(Adjoined::VirtualApex(i));
        }
        for degree in 0..cx.geometric_dimension() as i64 {
            for f in enumerate_basis(&cx, degree) {
                let c = BlownUpCochain::basis(Ring::Z, f);
                for &x in &letters {
                    for &y in &letters {
                        let xy = c.adjoin_vertex(&cx, x).adjoin_vertex(&cx, y);
                        let yx = c.adjoin_vertex(&cx, y).adjoin_vertex(&cx, x);
                        assert_eq!(xy, yx.scale(&BigInt::from(-1)), "{:?} {:?}", x, y);
                    }
                }
            }
        }
    }

    #[test]
    fn adjunction_commutes_with_differential() {
        let cx = fixtures::cone_circle();
        let mut letters: Vec<Adjoined> = (0..cx.vertex_count()).map(Adjoined::Vertex).collect();
        for i in 0..cx.formal_dimension() {
            letters.push(Adjoined::VirtualApex(i));
        }
        for degree in 0..cx.geometric_dimension() as i64 {
            for f in enumerate_basis(&cx, degree) {
                let c = BlownUpCochain::basis(Ring::Z, f);
                for &x in &letters {
                    assert_eq!(
                        c.adjoin_vertex(&cx, x).differential(&cx),
                        c.differential(&cx).adjoin_vertex(&cx, x)
                    );
                }
            }
        }
    }

    #[test]
    fn coefficients_reduce_in_finite_characteristic() {
        let f = face(vec![vec![], vec![1]], vec![1]);
        let mut c = BlownUpCochain::zero(Ring::Zp(3), 0);
        c.add_term(f.clone(), &BigInt::from(2));
        c.add_term(f.clone(), &BigInt::from(2));
        assert_eq!(c.coefficient(&f), BigInt::from(1));
        c.add_term(f.clone(), &BigInt::from(2));
        assert!(c.is_zero());
    }
}
