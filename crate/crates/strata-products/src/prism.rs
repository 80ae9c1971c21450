//! Chains on the prism over a regular simplex.
//!
//! A regular simplex Δ = Δ₀ ∗ … ∗ Δₙ blows up to the prism
//! Δ̃ = cΔ₀ × … × cΔ₍ₙ₋₁₎ × Δₙ, whose cells are the same (F,ε) data as the
//! blown-up cochain basis. This module treats them as chains: the tensor
//! boundary of the prism, its decomposition into the blow-up of the
//! regular-part boundary plus hidden faces, the cap of a basis cochain
//! against the fundamental prism cell, and the collapse μ back onto faces
//! of Δ.

use crate::ProductsError;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use strata_algebra::Ring;
use strata_blowup::{BlownUpCochain, BlowupFace};
use strata_chains::gd;
use strata_complex::{FilteredSimplex, WeightedComplex};

/// A finitely supported combination of prism cells in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrismChain {
    pub ring: Ring,
    pub degree: i64,
    coeffs: BTreeMap<BlowupFace, BigInt>,
}

impl PrismChain {
    pub fn zero(ring: Ring, degree: i64) -> Self {
        PrismChain { ring, degree, coeffs: BTreeMap::new() }
    }

    pub fn basis(ring: Ring, cell: BlowupFace) -> Self {
        let mut c = PrismChain::zero(ring, cell.dim());
        c.add_term(cell, &BigInt::from(1));
        c
    }

    pub fn from_terms(
        ring: Ring,
        degree: i64,
        terms: impl IntoIterator<Item = (BlowupFace, BigInt)>,
    ) -> Self {
        let mut c = PrismChain::zero(ring, degree);
        for (f, v) in terms {
            c.add_term(f, &v);
        }
        c
    }

    pub fn add_term(&mut self, cell: BlowupFace, value: &BigInt) {
        debug_assert_eq!(cell.dim(), self.degree, "support must sit in one degree");
        let entry = self.coeffs.entry(cell).or_insert_with(BigInt::zero);
        *entry = self.ring.reduce(&(&*entry + value));
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, cell: &BlowupFace) -> BigInt {
        self.coeffs.get(cell).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BlowupFace, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &BlowupFace> {
        self.coeffs.keys()
    }

    pub fn add(&self, other: &PrismChain) -> PrismChain {
        debug_assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (f, v) in &other.coeffs {
            out.add_term(f.clone(), v);
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> PrismChain {
        PrismChain::from_terms(
            self.ring,
            self.degree,
            self.coeffs.iter().map(|(f, v)| (f.clone(), v * s)),
        )
    }

    /// The tensor boundary: factor i is differentiated with the Koszul sign
    /// of the factors before it.
    pub fn boundary(&self) -> PrismChain {
        let mut out = PrismChain::zero(self.ring, self.degree - 1);
        for (cell, coeff) in &self.coeffs {
            for (sign, face) in cell_boundary(cell) {
                out.add_term(face, &(coeff * sign));
            }
        }
        out
    }
}

fn parity(e: i64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Exponent of the Koszul sign the tensor-Hom pairing attaches to a product
/// cell: each factor's degree slides past the degrees of the factors before
/// it. Zero whenever at most one factor carries positive degree, so fully
/// regular cells never see it.
pub fn koszul_weave(cell: &BlowupFace) -> i64 {
    (1..=cell.n()).map(|j| cell.term(j) * cell.sum_lt(j)).sum()
}

/// Evaluation of a blown-up cochain on a prism chain. A tensor product of
/// duals evaluates on a product cell through the Koszul sign of the weave;
/// with it, the differential is adjoint to the prism boundary:
/// ⟨δω, c⟩ = −(−1)^{|ω|} ⟨ω, ∂c⟩.
pub fn pair(omega: &BlownUpCochain, c: &PrismChain) -> BigInt {
    let mut out = BigInt::zero();
    for (cell, coeff) in c.iter() {
        out += omega.coefficient(cell) * coeff * parity(koszul_weave(cell));
    }
    c.ring.reduce(&out)
}

fn replace_block(cell: &BlowupFace, i: usize, block: Vec<usize>, flag: u8) -> BlowupFace {
    let mut blocks = cell.blocks().to_vec();
    blocks[i] = block;
    let mut eps: Vec<u8> = (0..cell.n()).map(|j| cell.eps(j)).collect();
    if i < cell.n() {
        eps[i] = flag;
    }
    BlowupFace::new(blocks, eps).expect("boundary faces satisfy the cell coding")
}

/// Boundary of one prism cell. In a coned factor the word ends with the
/// apex, so dropping a base vertex keeps the flag while closing at the base
/// drops the apex with the sign of its (last) position.
fn cell_boundary(cell: &BlowupFace) -> Vec<(i64, BlowupFace)> {
    let n = cell.n();
    let mut out = Vec::new();
    for i in 0..=n {
        let lead = parity(cell.sum_lt(i));
        let f = cell.block(i);
        if i < n && cell.eps(i) == 1 {
            for t in 0..f.len() {
                let mut g = f.to_vec();
                g.remove(t);
                out.push((lead * parity(t as i64), replace_block(cell, i, g, 1)));
            }
            if !f.is_empty() {
                out.push((lead * parity(f.len() as i64), replace_block(cell, i, f.to_vec(), 0)));
            }
        } else if f.len() >= 2 {
            // An open factor or the top factor has the ordinary simplicial
            // boundary; a single vertex is a point and has none.
            for t in 0..f.len() {
                let mut g = f.to_vec();
                g.remove(t);
                out.push((lead * parity(t as i64), replace_block(cell, i, g, 0)));
            }
        }
    }
    out
}

/// The fundamental cell [Δ̃] of the prism over a regular simplex: every
/// block in full, every cone factor closed.
pub fn fundamental_cell(s: &FilteredSimplex) -> Result<BlowupFace, ProductsError> {
    Ok(BlowupFace::new(s.blocks().to_vec(), vec![1; s.n()])?)
}

/// The i-th hidden face of the prism: the base of the i-th cone factor,
/// everything else in full. Empty blocks have no hidden face.
pub fn hidden_face(s: &FilteredSimplex, i: usize) -> Option<BlowupFace> {
    if i >= s.n() || s.block(i).is_empty() {
        return None;
    }
    let mut eps = vec![1; s.n()];
    eps[i] = 0;
    Some(BlowupFace::new(s.blocks().to_vec(), eps).expect("hidden face of a regular simplex"))
}

/// The blow-up of the regular-part boundary 𝔡s: the signed sum of the
/// fundamental cells of the regular faces. Together with the hidden faces
/// this recovers the boundary of the prism.
pub fn regular_boundary_blowup(
    cx: &WeightedComplex,
    ring: Ring,
    s: &FilteredSimplex,
) -> Result<PrismChain, ProductsError> {
    let top = fundamental_cell(s)?;
    let mut out = PrismChain::zero(ring, top.dim() - 1);
    for (sign, face) in gd(cx, s)? {
        out.add_term(fundamental_cell(&face)?, &BigInt::from(sign));
    }
    Ok(out)
}

fn front_face(f: &[usize], d: &[usize]) -> bool {
    f.len() <= d.len() && f == &d[..f.len()]
}

/// Cap of a basis cochain cell against the fundamental prism cell of the
/// regular simplex it lives over. Factor by factor the cell must be a front
/// face of the block; the cap is the complementary back face, coned, and
/// the whole product carries the sign ν that threads the block dimensions
/// through the degrees above them.
pub fn cap_blowup(a: &BlowupFace, delta: &FilteredSimplex) -> Option<(i64, BlowupFace)> {
    debug_assert_eq!(a.n(), delta.n(), "cell and simplex of one complex");
    let n = a.n();
    let mut nu = 0i64;
    for j in 0..n {
        nu += delta.block(j).len() as i64 * a.sum_gt(j);
    }
    let mut blocks = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (f, d) = (a.block(i), delta.block(i));
        if a.eps(i) == 0 {
            // The open factor caps like an ordinary simplex and is coned
            // afterwards: the back face shares the pivot vertex.
            if !front_face(f, d) {
                return None;
            }
            blocks.push(d[f.len() - 1..].to_vec());
        } else if f == d {
            // Only the full coned block caps, to the bare apex.
            blocks.push(Vec::new());
        } else {
            return None;
        }
    }
    let (f, d) = (a.block(n), delta.block(n));
    if !front_face(f, d) {
        return None;
    }
    blocks.push(d[f.len() - 1..].to_vec());
    let cell = BlowupFace::new(blocks, vec![1; n]).expect("back faces satisfy the cell coding");
    Some((parity(nu), cell))
}

/// Collapse of one prism cell onto a face of the underlying simplex: keep
/// the blocks up to the first open factor, provided nothing of the cell's
/// dimension lives beyond them.
pub fn mu_push_cell(cell: &BlowupFace) -> Option<FilteredSimplex> {
    let n = cell.n();
    let l = (0..n).find(|&i| cell.eps(i) == 0).unwrap_or(n);
    let kept: i64 = cell.blocks()[..=l].iter().map(|b| b.len() as i64).sum();
    if cell.dim() != kept - 1 {
        return None;
    }
    let mut blocks = vec![Vec::new(); n + 1];
    for (i, b) in cell.blocks()[..=l].iter().enumerate() {
        blocks[i] = b.clone();
    }
    Some(FilteredSimplex::new(blocks))
}

/// A finitely supported combination of simplices in one degree, regular or
/// not: the collapse μ and the ordinary boundary live here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexChain {
    pub ring: Ring,
    pub degree: i64,
    coeffs: BTreeMap<FilteredSimplex, BigInt>,
}

impl SimplexChain {
    pub fn zero(ring: Ring, degree: i64) -> Self {
        SimplexChain { ring, degree, coeffs: BTreeMap::new() }
    }

    pub fn from_terms(
        ring: Ring,
        degree: i64,
        terms: impl IntoIterator<Item = (FilteredSimplex, BigInt)>,
    ) -> Self {
        let mut c = SimplexChain::zero(ring, degree);
        for (s, v) in terms {
            c.add_term(s, &v);
        }
        c
    }

    pub fn add_term(&mut self, simplex: FilteredSimplex, value: &BigInt) {
        debug_assert_eq!(simplex.dim(), self.degree, "support must sit in one degree");
        let entry = self.coeffs.entry(simplex).or_insert_with(BigInt::zero);
        *entry = self.ring.reduce(&(&*entry + value));
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
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

    pub fn add(&self, other: &SimplexChain) -> SimplexChain {
        debug_assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (s, v) in &other.coeffs {
            out.add_term(s.clone(), v);
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> SimplexChain {
        SimplexChain::from_terms(
            self.ring,
            self.degree,
            self.coeffs.iter().map(|(f, v)| (f.clone(), v * s)),
        )
    }

    /// Ordinary simplicial boundary, keeping non-regular faces.
    pub fn boundary(&self, cx: &WeightedComplex) -> SimplexChain {
        let mut out = SimplexChain::zero(self.ring, self.degree - 1);
        for (simplex, coeff) in &self.coeffs {
            for (sign, face) in cx.boundary(simplex) {
                out.add_term(face, &(coeff * sign));
            }
        }
        out
    }
}

/// The collapse μ on chains: coefficients ride along unchanged.
pub fn mu_push(c: &PrismChain) -> SimplexChain {
    let mut out = SimplexChain::zero(c.ring, c.degree);
    for (cell, coeff) in c.iter() {
        if let Some(simplex) = mu_push_cell(cell) {
            out.add_term(simplex, coeff);
        }
    }
    out
}
