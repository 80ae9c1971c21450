//! Amalgamation: merging consecutive cone factors of the blow-up.
//!
//! Recoding the weights of a complex coarsens its filtration. On the
//! blown-up side the comparison between the fine and the coarse structure is
//! assembled from one factor-level operation: a merge θ that multiplies two
//! neighbouring cone factors into one, and its dual split Ξ. This crate
//! implements those maps on cells, the pushforward and pullback they induce
//! along weight recodings, the μ-amalgamation that collapses the whole
//! product at once, and the two comparison maps built from it — Φ from
//! ordinary simplicial cochains into the zero-perversity blow-up, and γ from
//! a high-perversity blow-up onto the cochains of the regular part.

pub mod compare;
pub mod factor;
pub mod recoding;

pub use compare::{
    is_normal, mu_pullback, ordinary_codifferential, ordinary_comparison, ordinary_cup,
    regular_restriction,
};
pub use factor::{elementary_pullback, elementary_push, merge_factors};
pub use recoding::{
    pullback_cochain, push_cell, push_chain, push_tame, refinement_pullback, WeightRecoding,
};

use num_bigint::BigInt;
use num_traits::Zero;
use strata_algebra::{AlgebraError, ChainComplexPresentation, IntMatrix, Ring};
use strata_blowup::{BlownUpCochain, BlowupError, BlowupFace};
use strata_chains::ChainsError;
use strata_complex::ComplexError;
use strata_products::ProductsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AmalgamError {
    #[error("invalid weight recoding: {0}")]
    BadRecoding(String),
    #[error("amalgamation position out of range: {0}")]
    PositionOutOfRange(String),
    #[error("complex is not normal: {0}")]
    NotNormal(String),
    #[error("perversity condition violated: {0}")]
    PerversityCondition(String),
    #[error("cochain leaves the allowable subcomplex: {0}")]
    NotAllowable(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Blowup(#[from] BlowupError),
    #[error(transparent)]
    Chains(#[from] ChainsError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Products(#[from] ProductsError),
}

/// A degreewise matrix map between two presented cochain complexes, kept
/// together with the presentations it connects so that chain-map and
/// quasi-isomorphism checks need no further context.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: ChainComplexPresentation,
    pub target: ChainComplexPresentation,
    pub maps: Vec<IntMatrix>,
}

impl InducedMap {
    /// Exact commutation with the differentials.
    pub fn verify_chain_map(&self) -> Result<(), AlgebraError> {
        strata_algebra::is_chain_map(&self.source, &self.target, &self.maps)
    }

    /// Whether the map is invisible to (co)homology: the mapping cone is
    /// acyclic over the presentation's ring.
    pub fn is_quasi_iso(&self) -> Result<bool, AlgebraError> {
        strata_algebra::is_quasi_iso(&self.source, &self.target, &self.maps)
    }
}

/// Coordinates of a cochain in a fixed ordered cell bucket.
pub(crate) fn cochain_vector(cells: &[BlowupFace], omega: &BlownUpCochain) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); cells.len()];
    for (cell, value) in omega.iter() {
        let i = cells.binary_search(cell).expect("support lies in the enumerated bucket");
        v[i] = value.clone();
    }
    v
}

/// Solves `inclusion · x = v` over the ring: the coordinates of an ambient
/// vector in a subcomplex basis, when it lies in the span.
pub(crate) fn coordinates_in(ring: Ring, inclusion: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    ring.solve_matrix(inclusion, &IntMatrix::column_matrix(v)).map(|m| m.col(0))
}
