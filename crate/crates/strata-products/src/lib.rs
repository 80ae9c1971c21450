//! Products on the blown-up complex: the cup product on blown-up cochains,
//! the cap product from blown-up cochains into tame chains (via the prism
//! decomposition of a regular simplex and the collapse map μ), and the
//! evaluation map χ that compares blown-up cochains with tame cochains.

pub mod cap;
pub mod chi;
pub mod cup;
pub mod prism;

pub use cap::{cap, cap_chain, cap_simplex};
pub use chi::{chi, chi_value};
pub use cup::{cup, cup_local};
pub use prism::{
    cap_blowup, fundamental_cell, hidden_face, koszul_weave, mu_push, mu_push_cell, pair,
    regular_boundary_blowup, PrismChain, SimplexChain,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProductsError {
    #[error("cochains live over different rings")]
    RingMismatch,

    #[error("simplex {0} is not regular")]
    NotRegular(String),

    #[error("chain is not an allowable intersection chain for the given perversity")]
    NotAllowable,

    #[error(transparent)]
    Algebra(#[from] strata_algebra::AlgebraError),

    #[error(transparent)]
    Blowup(#[from] strata_blowup::BlowupError),

    #[error(transparent)]
    Chains(#[from] strata_chains::ChainsError),

    #[error(transparent)]
    Complex(#[from] strata_complex::ComplexError),
}
