//! Filtered simplicial chains: allowability of simplices against a
//! perversity, the regular-part differential on regular simplices, tame
//! intersection (co)homology, and the ordinary/relative chain complexes used
//! as comparison baselines.

pub mod allowable;
pub mod chain;
pub mod complexes;

pub use allowable::{is_allowable, is_tame, simplex_perverse_degree};
pub use chain::{gd, TameChain};
pub use complexes::{
    fully_regular_chains, fully_regular_cochains, intersection_chains, ordinary_chains,
    ordinary_cochains, regular_chains, relative_cochains, simplex_label, tame_cochains,
    tame_complex,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ChainsError {
    #[error("simplex {0} is not regular")]
    NotRegular(String),

    #[error(transparent)]
    Algebra(#[from] strata_algebra::AlgebraError),

    #[error(transparent)]
    Complex(#[from] strata_complex::ComplexError),
}
