//! Cochains on the blow-up of a weighted simplicial complex.
//!
//! Each regular simplex is replaced by a product of cones over its weight
//! blocks; the cells of that product are encoded combinatorially and carry a
//! perverse degree measured against the strata of the underlying complex.
//! This crate builds the resulting cochain complex, filters it by a
//! perversity, and presents the filtered complex to the linear-algebra layer.

pub mod cochain;
pub mod face;
pub mod perverse;
pub mod subcomplex;

pub use cochain::{unit_cochain, Adjoined, BlownUpCochain};
pub use face::{enumerate_all, enumerate_basis, normalize_word, BlowupFace, Letter};
pub use perverse::{cochain_perverse_degree, face_perverse_degree, is_allowable, local_degree};
pub use subcomplex::{
    allowable_selectors, blowup_presentation, intersection_subcomplex, BlowupComplex,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BlowupError {
    #[error("malformed blow-up cell: {0}")]
    Shape(String),

    #[error("the underlying blocks do not join to a simplex of the complex")]
    IrregularBase,

    #[error("block {0} is empty but its cone flag is 0")]
    EmptyBlockFlag(usize),

    #[error(transparent)]
    Algebra(#[from] strata_algebra::AlgebraError),

    #[error(transparent)]
    Complex(#[from] strata_complex::ComplexError),
}
