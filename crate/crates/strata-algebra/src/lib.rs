//! Exact linear algebra for homology computations.
//!
//! Everything here works with arbitrary-precision integers; there is no
//! floating point anywhere. The three coefficient rings (ℤ, ℚ, ℤ/p) share a
//! single integer-matrix representation: over ℤ and ℚ the kernels produced by
//! the Smith normal form are saturated, so the same integer bases present
//! both; ℤ/p gets its own modular elimination.

pub mod matrix;
pub mod modp;
pub mod presentation;
pub mod snf;

pub use matrix::IntMatrix;
pub use presentation::{
    field_rank, induced_iso_in_degree, induced_rank, is_chain_map, is_quasi_iso, mapping_cone,
    preimage_subcomplex, span_contains, ChainComplexPresentation, Direction, HomologyGroup, Ring,
    Witness,
};
pub use snf::{smith_normal_form, SmithNormalForm};

use thiserror::Error;

#[derive(Error, Debug)]
pub enum AlgebraError {
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("differential does not square to zero out of degree {0}")]
    DifferentialSquare(usize),
    #[error("not a chain map at degree {0}")]
    NotChainMap(usize),
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("exact linear system has no solution")]
    NoSolution,
    #[error("invalid ring spec `{0}` (expected z, q or zp:<p>)")]
    RingSpec(String),
    #[error("invalid triplet line `{0}`")]
    Triplet(String),
}
