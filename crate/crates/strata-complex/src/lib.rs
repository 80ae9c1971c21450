//! Finite weighted simplicial complexes: the filtration induced by vertex
//! weights, its strata, perversities over those strata, and builders for
//! the spaces used in tests and comparisons.

pub mod builders;
pub mod complex;
pub mod filtered;
pub mod fixtures;
pub mod perversity;
pub mod strata;

pub use complex::{load_complex, parse_document, SpaceDocument, WeightedComplex};
pub use filtered::FilteredSimplex;
pub use perversity::{PValue, Perversity, PerversitySpec};
pub use strata::Stratum;

use thiserror::Error;

#[derive(Error, Debug)]
pub enum ComplexError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("vertex `{name}` has weight {weight}, above the formal dimension {max}")]
    WeightOutOfRange { name: String, weight: usize, max: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("simplex repeats a vertex: {0}")]
    RepeatedVertex(String),
    #[error("a complex needs at least one vertex and one facet")]
    EmptyComplex,
    #[error("no simplex contains a vertex of top weight")]
    NoRegularSimplex,
    #[error("input document never sets `dim`")]
    MissingDimension,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a simplex of the complex: {0}")]
    NotASimplex(String),
    #[error("invalid weight recoding: {0}")]
    BadRecoding(String),
    #[error("invalid perversity: {0}")]
    BadPerversity(String),
    #[error("no stratum with id {0}")]
    UnknownStratum(usize),
}
