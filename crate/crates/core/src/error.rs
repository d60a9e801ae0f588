use thiserror::Error;

use crate::model::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition {parts:?}: {reason}")]
    InvalidComposition { parts: Vec<usize>, reason: String },

    #[error("invalid division: {0}")]
    InvalidDivision(String),

    #[error("element {0} is not in the ground set")]
    NotInGroundSet(Element),

    #[error("element {0} is not admissible")]
    NotAdmissible(Element),

    #[error("not a permutation of the ground set: {0}")]
    NotAPermutation(String),

    #[error("not a C-permutation of the division")]
    NotCPermutation,

    /// A resource guard tripped; `limit` is the configured cap.
    #[error("{what} exceeds the limit of {limit}")]
    LimitExceeded { what: String, limit: usize },

    #[error("{0}")]
    OutOfRange(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coefficient extraction failed: {0}")]
    Extraction(String),

    #[error("invalid permutohedron data: {0}")]
    InvalidPermutohedron(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
