//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: requested {requested}, limit {limit}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("interval is empty: the lower permutation is not contained in the upper one")]
    NotComparable,

    #[error("permutation is not layered")]
    NotLayered,

    #[error("inflation blocks must be nonempty")]
    EmptyBlock,

    #[error("shape does not admit a full rook placement")]
    InadmissibleShape,

    #[error("not enough terms: need {needed}, have {available}")]
    InsufficientTerms { needed: usize, available: usize },

    #[error("division by zero at index {index}")]
    DivisionByZero { index: usize },

    #[error("search exceeded its state budget of {budget} nodes")]
    BudgetExceeded { budget: usize },

    #[error("membership oracle is not downward closed: {member} is in the class but its deletion {deletion} is not")]
    ClosureViolation { member: String, deletion: String },

    #[error("invariant violated (implementation bug): {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}
