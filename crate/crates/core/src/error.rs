use thiserror::Error;

/// Errors raised by the enumeration engines.
///
/// Most variants signal a broken internal invariant (a semi-closed sum that
/// fails to be integral, a series division by `t` that leaves a remainder);
/// the identities guarantee these never fire on correct code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{context}: expected an integer, got {value}")]
    NotIntegral { context: String, value: String },

    #[error("{context}: expected a nonnegative value, got {value}")]
    Negative { context: String, value: String },

    #[error("{context}: division is not exact")]
    InexactDivision { context: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("poset has {size} elements, capacity is {limit}")]
    Capacity { size: usize, limit: usize },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
