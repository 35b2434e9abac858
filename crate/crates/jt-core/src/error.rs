//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum JtError {
    /// Requested an algebra we deliberately do not model (octonions).
    #[error("exceptional algebra unsupported: {0}")]
    Unsupported(String),

    /// Inconsistent or out-of-range construction parameters.
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    /// Coordinate vector length does not match the algebra dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Input violates a mathematical precondition of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An input object fails its declared invariants.
    #[error("validation failed: {0}")]
    Validation(String),

    /// A numerical procedure failed to reach its target accuracy.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, JtError>;
