//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CherednikError {
    /// Structural mismatch between operands (variable counts, group specs, sizes).
    #[error("structure mismatch: {0}")]
    Structure(String),

    /// Division by zero or a zero denominator.
    #[error("division by zero")]
    DivisionByZero,

    /// Inexact polynomial division where exactness was required.
    #[error("inexact polynomial division")]
    InexactDivision,

    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Parse failure for scalars, group specs, expressions or files.
    #[error("parse error: {0}")]
    Parse(String),

    /// Unsupported input (e.g. irrational spectrum in exact mode).
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// Interpolation degree too low to determine an operator.
    #[error("insufficient degree: {0}")]
    InsufficientDegree(String),

    /// An internally constructed object failed its own consistency check.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CherednikError>;
