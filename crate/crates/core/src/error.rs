//! Crate-wide error type and the CLI exit-code mapping.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation received arguments violating its contract.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A stated precondition on an operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An evaluation left the function's domain (non-positive or non-finite
    /// values where positive reals are required).
    #[error("domain error: {0}")]
    Domain(String),

    /// A computed value left the representable range of `f64`.
    #[error("range error: {0}")]
    Range(String),

    /// The least-squares design is rank deficient or too badly conditioned.
    #[error("ill-conditioned design matrix: condition number {condition:.3e} exceeds cap {cap:.1e}")]
    IllConditioned { condition: f64, cap: f64 },

    /// The capital recursion produced a non-positive stock.
    #[error("degenerate capital stock at year {year}: K = {value}")]
    DegenerateCapital { year: i32, value: f64 },

    /// A CSV header is missing a required column.
    #[error("schema error in {path}: missing column `{column}`")]
    MissingColumn { path: String, column: String },

    /// A CSV cell failed to parse.
    #[error("parse error in {path} at row {row}, column `{column}`: {message}")]
    Parse {
        path: String,
        row: usize,
        column: String,
        message: String,
    },

    /// Input data violates a structural rule (duplicate years and the like).
    #[error("integrity error in {path}: {message}")]
    Integrity { path: String, message: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Exit code for the CLI: 2 for numeric failures (ill-conditioning,
    /// overflow, degenerate capital), 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Range(_)
            | Error::IllConditioned { .. }
            | Error::DegenerateCapital { .. } => 2,
            _ => 1,
        }
    }
}
