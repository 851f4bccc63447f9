//! Error type shared across the crate.
//!
//! Invalid *answers* (a partition that does not verify, say) are reports,
//! not errors; the error type covers malformed inputs, precondition
//! violations, explicit size refusals, and internal invariant failures.

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Text input could not be parsed; positions are 1-based.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    /// A vertex or edge index outside 1..=n.
    #[error("index out of range: {0}")]
    OutOfRange(String),

    /// An operation requiring balanced X/Y subsets got unequal sizes.
    #[error("unbalanced vertex sets: {0}")]
    Unbalanced(String),

    /// The exact oracle refuses instances above its configured size cap.
    #[error("instance size n={n} exceeds the oracle limit {limit}; pass a larger limit explicitly to acknowledge the exponential cost")]
    OracleLimit { n: usize, limit: usize },

    /// A certificate or witness failed its own validity check.
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    /// A documented precondition of an operation was violated by the caller.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal invariant failed: this is a bug in the solver, never a
    /// valid outcome. Callers surface it with a diagnostic bundle.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
