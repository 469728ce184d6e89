use thiserror::Error;

/// Errors shared by every module of the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration exceeded its configured budget. Never a silent truncation.
    #[error("budget exceeded: {context} (limit {limit})")]
    Budget { context: String, limit: u64 },

    /// Input text or JSON did not parse under the declared format.
    #[error("parse error: {0}")]
    Parse(String),

    /// A precondition of an operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Malformed structure, e.g. a non-total multiplication table. Distinct
    /// from an axiom failure on a well-formed structure.
    #[error("structural error: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;
