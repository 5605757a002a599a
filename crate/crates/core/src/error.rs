use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps these onto process exit codes, so the variants are kept
/// coarse: what went wrong, not where.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed values: vertex ids out of range, inverted intervals,
    /// negative delays, loops, empty paths.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// API misuse: duplicate or unknown edge handles, fastest-path queries
    /// on an identity profile.
    #[error("usage error: {0}")]
    Usage(String),

    /// Text format errors, with the 1-based line number of the offender.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Structurally valid input outside an algorithm's supported class,
    /// e.g. nonzero delays or directed graphs fed to the profile sweep.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// Instance too large for an exact oracle, or generator parameters
    /// whose derived times would overflow.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
