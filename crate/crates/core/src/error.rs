//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// The modulus n must be at least 2.
    #[error("invalid modulus {0}: n must be at least 2")]
    InvalidModulus(u32),

    /// Two values that must share a modulus or ambient space do not.
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    /// A configured combinatorial bound (permutation size, enumeration depth)
    /// was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// An operation was handed input that violates its documented contract.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal consistency condition failed, signalling malformed input
    /// (e.g. a sequence of steps that is not a valid path).
    #[error("inconsistent data: {0}")]
    Inconsistency(String),

    /// Two redundant computation routes disagreed.
    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// The operation is not defined for the given input (e.g. the closed
    /// theta-function formula requires a fundamental weight).
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
