//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input violates a documented precondition (bad label, mismatched
    /// moduli, series domain, ...).
    #[error("rejected input: {0}")]
    RejectedInput(String),

    /// A pole of the function was hit exactly.
    #[error("pole at s = {0}")]
    Pole(String),

    /// A numerical self-check failed (winding number far from an integer,
    /// rotation residue above tolerance, ...). The computation cannot be
    /// trusted at the requested accuracy.
    #[error("accuracy failure: {0}")]
    AccuracyFailure(String),

    /// Requested cache entry does not exist.
    #[error("not found in cache: {0}")]
    NotFound(String),

    /// Zero list is not certified complete, so the requested operation
    /// refuses to produce a verdict.
    #[error("uncertified zero list: {0}")]
    Uncertified(String),

    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
