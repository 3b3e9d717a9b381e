//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and dynamics layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// An enclosure could not be refined enough to decide a comparison.
    #[error("insufficient precision: comparison undecided at width 2^-{max_bits}")]
    InsufficientPrecision { max_bits: u32 },

    /// Input outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A requested expansion ran past a finite (rational) one.  The valid
    /// prefix is attached so callers can continue with what exists.
    #[error("expansion exhausted after {available} quotients (requested {requested})")]
    Truncated { available: usize, requested: usize },

    /// An orbit point provably coincides with a partition boundary.
    #[error("boundary hit at step {step}")]
    BoundaryHit { step: usize },

    /// An interval-exchange orbit landed exactly on a discontinuity.
    #[error("discontinuity hit at step {step}")]
    DiscontinuityHit { step: usize },

    /// Two quadratic values live in different fields Q(sqrt(d)).
    #[error("mixed quadratic fields: sqrt({left}) vs sqrt({right})")]
    MixedFields { left: String, right: String },

    /// A distance scan found a certified tie, which the record convention
    /// treats as an error rather than silently extending the record.
    #[error("tie at step {step}")]
    Tie { step: usize },

    /// A fixed-precision symbolic comparison could not be certified.
    #[error("uncertain symbol at step {step}")]
    UncertainSymbol { step: usize },

    /// Construction of a composite object failed an internal consistency check.
    #[error("construction error: {0}")]
    Construction(String),

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
