//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by an exact zero (rational function or cyclotomic element).
    #[error("division by zero")]
    DivisionByZero,

    /// The denominator vanishes at q = 1; no limit is taken.
    #[error("pole at q = 1")]
    PoleAtOne,

    /// The denominator is divisible by the level's cyclotomic polynomial.
    #[error("pole at a primitive root of unity of level {0}")]
    PoleAtRoot(u32),

    /// Tuple relations require a consecutive pair of index intervals.
    #[error("intervals do not form a consecutive pair")]
    NotConsecutive,

    /// The cell set is not a valid skew shape with interval diagonals.
    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    /// Bad argument to an operation (out-of-range connector index, empty
    /// index part, unknown variant, ...).
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
