//! Error type shared by all modules of the crate.

use num::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two surds with different irrational parts were combined.
    #[error("mismatched radicands: sqrt({0}) vs sqrt({1})")]
    MismatchedRadicand(BigInt, BigInt),

    /// Division by an exactly-zero value.
    #[error("division by zero")]
    DivisionByZero,

    /// A radicand must be positive.
    #[error("radicand must be positive, got {0}")]
    NonPositiveRadicand(BigInt),

    /// A matrix was expected to lie in the six-element symmetry group of
    /// {0, 1, inf} but does not.
    #[error("matrix is not in the symbol symmetry group")]
    NotInSymmetryGroup,

    /// The operation only makes sense for irrational inputs.
    #[error("rational input")]
    RationalInput,

    /// A decimal input ran out of certified digits before producing the
    /// requested number of terms.
    #[error("precision exhausted after {certified} certified terms")]
    PrecisionExhausted { certified: usize },

    /// A symbol stream was not expanded far enough to answer the query.
    #[error("symbol stream too short ({have} symbols); expand further")]
    InsufficientExpansion { have: usize },

    /// The dynamical maps act on irrationals in the open unit interval.
    #[error("value is outside the open unit interval")]
    OutsideUnitInterval,

    /// Malformed textual input (value expression, delta word, ...).
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// Two routes or a stated invariant disagreed.
    #[error("cross-check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
