use alloc::string::String;
use num_bigint::BigUint;

/// Errors raised by the solvers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A coefficient was requested outside the sequence domain.
    #[error("index {index} outside coefficient domain [{lo}, {hi}]")]
    IndexOutOfDomain {
        /// Requested index.
        index: i64,
        /// Lower domain bound.
        lo: i64,
        /// Upper domain bound.
        hi: i64,
    },
    /// A rational-function coefficient has a vanishing denominator.
    #[error("rational function denominator vanishes at n = {index}")]
    ZeroDenominator {
        /// Offending index.
        index: i64,
    },
    /// `A(index) = 0`; the canonical substitution is undefined.
    #[error("zero pivot: A({index}) = 0")]
    ZeroPivot {
        /// Offending index.
        index: i64,
    },
    /// Both initial values are zero, so the solution vanishes identically.
    #[error("trivial initial conditions C0 = C1 = 0")]
    TrivialInitials,
    /// Parameters violate an operation precondition.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// An index passed to `encode` exceeds its dimension.
    #[error("index {index} at position {position} outside [1, {bound}]")]
    IndexOutOfRange {
        /// Zero-based position in the tuple.
        position: usize,
        /// Offending index.
        index: i64,
        /// Dimension size.
        bound: u64,
    },
    /// A global index passed to `decode` is outside `[1, ΠN_j]`.
    #[error("global index {q} outside [1, {max}]")]
    QOutOfRange {
        /// Offending global index.
        q: u64,
        /// Grid size.
        max: u64,
    },
    /// The grid exceeds the configured point budget.
    #[error("grid of {points} points exceeds limit {limit}")]
    GridTooLarge {
        /// Total grid points requested.
        points: BigUint,
        /// Configured limit.
        limit: u64,
    },
    /// A list has the wrong length.
    #[error("length mismatch: expected at most {expected}, found {found}")]
    LengthMismatch {
        /// Maximum accepted length.
        expected: usize,
        /// Actual length.
        found: usize,
    },
    /// `n` is above a practical evaluation guard.
    #[error("n = {n} exceeds the limit {limit}")]
    TooLarge {
        /// Requested order.
        n: usize,
        /// Guard value.
        limit: usize,
    },
}
