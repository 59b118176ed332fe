//! Problem records: the general recurrence and monomial index tuples.

use alloc::vec::Vec;

use crate::scalar::Scalar;
use crate::sequence::CoefficientSequence;
use crate::{Error, Result};

/// `W(n+1) = A(n)·W(n) + B(n)·W(n-1)` with `W(0) = C0`, `W(1) = C1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralRecurrence<S> {
    /// Coefficient multiplying `W(n)`.
    pub a: CoefficientSequence<S>,
    /// Coefficient multiplying `W(n-1)`.
    pub b: CoefficientSequence<S>,
    /// `W(0)`.
    pub c0: S,
    /// `W(1)`.
    pub c1: S,
}

impl<S: Scalar> GeneralRecurrence<S> {
    /// Fails with [`Error::TrivialInitials`] when `C0 = C1 = 0`.
    ///
    /// `A(i) ≠ 0` is checked later, over the range actually evaluated.
    pub fn new(a: CoefficientSequence<S>, b: CoefficientSequence<S>, c0: S, c1: S) -> Result<Self> {
        if c0.is_zero() && c1.is_zero() {
            return Err(Error::TrivialInitials);
        }
        Ok(Self { a, b, c0, c1 })
    }
}

/// Strictly increasing index tuple `(i1, …, ip)` with `i1 ≥ 1` and gaps of at
/// least two: one monomial `d(i1)·…·d(ip)` of the canonical solution.
///
/// The empty tuple stands for the constant term 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<i64>);

impl IndexTuple {
    /// Validates the gap constraint.
    pub fn new(indices: Vec<i64>) -> Result<Self> {
        if let Some(&first) = indices.first() {
            if first < 1 {
                return Err(Error::InvalidParams(alloc::format!("tuple index {first} < 1")));
            }
        }
        if let Some(w) = indices.windows(2).find(|w| w[1] < w[0] + 2) {
            return Err(Error::InvalidParams(alloc::format!(
                "tuple gap {} -> {} is below 2",
                w[0],
                w[1]
            )));
        }
        Ok(Self(indices))
    }

    /// The constant monomial.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Number of factors.
    pub fn power(&self) -> usize {
        self.0.len()
    }

    /// The indices.
    pub fn indices(&self) -> &[i64] {
        &self.0
    }

    /// `Π d(i_m)`, or 1 for the empty tuple.
    pub fn evaluate<S: Scalar>(&self, d: &CoefficientSequence<S>) -> Result<S> {
        self.0.iter().try_fold(S::one(), |acc, &i| Ok(acc * d.coeff_at(i)?))
    }
}
