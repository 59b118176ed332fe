//! Coefficient sequences `i ↦ d(i)` over a contiguous integer domain.

use alloc::vec::Vec;

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Where the values of a [`CoefficientSequence`] come from.
#[derive(Debug, Clone, PartialEq)]
pub enum Source<S> {
    /// Explicit values; entry 0 belongs to the first domain index.
    Table(Vec<S>),
    /// The same value everywhere in the domain.
    Constant(S),
    /// `num(n) / den(n)`, polynomial coefficients in ascending degree.
    RationalFunction {
        /// Numerator coefficients.
        num: Vec<S>,
        /// Denominator coefficients.
        den: Vec<S>,
    },
}

/// The map `i ↦ d(i)` over the integer interval `[lo, hi]`.
///
/// Access outside the domain is an error, never a default value.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence<S> {
    source: Source<S>,
    // Domain of the underlying source, before shifting.
    lo: i64,
    hi: i64,
    // coeff_at(i) reads the source at i + offset.
    offset: i64,
}

impl<S: Scalar> CoefficientSequence<S> {
    /// Table whose first value sits at `start_index`.
    pub fn table(values: Vec<S>, start_index: i64) -> Self {
        let hi = start_index + values.len() as i64 - 1;
        Self { source: Source::Table(values), lo: start_index, hi, offset: 0 }
    }

    /// 1-indexed table `d(1), d(2), …`.
    pub fn from_values(values: Vec<S>) -> Self {
        Self::table(values, 1)
    }

    /// Constant value over `[lo, hi]`.
    pub fn constant(value: S, lo: i64, hi: i64) -> Self {
        Self { source: Source::Constant(value), lo, hi, offset: 0 }
    }

    /// Rational function of `n` over `[lo, hi]`; fails if the denominator
    /// vanishes anywhere in the domain.
    pub fn rational_function(num: Vec<S>, den: Vec<S>, lo: i64, hi: i64) -> Result<Self> {
        for i in lo..=hi {
            if horner(&den, i).is_zero() {
                return Err(Error::ZeroDenominator { index: i });
            }
        }
        Ok(Self { source: Source::RationalFunction { num, den }, lo, hi, offset: 0 })
    }

    /// Inclusive domain `(lo, hi)`; empty when `lo > hi`.
    pub fn domain(&self) -> (i64, i64) {
        (self.lo - self.offset, self.hi - self.offset)
    }

    /// Whether `lo ≤ i ≤ hi`.
    pub fn contains(&self, i: i64) -> bool {
        let (lo, hi) = self.domain();
        lo <= i && i <= hi
    }

    /// Whether every index in `[from, to]` is in the domain (vacuous if empty).
    pub fn covers(&self, from: i64, to: i64) -> bool {
        from > to || (self.contains(from) && self.contains(to))
    }

    /// Errors unless every index in `[from, to]` is in the domain.
    pub fn require(&self, from: i64, to: i64) -> Result<()> {
        if self.covers(from, to) {
            return Ok(());
        }
        let (lo, hi) = self.domain();
        let index = if self.contains(from) { to } else { from };
        Err(Error::IndexOutOfDomain { index, lo, hi })
    }

    /// The underlying source.
    pub fn source(&self) -> &Source<S> {
        &self.source
    }

    /// `d(i)`.
    pub fn coeff_at(&self, i: i64) -> Result<S> {
        let j = i + self.offset;
        if j < self.lo || j > self.hi {
            let (lo, hi) = self.domain();
            return Err(Error::IndexOutOfDomain { index: i, lo, hi });
        }
        Ok(match &self.source {
            Source::Table(values) => values[(j - self.lo) as usize].clone(),
            Source::Constant(value) => value.clone(),
            Source::RationalFunction { num, den } => horner(num, j) / horner(den, j),
        })
    }

    /// The sequence `m ↦ d(m + by)`.
    pub fn shifted(&self, by: i64) -> Self {
        Self { offset: self.offset + by, ..self.clone() }
    }

    /// Values `d(from), …, d(to)` collected into a table.
    pub fn materialize(&self, from: i64, to: i64) -> Result<Self> {
        let values = (from..=to).map(|i| self.coeff_at(i)).collect::<Result<Vec<_>>>()?;
        Ok(Self::table(values, from))
    }

    /// Converts every value with `f`, keeping the domain.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CoefficientSequence<T> {
        let source = match &self.source {
            Source::Table(values) => Source::Table(values.iter().map(&f).collect()),
            Source::Constant(value) => Source::Constant(f(value)),
            Source::RationalFunction { num, den } => Source::RationalFunction {
                num: num.iter().map(&f).collect(),
                den: den.iter().map(&f).collect(),
            },
        };
        CoefficientSequence { source, lo: self.lo, hi: self.hi, offset: self.offset }
    }
}

fn horner<S: Scalar>(coeffs: &[S], n: i64) -> S {
    let x = S::from_i64(n);
    coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
}
