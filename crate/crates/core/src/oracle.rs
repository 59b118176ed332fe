//! Ground-truth engines: direct iteration, brute-force monomial enumeration
//! and symbolic expansion of the canonical solution.
//!
//! Nothing here shares code with the R-sum or grid solvers, so each of them
//! can be checked against these routines.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::recurrence::{GeneralRecurrence, IndexTuple};
use crate::scalar::Scalar;
use crate::sequence::CoefficientSequence;
use crate::{Error, Result};

/// Largest `n` accepted by [`symbolic_solve`]; the term count is
/// `Fibonacci(n + 2)`.
pub const SYMBOLIC_LIMIT: usize = 24;

/// `(a(0), …, a(n+1))` for `a(m+1) = a(m) + d(m)·a(m-1)`.
pub fn iterate_canonical<S: Scalar>(d: &CoefficientSequence<S>, n: usize, a0: S, a1: S) -> Result<Vec<S>> {
    let mut out = Vec::with_capacity(n + 2);
    out.push(a0);
    out.push(a1);
    for m in 1..=n {
        let next = out[m].clone() + d.coeff_at(m as i64)? * out[m - 1].clone();
        out.push(next);
    }
    Ok(out)
}

/// `(W(0), …, W(n+1))` by direct iteration of the general recurrence.
pub fn iterate_general<S: Scalar>(gen: &GeneralRecurrence<S>, n: usize) -> Result<Vec<S>> {
    let mut out = Vec::with_capacity(n + 2);
    out.push(gen.c0.clone());
    out.push(gen.c1.clone());
    for m in 1..=n {
        let i = m as i64;
        let next = gen.a.coeff_at(i)? * out[m].clone() + gen.b.coeff_at(i)? * out[m - 1].clone();
        out.push(next);
    }
    Ok(out)
}

/// Largest power present in `a(n+1)`: `⌊(n+1)/2⌋`.
pub fn max_power(n: usize) -> usize {
    n.div_ceil(2)
}

/// All tuples `1 ≤ i1`, `i(m) ≥ i(m-1) + 2`, `ip ≤ n`, lexicographically.
///
/// There are `C(n-p+1, p)` of them.
pub fn enumerate_monomials(n: usize, p: usize) -> Result<Vec<IndexTuple>> {
    if n < 1 || p < 1 || p > max_power(n) {
        return Err(Error::InvalidParams(alloc::format!(
            "enumerate_monomials needs n >= 1 and 1 <= p <= (n+1)/2, got n={n}, p={p}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(p);
    extend_tuples(n as i64, p, 1, &mut current, &mut out);
    Ok(out)
}

fn extend_tuples(n: i64, p: usize, first: i64, current: &mut Vec<i64>, out: &mut Vec<IndexTuple>) {
    if current.len() == p {
        out.push(IndexTuple::new(current.clone()).expect("gap constraint holds by construction"));
        return;
    }
    for i in first..=n {
        current.push(i);
        extend_tuples(n, p, i + 2, current, out);
        current.pop();
    }
}

/// Multilinear polynomial in `d1, d2, …` with unit coefficients, kept
/// sorted by power and then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    terms: Vec<IndexTuple>,
}

impl SparsePolynomial {
    /// Normalizes: sorts and drops duplicates.
    pub fn from_terms(mut terms: Vec<IndexTuple>) -> Self {
        terms.sort_by(|a, b| a.power().cmp(&b.power()).then_with(|| a.cmp(b)));
        terms.dedup();
        Self { terms }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> &[IndexTuple] {
        &self.terms
    }

    /// Number of monomials, counting the constant.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether the polynomial has no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms of power `p`.
    pub fn class(&self, p: usize) -> impl Iterator<Item = &IndexTuple> {
        self.terms.iter().filter(move |t| t.power() == p)
    }

    /// Substitutes concrete coefficients.
    pub fn evaluate<S: Scalar>(&self, d: &CoefficientSequence<S>) -> Result<S> {
        self.terms.iter().try_fold(S::zero(), |acc, t| Ok(acc + t.evaluate(d)?))
    }

    /// Parses the text form produced by `Display`, e.g. `"1 + d1 + d1*d3"`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |what: &str| Error::InvalidParams(alloc::format!("bad monomial {what:?}"));
        let mut terms = Vec::new();
        for raw in text.split('+') {
            let term = raw.trim();
            if term == "1" {
                terms.push(IndexTuple::empty());
                continue;
            }
            let indices = term
                .split('*')
                .map(|f| f.trim().strip_prefix('d').and_then(|i| i.parse::<i64>().ok()).ok_or_else(|| bad(term)))
                .collect::<Result<Vec<_>>>()?;
            terms.push(IndexTuple::new(indices)?);
        }
        Ok(Self::from_terms(terms))
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, term) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if term.power() == 0 {
                f.write_str("1")?;
            }
            for (m, i) in term.indices().iter().enumerate() {
                if m > 0 {
                    f.write_str("*")?;
                }
                write!(f, "d{i}")?;
            }
        }
        Ok(())
    }
}

/// `a(n+1)` as a polynomial in `d1 … dn`.
pub fn symbolic_solve(n: usize) -> Result<SparsePolynomial> {
    if n > SYMBOLIC_LIMIT {
        return Err(Error::TooLarge { n, limit: SYMBOLIC_LIMIT });
    }
    let mut terms = alloc::vec![IndexTuple::empty()];
    for p in 1..=max_power(n) {
        terms.extend(enumerate_monomials(n, p)?);
    }
    Ok(SparsePolynomial::from_terms(terms))
}

/// Rendered [`symbolic_solve`].
pub fn render_symbolic(n: usize) -> Result<String> {
    Ok(alloc::format!("{}", symbolic_solve(n)?))
}
