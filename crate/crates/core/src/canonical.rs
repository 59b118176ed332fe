//! Reduction of `W(n+1) = A(n)·W(n) + B(n)·W(n-1)` to the canonical form
//! `a(n+1) = a(n) + d(n)·a(n-1)`, and back.
//!
//! With prefix products `P(n) = A(1)·…·A(n)` (`P(0) = 1`) the substitution
//! `W(n+1) = P(n)·a(n+1)` gives `d(n) = B(n) / (A(n)·A(n-1))`, taking
//! `A(0) = 1` so that `d(1) = B(1)/A(1)`.
//!
//! Note the direction: `a` is `W` *divided* by the prefix product. The
//! multiplied form `a(n+1) = W(n+1)·P(n)` does not produce the canonical
//! recurrence.
//!
//! General initial values are handled by linearity. The canonical solution
//! with `a(0) = C0`, `a(1) = C1` is, for `n ≥ 2`,
//!
//! ```text
//! a(n) = C1·a'(n-1) + C0·d(1)·a''(n-2)
//! ```
//!
//! where `a'`, `a''` are the unit-initial solutions for the shifted
//! sequences `d'(m) = d(m+1)` and `d''(m) = d(m+2)`.

use alloc::vec::Vec;

use crate::engine::CanonicalSolver;
use crate::recurrence::GeneralRecurrence;
use crate::scalar::Scalar;
use crate::sequence::CoefficientSequence;
use crate::{Error, Result};

/// Canonical coefficients plus what is needed to map back.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalizationResult<S> {
    /// `d(1), …, d(n_max)`.
    pub d: CoefficientSequence<S>,
    /// `P(0), …, P(n_max)`.
    pub prefix_products: Vec<S>,
    /// `W(0)`.
    pub c0: S,
    /// `W(1)`.
    pub c1: S,
}

/// Canonical coefficients `d(1..=n_max)` and prefix products `P(0..=n_max)`.
pub fn to_canonical<S: Scalar>(gen: &GeneralRecurrence<S>, n_max: usize) -> Result<CanonicalizationResult<S>> {
    let mut d = Vec::with_capacity(n_max);
    let mut prefix = Vec::with_capacity(n_max + 1);
    prefix.push(S::one());
    let mut a_prev = S::one();
    for i in 1..=n_max as i64 {
        let a = gen.a.coeff_at(i)?;
        if a.is_zero() {
            return Err(Error::ZeroPivot { index: i });
        }
        let b = gen.b.coeff_at(i)?;
        d.push(b / (a.clone() * a_prev));
        let p = prefix.last().expect("P(0) present").clone() * a.clone();
        prefix.push(p);
        a_prev = a;
    }
    Ok(CanonicalizationResult {
        d: CoefficientSequence::from_values(d),
        prefix_products: prefix,
        c0: gen.c0.clone(),
        c1: gen.c1.clone(),
    })
}

/// `W(0) = a(0)` and `W(m) = a(m)·P(m-1)` for `m ≥ 1`.
pub fn reconstruct_general<S: Scalar>(a_values: &[S], result: &CanonicalizationResult<S>) -> Result<Vec<S>> {
    let expected = result.prefix_products.len() + 1;
    if a_values.len() > expected {
        return Err(Error::LengthMismatch { expected, found: a_values.len() });
    }
    Ok(a_values
        .iter()
        .enumerate()
        .map(|(m, a)| match m {
            0 => a.clone(),
            _ => a.clone() * result.prefix_products[m - 1].clone(),
        })
        .collect())
}

// a(m) for the unit-initial problem; a(0) = 1 needs no engine call.
fn unit_solution<S: Scalar, E: CanonicalSolver<S> + ?Sized>(engine: &E, d: &CoefficientSequence<S>, m: usize) -> Result<S> {
    match m {
        0 => Ok(S::one()),
        _ => engine.solve(d, m - 1),
    }
}

/// `W(n)` of the general recurrence, through any canonical solver.
pub fn solve_general<S: Scalar, E: CanonicalSolver<S> + ?Sized>(gen: &GeneralRecurrence<S>, n: usize, engine: &E) -> Result<S> {
    match n {
        0 => return Ok(gen.c0.clone()),
        1 => return Ok(gen.c1.clone()),
        _ => {}
    }
    let canon = to_canonical(gen, n - 1)?;
    let d = &canon.d;
    let mut a = gen.c1.clone() * unit_solution(engine, &d.shifted(1), n - 1)?;
    if !gen.c0.is_zero() {
        let d1 = d.coeff_at(1)?;
        a = a + gen.c0.clone() * d1 * unit_solution(engine, &d.shifted(2), n - 2)?;
    }
    Ok(a * canon.prefix_products[n - 1].clone())
}
