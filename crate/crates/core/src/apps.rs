//! Continued fractions and finite-difference ODEs, both expressed as
//! general three-term recurrences and solved through [`solve_general`].

use alloc::vec::Vec;

use crate::canonical::solve_general;
use crate::engine::CanonicalSolver;
use crate::recurrence::GeneralRecurrence;
use crate::scalar::Scalar;
use crate::sequence::CoefficientSequence;
use crate::{Error, Result};

/// Numerator/denominator pairs `(h_i, k_i)`, `i = 0..=k`, of the continued
/// fraction `b0 + a1/(b1 + a2/(b2 + …))`.
///
/// `h_i = b_i·h_{i-1} + a_i·h_{i-2}` with `h_{-1} = 1`, `h_0 = b0`, and the
/// same for `k` with `k_{-1} = 0`, `k_0 = 1`. Both are the general recurrence
/// with `A = partial_den`, `B = partial_num`, shifted by one so that the seeds
/// become `W(0), W(1)`.
pub fn cf_convergents<S, E>(
    b0: S,
    partial_num: &CoefficientSequence<S>,
    partial_den: &CoefficientSequence<S>,
    k: usize,
    engine: &E,
) -> Result<Vec<(S, S)>>
where
    S: Scalar,
    E: CanonicalSolver<S> + ?Sized,
{
    if k < 1 {
        return Err(Error::InvalidParams("continued fraction needs k >= 1".into()));
    }
    let numer = GeneralRecurrence::new(partial_den.clone(), partial_num.clone(), S::one(), b0)?;
    let denom = GeneralRecurrence::new(partial_den.clone(), partial_num.clone(), S::zero(), S::one())?;
    (0..=k)
        .map(|i| Ok((solve_general(&numer, i + 1, engine)?, solve_general(&denom, i + 1, engine)?)))
        .collect()
}

/// Grid values of an ODE solution.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeSolution<S> {
    /// Nodes `x0 + i·h`.
    pub x: Vec<S>,
    /// `f` at the nodes.
    pub f: Vec<S>,
}

/// Solves `f'' - U(x)·f = 0` on `x_i = x0 + i·h`, `i = 0..=steps+1`.
///
/// The central difference `f'' ≈ (f(i+1) - 2f(i) + f(i-1)) / h²` turns the
/// equation into the general recurrence with `A(i) = 2 + h²·U(i)` and
/// `B(i) = -1`. `potential` is indexed by node: `U(i) = U(x0 + i·h)`, and
/// must cover `[1, steps]`.
pub fn ode_solve<S, E>(
    potential: &CoefficientSequence<S>,
    x0: S,
    h: S,
    f0: S,
    f1: S,
    steps: usize,
    engine: &E,
) -> Result<OdeSolution<S>>
where
    S: Scalar,
    E: CanonicalSolver<S> + ?Sized,
{
    if steps < 1 {
        return Err(Error::InvalidParams("ode_solve needs steps >= 1".into()));
    }
    if h.to_f64().is_nan() || h.to_f64() <= 0.0 {
        return Err(Error::InvalidParams(alloc::format!("step size {h} must be positive")));
    }
    let h2 = h.clone() * h.clone();
    let two = S::one() + S::one();
    let a = (1..=steps as i64)
        .map(|i| Ok(two.clone() + h2.clone() * potential.coeff_at(i)?))
        .collect::<Result<Vec<_>>>()?;
    let a = CoefficientSequence::from_values(a);
    let b = CoefficientSequence::constant(-S::one(), 1, steps as i64);
    let gen = GeneralRecurrence::new(a, b, f0, f1)?;
    let f = (0..=steps + 1).map(|i| solve_general(&gen, i, engine)).collect::<Result<Vec<_>>>()?;
    let x = (0..=steps + 1).map(|i| x0.clone() + S::from_i64(i as i64) * h.clone()).collect();
    Ok(OdeSolution { x, f })
}
