//! Interchangeable solvers for the canonical recurrence.

use crate::closedform::solve_closed_form_counted;
use crate::convolve::solve_via_flat_counted;
use crate::oracle::iterate_canonical;
use crate::report::{Cost, Method};
use crate::rsum::solve_via_rsum_counted;
use crate::scalar::Scalar;
use crate::sequence::CoefficientSequence;
use crate::Result;

/// Default point budget for the grid-based methods.
pub const DEFAULT_MAX_GRID: u64 = 100_000_000;

/// Anything that computes `a(n+1)` for `a(m+1) = a(m) + d(m)·a(m-1)`,
/// `a(0) = a(1) = 1`.
pub trait CanonicalSolver<S: Scalar> {
    /// `a(n+1)` with the work it took.
    fn solve_counted(&self, d: &CoefficientSequence<S>, n: usize) -> Result<(S, Cost)>;

    /// `a(n+1)`.
    fn solve(&self, d: &CoefficientSequence<S>, n: usize) -> Result<S> {
        self.solve_counted(d, n).map(|(v, _)| v)
    }
}

/// One of the built-in methods plus the grid budget it runs under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Engine {
    /// Which method to run.
    pub method: Method,
    /// Point budget for [`Method::Flat`] and [`Method::Closed`].
    pub max_grid: u64,
}

impl Engine {
    /// Engine with the default grid budget.
    pub fn new(method: Method) -> Self {
        Self { method, max_grid: DEFAULT_MAX_GRID }
    }

    /// Replaces the grid budget.
    pub fn with_max_grid(self, max_grid: u64) -> Self {
        Self { max_grid, ..self }
    }
}

impl From<Method> for Engine {
    fn from(method: Method) -> Self {
        Self::new(method)
    }
}

impl<S: Scalar> CanonicalSolver<S> for Engine {
    fn solve_counted(&self, d: &CoefficientSequence<S>, n: usize) -> Result<(S, Cost)> {
        match self.method {
            Method::Iterative => {
                let mut a = iterate_canonical(d, n, S::one(), S::one())?;
                let value = a.pop().expect("iteration yields n + 2 values");
                Ok((value, Cost { terms_evaluated: n as u64, grid_points: None }))
            }
            Method::RSum => solve_via_rsum_counted(d, n),
            Method::Flat => solve_via_flat_counted(d, n, self.max_grid),
            Method::Closed => solve_closed_form_counted(d, n, self.max_grid),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn all_engines_agree_on_fibonacci() {
        let d = CoefficientSequence::constant(Rational::from_integer(1.into()), 1, 30);
        for method in Method::ALL {
            let v = Engine::new(method).solve(&d, 9).unwrap();
            assert_eq!(v, Rational::from_integer(89.into()), "{method}");
        }
    }

    #[test]
    fn costs_per_method() {
        let d = CoefficientSequence::constant(1.0f64, 1, 30);
        let (_, iter) = Engine::new(Method::Iterative).solve_counted(&d, 4).unwrap();
        assert_eq!(iter, Cost { terms_evaluated: 4, grid_points: None });
        let (_, rsum) = Engine::new(Method::RSum).solve_counted(&d, 4).unwrap();
        assert_eq!(rsum, Cost { terms_evaluated: 7, grid_points: None });
        // Σ_p M(4, p) = 4 + 8
        for method in [Method::Flat, Method::Closed] {
            let (_, c) = Engine::new(method).solve_counted(&d, 4).unwrap();
            assert_eq!(c, Cost { terms_evaluated: 7, grid_points: Some(12) });
        }
    }
}
