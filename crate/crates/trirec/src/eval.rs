//! Timed evaluation of a canonical problem by one method.

use std::time::Instant;

use trirec_core::{CanonicalSolver, CoefficientSequence, Engine, EvalReport, Result, Scalar};

/// Which scalar type to compute in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ScalarMode {
    /// Exact rationals.
    Rational,
    /// IEEE binary64.
    Float64,
}

impl ScalarMode {
    /// Name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            ScalarMode::Rational => "rational",
            ScalarMode::Float64 => "float64",
        }
    }
}

/// Runs `engine` for `a(n+1)` and records value, cost and wall time.
pub fn evaluate<S: Scalar>(engine: &Engine, d: &CoefficientSequence<S>, n: usize) -> Result<EvalReport<S>> {
    let start = Instant::now();
    let (value, cost) = engine.solve_counted(d, n)?;
    Ok(EvalReport::new(engine.method, value, cost, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use trirec_core::{Method, Rational};

    #[test]
    fn closed_form_report() {
        let d = CoefficientSequence::constant(Rational::from_integer(1.into()), 1, 20);
        let r = evaluate(&Engine::new(Method::Closed), &d, 9).unwrap();
        assert_eq!(r.value, Rational::from_integer(89.into()));
        assert_eq!(r.method, Method::Closed);
        assert_eq!(r.terms_evaluated, 88);
        assert!(r.terms_evaluated <= r.grid_points.unwrap());
    }
}
