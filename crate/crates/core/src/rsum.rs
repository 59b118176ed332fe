//! Recursive sums (R-sums) and the power-class solver built on them.
//!
//! A general R-sum with order `N`, power `k`, recursive shift `Δ` and initial
//! shift `Δ0` is the nested sum
//!
//! ```text
//! R(N,k,Δ,Δ0) = Σ_{i1=Δ0+Δ}^{N+Δ} d(i1) · Σ_{i2=i1+Δ}^{N+2Δ} d(i2) · … · Σ_{ik=i(k-1)+Δ}^{N+kΔ} d(ik)
//! ```
//!
//! The reduced sum `R̃(N,k) = R(N,k,2,-1)` enumerates exactly the gap-2 index
//! tuples, and `S(n,p) = R̃(n-2p, p)` is the sum of all power-`p` monomials of
//! the canonical solution, so `a(n+1) = 1 + Σ_p S(n,p)`.
//!
//! Evaluation is plain depth-first recursion in ascending index order; the
//! cost is the number of monomials.

use crate::oracle::max_power;
use crate::report::Cost;
use crate::scalar::Scalar;
use crate::sequence::CoefficientSequence;
use crate::{Error, Result};

/// Largest `n` accepted by [`solve_via_rsum`]; bounds recursion depth.
pub const RSUM_MAX_N: usize = 10_000;

/// Parameters `(N, k, Δ, Δ0)` of a general R-sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RSumParams {
    /// Order `N`; must satisfy `N ≥ Δ0`.
    pub order: i64,
    /// Power `k ≥ 1`: the number of nested sums.
    pub power: usize,
    /// Recursive shift `Δ ≥ 1`.
    pub shift: i64,
    /// Initial shift `Δ0` (the implicit `i0`).
    pub initial_shift: i64,
}

impl RSumParams {
    /// `R(order, power, shift, initial_shift)`.
    pub fn new(order: i64, power: usize, shift: i64, initial_shift: i64) -> Self {
        Self { order, power, shift, initial_shift }
    }

    /// Parameters of the reduced sum `R̃(N, k)`.
    pub fn reduced(order: i64, power: usize) -> Self {
        Self::new(order, power, 2, -1)
    }

    fn validate(&self) -> Result<()> {
        if self.power < 1 {
            return Err(Error::InvalidParams("R-sum power must be at least 1".into()));
        }
        if self.order < self.initial_shift {
            return Err(Error::InvalidParams(alloc::format!(
                "R-sum order {} is below the initial shift {}",
                self.order,
                self.initial_shift
            )));
        }
        // Non-positive shifts make the index set unbounded below.
        if self.shift < 1 {
            return Err(Error::InvalidParams(alloc::format!("R-sum shift {} must be at least 1", self.shift)));
        }
        Ok(())
    }
}

struct Walker<'a, S> {
    d: &'a CoefficientSequence<S>,
    params: RSumParams,
    leaves: u64,
}

impl<S: Scalar> Walker<'_, S> {
    // Sum over i_m from prev + Δ to N + mΔ; empty ranges contribute 0.
    fn level(&mut self, m: usize, prev: i64) -> Result<S> {
        let RSumParams { order, power, shift, .. } = self.params;
        let upper = order + m as i64 * shift;
        let mut acc = S::zero();
        for i in prev + shift..=upper {
            let di = self.d.coeff_at(i)?;
            if m == power {
                self.leaves += 1;
                acc = acc + di;
            } else {
                acc = acc + di * self.level(m + 1, i)?;
            }
        }
        Ok(acc)
    }
}

/// General R-sum together with the number of monomials visited.
pub fn rsum_general_counted<S: Scalar>(d: &CoefficientSequence<S>, params: RSumParams) -> Result<(S, u64)> {
    params.validate()?;
    let mut walker = Walker { d, params, leaves: 0 };
    let value = walker.level(1, params.initial_shift)?;
    Ok((value, walker.leaves))
}

/// General R-sum `R(N, k, Δ, Δ0)`.
pub fn rsum_general<S: Scalar>(d: &CoefficientSequence<S>, params: RSumParams) -> Result<S> {
    rsum_general_counted(d, params).map(|(v, _)| v)
}

/// Reduced R-sum `R̃(N, k) = R(N, k, 2, -1)`.
pub fn rsum_reduced<S: Scalar>(d: &CoefficientSequence<S>, order: i64, power: usize) -> Result<S> {
    rsum_general(d, RSumParams::reduced(order, power))
}

fn check_class(n: usize, p: usize) -> Result<()> {
    if p < 1 || p > max_power(n) {
        return Err(Error::InvalidParams(alloc::format!("power class p={p} outside [1, {}] for n={n}", max_power(n))));
    }
    Ok(())
}

/// `S(n, p) = R̃(n - 2p, p)`: all power-`p` monomials of `a(n+1)`.
pub fn s_power_class<S: Scalar>(d: &CoefficientSequence<S>, n: usize, p: usize) -> Result<S> {
    s_power_class_counted(d, n, p).map(|(v, _)| v)
}

fn s_power_class_counted<S: Scalar>(d: &CoefficientSequence<S>, n: usize, p: usize) -> Result<(S, u64)> {
    check_class(n, p)?;
    rsum_general_counted(d, RSumParams::reduced(n as i64 - 2 * p as i64, p))
}

/// `a(n+1) = 1 + Σ_{p=1}^{⌊(n+1)/2⌋} S(n, p)` with its cost.
pub fn solve_via_rsum_counted<S: Scalar>(d: &CoefficientSequence<S>, n: usize) -> Result<(S, Cost)> {
    if n > RSUM_MAX_N {
        return Err(Error::TooLarge { n, limit: RSUM_MAX_N });
    }
    d.require(1, n as i64)?;
    let mut value = S::one();
    let mut cost = Cost::default();
    for p in 1..=max_power(n) {
        let (s, leaves) = s_power_class_counted(d, n, p)?;
        value = value + s;
        cost.terms_evaluated += leaves;
    }
    Ok((value, cost))
}

/// `a(n+1)` of the canonical recurrence via power-class R-sums.
pub fn solve_via_rsum<S: Scalar>(d: &CoefficientSequence<S>, n: usize) -> Result<S> {
    solve_via_rsum_counted(d, n).map(|(v, _)| v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::iterate_canonical;
    use crate::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    // d(i) = 10 + i as exact values, so sums identify their monomials.
    fn probe(lo: i64, hi: i64) -> CoefficientSequence<Rational> {
        CoefficientSequence::table((lo..=hi).map(|i| q(10 + i)).collect(), lo)
    }

    fn ones(hi: i64) -> CoefficientSequence<Rational> {
        CoefficientSequence::constant(q(1), 1, hi)
    }

    fn d(i: i64) -> Rational {
        q(10 + i)
    }

    #[test]
    fn collapse_when_order_equals_initial_shift() {
        let s = probe(-5, 20);
        assert_eq!(rsum_general(&s, RSumParams::new(2, 2, 2, 2)).unwrap(), d(4) * d(6));
        assert_eq!(rsum_general(&s, RSumParams::new(-1, 2, 2, -1)).unwrap(), d(1) * d(3));
    }

    #[test]
    fn single_sum() {
        let s = probe(-5, 20);
        assert_eq!(rsum_general(&s, RSumParams::new(1, 1, 1, 0)).unwrap(), d(1) + d(2));
    }

    #[test]
    fn reduced_examples() {
        let s = probe(1, 20);
        assert_eq!(rsum_reduced(&s, 0, 2).unwrap(), d(1) * (d(3) + d(4)) + d(2) * d(4));
        assert_eq!(rsum_reduced(&s, -1, 3).unwrap(), d(1) * d(3) * d(5));
        assert_eq!(rsum_reduced(&s, 2, 1).unwrap(), d(1) + d(2) + d(3) + d(4));
    }

    #[test]
    fn invalid_params() {
        let s = probe(-5, 20);
        assert!(matches!(rsum_general(&s, RSumParams::new(0, 1, 1, 1)), Err(Error::InvalidParams(_))));
        assert!(matches!(rsum_general(&s, RSumParams::new(1, 0, 1, 0)), Err(Error::InvalidParams(_))));
        assert!(matches!(rsum_general(&s, RSumParams::new(1, 1, 0, 0)), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn missing_coefficients_are_reported() {
        let s = probe(1, 5);
        assert!(matches!(rsum_reduced(&s, 2, 2), Err(Error::IndexOutOfDomain { index: 6, .. })));
    }

    #[test]
    fn s_power_class_examples() {
        let s = probe(1, 10);
        assert_eq!(s_power_class(&s, 4, 2).unwrap(), d(1) * d(3) + d(1) * d(4) + d(2) * d(4));
        assert_eq!(s_power_class(&s, 3, 2).unwrap(), d(1) * d(3));
        assert_eq!(s_power_class(&ones(5), 5, 2).unwrap(), q(6));
        assert!(s_power_class(&s, 4, 3).is_err());
        assert!(s_power_class(&s, 4, 0).is_err());
    }

    #[test]
    fn s_power_class_touches_at_most_n() {
        let s = probe(1, 7);
        for p in 1..=4 {
            assert!(s_power_class(&s, 7, p).is_ok());
        }
    }

    #[test]
    fn solve_examples() {
        let s = CoefficientSequence::from_values(vec![q(2), q(3), q(5)]);
        assert_eq!(solve_via_rsum(&s, 3).unwrap(), q(21));
        assert_eq!(solve_via_rsum(&s, 0).unwrap(), q(1));
        assert_eq!(solve_via_rsum(&ones(9), 9).unwrap(), q(89));
    }

    #[test]
    fn rsum_cost_counts_monomials() {
        let (_, cost) = solve_via_rsum_counted(&ones(10), 10).unwrap();
        // Fibonacci(12) - 1 non-constant monomials
        assert_eq!(cost.terms_evaluated, 143);
    }

    #[test]
    fn max_power_is_attained_under_unit_coefficients() {
        for n in 1..=20 {
            let top = max_power(n);
            assert_ne!(s_power_class(&ones(n as i64), n, top).unwrap(), q(0));
            assert!(s_power_class(&ones(n as i64), n, top + 1).is_err());
        }
    }

    #[test]
    fn float_mode_matches_exact_on_integers() {
        let exact = CoefficientSequence::from_values((1..=12).map(q).collect());
        let float = exact.map(f64::from_rational);
        for n in 0..=12 {
            let want = solve_via_rsum(&exact, n).unwrap();
            assert_eq!(solve_via_rsum(&float, n).unwrap(), want.to_f64());
        }
    }

    proptest! {
        #[test]
        fn agrees_with_iteration(values in prop::collection::vec((-9i64..=9, 1i64..=7), 1..=14)) {
            let n = values.len();
            let s = CoefficientSequence::from_values(values.iter().map(|&(a, b)| Rational::new(a.into(), b.into())).collect());
            let want = iterate_canonical(&s, n, q(1), q(1)).unwrap().pop().unwrap();
            prop_assert_eq!(solve_via_rsum(&s, n).unwrap(), want);
        }
    }
}
