//! Non-recursive closed form of the canonical solution:
//!
//! ```text
//! a(n+1) = 1 + Σ_{p=1}^{⌊(n+1)/2⌋} Σ_{q=1}^{M(n,p)} G(n,p,q)
//! M(n,p) = Π_{r=1}^{p} (n - 2p + 2r)
//! G(n,p,q) = d(g(1,n,p,q)) · Π_{m=2}^{p} d(g(m,n,p,q)) · H(g(m,n,p,q) - g(m-1,n,p,q) - 2)
//! g(m,n,p,q) = 1 + ⌊(q-1) / Π_{j<m} N_j⌋ mod N_m,   N_j = n - 2p + 2j
//! ```
//!
//! `g` is the digit decoding of [`crate::convolve`] applied to the grid of
//! power class `p`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::convolve::{decode_into, heaviside, DimVector};
use crate::oracle::max_power;
use crate::report::Cost;
use crate::scalar::Scalar;
use crate::sequence::CoefficientSequence;
use crate::{Error, Result};

fn check_class(n: usize, p: usize) -> Result<()> {
    if p < 1 || p > max_power(n) {
        return Err(Error::InvalidParams(alloc::format!("power class p={p} outside [1, {}] for n={n}", max_power(n))));
    }
    Ok(())
}

fn class_dims(n: usize, p: usize) -> DimVector {
    DimVector::reduced(n as i64 - 2 * p as i64, p).expect("valid power class has positive dimensions")
}

/// `M(n, p) = Π_{l=0}^{p-1} (n - 2l)`, the grid size of power class `p`.
pub fn capital_m(n: usize, p: usize) -> Result<BigUint> {
    check_class(n, p)?;
    Ok((0..p).fold(BigUint::one(), |acc, l| acc * (n - 2 * l)))
}

/// Total grid points `Σ_p M(n, p)` of the closed form for `a(n+1)`.
pub fn grid_points(n: usize) -> BigUint {
    (1..=max_power(n)).map(|p| capital_m(n, p).expect("p in range")).sum()
}

fn check_address(n: usize, p: usize, q: u64) -> Result<DimVector> {
    check_class(n, p)?;
    let dims = class_dims(n, p);
    let size = dims.size();
    if q < 1 || BigUint::from(q) > size {
        return Err(Error::QOutOfRange { q, max: size.to_u64().unwrap_or(u64::MAX) });
    }
    Ok(dims)
}

/// Index function `g(m, n, p, q)`: the `m`-th coordinate of grid point `q`.
pub fn g_index(m: usize, n: usize, p: usize, q: u64) -> Result<i64> {
    let dims = check_address(n, p, q)?;
    if m < 1 || m > p {
        return Err(Error::InvalidParams(alloc::format!("g index m={m} outside [1, {p}]")));
    }
    let stride = dims.dims()[..m - 1].iter().fold(1u128, |acc, &nj| acc.saturating_mul(nj as u128));
    let digit = ((q - 1) as u128 / stride) % dims.dims()[m - 1] as u128;
    Ok(digit as i64 + 1)
}

/// Masked grid term `G(n, p, q)`.
pub fn g_term<S: Scalar>(d: &CoefficientSequence<S>, n: usize, p: usize, q: u64) -> Result<S> {
    let dims = check_address(n, p, q)?;
    d.require(1, n as i64)?;
    let mut g = alloc::vec![0; p];
    decode_into(q - 1, dims.dims(), &mut g);
    let mask = g.windows(2).fold(1u8, |h, w| h * heaviside(w[1] - w[0] - 2));
    if mask == 0 {
        return Ok(S::zero());
    }
    g.iter().try_fold(S::one(), |acc, &i| Ok(acc * d.coeff_at(i)?))
}

/// Closed-form `a(n+1)` with its cost.
///
/// Classes are visited in ascending `p`, grid points in ascending `q`. The
/// product `G` stops at its first vanishing Heaviside factor.
pub fn solve_closed_form_counted<S: Scalar>(d: &CoefficientSequence<S>, n: usize, max_grid: u64) -> Result<(S, Cost)> {
    d.require(1, n as i64)?;
    let total = grid_points(n);
    let points = match total.to_u64() {
        Some(points) if points <= max_grid => points,
        _ => return Err(Error::GridTooLarge { points: total, limit: max_grid }),
    };
    let coeffs: Vec<S> = (1..=n as i64).map(|i| d.coeff_at(i)).collect::<Result<_>>()?;
    let mut value = S::one();
    let mut live = 0u64;
    let mut g = Vec::with_capacity(max_power(n));
    for p in 1..=max_power(n) {
        let dims = class_dims(n, p);
        let dims = dims.dims();
        let size = dims.iter().product::<u64>();
        'grid: for rank in 0..size {
            g.clear();
            let mut rest = rank;
            for &nj in dims {
                let gm = (rest % nj) as i64 + 1;
                rest /= nj;
                if let Some(&prev) = g.last() {
                    if heaviside(gm - prev - 2) == 0 {
                        continue 'grid;
                    }
                }
                g.push(gm);
            }
            live += 1;
            let mut term = coeffs[g[0] as usize - 1].clone();
            for &i in &g[1..] {
                term = term * coeffs[i as usize - 1].clone();
            }
            value = value + term;
        }
    }
    Ok((value, Cost { terms_evaluated: live, grid_points: Some(points) }))
}

/// Closed-form `a(n+1)`.
pub fn solve_closed_form<S: Scalar>(d: &CoefficientSequence<S>, n: usize, max_grid: u64) -> Result<S> {
    solve_closed_form_counted(d, n, max_grid).map(|(v, _)| v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convolve::decode;
    use crate::oracle::iterate_canonical;
    use crate::rsum::solve_via_rsum;
    use crate::Rational;
    use num_integer::Integer;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn ones(hi: i64) -> CoefficientSequence<Rational> {
        CoefficientSequence::constant(q(1), 1, hi)
    }

    #[test]
    fn capital_m_examples() {
        assert_eq!(capital_m(5, 2).unwrap(), BigUint::from(15u32));
        assert_eq!(capital_m(4, 2).unwrap(), BigUint::from(8u32));
        for n in 1..10 {
            assert_eq!(capital_m(n, 1).unwrap(), BigUint::from(n));
        }
        assert!(capital_m(4, 3).is_err());
        assert!(capital_m(4, 0).is_err());
    }

    #[test]
    fn capital_m_is_the_class_grid_size() {
        for n in 1..=20usize {
            for p in 1..=max_power(n) {
                assert_eq!(capital_m(n, p).unwrap(), class_dims(n, p).size());
            }
        }
    }

    #[test]
    fn g_index_examples() {
        assert_eq!(g_index(1, 4, 2, 3).unwrap(), 1);
        assert_eq!(g_index(2, 4, 2, 3).unwrap(), 2);
        assert_eq!(g_index(1, 4, 2, 8).unwrap(), 2);
        assert_eq!(g_index(2, 4, 2, 8).unwrap(), 4);
        for n in 1..8 {
            assert_eq!(g_index(1, n, 1, 1).unwrap(), 1);
        }
        assert!(g_index(3, 4, 2, 3).is_err());
        assert!(g_index(1, 4, 2, 9).is_err());
        assert!(g_index(1, 4, 2, 0).is_err());
    }

    // g(1) = q - N1·⌊(q-1)/N1⌋ and
    // g(m) = 1 + ⌊(q-1)/Π_{j<m}N_j⌋ - N_m·⌊(q-1)/Π_{j≤m}N_j⌋,
    // evaluated with exact rational floors.
    fn g_literal(m: usize, n: usize, p: usize, qv: u64) -> i64 {
        let nj = |j: usize| (n as i64) - 2 * p as i64 + 2 * j as i64;
        let floor = |num: i64, den: i64| Rational::new(num.into(), den.into()).floor().to_integer();
        let big = |x: i64| num_bigint::BigInt::from(x);
        let qm1 = qv as i64 - 1;
        let g = if m == 1 {
            big(qv as i64) - big(nj(1)) * floor(qm1, nj(1))
        } else {
            let lower: i64 = (1..m).map(nj).product();
            let upper: i64 = (1..=m).map(nj).product();
            big(1) + floor(qm1, lower) - big(nj(m)) * floor(qm1, upper)
        };
        g.try_into().unwrap()
    }

    #[test]
    fn g_index_matches_literal_floor_formula() {
        for n in 1..=12usize {
            for p in 1..=max_power(n) {
                let size = capital_m(n, p).unwrap().to_u64().unwrap();
                for qv in 1..=size {
                    for m in 1..=p {
                        assert_eq!(g_index(m, n, p, qv).unwrap(), g_literal(m, n, p, qv), "m={m} n={n} p={p} q={qv}");
                    }
                }
            }
        }
    }

    #[test]
    fn g_index_matches_decode() {
        for n in 1..=10usize {
            for p in 1..=max_power(n) {
                let dims = class_dims(n, p);
                let size = capital_m(n, p).unwrap().to_u64().unwrap();
                for qv in 1..=size {
                    let tuple = decode(qv, &dims).unwrap();
                    let g: Vec<i64> = (1..=p).map(|m| g_index(m, n, p, qv).unwrap()).collect();
                    assert_eq!(g, tuple);
                }
            }
        }
    }

    #[test]
    fn g_term_examples() {
        let d = CoefficientSequence::from_values(vec![q(2), q(3), q(5), q(7)]);
        assert_eq!(g_term(&d, 4, 2, 3).unwrap(), q(0));
        assert_eq!(g_term(&d, 4, 2, 8).unwrap(), q(21));
        for qv in 1..=4 {
            assert_eq!(g_term(&d, 4, 1, qv).unwrap(), d.coeff_at(qv as i64).unwrap());
        }
    }

    #[test]
    fn g_term_support_is_the_gap_two_tuples() {
        let n = 9;
        let d = CoefficientSequence::from_values((1..=n as i64).map(|i| q(i + 1)).collect());
        for p in 1..=max_power(n) {
            let size = capital_m(n, p).unwrap().to_u64().unwrap();
            for qv in 1..=size {
                let g: Vec<i64> = (1..=p).map(|m| g_index(m, n, p, qv).unwrap()).collect();
                let gap_ok = g.windows(2).all(|w| w[1] >= w[0] + 2);
                assert_eq!(!g_term(&d, n, p, qv).unwrap().is_zero(), gap_ok);
            }
        }
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_closed_form(&ones(4), 4, 1000).unwrap(), q(8));
        let d = CoefficientSequence::from_values(vec![q(2), q(3), q(5)]);
        assert_eq!(solve_closed_form(&d, 3, 1000).unwrap(), q(21));
        assert_eq!(solve_closed_form(&d, 0, 1000).unwrap(), q(1));
    }

    #[test]
    fn cost_reports_exact_grid_size() {
        for n in 1..=12usize {
            let (_, cost) = solve_closed_form_counted(&ones(n as i64), n, u64::MAX).unwrap();
            assert_eq!(BigUint::from(cost.grid_points.unwrap()), grid_points(n));
        }
    }

    #[test]
    fn grid_guard() {
        let err = solve_closed_form(&ones(12), 12, 100).unwrap_err();
        assert_eq!(err, Error::GridTooLarge { points: grid_points(12), limit: 100 });
    }

    #[test]
    fn domain_checked_upfront() {
        let d = CoefficientSequence::from_values(vec![q(1); 3]);
        assert!(matches!(solve_closed_form(&d, 4, 1000), Err(Error::IndexOutOfDomain { index: 4, .. })));
    }

    #[test]
    fn agrees_with_other_methods() {
        let d = CoefficientSequence::from_values((1..=12i64).map(|i| Rational::new((i.mod_floor(&5) - 2).into(), i.into())).collect());
        for n in 0..=12 {
            let want = iterate_canonical(&d, n, q(1), q(1)).unwrap().pop().unwrap();
            assert_eq!(solve_closed_form(&d, n, u64::MAX).unwrap(), want);
            assert_eq!(solve_via_rsum(&d, n).unwrap(), want);
        }
    }
}
