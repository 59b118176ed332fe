//! Flattening of k-dimensional index grids into one global index.
//!
//! A tuple `(i1, …, ik)` with `1 ≤ i_r ≤ N_r` maps to
//!
//! ```text
//! q = i1 + N1·(i2 - 1) + N1·N2·(i3 - 1) + … + (N1·…·N(k-1))·(ik - 1)
//! ```
//!
//! which is a bijection onto `[1, N1·…·Nk]`. Inverting it digit by digit
//! (`i_r = 1 + ((q-1) mod Π_{j≤r} N_j) / Π_{j<r} N_j`) turns any nested sum
//! with index-dependent bounds into a single loop over `q`, once the bounds
//! are replaced by Heaviside factors in the summand.
//!
//! All index arithmetic is integer quotient/remainder. Grid sizes are
//! computed exactly with [`BigUint`] and checked against a point budget
//! before any loop starts; past that check `q` fits in a `u64`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::report::Cost;
use crate::scalar::Scalar;
use crate::sequence::CoefficientSequence;
use crate::{Error, Result};

/// Unit step: 1 for `x ≥ 0`, else 0.
pub fn heaviside(x: i64) -> u8 {
    u8::from(x >= 0)
}

/// Grid dimensions `(N1, …, Nk)`, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimVector(Vec<u64>);

impl DimVector {
    /// Rejects zero-sized dimensions.
    pub fn new(dims: Vec<u64>) -> Result<Self> {
        if let Some(r) = dims.iter().position(|&n| n == 0) {
            return Err(Error::InvalidParams(alloc::format!("dimension {r} is empty")));
        }
        Ok(Self(dims))
    }

    /// Dimensions of the reduced R-sum grid: `N_j = order + 2j`.
    pub fn reduced(order: i64, power: usize) -> Result<Self> {
        if order < -1 || power < 1 {
            return Err(Error::InvalidParams(alloc::format!(
                "reduced grid needs order >= -1 and power >= 1, got ({order}, {power})"
            )));
        }
        Self::new((1..=power as i64).map(|j| (order + 2 * j) as u64).collect())
    }

    /// The sizes.
    pub fn dims(&self) -> &[u64] {
        &self.0
    }

    /// Number of dimensions.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether there are no dimensions.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exact number of grid points `ΠN_j`.
    pub fn size(&self) -> BigUint {
        self.0.iter().fold(BigUint::one(), |acc, &n| acc * n)
    }

    /// Grid size as `u64`, or [`Error::GridTooLarge`] above `limit`.
    pub fn checked_size(&self, limit: u64) -> Result<u64> {
        let size = self.size();
        match size.to_u64() {
            Some(points) if points <= limit => Ok(points),
            _ => Err(Error::GridTooLarge { points: size, limit }),
        }
    }
}

/// Global index `q` of a tuple.
pub fn encode(indices: &[i64], dims: &DimVector) -> Result<u64> {
    if indices.len() != dims.len() {
        return Err(Error::LengthMismatch { expected: dims.len(), found: indices.len() });
    }
    let mut q: u64 = 1;
    let mut stride: u64 = 1;
    for (position, (&i, &n)) in indices.iter().zip(dims.dims()).enumerate() {
        if i < 1 || i as u64 > n {
            return Err(Error::IndexOutOfRange { position, index: i, bound: n });
        }
        q = (i as u64 - 1)
            .checked_mul(stride)
            .and_then(|t| q.checked_add(t))
            .ok_or_else(|| Error::GridTooLarge { points: dims.size(), limit: u64::MAX })?;
        stride = stride.saturating_mul(n);
    }
    Ok(q)
}

/// Tuple at global index `q`; inverse of [`encode`].
pub fn decode(q: u64, dims: &DimVector) -> Result<Vec<i64>> {
    let max = dims.checked_size(u64::MAX)?;
    if q < 1 || q > max {
        return Err(Error::QOutOfRange { q, max });
    }
    let mut out = alloc::vec![0; dims.len()];
    decode_into(q - 1, dims.dims(), &mut out);
    Ok(out)
}

/// Writes the digits of the zero-based offset `rank = q - 1`.
pub(crate) fn decode_into(rank: u64, dims: &[u64], out: &mut [i64]) {
    let mut rest = rank;
    for (slot, &n) in out.iter_mut().zip(dims) {
        *slot = (rest % n) as i64 + 1;
        rest /= n;
    }
}

/// `Σ_{q=1}^{ΠN_j} f(i1(q), …, ik(q))`, visiting `q` in ascending order.
pub fn flat_sum<S: Scalar>(dims: &DimVector, max_grid: u64, mut f: impl FnMut(&[i64]) -> Result<S>) -> Result<S> {
    let points = dims.checked_size(max_grid)?;
    let mut buf = alloc::vec![0; dims.len()];
    let mut acc = S::zero();
    for rank in 0..points {
        decode_into(rank, dims.dims(), &mut buf);
        acc = acc + f(&buf)?;
    }
    Ok(acc)
}

/// `R̃(N, k)` as a single masked loop over the flattened grid, with cost.
///
/// The summand is `d(i1)·Π_{m≥2} d(i_m)·H(i_m - i(m-1) - 2)`; the mask is
/// evaluated at every grid point, and the coefficients are only multiplied
/// where it is 1.
pub fn rsum_reduced_flat_counted<S: Scalar>(
    d: &CoefficientSequence<S>,
    order: i64,
    power: usize,
    max_grid: u64,
) -> Result<(S, Cost)> {
    let dims = DimVector::reduced(order, power)?;
    let points = dims.checked_size(max_grid)?;
    d.require(1, order + 2 * power as i64)?;
    let mut buf = alloc::vec![0; power];
    let mut acc = S::zero();
    let mut live = 0u64;
    for rank in 0..points {
        decode_into(rank, dims.dims(), &mut buf);
        let mask = buf.windows(2).fold(1u8, |h, w| h * heaviside(w[1] - w[0] - 2));
        if mask == 0 {
            continue;
        }
        live += 1;
        let mut term = d.coeff_at(buf[0])?;
        for &i in &buf[1..] {
            term = term * d.coeff_at(i)?;
        }
        acc = acc + term;
    }
    Ok((acc, Cost { terms_evaluated: live, grid_points: Some(points) }))
}

/// `R̃(N, k)` over the flattened grid.
pub fn rsum_reduced_flat<S: Scalar>(d: &CoefficientSequence<S>, order: i64, power: usize, max_grid: u64) -> Result<S> {
    rsum_reduced_flat_counted(d, order, power, max_grid).map(|(v, _)| v)
}

/// `a(n+1) = 1 + Σ_p R̃(n - 2p, p)` with every class evaluated on its grid.
pub fn solve_via_flat_counted<S: Scalar>(d: &CoefficientSequence<S>, n: usize, max_grid: u64) -> Result<(S, Cost)> {
    d.require(1, n as i64)?;
    let classes = crate::oracle::max_power(n);
    let total: BigUint = (1..=classes)
        .map(|p| DimVector::reduced(n as i64 - 2 * p as i64, p).map(|g| g.size()))
        .sum::<Result<BigUint>>()?;
    if total > BigUint::from(max_grid) {
        return Err(Error::GridTooLarge { points: total, limit: max_grid });
    }
    let mut value = S::one();
    let mut cost = Cost { terms_evaluated: 0, grid_points: Some(0) };
    for p in 1..=classes {
        let (s, c) = rsum_reduced_flat_counted(d, n as i64 - 2 * p as i64, p, max_grid)?;
        value = value + s;
        cost.add(c);
    }
    Ok((value, cost))
}
