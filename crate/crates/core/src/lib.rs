//! Solvers for the general three-term recurrence
//! `W(n+1) = A(n)·W(n) + B(n)·W(n-1)`.
//!
//! The recurrence is first normalized to the canonical form
//! `a(n+1) = a(n) + d(n)·a(n-1)` with `a(0) = a(1) = 1` ([`canonical`]), which
//! is then solved by any of four equivalent engines:
//!
//! * direct iteration ([`oracle::iterate_canonical`]),
//! * the nested recursive-sum expansion over power classes ([`rsum`]),
//! * the same sums walked over a flattened, Heaviside-masked index grid
//!   ([`convolve`]),
//! * the fully non-recursive closed form built from floor/mod index
//!   functions ([`closedform`]).
//!
//! All arithmetic is generic over [`Scalar`]; exact rationals are the default
//! and `f64` is available for benchmarking.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, timing and the
//! command line live in the `trirec` crate.
#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod apps;
pub mod canonical;
pub mod closedform;
pub mod convolve;
pub mod engine;
mod error;
pub mod oracle;
pub mod recurrence;
pub mod report;
pub mod rsum;
pub mod scalar;
pub mod sequence;

pub use canonical::{reconstruct_general, solve_general, to_canonical, CanonicalizationResult};
pub use engine::{CanonicalSolver, Engine, DEFAULT_MAX_GRID};
pub use error::Error;
pub use recurrence::{GeneralRecurrence, IndexTuple};
pub use report::{Cost, EvalReport, Method};
pub use scalar::{parse_rational, render_rational, Rational, RationalParseError, Scalar};
pub use sequence::{CoefficientSequence, Source};

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;
