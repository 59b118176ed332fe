//! Evaluation records shared by the solvers and the benchmark surface.

use core::fmt;
use core::str::FromStr;
use core::time::Duration;

/// Which canonical solver produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Direct iteration of the canonical recurrence.
    Iterative,
    /// Nested recursive sums per power class.
    RSum,
    /// Reduced R-sums walked over the flattened masked grid.
    Flat,
    /// The non-recursive closed form.
    Closed,
}

impl Method {
    /// All methods, cheapest first.
    pub const ALL: [Method; 4] = [Method::Iterative, Method::RSum, Method::Flat, Method::Closed];

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Method::Iterative => "iter",
            Method::RSum => "rsum",
            Method::Flat => "flat",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "iter" | "iterative" => Method::Iterative,
            "rsum" => Method::RSum,
            "flat" => Method::Flat,
            "closed" => Method::Closed,
            _ => return Err(UnknownMethod),
        })
    }
}

/// Returned by [`Method::from_str`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("unknown method (expected iter, rsum, flat or closed)")]
pub struct UnknownMethod;

/// Work done by one solver call.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Cost {
    /// Recurrence steps (iterative) or monomials multiplied out (other methods).
    pub terms_evaluated: u64,
    /// Grid points visited, for the grid-based methods.
    pub grid_points: Option<u64>,
}

impl Cost {
    pub(crate) fn add(&mut self, other: Cost) {
        self.terms_evaluated += other.terms_evaluated;
        self.grid_points = match (self.grid_points, other.grid_points) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(0) + b.unwrap_or(0)),
        };
    }
}

/// One timed evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport<S> {
    /// Solver used.
    pub method: Method,
    /// Computed value.
    pub value: S,
    /// See [`Cost::terms_evaluated`].
    pub terms_evaluated: u64,
    /// See [`Cost::grid_points`]; `terms_evaluated ≤ grid_points` when set.
    pub grid_points: Option<u64>,
    /// Wall-clock time of the call.
    pub wall_time: Duration,
}

impl<S> EvalReport<S> {
    /// Assembles a report from a solver result.
    pub fn new(method: Method, value: S, cost: Cost, wall_time: Duration) -> Self {
        debug_assert!(cost.grid_points.map_or(true, |g| cost.terms_evaluated <= g));
        Self {
            method,
            value,
            terms_evaluated: cost.terms_evaluated,
            grid_points: cost.grid_points,
            wall_time,
        }
    }
}
