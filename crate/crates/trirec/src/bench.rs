//! Cost comparison of the four methods over a range of `n`.
//!
//! Grid methods grow like `Σ_p M(n,p)` and R-sums like `Fibonacci(n+2)`, so
//! each method has an `n` cap past which it is not run.

use trirec_core::{CoefficientSequence, Engine, Method, Result, Scalar};

use crate::eval::evaluate;
use crate::report::{BenchRow, RenderValue};

/// Largest `n` the grid methods are benchmarked at (about 1.7·10^7 points).
pub const GRID_BENCH_CAP: usize = 16;

/// Largest `n` the R-sum method is benchmarked at.
pub const RSUM_BENCH_CAP: usize = 26;

/// Largest `n` benchmarked for `method`, if any.
pub fn bench_cap(method: Method) -> Option<usize> {
    match method {
        Method::Iterative => None,
        Method::RSum => Some(RSUM_BENCH_CAP),
        Method::Flat | Method::Closed => Some(GRID_BENCH_CAP),
    }
}

/// Times every method in `methods` at every `n` in `ns` (within caps),
/// `repeat` times each.
pub fn run_bench<S: Scalar + RenderValue>(
    d: &CoefficientSequence<S>,
    ns: impl IntoIterator<Item = usize>,
    methods: &[Method],
    repeat: usize,
    max_grid: u64,
) -> Result<Vec<BenchRow>> {
    let repeat = repeat.max(1);
    let mut rows = Vec::new();
    for n in ns {
        for &method in methods {
            if bench_cap(method).is_some_and(|cap| n > cap) {
                continue;
            }
            let engine = Engine::new(method).with_max_grid(max_grid);
            let mut times = Vec::with_capacity(repeat);
            let mut last = None;
            for _ in 0..repeat {
                let report = evaluate(&engine, d, n)?;
                times.push(report.wall_time.as_nanos() as u64);
                last = Some(report);
            }
            times.sort_unstable();
            let report = last.expect("repeat >= 1");
            rows.push(BenchRow {
                n,
                method: method.name().to_owned(),
                value: report.value.render(),
                grid_points: report.grid_points,
                terms_evaluated: report.terms_evaluated,
                wall_time_ns: times[times.len() / 2],
                min_wall_time_ns: times[0],
            });
        }
    }
    Ok(rows)
}
