//! JSON report documents written by the command line.
//!
//! Every successful command prints exactly one object whose `command` field
//! names the subcommand; failures print `{"error": {...}}`. Exact values are
//! `"p/q"` strings, floats use Rust's shortest round-trip formatting, and
//! times are integer nanoseconds. The JSON Schema lives in
//! `docs/report.schema.json`.

use serde::{Deserialize, Serialize};
use trirec_core::{EvalReport, Rational};

/// Text rendering of a scalar value in reports.
pub trait RenderValue {
    /// `"p/q"` for rationals, shortest round-trip decimal for floats.
    fn render(&self) -> String;
}

impl RenderValue for Rational {
    fn render(&self) -> String {
        trirec_core::render_rational(self)
    }
}

impl RenderValue for f64 {
    fn render(&self) -> String {
        format!("{self:?}")
    }
}

/// One solver run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodResult {
    /// `iter`, `rsum`, `flat` or `closed`.
    pub method: String,
    /// Rendered value.
    pub value: String,
    /// Steps or monomials.
    pub terms_evaluated: u64,
    /// Grid points for `flat`/`closed`, else null.
    pub grid_points: Option<u64>,
    /// Wall time.
    pub wall_time_ns: u64,
}

impl<S: RenderValue> From<&EvalReport<S>> for MethodResult {
    fn from(r: &EvalReport<S>) -> Self {
        Self {
            method: r.method.name().to_owned(),
            value: r.value.render(),
            terms_evaluated: r.terms_evaluated,
            grid_points: r.grid_points,
            wall_time_ns: r.wall_time.as_nanos() as u64,
        }
    }
}

/// `eval` and `general`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOutput {
    /// `"eval"` or `"general"`.
    pub command: String,
    /// `"rational"` or `"float64"`.
    pub scalar: String,
    /// Requested `n`.
    pub n: usize,
    /// What `value` is, e.g. `"a(10)"` or `"W(9)"`.
    pub quantity: String,
    /// The run.
    #[serde(flatten)]
    pub result: MethodResult,
}

/// One `n` of `compare`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareRow {
    /// Order; values are `a(n+1)`.
    pub n: usize,
    /// One entry per method.
    pub results: Vec<MethodResult>,
    /// Whether every method returned the same value.
    pub all_equal: bool,
}

/// `compare`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareOutput {
    /// `"compare"`.
    pub command: String,
    /// Largest `n`.
    pub n_max: usize,
    /// Rows for `n = 0..=n_max`.
    pub rows: Vec<CompareRow>,
    /// Conjunction over rows.
    pub all_equal: bool,
}

/// One `(n, method)` cell of `bench`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    /// Order.
    pub n: usize,
    /// Method name.
    pub method: String,
    /// Rendered value.
    pub value: String,
    /// Grid points for `flat`/`closed`, else null.
    pub grid_points: Option<u64>,
    /// Steps or monomials.
    pub terms_evaluated: u64,
    /// Median over repeats.
    pub wall_time_ns: u64,
    /// Fastest repeat.
    pub min_wall_time_ns: u64,
}

/// `bench`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchOutput {
    /// `"bench"`.
    pub command: String,
    /// `"rational"` or `"float64"`.
    pub scalar: String,
    /// Largest requested `n`.
    pub n_max: usize,
    /// Timed runs per cell.
    pub repeat: usize,
    /// Cells ordered by `n`, then method.
    pub rows: Vec<BenchRow>,
}

/// `expand`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandOutput {
    /// `"expand"`.
    pub command: String,
    /// Order; the expansion is `a(n+1)`.
    pub n: usize,
    /// Number of monomials including the constant.
    pub terms: usize,
    /// Canonical text form.
    pub expansion: String,
}

/// One convergent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergentRow {
    /// Level.
    pub i: usize,
    /// `h_i`.
    pub numerator: String,
    /// `k_i`.
    pub denominator: String,
    /// `h_i / k_i`, null when `k_i = 0`.
    pub value: Option<String>,
}

/// `cf`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfOutput {
    /// `"cf"`.
    pub command: String,
    /// `"rational"` or `"float64"`.
    pub scalar: String,
    /// Method used for the recurrences.
    pub method: String,
    /// Depth.
    pub k: usize,
    /// Levels `0..=k`.
    pub convergents: Vec<ConvergentRow>,
}

/// One grid node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdeNode {
    /// Node number.
    pub i: usize,
    /// Position.
    pub x: String,
    /// Solution value.
    pub f: String,
}

/// `ode`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdeOutput {
    /// `"ode"`.
    pub command: String,
    /// `"rational"` or `"float64"`.
    pub scalar: String,
    /// Method used for the recurrence.
    pub method: String,
    /// Steps.
    pub steps: usize,
    /// Nodes `0..=steps+1`.
    pub nodes: Vec<OdeNode>,
}

/// Failure body.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    /// Machine-readable category, e.g. `ZeroPivot`.
    pub kind: String,
    /// Human-readable message.
    pub message: String,
}

/// `{"error": {...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOutput {
    /// The failure.
    pub error: ErrorBody,
}
