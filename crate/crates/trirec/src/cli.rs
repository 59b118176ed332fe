//! `trirec` command line.
//!
//! Exit status is 0 on success, 2 on usage errors and 1 on computation
//! errors (bad input files, domain or grid-guard violations, zero pivots).
//! The report is written to the output stream once, after the command has
//! finished.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use trirec_core::apps::{cf_convergents, ode_solve};
use trirec_core::oracle::symbolic_solve;
use trirec_core::{
    parse_rational, solve_general, CoefficientSequence, Engine, GeneralRecurrence, Method, Rational, Scalar,
    DEFAULT_MAX_GRID,
};

use crate::bench::run_bench;
use crate::eval::{evaluate, ScalarMode};
use crate::report::{
    BenchOutput, CfOutput, CompareOutput, CompareRow, ConvergentRow, ErrorBody, ErrorOutput, EvalOutput, ExpandOutput,
    MethodResult, OdeNode, OdeOutput, RenderValue,
};
use crate::spec::{parse_coefficient_spec, SpecError};

#[derive(Debug, Parser)]
#[command(name = "trirec", version, about = "Solve three-term recurrences four equivalent ways")]
struct Cli {
    /// Point budget for the grid-based methods.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GRID)]
    max_grid: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// a(n+1) of the canonical recurrence a(m+1) = a(m) + d(m)·a(m-1).
    Eval {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "iter")]
        method: Method,
        #[arg(long, value_enum, default_value = "rational")]
        scalar: ScalarMode,
        /// a(0); defaults to 1.
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        a0: Option<Rational>,
        /// a(1); defaults to 1.
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        a1: Option<Rational>,
    },
    /// All four methods for n = 0..=n-max, exactly.
    Compare {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        n_max: usize,
    },
    /// Symbolic a(n+1) as a polynomial in d1..dn.
    Expand {
        #[arg(long)]
        n: usize,
        /// Print the bare expansion instead of a JSON report.
        #[arg(long)]
        text: bool,
    },
    /// Timing and cost table per (n, method).
    Bench {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        repeat: usize,
        #[arg(long, value_enum, default_value = "rational")]
        scalar: ScalarMode,
        /// Comma-separated subset of iter,rsum,flat,closed.
        #[arg(long, value_delimiter = ',')]
        methods: Option<Vec<Method>>,
    },
    /// Continued-fraction convergents b0 + a1/(b1 + a2/(b2 + ...)).
    Cf {
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        b0: Rational,
        /// Partial numerators a_i.
        #[arg(long)]
        num: PathBuf,
        /// Partial denominators b_i.
        #[arg(long)]
        den: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "iter")]
        method: Method,
        #[arg(long, value_enum, default_value = "rational")]
        scalar: ScalarMode,
    },
    /// f'' = U(x)·f on a uniform grid by the three-point stencil.
    Ode {
        /// U at node i, as a coefficient spec indexed by node.
        #[arg(long)]
        potential: PathBuf,
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        x0: Rational,
        #[arg(long, value_parser = parse_number)]
        h: Rational,
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        f0: Rational,
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        f1: Rational,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value = "iter")]
        method: Method,
        #[arg(long, value_enum, default_value = "rational")]
        scalar: ScalarMode,
    },
    /// W(n) of W(m+1) = A(m)·W(m) + B(m)·W(m-1), W(0) = C0, W(1) = C1.
    General {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        c0: Rational,
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        c1: Rational,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "iter")]
        method: Method,
        #[arg(long, value_enum, default_value = "rational")]
        scalar: ScalarMode,
    },
}

/// Rational from `"p/q"`, `"p"` or a plain decimal such as `"-1.25"`.
pub fn parse_number(text: &str) -> Result<Rational, String> {
    if let Some((int, frac)) = text.split_once('.') {
        let digits = format!("{int}{frac}");
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("malformed decimal {text:?}"));
        }
        let numer = parse_rational(&digits).map_err(|e| format!("malformed decimal {text:?}: {e}"))?;
        let scale = BigInt::from(10).pow(frac.len() as u32);
        return Ok(numer / Rational::from_integer(scale));
    }
    parse_rational(text).map_err(|e| format!("malformed rational {text:?}: {e}"))
}

enum Failure {
    Core(trirec_core::Error),
    Spec(PathBuf, SpecError),
    Io(PathBuf, std::io::Error),
}

impl From<trirec_core::Error> for Failure {
    fn from(e: trirec_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn body(&self) -> ErrorBody {
        use trirec_core::Error as E;
        let (kind, message) = match self {
            Failure::Core(e) => {
                let kind = match e {
                    E::IndexOutOfDomain { .. } => "IndexOutOfDomain",
                    E::ZeroDenominator { .. } => "ZeroDenominator",
                    E::ZeroPivot { .. } => "ZeroPivot",
                    E::TrivialInitials => "TrivialInitials",
                    E::InvalidParams(_) => "InvalidParams",
                    E::IndexOutOfRange { .. } => "IndexOutOfRange",
                    E::QOutOfRange { .. } => "QOutOfRange",
                    E::GridTooLarge { .. } => "GridTooLarge",
                    E::LengthMismatch { .. } => "LengthMismatch",
                    E::TooLarge { .. } => "TooLarge",
                };
                (kind, e.to_string())
            }
            Failure::Spec(path, e) => {
                let kind = match e {
                    SpecError::Invalid(trirec_core::Error::ZeroDenominator { .. }) => "ZeroDenominator",
                    _ => "ParseError",
                };
                (kind, format!("{}: {e}", path.display()))
            }
            Failure::Io(path, e) => ("Io", format!("{}: {e}", path.display())),
        };
        ErrorBody { kind: kind.to_owned(), message }
    }
}

fn load(path: &Path) -> Result<CoefficientSequence<Rational>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_owned(), e))?;
    parse_coefficient_spec(&text).map_err(|e| Failure::Spec(path.to_owned(), e))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs the CLI on `args` (including the program name), writing the report to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let (text, code) = match execute(cli) {
        Ok(text) => (text, 0),
        Err(failure) => (to_json(&ErrorOutput { error: failure.body() }), 1),
    };
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return 1;
    }
    code
}

fn execute(cli: Cli) -> Result<String, Failure> {
    let max_grid = cli.max_grid;
    let engine = |method: Method| Engine::new(method).with_max_grid(max_grid);
    match cli.command {
        Command::Eval { coeffs, n, method, scalar, a0, a1 } => {
            let d = load(&coeffs)?;
            let initials = match (a0, a1) {
                (None, None) => None,
                (a0, a1) => {
                    let one = || Rational::from_integer(1.into());
                    Some((a0.unwrap_or_else(one), a1.unwrap_or_else(one)))
                }
            };
            match scalar {
                ScalarMode::Rational => eval_output(&d, n, engine(method), scalar, initials),
                ScalarMode::Float64 => eval_output(&d.map(f64::from_rational), n, engine(method), scalar, initials),
            }
        }
        Command::Compare { coeffs, n_max } => Ok(to_json(&compare(&load(&coeffs)?, n_max, max_grid)?)),
        Command::Expand { n, text } => {
            let poly = symbolic_solve(n)?;
            let expansion = poly.to_string();
            Ok(if text {
                format!("{expansion}\n")
            } else {
                to_json(&ExpandOutput { command: "expand".into(), n, terms: poly.len(), expansion })
            })
        }
        Command::Bench { coeffs, n_max, repeat, scalar, methods } => {
            let d = load(&coeffs)?;
            let methods = methods.unwrap_or_else(|| Method::ALL.to_vec());
            let rows = match scalar {
                ScalarMode::Rational => run_bench(&d, 1..=n_max, &methods, repeat, max_grid)?,
                ScalarMode::Float64 => run_bench(&d.map(f64::from_rational), 1..=n_max, &methods, repeat, max_grid)?,
            };
            Ok(to_json(&BenchOutput { command: "bench".into(), scalar: scalar.name().into(), n_max, repeat, rows }))
        }
        Command::Cf { b0, num, den, k, method, scalar } => {
            let (num, den) = (load(&num)?, load(&den)?);
            match scalar {
                ScalarMode::Rational => cf_output(b0, &num, &den, k, engine(method), scalar),
                ScalarMode::Float64 => {
                    let f = |s: &CoefficientSequence<Rational>| s.map(f64::from_rational);
                    cf_output(f64::from_rational(&b0), &f(&num), &f(&den), k, engine(method), scalar)
                }
            }
        }
        Command::Ode { potential, x0, h, f0, f1, steps, method, scalar } => {
            let u = load(&potential)?;
            match scalar {
                ScalarMode::Rational => ode_output(&u, [x0, h, f0, f1], steps, engine(method), scalar),
                ScalarMode::Float64 => {
                    let args = [x0, h, f0, f1].map(|v| f64::from_rational(&v));
                    ode_output(&u.map(f64::from_rational), args, steps, engine(method), scalar)
                }
            }
        }
        Command::General { a, b, c0, c1, n, method, scalar } => {
            let (a, b) = (load(&a)?, load(&b)?);
            match scalar {
                ScalarMode::Rational => general_output(GeneralRecurrence::new(a, b, c0, c1)?, n, engine(method), scalar),
                ScalarMode::Float64 => {
                    let gen = GeneralRecurrence::new(
                        a.map(f64::from_rational),
                        b.map(f64::from_rational),
                        f64::from_rational(&c0),
                        f64::from_rational(&c1),
                    )?;
                    general_output(gen, n, engine(method), scalar)
                }
            }
        }
    }
}

fn eval_output<S: Scalar + RenderValue>(
    d: &CoefficientSequence<S>,
    n: usize,
    engine: Engine,
    scalar: ScalarMode,
    initials: Option<(Rational, Rational)>,
) -> Result<String, Failure> {
    let result = match initials {
        None => MethodResult::from(&evaluate(&engine, d, n)?),
        Some((a0, a1)) => {
            // A ≡ 1 and B = d make W coincide with a.
            let (lo, hi) = d.domain();
            let a = CoefficientSequence::constant(S::one(), lo, hi);
            let gen = GeneralRecurrence::new(a, d.clone(), S::from_rational(&a0), S::from_rational(&a1))?;
            timed_general(&gen, n + 1, engine)?
        }
    };
    Ok(to_json(&EvalOutput {
        command: "eval".into(),
        scalar: scalar.name().into(),
        n,
        quantity: format!("a({})", n + 1),
        result,
    }))
}

fn timed_general<S: Scalar + RenderValue>(gen: &GeneralRecurrence<S>, n: usize, engine: Engine) -> Result<MethodResult, Failure> {
    let start = std::time::Instant::now();
    let value = solve_general(gen, n, &engine)?;
    let elapsed = start.elapsed();
    Ok(MethodResult {
        method: engine.method.name().into(),
        value: value.render(),
        terms_evaluated: 0,
        grid_points: None,
        wall_time_ns: elapsed.as_nanos() as u64,
    })
}

fn general_output<S: Scalar + RenderValue>(
    gen: GeneralRecurrence<S>,
    n: usize,
    engine: Engine,
    scalar: ScalarMode,
) -> Result<String, Failure> {
    let result = timed_general(&gen, n, engine)?;
    Ok(to_json(&EvalOutput {
        command: "general".into(),
        scalar: scalar.name().into(),
        n,
        quantity: format!("W({n})"),
        result,
    }))
}

/// Runs every method for `n = 0..=n_max` in exact arithmetic.
pub fn compare(d: &CoefficientSequence<Rational>, n_max: usize, max_grid: u64) -> Result<CompareOutput, trirec_core::Error> {
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let reports = Method::ALL
            .iter()
            .map(|&m| evaluate(&Engine::new(m).with_max_grid(max_grid), d, n))
            .collect::<Result<Vec<_>, _>>()?;
        let all_equal = reports.windows(2).all(|w| w[0].value == w[1].value);
        rows.push(CompareRow { n, results: reports.iter().map(MethodResult::from).collect(), all_equal });
    }
    let all_equal = rows.iter().all(|r| r.all_equal);
    Ok(CompareOutput { command: "compare".into(), n_max, rows, all_equal })
}

fn cf_output<S: Scalar + RenderValue>(
    b0: S,
    num: &CoefficientSequence<S>,
    den: &CoefficientSequence<S>,
    k: usize,
    engine: Engine,
    scalar: ScalarMode,
) -> Result<String, Failure> {
    let pairs = cf_convergents(b0, num, den, k, &engine)?;
    let convergents = pairs
        .into_iter()
        .enumerate()
        .map(|(i, (h, kk))| ConvergentRow {
            i,
            value: (!kk.is_zero()).then(|| (h.clone() / kk.clone()).render()),
            numerator: h.render(),
            denominator: kk.render(),
        })
        .collect();
    Ok(to_json(&CfOutput {
        command: "cf".into(),
        scalar: scalar.name().into(),
        method: engine.method.name().into(),
        k,
        convergents,
    }))
}

fn ode_output<S: Scalar + RenderValue>(
    u: &CoefficientSequence<S>,
    [x0, h, f0, f1]: [S; 4],
    steps: usize,
    engine: Engine,
    scalar: ScalarMode,
) -> Result<String, Failure> {
    let sol = ode_solve(u, x0, h, f0, f1, steps, &engine)?;
    let nodes = sol
        .x
        .iter()
        .zip(&sol.f)
        .enumerate()
        .map(|(i, (x, f))| OdeNode { i, x: x.render(), f: f.render() })
        .collect();
    Ok(to_json(&OdeOutput {
        command: "ode".into(),
        scalar: scalar.name().into(),
        method: engine.method.name().into(),
        steps,
        nodes,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn numbers() {
        assert_eq!(parse_number("3/6").unwrap(), r(1, 2));
        assert_eq!(parse_number("-1.25").unwrap(), r(-5, 4));
        assert_eq!(parse_number("0.1").unwrap(), r(1, 10));
        assert!(parse_number("1.").is_err());
        assert!(parse_number("1.2.3").is_err());
        assert!(parse_number("abc").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["trirec", "eval", "--n", "3"], &mut out, &mut err), 2);
        assert!(out.is_empty());
        assert!(!err.is_empty());
        assert_eq!(run(["trirec", "eval", "--coeffs", "x", "--n", "3", "--method", "fast"], &mut out, &mut err), 2);
    }

    #[test]
    fn expand_text() {
        let mut out = Vec::new();
        assert_eq!(run(["trirec", "expand", "--n", "3", "--text"], &mut out, &mut Vec::new()), 0);
        assert_eq!(String::from_utf8(out).unwrap(), "1 + d1 + d2 + d3 + d1*d3\n");
    }
}
