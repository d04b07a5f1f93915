//! Command-line frontend over `chowkit-core`: expression evaluation,
//! Chow-invariant tables, symmetric-power series, and toric Euler-Chow
//! series, with deterministic text/JSON/CSV emission.
//!
//! Exit codes: 0 success, 1 domain error (invalid values, failed checks),
//! 2 usage error (bad argument grammar, empty sweep ranges). Output for a
//! fixed invocation is byte-identical across runs.

pub mod fan_format;
mod render;

use clap::{Parser, Subcommand, ValueEnum};
use std::fmt;
use std::path::PathBuf;

use chowkit_core::chow;
use chowkit_core::expr;
use chowkit_core::series::sym_powers;
use chowkit_core::toric;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "chowkit",
    version,
    about = "Exact E-polynomials, Chow variety invariants, and toric Euler-Chow series"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a variety expression to its E-polynomial.
    Epoly {
        /// Expression, e.g. "surfS(1)" or "disj(T(1),pt)".
        expr: String,
        /// Emit the virtual Poincare polynomial instead.
        #[arg(long, conflicts_with_all = ["euler", "hodge"])]
        poincare: bool,
        /// Emit the Euler characteristic instead.
        #[arg(long, conflicts_with = "hodge")]
        euler: bool,
        /// Emit a single virtual Hodge number h(p, q).
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        hodge: Option<Vec<u32>>,
    },
    /// Virtual Betti numbers of a variety expression.
    Betti { expr: String },
    /// Euler characteristic of the Chow variety of p-cycles of degree d in
    /// projective n-space.
    ChowEuler {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
        /// Also evaluate the independent recursion and report agreement.
        #[arg(long)]
        check_recursion: bool,
    },
    /// Dimension of the Chow variety.
    ChowDim {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
    },
    /// Upper bound on the number of irreducible components.
    ChowBound {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
    },
    /// E-polynomial of the degree-2 Chow variety from its decomposition
    /// into a symmetric square and a quadric bundle.
    Chow2 {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        n: i64,
        /// Check the virtual-Hodge-number constraints; failure is exit 1.
        #[arg(long)]
        check_constraints: bool,
    },
    /// E-polynomials of the symmetric powers of a variety expression.
    Sym {
        expr: String,
        #[arg(long)]
        dmax: u32,
    },
    /// Euler-Chow series of a smooth projective toric variety from a fan
    /// file.
    Toric {
        /// Path to the fan file (JSON: dim, rays, max_cones).
        #[arg(long)]
        fan: PathBuf,
        #[arg(long)]
        p: i64,
        /// Keep terms of functional degree at most this bound.
        #[arg(long)]
        bound: i64,
        /// Integer weights of the degree functional, comma-separated; must
        /// be strictly positive on every invariant-subvariety class.
        /// Defaults to the sum of coordinates.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        degree_functional: Option<Vec<i64>>,
    },
    /// Table of chi, dim, and the component bound over ranges of p, d, n.
    /// Ranges are "N" or "A..B" (inclusive); rows with p > n are skipped.
    Sweep {
        #[arg(long)]
        p: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        n: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation: exit 2, message plus a synopsis line.
    Usage { message: String, synopsis: String },
    /// Invalid values or a failed check: exit 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage { .. } => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn domain(e: impl fmt::Display) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage { message, synopsis } => {
                writeln!(f, "{}", message)?;
                write!(f, "usage: {}", synopsis)
            }
            CliError::Domain(message) => write!(f, "{}", message),
        }
    }
}

/// Run a parsed invocation and return the document for stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Epoly {
            expr,
            poincare,
            euler,
            hodge,
        } => {
            let e = eval_expr(expr)?;
            if *poincare {
                Ok(render::unipoly(&e.poincare(), format))
            } else if *euler {
                Ok(render::scalar("euler", &e.euler_char(), format))
            } else if let Some(pq) = hodge {
                let (p, q) = (pq[0], pq[1]);
                Ok(render::hodge_number(p, q, &e.coefficient(p, q), format))
            } else {
                Ok(render::epoly(&e, format))
            }
        }
        Command::Betti { expr } => {
            let e = eval_expr(expr)?;
            Ok(render::betti(&e.poincare(), format))
        }
        Command::ChowEuler {
            p,
            d,
            n,
            check_recursion,
        } => {
            let chi = chow::chow_euler(*p, *d, *n).map_err(CliError::domain)?;
            let recursion = if *check_recursion {
                let rec = chow::chow_euler_rec(*p, *d, *n).map_err(CliError::domain)?;
                if rec != chi {
                    return Err(CliError::Domain(format!(
                        "recursion disagrees with the closed form: closed form = {}, recursion = {}",
                        chi, rec
                    )));
                }
                true
            } else {
                false
            };
            Ok(render::chow_scalar(
                *p, *d, *n, "chi", &chi, recursion, format,
            ))
        }
        Command::ChowDim { p, d, n } => {
            let dim = chow::chow_dim(*p, *d, *n).map_err(CliError::domain)?;
            Ok(render::chow_scalar(*p, *d, *n, "dim", &dim, false, format))
        }
        Command::ChowBound { p, d, n } => {
            let bound = chow::kollar_bound(*p, *d, *n).map_err(CliError::domain)?;
            Ok(render::chow_scalar(
                *p,
                *d,
                *n,
                "kollar_bound",
                &bound,
                false,
                format,
            ))
        }
        Command::Chow2 {
            p,
            n,
            check_constraints,
        } => {
            let tree = chow::chow2_expr(*p, *n).map_err(CliError::domain)?;
            let e = tree.eval().map_err(CliError::domain)?;
            let report = if *check_constraints {
                let report =
                    chow::check_chow_constraints(&e, *p, 2, *n).map_err(CliError::domain)?;
                if !report.all_passed() {
                    let mut lines = Vec::new();
                    for check in &report.checks {
                        if !check.passed {
                            lines.push(format!(
                                "constraint {} failed: {}",
                                check.name,
                                check.detail.as_deref().unwrap_or("no detail")
                            ));
                        }
                    }
                    return Err(CliError::Domain(lines.join("\n")));
                }
                Some(report)
            } else {
                None
            };
            Ok(render::chow2(*p, *n, &e, report.as_ref(), format))
        }
        Command::Sym { expr, dmax } => {
            let e = eval_expr(expr)?;
            let series = sym_powers(&e, *dmax);
            Ok(render::sym_series(&series, format))
        }
        Command::Toric {
            fan,
            p,
            bound,
            degree_functional,
        } => {
            let text = std::fs::read_to_string(fan).map_err(|e| {
                CliError::Domain(format!("cannot read fan file {}: {}", fan.display(), e))
            })?;
            let fan = fan_format::parse_fan(&text).map_err(CliError::domain)?;
            let p = usize::try_from(*p)
                .map_err(|_| CliError::Domain(format!("cycle dimension p = {} out of range", p)))?;
            let series = toric::euler_chow_series(&fan, p, *bound, degree_functional.as_deref())
                .map_err(CliError::domain)?;
            Ok(render::euler_chow(&series, format))
        }
        Command::Sweep { p, d, n } => {
            let synopsis = "chowkit sweep --p A[..B] --d A[..B] --n A[..B]";
            let usage = |message: String| CliError::Usage {
                message,
                synopsis: synopsis.to_string(),
            };
            let p_range = parse_range(p).map_err(usage)?;
            let d_range = parse_range(d).map_err(usage)?;
            let n_range = parse_range(n).map_err(usage)?;
            if *d_range.start() < 1 {
                return Err(usage("sweep requires d >= 1".to_string()));
            }
            let mut rows = Vec::new();
            for p in p_range.clone() {
                for d in d_range.clone() {
                    for n in n_range.clone() {
                        if p > n {
                            continue;
                        }
                        let chi = chow::chow_euler(p, d, n).map_err(CliError::domain)?;
                        let dim = chow::chow_dim(p, d, n).map_err(CliError::domain)?;
                        let bound = chow::kollar_bound(p, d, n).map_err(CliError::domain)?;
                        rows.push(render::SweepRow {
                            p,
                            d,
                            n,
                            chi,
                            dim,
                            kollar_bound: bound,
                        });
                    }
                }
            }
            if rows.is_empty() {
                return Err(usage(
                    "sweep ranges produce no rows with p <= n".to_string(),
                ));
            }
            Ok(render::sweep(&rows, format))
        }
    }
}

fn eval_expr(text: &str) -> Result<chowkit_core::EPoly, CliError> {
    let tree = expr::parse(text).map_err(CliError::domain)?;
    tree.eval().map_err(CliError::domain)
}

/// Parse "N" or "A..B" (inclusive) into a range.
fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<i64>, String> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("invalid range bound '{}'", s))
    };
    let range = match text.split_once("..") {
        Some((a, b)) => parse_one(a)?..=parse_one(b)?,
        None => {
            let v = parse_one(text)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(format!("empty range '{}'", text));
    }
    if *range.start() < 0 {
        return Err(format!("range '{}' must be nonnegative", text));
    }
    Ok(range)
}
