//! Command-line front end.
//!
//! Exit codes: 0 optimal (or feasible-complete), 1 infeasible, 2 unbounded,
//! 3 safeguard stop, 64 usage error, 65 parse error, 70 internal error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::error::Error;
use crate::generate::{generate_lp, GeneratorSpec, Shape};
use crate::harness::{compare, solve, ComparisonReport, Phase1Method, SolveOutcome, SolveStatus};
use crate::json::{emit_comparison_json, emit_oracle_json, emit_outcome_json};
use crate::lp_format::{parse_lp, print_lp};
use crate::model::{standardize, StandardProblem};
use crate::oracle::{enumerate_vertices, OracleOptimum};
use crate::rules::{Limits, SolverConfig, TieBreak};
use crate::scalar::{Scalar, Tolerance};
use crate::trace::Termination;

pub const EXIT_OPTIMAL: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_UNBOUNDED: i32 = 2;
pub const EXIT_SAFEGUARD: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "afsimplex", version, about = "Artificial-free phase 1 simplex solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an LP file.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
        /// Write the full outcome (solution, traces, certificates) as JSON.
        #[arg(long, value_name = "OUT.json")]
        trace: Option<PathBuf>,
        #[arg(long)]
        quiet: bool,
    },
    /// Run both phase 1 methods and compare their traces.
    Compare {
        file: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
        #[arg(long, value_name = "OUT.json")]
        report: Option<PathBuf>,
        #[arg(long)]
        quiet: bool,
    },
    /// Generate a random LP file.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value = "feasible")]
        shape: Shape,
        #[arg(long, default_value_t = -9, allow_negative_numbers = true)]
        coeff_min: i64,
        #[arg(long, default_value_t = 9, allow_negative_numbers = true)]
        coeff_max: i64,
        #[arg(long, value_name = "FILE.lp")]
        out: PathBuf,
    },
    /// Enumerate every basis of an LP file (small instances only).
    Oracle {
        file: PathBuf,
        #[arg(long)]
        quiet: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Af,
    Trad,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TieArg {
    SmallestLabel,
    SmallestAbsPivot,
    LargestAbsPivot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum NumericArg {
    Rational,
    Float,
}

#[derive(Args, Debug)]
struct SolveOpts {
    #[arg(long, value_enum, default_value = "af")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "smallest-label")]
    tie: TieArg,
    #[arg(long, value_enum, default_value = "rational")]
    numeric: NumericArg,
    /// Sign tolerance in float mode.
    #[arg(long, default_value_t = 1e-9)]
    eps: f64,
    #[arg(long, value_name = "N")]
    max_iters: Option<usize>,
    /// Pivot zero-valued artificials out through their slack (traditional
    /// method only).
    #[arg(long)]
    conjugate_trick: bool,
}

impl SolveOpts {
    fn config(&self) -> Result<SolverConfig, Error> {
        Ok(SolverConfig {
            tie_break: match self.tie {
                TieArg::SmallestLabel => TieBreak::SmallestLabel,
                TieArg::SmallestAbsPivot => TieBreak::SmallestAbsPivot,
                TieArg::LargestAbsPivot => TieBreak::LargestAbsPivot,
            },
            limits: Limits {
                max_iterations: self.max_iters,
                ..Limits::default()
            },
            tolerance: Tolerance::new(self.eps)?,
            conjugate_slack_trick: self.conjugate_trick,
            ..SolverConfig::default()
        })
    }

    fn method(&self) -> Phase1Method {
        match self.method {
            MethodArg::Af => Phase1Method::ArtificialFree,
            MethodArg::Trad => Phase1Method::Traditional,
        }
    }
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::EmptyProblem | Error::UnsupportedFreeVariable(_) => EXIT_PARSE,
            Error::DuplicateConstraint(_) | Error::DuplicateVariable(_) | Error::UnknownVariable(_) => EXIT_PARSE,
            Error::InvalidTolerance(_) => EXIT_USAGE,
            Error::TooLarge { .. } => EXIT_SAFEGUARD,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs the CLI with explicit output streams; returns the process exit code.
pub fn cli_main<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "afsimplex: {}", f.message);
            f.code
        }
    }
}

fn read_problem(path: &Path) -> Result<StandardProblem, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let gp = parse_lp(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })?;
    Ok(standardize(&gp)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn status_code(status: SolveStatus) -> i32 {
    match status {
        SolveStatus::Optimal => EXIT_OPTIMAL,
        SolveStatus::Infeasible => EXIT_INFEASIBLE,
        SolveStatus::Unbounded => EXIT_UNBOUNDED,
        SolveStatus::CycleDetected | SolveStatus::IterationLimit => EXIT_SAFEGUARD,
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Solve {
            file,
            opts,
            trace,
            quiet,
        } => {
            let sp = read_problem(&file)?;
            let cfg = opts.config()?;
            let (status, json, summary) = match opts.numeric {
                NumericArg::Rational => report_solve(&solve::<BigRational>(&sp, opts.method(), &cfg)?),
                NumericArg::Float => report_solve(&solve::<f64>(&sp, opts.method(), &cfg)?),
            };
            if let Some(path) = trace {
                write_file(&path, &json)?;
            }
            if !quiet {
                let _ = out.write_all(summary.as_bytes());
            }
            Ok(status_code(status))
        }
        Command::Compare {
            file,
            opts,
            report,
            quiet,
        } => {
            let sp = read_problem(&file)?;
            let cfg = opts.config()?;
            let (termination, json, summary) = match opts.numeric {
                NumericArg::Rational => report_compare(&compare::<BigRational>(&sp, &cfg)?),
                NumericArg::Float => report_compare(&compare::<f64>(&sp, &cfg)?),
            };
            if let Some(path) = report {
                write_file(&path, &json)?;
            }
            if !quiet {
                let _ = out.write_all(summary.as_bytes());
            }
            Ok(match termination {
                Termination::Feasible => EXIT_OPTIMAL,
                Termination::Infeasible => EXIT_INFEASIBLE,
                _ => EXIT_SAFEGUARD,
            })
        }
        Command::Gen {
            seed,
            rows,
            cols,
            shape,
            coeff_min,
            coeff_max,
            out: path,
        } => {
            if rows == 0 || cols == 0 {
                return Err(Failure::usage("--rows and --cols must be at least 1"));
            }
            if coeff_min > coeff_max {
                return Err(Failure::usage("--coeff-min exceeds --coeff-max"));
            }
            let spec = GeneratorSpec {
                coefficients: coeff_min..=coeff_max,
                ..GeneratorSpec::new(seed, rows, cols, shape)
            };
            write_file(&path, &print_lp(&generate_lp(&spec)))?;
            Ok(EXIT_OPTIMAL)
        }
        Command::Oracle { file, quiet } => {
            let sp = read_problem(&file)?;
            let report = enumerate_vertices(&sp)?;
            if !quiet {
                let _ = out.write_all(emit_oracle_json(&report).as_bytes());
            }
            Ok(match report.optimum {
                OracleOptimum::Optimal { .. } => EXIT_OPTIMAL,
                OracleOptimum::Infeasible => EXIT_INFEASIBLE,
                OracleOptimum::Unbounded { .. } => EXIT_UNBOUNDED,
            })
        }
    }
}

fn report_solve<T: Scalar>(outcome: &SolveOutcome<T>) -> (SolveStatus, String, String) {
    let mut s = format!("status: {}\n", outcome.status);
    if let Some(z) = &outcome.objective {
        s += &format!("objective: {z}\n");
    }
    if let Some(x) = &outcome.solution {
        for (name, v) in outcome.variable_names().iter().zip(x) {
            s += &format!("  {name} = {v}\n");
        }
    }
    s += &format!(
        "phase 1 ({}): {} pivots, {} degenerate, {}\n",
        outcome.method.as_str(),
        outcome.phase1.pivots(),
        outcome.phase1.degenerate_pivots(),
        outcome.phase1.termination
    );
    if let Some(t) = &outcome.phase2 {
        s += &format!("phase 2: {} pivots, {}\n", t.pivots(), t.termination);
    }
    (outcome.status, emit_outcome_json(outcome), s)
}

fn report_compare<T: Scalar>(report: &ComparisonReport<T>) -> (Termination, String, String) {
    let line = |name: &str, m: &crate::harness::MethodSummary<T>| {
        let corners: Vec<String> = m
            .corners
            .iter()
            .map(|c| format!("({})", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        format!(
            "{name}: {} pivots, {} degenerate, {}; corners {}\n",
            m.pivots,
            m.degenerate_pivots,
            m.termination,
            corners.join(" ")
        )
    };
    let mut s = line("af", &report.artificial_free);
    s += &line("traditional", &report.traditional);
    s += &format!(
        "verdicts equal: {}, corners equal: {}, af pivots <= traditional: {}\n",
        report.verdicts_equal, report.corners_equal, report.af_not_more_pivots
    );
    (report.artificial_free.termination, emit_comparison_json(report), s)
}
