//! `dets2 eval | solve | uniqueness`.
//!
//! Exit codes: 0 success, 1 user or input error, 2 internal error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use dets2_core::{
    classify, det_s2_direct, det_s2_inner_product, det_s2_via_matrix, solve_uniqueness, Configuration, Pair,
    Scalar,
};
use thiserror::Error;

use crate::config_file::{parse_float, parse_rational, ConfigError};
use crate::svg::write_svg;

/// Relative tolerance for float agreement between the three formulas.
pub const FLOAT_AGREEMENT_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "dets2", version, about = "Evaluate det^{S^2} and decide quadrilateral realizability")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate det^{S^2} on a configuration file.
    Eval {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Backend::Rational)]
        backend: Backend,
        /// Print all three formulas and whether they agree.
        #[arg(long)]
        all_formulas: bool,
    },
    /// Rank of the realizability system, its nullspace, and witnessing quadrilaterals.
    Solve {
        path: PathBuf,
        /// Write one SVG per nullspace vector, suffixed -0, -1, ...
        #[arg(long, value_name = "OUTPATH")]
        svg: Option<PathBuf>,
    },
    /// Recompute det^{S^2} from its vanishing property and compare.
    Uniqueness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Rational,
    Float,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Config { path: PathBuf, source: ConfigError },
    #[error("{path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 2,
            _ => 1,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

fn config_err(path: &Path) -> impl FnOnce(ConfigError) -> CliError + '_ {
    move |source| CliError::Config { path: path.to_owned(), source }
}

fn io_internal(e: std::io::Error) -> CliError {
    CliError::Internal(e.to_string())
}

fn eval_report<S: Scalar>(
    c: &Configuration<S>,
    all: bool,
    agree: impl Fn(&S, &S) -> bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let direct = det_s2_direct(c);
    if !all {
        writeln!(out, "{direct}").map_err(io_internal)?;
        return Ok(());
    }
    let inner = det_s2_inner_product(c);
    let matrix = det_s2_via_matrix(c);
    writeln!(out, "direct        {direct}").map_err(io_internal)?;
    writeln!(out, "inner-product {inner}").map_err(io_internal)?;
    writeln!(out, "matrix        {matrix}").map_err(io_internal)?;
    let verdict = if agree(&direct, &inner) && agree(&direct, &matrix) { "AGREE" } else { "DISAGREE" };
    writeln!(out, "{verdict}").map_err(io_internal)
}

fn eval(path: &Path, backend: Backend, all: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let text = read(path)?;
    match backend {
        Backend::Rational => {
            let c = parse_rational(&text).map_err(config_err(path))?;
            eval_report(&c, all, |a, b| a == b, out)
        }
        Backend::Float => {
            let c = parse_float(&text).map_err(config_err(path))?;
            let close =
                |a: &f64, b: &f64| (a - b).abs() <= FLOAT_AGREEMENT_TOL * a.abs().max(b.abs()).max(1.0);
            eval_report(&c, all, close, out)
        }
    }
}

/// `out.svg` -> `out-0.svg`; a path without extension gets `-0` appended.
pub fn indexed_path(base: &Path, index: usize) -> PathBuf {
    match (base.file_stem(), base.extension()) {
        (Some(stem), Some(ext)) => {
            let mut name = stem.to_owned();
            name.push(format!("-{index}."));
            name.push(ext);
            base.with_file_name(name)
        }
        _ => {
            let mut name = base.as_os_str().to_owned();
            name.push(format!("-{index}"));
            PathBuf::from(name)
        }
    }
}

fn solve(path: &Path, svg: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    let c = parse_rational(&read(path)?).map_err(config_err(path))?;
    let r = classify(&c);
    let mut lines = vec![
        format!("rank {}", r.rank),
        (if r.realizable { "REALIZABLE" } else { "NOT REALIZABLE" }).to_owned(),
    ];
    if r.realizable {
        lines.push(format!("nullspace dimension {}", r.lambda_basis.len()));
        let header: Vec<&str> = Pair::LAMBDA_ORDER.iter().map(|p| p.key()).collect();
        for (k, (lambda, quad)) in r.lambda_basis.iter().zip(&r.quadrilaterals).enumerate() {
            let values: Vec<String> = lambda.0.iter().map(ToString::to_string).collect();
            lines.push(format!("lambda[{k}] ({}): {}", header.join(" "), values.join(" ")));
            let points: Vec<String> =
                quad.points.iter().enumerate().map(|(i, p)| format!("Q{}={p}", i + 1)).collect();
            lines.push(format!("quad[{k}] {}", points.join(" ")));
        }
    }
    for line in &lines {
        writeln!(out, "{line}").map_err(io_internal)?;
    }
    if let Some(base) = svg {
        for (k, quad) in r.quadrilaterals.iter().enumerate() {
            let target = indexed_path(base, k);
            write_svg(quad, &c, &target)
                .map_err(|source| CliError::Write { path: target.clone(), source })?;
            writeln!(out, "svg[{k}] {}", target.display()).map_err(io_internal)?;
        }
    }
    Ok(())
}

fn uniqueness(out: &mut dyn Write) -> Result<(), CliError> {
    let u = solve_uniqueness();
    writeln!(out, "constraint matrix {}x{}", u.constraint_rows, u.constraint_cols).map_err(io_internal)?;
    writeln!(out, "dimension {}", u.dimension).map_err(io_internal)?;
    let Some(generator) = &u.generator else {
        return Err(CliError::Internal(format!(
            "expected a one-dimensional solution space, got {}",
            u.dimension
        )));
    };
    writeln!(out, "generator support {} nonzero", generator.support()).map_err(io_internal)?;
    match u.canonical_sign() {
        Some(s) => {
            writeln!(out, "MATCHES CANONICAL {}", if s > 0 { "+1" } else { "-1" }).map_err(io_internal)
        }
        None => Err(CliError::Internal("generator is not ±1 times the twelve-term formula".to_owned())),
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
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
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Eval { path, backend, all_formulas } => eval(path, *backend, *all_formulas, out),
        Command::Solve { path, svg } => solve(path, svg.as_deref(), out),
        Command::Uniqueness => uniqueness(out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "dets2: {e}");
            e.exit_code()
        }
    }
}
