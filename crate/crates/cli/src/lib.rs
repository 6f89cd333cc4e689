//! Command-line frontend for the structured circulant tridiagonal solver.
//!
//! Exit codes are stable: 0 success, 1 check failed, 2 invalid input, 3 overflow,
//! 4 singular pivot, 5 dimension mismatch, 6 dense size guard.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use circkr::{Mode, SystemSpec64, Variant};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod bench;
pub mod commands;
pub mod format;

pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_SINGULAR: i32 = 4;
pub const EXIT_DIMENSION: i32 = 5;
pub const EXIT_SIZE_GUARD: i32 = 6;

/// Environment switch: `CIRCKR_STRICT=0` accepts `|c| <= 2|a|` as long as pivots stay nonzero.
pub const STRICT_ENV: &str = "CIRCKR_STRICT";

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub kind: String,
    pub detail: String,
    pub code: i32,
}

impl CliError {
    pub fn new(kind: &str, detail: String, code: i32) -> Self {
        CliError {
            kind: kind.into(),
            detail,
            code,
        }
    }

    pub fn parse(detail: String) -> Self {
        Self::new("Parse", detail, EXIT_INVALID)
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        Self::new("Io", format!("{}: {err}", path.display()), EXIT_INVALID)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ERROR {}: {}", self.kind, self.detail)
    }
}

impl From<circkr::Error> for CliError {
    fn from(err: circkr::Error) -> Self {
        use circkr::Error as E;
        let code = match err.root() {
            E::Overflow { .. } | E::Inconsistency { .. } => EXIT_OVERFLOW,
            E::ZeroPivot { .. }
            | E::SingularPivot { .. }
            | E::Singular { .. }
            | E::SingularEigenvalue { .. } => EXIT_SINGULAR,
            E::DimensionMismatch { .. } => EXIT_DIMENSION,
            E::SizeGuard { .. } => EXIT_SIZE_GUARD,
            _ => EXIT_INVALID,
        };
        CliError::new(err.kind(), err.to_string(), code)
    }
}

/// What a command produced: text for standard output and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

#[derive(Debug, Parser)]
#[command(name = "circkr", version, about = "Symmetric circulant tridiagonal systems: factor, solve, invert")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the recurrence, last-row coefficients and pivot; optionally every dense factor
    Decompose(DecomposeArgs),
    /// Solve A x = b for one or more right-hand sides
    Solve(SolveArgs),
    /// Write the inverse densely or as its first row
    Invert(InvertArgs),
    /// Compare the factorization against dense and spectral references
    Check(CheckArgs),
    /// Time the O(n) solve path over a range of orders
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Circulant,
    Tridiagonal,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Circulant => Variant::Circulant,
            VariantArg::Tridiagonal => Variant::Tridiagonal,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SystemArgs {
    /// Matrix order
    #[arg(long)]
    pub n: usize,
    /// Diagonal value
    #[arg(long, allow_negative_numbers = true)]
    pub c: f64,
    /// Band and corner value
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, value_enum, default_value_t = VariantArg::Circulant)]
    pub variant: VariantArg,
}

impl SystemArgs {
    pub fn spec(&self) -> Result<SystemSpec64, CliError> {
        Ok(SystemSpec64::with_mode(self.n, self.c, self.a, mode_from_env())?)
    }

    pub fn variant(&self) -> Variant {
        self.variant.into()
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Digits after the decimal point
    #[arg(long, default_value_t = 6)]
    pub precision: usize,
}

impl OutputArgs {
    fn emit(&self, text: String) -> Result<Outcome, CliError> {
        match &self.out {
            Some(path) => {
                fs::write(path, text).map_err(|e| CliError::io(path, e))?;
                Ok(Outcome::ok(String::new()))
            }
            None => Ok(Outcome::ok(text)),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Also print every factor as a dense CSV block
    #[arg(long)]
    pub dense: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Right-hand sides: one line per unknown, whitespace-separated columns
    #[arg(long)]
    pub rhs: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvertMode {
    Dense,
    FirstRow,
}

#[derive(Debug, Clone, Args)]
pub struct InvertArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long, value_enum, default_value_t = InvertMode::Dense)]
    pub mode: InvertMode,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Dense CSV matrix to validate against the (n, c, a) system
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}

pub fn mode_from_env() -> Mode {
    match std::env::var(STRICT_ENV) {
        Ok(v) if v.trim() == "0" => Mode::Permissive,
        _ => Mode::Strict,
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Decompose(args) => commands::decompose(args),
        Command::Solve(args) => commands::solve(args),
        Command::Invert(args) => commands::invert(args),
        Command::Check(args) => commands::check(args),
        Command::Bench(args) => bench::run(args),
    }
}
