//! `lrc`: bounds, LP solving and code analysis for locally recoverable codes.

mod analyze;
mod bounds;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lrc_core::bounds::{parse_kopt_csv, KoptMode, KoptProvider};
use lrc_core::codecore::DEFAULT_BUDGET;
use lrc_core::LrcError;

#[derive(Parser)]
#[command(
    name = "lrc",
    version,
    about = "Dimension bounds and duality checks for locally recoverable codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, locality and weight data of a code read from FILE
    Analyze(analyze::AnalyzeArgs),
    /// Every applicable bound for a parameter tuple
    Bound(bounds::BoundArgs),
    /// The LP upper bound on k for an (r, delta)-LRC
    LpBound(bounds::LpArgs),
    /// Random-corpus check of the duality identities and bounds
    Verify(bounds::VerifyArgs),
    /// Recompute the reference tables of bounds
    Tables(tables::TablesArgs),
    /// Look up or bound k_opt(n, d) for linear codes
    Kopt(bounds::KoptArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Enumeration budget shared by every code-level command.
#[derive(Args, Clone, Copy)]
pub struct BudgetArg {
    /// Maximum number of codewords or subsets to enumerate
    #[arg(long, env = "LRC_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Args, Clone)]
pub struct KoptArg {
    /// Source of k_opt(n, d): exact, lp or singleton
    #[arg(long, default_value = "exact", value_parser = parse_mode)]
    pub kopt_mode: KoptMode,
    /// Extra CSV rows `q,n,d,kopt[,source]` layered over the embedded table
    #[arg(long, value_name = "FILE")]
    pub kopt_table: Option<PathBuf>,
}

fn parse_mode(s: &str) -> Result<KoptMode, String> {
    s.parse().map_err(|e: LrcError| e.to_string())
}

impl KoptArg {
    pub fn provider(&self) -> Result<KoptProvider, CliError> {
        let mut provider = match self.kopt_mode {
            KoptMode::ExactTable => KoptProvider::exact(),
            KoptMode::DelsarteLp => KoptProvider::delsarte(),
            KoptMode::Singleton => KoptProvider::singleton(),
        };
        if let Some(path) = &self.kopt_table {
            provider.extend(parse_kopt_csv(&read_file(path)?)?);
        }
        Ok(provider)
    }
}

#[derive(Debug)]
pub enum CliError {
    /// bad input: exit 2
    Usage(String),
    /// a valid request the library cannot answer: exit 1
    Domain(String),
}

impl From<LrcError> for CliError {
    fn from(e: LrcError) -> CliError {
        match e {
            LrcError::NotPrimePower(_)
            | LrcError::FieldTooLarge(_)
            | LrcError::InvalidParameters(_)
            | LrcError::Parse(_)
            | LrcError::InvalidModulus { .. }
            | LrcError::InvalidElement { .. }
            | LrcError::RaggedRows { .. }
            | LrcError::CoordinateOutOfRange { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

pub fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// What a command prints, and whether its verdict is a failure.
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    pub fn ok(text: String) -> Output {
        Output { text, failed: false }
    }
}

pub fn csv_string<S: serde::Serialize>(rows: impl IntoIterator<Item = S>) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).map_err(|e| CliError::Domain(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Domain(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => analyze::run(&a),
        Command::Bound(a) => bounds::run_bound(&a),
        Command::LpBound(a) => bounds::run_lp(&a),
        Command::Verify(a) => bounds::run_verify(&a),
        Command::Tables(a) => tables::run(&a),
        Command::Kopt(a) => bounds::run_kopt(&a),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
