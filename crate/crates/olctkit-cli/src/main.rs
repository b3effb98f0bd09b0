//! `olctkit` batch front end.

mod commands;
mod config;
mod error;
mod fields;
mod plot;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "olctkit", version, about = "Offset linear canonical transforms and their inequalities")]
struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory; overrides `output.dir`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Nodes per axis; overrides `grid.n`.
    #[arg(long, global = true)]
    grid_n: Option<usize>,
    /// Seed for the randomized fields of `selftest`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Forward transform of the configured signal into `spectrum.csv`.
    Transform,
    /// Inverse transform of a spectrum CSV, or a forward/inverse round trip of an analytic signal.
    Inverse,
    /// Evaluate one inequality and write `report.csv`.
    Verify {
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long, value_enum)]
        domain: Option<DomainArg>,
    },
    /// Sweep one of the two published tables.
    Table {
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Run the invariant suite; exits nonzero on any failure.
    Selftest,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DomainArg {
    Olct,
    Qolct,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Which {
    Heisenberg,
    Young,
}

fn init_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("OLCTKIT_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::validation("InvalidThreads", format!("OLCTKIT_THREADS must be a positive integer, got {raw:?}")))?;
    if n == 0 {
        return Err(CliError::validation("InvalidThreads", "OLCTKIT_THREADS must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::validation("InvalidThreads", e.to_string()))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    init_threads()?;
    let opts = commands::Options { config: cli.config, out: cli.out, grid_n: cli.grid_n };
    match cli.command {
        Command::Transform => commands::transform(&opts).map(|_| true),
        Command::Inverse => commands::inverse(&opts).map(|_| true),
        Command::Verify { theorem, domain } => commands::verify(&opts, theorem.as_deref(), domain).map(|_| true),
        Command::Table { which } => commands::table(&opts, which).map(|_| true),
        Command::Selftest => selftest::run(opts.grid_n.unwrap_or(128), cli.seed.unwrap_or(selftest::DEFAULT_SEED)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("{}", e.machine_line());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
