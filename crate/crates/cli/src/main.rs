//! `pgreduce`: solve, minimize and compare parity games in PGSolver format.
//!
//! Exit codes: 0 on success, 1 on usage, parse or verification failures,
//! 2 on I/O errors.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pgreduce_core::lattice::Relation;
use pgreduce_core::quotient::EquivalenceKind;

#[derive(Parser)]
#[command(
    name = "pgreduce",
    version,
    about = "Parity game equivalences and quotients"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
pub struct Common {
    /// Print the report as a JSON object.
    #[arg(long, global = true)]
    json: bool,
    /// Write the produced game as Graphviz DOT.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Measure wall-clock timings; without it they are reported as 0.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the winning regions of both players.
    Solve { input: PathBuf },
    /// Quotient a game by an equivalence.
    Minimize {
        input: PathBuf,
        #[arg(long)]
        equiv: String,
        /// Quotient game in PGSolver format.
        #[arg(long)]
        out: PathBuf,
        /// Class map with one `<vertex> <class>` line per original vertex.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Report which relations relate two vertices, finest first.
    Compare {
        input: PathBuf,
        v: String,
        w: String,
    },
    /// Check the lattice inclusions and game characterizations.
    LatticeCheck {
        inputs: Vec<PathBuf>,
        /// Check random games with this many vertices instead of files.
        #[arg(long, value_name = "VERTICES", conflicts_with = "inputs")]
        random: Option<usize>,
        /// Number of random games, seeded 0, 1, ...
        #[arg(long, default_value_t = 50, requires = "random")]
        seeds: u64,
        #[arg(long, default_value_t = 3, requires = "random")]
        max_priority: u32,
        /// Replace a relation by the all-related relation before checking.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// Check that quotients preserve winners and are equivalent to the input.
    Verify {
        input: PathBuf,
        /// Equivalence to check; all of them when omitted.
        #[arg(long)]
        equiv: Option<String>,
    },
    /// Generate a seeded random game.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 3)]
        max_priority: u32,
        /// Out-degree range `lo:hi`.
        #[arg(long, default_value = "1:2")]
        degree: String,
        /// Write the game here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

pub fn parse_equiv(name: &str) -> Result<EquivalenceKind, CliError> {
    name.parse().map_err(|e| CliError::Usage(format!("{e}")))
}

pub fn parse_relation(name: &str) -> Result<Relation, CliError> {
    name.parse().map_err(CliError::Usage)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(&cli.command, &cli.common, argv[1..].to_vec()) {
        Ok(report) => {
            print!("{}", report.render(cli.common.json));
            let _ = std::io::stdout().flush();
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("pgreduce: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
