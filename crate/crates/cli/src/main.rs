//! `zf`: compute, verify, sweep, and trace zero forcing invariants.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 budget refusal.

mod commands;
mod parse;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zeroforcing::error::SolverError;
use zeroforcing::solver::SolverConfig;

#[derive(Debug, Parser)]
#[command(
    name = "zf",
    version,
    about = "Exact zero forcing invariants of finite simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Closure-evaluation budget per request (also: env ZF_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker threads for the subset search; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Cap on enumerated chronological lists.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    list_cap: usize,

    /// Seed for randomized property sampling; the subcommands here are
    /// fully deterministic and ignore it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Include wall-clock timings in the output (off keeps output
    /// byte-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct GraphSource {
    /// Graph family tag (path, cycle, complete, complete_bipartite, grid,
    /// triangular_grid, king_grid, cycle_x_path, complete_x_path,
    /// complete_x_complete, cycle_x_complete, cycle_x_cycle, bouquet).
    #[arg(long)]
    family: Option<String>,

    /// Family parameters, comma-separated (e.g. `--params 2,3,4`).
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,

    /// Edge-list file instead of a family.
    #[arg(long)]
    graph: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute Z, I, witnesses, and bounds for one graph.
    Compute {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Compare computed Z and I against the known closed forms over
    /// parameter ranges.
    Verify {
        /// Graph family tag.
        #[arg(long)]
        family: String,
        /// First (or only) parameter range, `a..b` inclusive.
        #[arg(long)]
        s: Option<parse::RangeArg>,
        /// Second parameter range, `a..b` inclusive.
        #[arg(long)]
        t: Option<parse::RangeArg>,
        /// Single exact parameter tuple (e.g. a bouquet signature).
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
    },
    /// Sweep cycle-times-cycle products against the conjectured values.
    Conjecture {
        /// Largest cycle length; sweeps all 3 <= s <= t <= max.
        #[arg(long)]
        max: usize,
    },
    /// Run the color-change dynamics from an explicit initial set and
    /// render the per-round annotation.
    Trace {
        #[command(flatten)]
        source: GraphSource,
        /// Initial black set: comma-separated ids or labels, e.g.
        /// `2,4,6` or `(1,1),(2,1)`.
        #[arg(long)]
        set: String,
        /// Also print one canonical chronological list of forces.
        #[arg(long)]
        forces: bool,
    },
}

/// Failure modes mapped to exit codes.
#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Budget(String),
    Internal(String),
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

pub(crate) type CliResult = Result<ExitCode, CliError>;

fn solver_config(cli: &Cli) -> Result<SolverConfig, CliError> {
    let mut cfg = SolverConfig {
        workers: cli.workers.max(1),
        list_cap: cli.list_cap,
        ..SolverConfig::default()
    };
    if let Some(b) = cli.budget {
        cfg.budget = b;
    } else if let Ok(env) = std::env::var("ZF_BUDGET") {
        cfg.budget = env
            .parse()
            .map_err(|_| CliError::Usage(format!("ZF_BUDGET is not a number: `{env}`")))?;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> CliResult {
        let cfg = solver_config(&cli)?;
        match &cli.command {
            Command::Compute { source } => commands::compute(source, &cfg, cli.format, cli.timing),
            Command::Verify {
                family,
                s,
                t,
                params,
            } => commands::verify(family, s.as_ref(), t.as_ref(), params, &cfg, cli.format),
            Command::Conjecture { max } => commands::conjecture(*max, &cfg, cli.format),
            Command::Trace {
                source,
                set,
                forces,
            } => commands::trace(source, set, *forces, &cfg, cli.format),
        }
    })();
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}
