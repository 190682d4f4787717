//! Command-line interface: per-graph reports, exhaustive verification
//! sweeps, named family construction, and extremal local search.
//!
//! Exit codes: 0 success, 1 verification violation, 2 usage or input error.

mod report;
mod search;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use eigenbounds::BoundSelection;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per graph (JSON lines).
    Json,
    /// Fixed-width human-readable tables.
    Table,
}

#[derive(Parser)]
#[command(
    name = "eigenbounds",
    version,
    about = "Spectral bounds for small graphs: evaluation, verification, search"
)]
struct Cli {
    /// Bounds to evaluate: "all" or a comma-separated list of bound ids.
    #[arg(long, global = true, default_value = "all")]
    bounds: String,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every graph6 line from a file (or standard input).
    Report {
        /// Input file of graph6 lines; standard input when omitted.
        file: Option<PathBuf>,
    },
    /// Check every selected bound on all isomorphism classes up to an order
    /// cap; any violation is a bug and exits 1.
    Verify {
        /// Largest order to enumerate (at most 8).
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        /// Largest order at which the cut bound runs over all proper
        /// subsets; above it, one instance at a minimum dominating set.
        #[arg(long = "mohar-all-max", default_value_t = 6)]
        mohar_all_max: usize,
    },
    /// Build a named family member and report it.
    Family {
        /// Family name: complete, star, cycle, path, petersen,
        /// hoffman-singleton, matching-complement, moore.
        name: String,
        /// Size parameter (vertex count, or degree for moore).
        param: Option<usize>,
    },
    /// Stochastic edge-toggle search for extremal graphs under a constraint.
    Search {
        /// Number of vertices (5 to 32).
        #[arg(long)]
        n: usize,
        /// Quantity to optimize.
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        /// Constraint kept invariant: "girth5" or "gamma:K".
        #[arg(long)]
        constraint: String,
        /// Random seed; identical seeds give byte-identical output.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Total number of proposed moves across all restarts.
        #[arg(long, default_value_t = 20000)]
        budget: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    /// Maximize the adjacency spectral radius.
    MaximizeMu,
    /// Minimize the largest Laplacian eigenvalue.
    MinimizeLambdaMax,
}

fn main() {
    let cli = Cli::parse();
    let selection = match BoundSelection::parse(&cli.bounds) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    let code = match cli.command {
        Command::Report { file } => report::cmd_report(file.as_deref(), &selection, cli.format),
        Command::Verify { max_n, mohar_all_max } => {
            verify::cmd_verify(max_n, mohar_all_max, &selection, cli.format)
        }
        Command::Family { name, param } => {
            report::cmd_family(&name, param, &selection, cli.format)
        }
        Command::Search { n, objective, constraint, seed, budget } => search::cmd_search(
            search::SearchParams { n, objective, constraint, seed, budget },
            &selection,
            cli.format,
        ),
    };
    std::process::exit(code);
}
