mod batch;
mod commands;
mod instance;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Plane spanning trees in geometric graphs with few disconnected empty triangles.
#[derive(Parser)]
#[command(name = "planetree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenFamily {
    /// Complete graph on random points.
    Complete,
    /// Complement of the boundary path of a convex polygon.
    PathComplement,
    /// Complement of a plane path with one point pushed inside the polygon.
    RConstruction,
    /// Random points with edges removed while s <= n - 3.
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen {
        family: GenFamily,
        n: usize,
        /// Output path; defaults to `<family>-<n>.json`.
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Polygon radius for the convex families.
        #[arg(long, default_value_t = 1_000_000)]
        scale: u32,
        /// For r-construction, write the plane path instead of its complement.
        #[arg(long)]
        path: bool,
    },
    /// Print size, empty-triangle count and s(G) with witnesses.
    Stats { input: PathBuf },
    /// Build a plane spanning tree.
    Build {
        input: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Node budget for oracle calls at the leaves.
        #[arg(long, default_value_t = planetree::oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Certify an edge list (inline JSON or a file) as a plane spanning tree.
    Check { input: PathBuf, tree: String },
    /// Exhaustive search for a plane spanning tree.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = planetree::oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Random campaign: builder, oracle cross-check and rotation checks.
    Batch {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 5)]
        min_n: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest n cross-checked against the oracle.
        #[arg(long, default_value_t = 9)]
        oracle_max_n: usize,
        /// Worker threads; 0 means one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print the rotating halving lines and their checked invariants.
    Rotate { input: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen { family, n, out, seed, scale, path } => commands::gen(family, n, out, seed, scale, path),
        Command::Stats { input } => commands::stats(&input),
        Command::Build { input, svg, budget } => commands::build(&input, svg.as_deref(), budget),
        Command::Check { input, tree } => commands::check(&input, &tree),
        Command::Oracle { input, budget } => commands::oracle(&input, budget),
        Command::Batch { trials, min_n, max_n, seed, oracle_max_n, jobs } => {
            if min_n > max_n {
                clap::Error::raw(clap::error::ErrorKind::ValueValidation, "--min-n exceeds --max-n\n").exit();
            }
            batch::run(&batch::Config { trials, min_n, max_n, seed, oracle_max_n, jobs })
        }
        Command::Rotate { input } => commands::rotate(&input),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::EXIT_FAILURE)
        }
    }
}
