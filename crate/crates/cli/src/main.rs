//! `ymalg`: dimension tables, morphism checks, the sl(2) case study and
//! realization data for Yang-Mills algebras, printed as JSON reports.
//!
//! Exit status is 0 when everything checked out, 1 when a mathematical check
//! failed (a nonzero residual, an audit violation) and 2 on bad input.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod input;
mod report;

use report::{inputs_digest, RunReport};

#[derive(Parser, Debug)]
#[command(name = "ymalg", version, about = "Exact computations with Yang-Mills Lie algebras")]
pub struct Cli {
    /// Output format; csv is only available for `dims`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Master seed for sampled commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Highest degree for dimension tables.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_degree: usize,
    /// Bracketing rounds for Witt/Virasoro window evidence.
    #[arg(long, global = true, default_value_t = 8)]
    pub depth: usize,
    /// Index window |n| ≤ N for Witt/Virasoro evidence.
    #[arg(long, global = true, default_value_t = 10)]
    pub window: u64,
    /// Add wall-clock time to the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Nilpotent,
    Semisimple,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Random,
    NilpotentBranch,
    SemisimpleBranch,
    Proportional,
    Remark,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Graded dimensions of f(n), the relation ideal and ym(n).
    Dims {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=255))]
        n: u64,
        /// Use the n² relations [x_i,[x_i,x_j]] individually.
        #[arg(long)]
        strong: bool,
    },
    /// Check a morphism given in a JSON file.
    Verify {
        path: PathBuf,
        #[arg(long)]
        strong: bool,
    },
    /// Oracle equivalence and solvable-image audit for ym(3) → sl(2).
    CaseStudy {
        #[arg(long, value_enum, default_value_t = BranchArg::Both)]
        branch: BranchArg,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Restrict the audit to one candidate family.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// The ym(4) morphism (a, b, i·a, i·b) for a generating pair.
    Pair {
        /// sl2, sl3, sl(m), heisenberg, witt or virasoro.
        #[arg(long, default_value = "sl2")]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Include the Virasoro cocycle (Witt targets only).
        #[arg(long)]
        virasoro: bool,
        #[arg(long)]
        strong: bool,
    },
    /// Generalized Cartan check, realization and generator bound for a matrix file.
    Realization { path: PathBuf },
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match commands::run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = match outcome.body {
        commands::Body::Text(t) => t,
        commands::Body::Json(payload) => {
            let report = RunReport {
                inputs_digest: inputs_digest(&args, &outcome.files),
                command: args,
                seed: outcome.seed,
                payload,
                timing_ms: cli.timing.then(|| start.elapsed().as_millis()),
            };
            serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
        }
    };
    // a closed pipe downstream is not an error of ours
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if outcome.clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
