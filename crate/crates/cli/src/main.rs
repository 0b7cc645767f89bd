use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use scramble_lab::Budget;
use scramble_lab_cli::commands::{self, Outcome};
use scramble_lab_cli::CliError;

/// Scramble number, carton number and related invariants of small multigraphs.
#[derive(Parser)]
#[command(name = "scramble-lab", version)]
struct Cli {
    /// Wall-clock cap in milliseconds; overrides SCRAMBLE_LAB_BUDGET_MS.
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member as a graph file, e.g. `gen rook 4 4`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute invariants of a graph file.
    Compute {
        graph: PathBuf,
        /// Comma-separated subset of dsn,sn,cart,tw,scw,gon,vcon.
        #[arg(long, value_delimiter = ',', default_value = "dsn,sn,cart,tw,scw,gon")]
        invariants: Vec<String>,
        /// Family tag, overriding the one recorded in the graph file.
        #[arg(long)]
        family: Option<String>,
        /// Directory for witness files.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Order of a scramble file on a graph.
    CheckScramble { graph: PathBuf, scramble: PathBuf },
    /// Width of a tree-cut decomposition (JSON).
    CheckTcd { graph: PathBuf, tcd: PathBuf },
    /// Congestion of a sub-cubic embedding (JSON) and its induced width.
    CheckEmbedding { graph: PathBuf, embedding: PathBuf },
    /// Gonality with a positive-rank witness.
    Gon {
        graph: PathBuf,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Approximation algorithms.
    Approx {
        graph: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        k: Option<usize>,
        /// Constant c > 1 as an integer, p/q or decimal.
        #[arg(long)]
        c: Option<String>,
    },
    /// Run a check suite.
    Suite {
        id: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Khit,
    Gavril,
    Family,
    Kc,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Khit => "khit",
            Method::Gavril => "gavril",
            Method::Family => "family",
            Method::Kc => "kc",
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let mut budget = Budget::from_env();
    if let Some(ms) = cli.budget_ms {
        budget = budget.with_deadline(Duration::from_millis(ms));
    }
    let mut out_path = None;
    let outcome: Outcome = match cli.command {
        Command::Gen { family, out } => {
            let text = commands::gen(&family.join(" "))?;
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?,
                None => print!("{text}"),
            }
            return Ok(ExitCode::SUCCESS);
        }
        Command::Compute { graph, invariants, family, witness_dir } => {
            commands::compute(&graph, family.as_deref(), &invariants, witness_dir.as_deref(), &budget)
        }
        Command::CheckScramble { graph, scramble } => commands::check_scramble(&graph, &scramble, &budget),
        Command::CheckTcd { graph, tcd } => commands::check_tcd(&graph, &tcd),
        Command::CheckEmbedding { graph, embedding } => commands::check_embedding(&graph, &embedding),
        Command::Gon { graph, cap } => commands::gon(&graph, cap, &budget),
        Command::Approx { graph, method, k, c } => commands::approx(&graph, method.name(), k, c.as_deref(), &budget),
        Command::Suite { id, out } => {
            out_path = out;
            commands::suite(&id, &budget)
        }
    };
    let (value, pass) = outcome?;
    let text = serde_json::to_string_pretty(&value).expect("serializable");
    match out_path {
        Some(path) => std::fs::write(&path, text + "\n").map_err(|source| CliError::Io { path, source })?,
        None => println!("{text}"),
    }
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
