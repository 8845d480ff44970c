//! `cayrev`: decide FR / PGFR on abelian Cayley graphs, run walk simulations,
//! emit family instances and replay the regression corpus.

mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input.
    Parse(String),
    /// Well-formed input that does not describe a valid graph, pair or config.
    Semantic(String),
    /// The corpus disagreed with at least one label.
    Mismatch(usize),
    Output(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Output(_) => 2,
            CliError::Semantic(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Semantic(m) => write!(f, "invalid input: {m}"),
            CliError::Mismatch(n) => write!(f, "{n} corpus case(s) disagree with their labels"),
            CliError::Output(m) => write!(f, "output error: {m}"),
        }
    }
}

#[derive(Parser)]
#[command(name = "cayrev", version, about = "Fractional revival on abelian Cayley graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide PGFR and FR for a vertex pair.
    Decide(DecideArgs),
    /// Evaluate the quantum walk at one time or search for revival times.
    Simulate(SimulateArgs),
    /// Print a graph spec for a named family.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Replay the labelled corpus against the deciders.
    Corpus(CorpusArgs),
}

#[derive(Args)]
pub struct DecideArgs {
    /// Graph spec JSON file, or `-` for stdin.
    pub graph: String,
    /// `a,b` as vertex indices or as concatenated coordinates.
    #[arg(long, conflicts_with = "all_pairs")]
    pub pair: Option<String>,
    /// Decide every pair `(0, b)`.
    #[arg(long)]
    pub all_pairs: bool,
    /// Include wall-clock timing (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args)]
pub struct SimulateArgs {
    pub graph: String,
    #[arg(long)]
    pub pair: Option<String>,
    #[arg(
        long,
        allow_negative_numbers = true,
        conflicts_with = "search",
        required_unless_present = "search"
    )]
    pub t: Option<f64>,
    #[arg(long)]
    pub search: bool,
    #[arg(long, default_value_t = 1e4)]
    pub t_max: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub grid: usize,
    #[arg(long, default_value_t = 32)]
    pub refine_top: usize,
    #[arg(long, default_value_t = 60)]
    pub refine_iters: usize,
    #[arg(long, default_value_t = 1e-3)]
    pub beta_floor: f64,
    /// Leakage below which a candidate counts as found.
    #[arg(long, default_value_t = 1e-8)]
    pub leakage_tol: f64,
    /// Write the ranked candidates as CSV.
    #[arg(long, requires = "search")]
    pub csv: Option<String>,
}

#[derive(Subcommand)]
pub enum FamilyCommand {
    Cycle {
        #[arg(long)]
        n: u64,
    },
    ComplementCycle {
        #[arg(long)]
        n: u64,
    },
    Complete {
        #[arg(long)]
        n: u64,
    },
    /// Circulant on `2p^s` with jumps `+-p^k`.
    #[command(alias = "thm42")]
    PowerCirculant {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<u32>,
        #[arg(long)]
        complement: bool,
    },
    /// Circulant on `2p^s` with jumps `+-y`.
    #[command(alias = "thm46")]
    JumpCirculant {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        ys: Vec<u64>,
        #[arg(long)]
        complement: bool,
    },
    /// Six-jump circulant on `2p^s`, `p > 3`.
    #[command(alias = "cor48")]
    SixJump {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
    },
    /// Complement of an axis graph on `Z_{2p^s}^h`.
    #[command(alias = "thm51")]
    AxisComplement {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        h: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        ys: Vec<u64>,
    },
    /// Complement graph on `Z_2 + Z_p^s`.
    #[command(alias = "thm54")]
    ElementaryComplement {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: usize,
    },
    /// Complement graph on `Z_2^m`.
    #[command(alias = "thm56")]
    CubeComplement {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Args)]
pub struct CorpusArgs {
    /// Evaluate the deciders on every case.
    #[arg(long, required_unless_present = "manifest")]
    pub run: bool,
    /// Print the corpus manifest instead of running it.
    #[arg(long, conflicts_with = "run")]
    pub manifest: bool,
    /// Keep cases whose name contains this string or whose category equals it.
    #[arg(long)]
    pub filter: Option<String>,
    /// Use the cases of a manifest file instead of the built-in corpus.
    #[arg(long)]
    pub from: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decide(args) => commands::decide(&args),
        Command::Simulate(args) => commands::simulate(&args),
        Command::Family { family } => commands::family(&family),
        Command::Corpus(args) => commands::corpus(&args),
    };
    match result {
        Ok(stdout) => {
            print!("{stdout}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cayrev: {e}");
            ExitCode::from(e.code())
        }
    }
}
