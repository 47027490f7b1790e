//! Command-line front end: canonical documents, verification reports,
//! builders for the standard families, strong semilattice gluing and small
//! exhaustive searches.
//!
//! Exit codes are `0` when every checked property holds, `1` when the input
//! is well formed but a property fails, and `2` when the input is malformed.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod document;
pub mod enumerate;
pub mod error;
pub mod report;

pub use document::{Kind, StructureDocument};
pub use error::CliError;
pub use report::{Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "ybe",
    version,
    about = "Semi-braces and set-theoretic Yang-Baxter solutions on finite sets"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for parallel scans (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Accepted for forward compatibility; every algorithm is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Solution,
    Semibrace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Semibrace,
    CryptoCounterexample,
    FgPairs,
}

#[derive(Debug, Args)]
pub struct OutputArg {
    /// Write the document here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a document and report its properties.
    Verify {
        /// Document path, or `-` for standard input.
        path: PathBuf,
        /// Expected document kind.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Build a structure from a named family.
    Build {
        #[command(subcommand)]
        family: Family,
    },
    /// Associated solution of a semi-brace, with its classification.
    Solution {
        path: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Glue a semilattice system into a single solution or semi-brace.
    Semilattice {
        path: PathBuf,
        /// Defaults to `semibrace` when every payload is a semi-brace.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Index and period of a solution, of a semi-brace's solution, or of a system.
    IndexPeriod { path: PathBuf },
    /// Stream every structure of a kind up to an order.
    Enumerate {
        #[arg(long)]
        max_order: usize,
        #[arg(long, value_enum)]
        target: Target,
        /// Restrict `fg-pairs` to one named group.
        #[arg(long)]
        group: Option<String>,
        /// Largest order accepted by `--max-order`.
        #[arg(long, default_value_t = 6)]
        bound: usize,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// `a + b = b ∘ fg(b⁻) ∘ f(a)` on a named group.
    Fg {
        #[arg(long)]
        group: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Zappa–Szép product `G × H` with `(a, u) + (b, v) = (a, u v)`.
    ZappaSzep {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// `trivial` or `inversion`.
        #[arg(long, default_value = "trivial")]
        action: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// `a + b = a ∘ b` on a Clifford semigroup.
    Clifford {
        #[command(flatten)]
        source: TableSource,
        #[command(flatten)]
        out: OutputArg,
    },
    /// `a + b = b` on a completely regular semigroup.
    RightZero {
        #[command(flatten)]
        source: TableSource,
        #[command(flatten)]
        out: OutputArg,
    },
    /// `a + b = a` on a completely regular semigroup.
    LeftZero {
        #[command(flatten)]
        source: TableSource,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TableSource {
    /// A semigroup or group document, or a bare JSON table.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// A named group.
    #[arg(long)]
    pub group: Option<String>,
}

/// What a command produced, ready to be written out.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments and runs one command without touching the process streams.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => Outcome {
            code: if e.use_stderr() { 2 } else { 0 },
            stdout: if e.use_stderr() { String::new() } else { e.to_string() },
            stderr: if e.use_stderr() { e.to_string() } else { String::new() },
        },
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let job = || commands::dispatch(cli);
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(job),
            Err(e) => Err(CliError::Malformed(format!("cannot start {jobs} workers: {e}"))),
        },
        None => job(),
    };
    result.unwrap_or_else(|e| Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}
