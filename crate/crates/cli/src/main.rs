//! `heffter`: validate arrays, find orderings, trace faces, derive and
//! verify embeddings, and run searches.
//!
//! Exit status is 0 when the object is valid or found, 1 when it is invalid
//! or none exists, and 2 for usage and file-format errors. Machine-readable
//! results go to standard output as `key=value` lines; diagnostics go to
//! standard error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "heffter", version, about = "Heffter arrays, current graphs and biembeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an array file.
    Verify {
        array: PathBuf,
        /// Also require zero integer sums and support 1..ms.
        #[arg(long)]
        integer: bool,
        /// Also require balanced signs in every row and column.
        #[arg(long)]
        shiftable: bool,
        /// Read and validate the file as a weak array.
        #[arg(long)]
        weak: bool,
    },
    /// Find compatible row and column orderings and print them.
    Orderings {
        array: PathBuf,
        /// Only accept simple orderings.
        #[arg(long)]
        require_simple: bool,
        /// Write the ordering file here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the rotation from orderings and trace its faces.
    Trace {
        array: PathBuf,
        orderings: PathBuf,
        /// Trace with edge signs (implied by a weak array with twisted cells).
        #[arg(long)]
        signed: bool,
    },
    /// Derive the embedding of K_M, verify it and write a certificate.
    Derive {
        array: PathBuf,
        orderings: PathBuf,
        #[arg(long)]
        signed: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a certificate written by `derive`.
    VerifyEmbedding { certificate: PathBuf },
    /// Develop the orderings into closed-trail decompositions of K_M.
    Develop {
        orderings: PathBuf,
        /// Defaults to twice the number of row values plus one.
        #[arg(long)]
        modulus: Option<i64>,
    },
    /// Constructive searches.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Distinct partial sums: one subset, or every subset of Z_M \ {0}.
    Alspach {
        modulus: i64,
        #[arg(long, conflicts_with = "subset")]
        exhaustive: bool,
        /// Comma-separated elements.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        subset: Option<Vec<i64>>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Decide whether a graph has a one-face embedding.
    Xuong {
        graph: PathBuf,
        /// Use the edge signs and ask for a one-face embedding of the signed graph.
        #[arg(long)]
        signed: bool,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Search for H(m,n;s,t).
    Array {
        m: usize,
        n: usize,
        s: usize,
        t: usize,
        #[arg(long, value_enum, default_value_t = Mode::General)]
        mode: Mode,
        /// Node budget per top-level branch.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Search for a Heffter system D(M,k).
    System { modulus: i64, k: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    General,
    Integer,
    Shiftable,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
