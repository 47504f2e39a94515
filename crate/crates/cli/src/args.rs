use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "unimodal", version, about = "Unimodal permutations counted by cycle type, with exact verification")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write to FILE (atomically) instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of unimodal n-cycles, c_1 through c_max.
    CValues {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        max: u64,
    },
    /// Unimodal counts for every cycle type of size n.
    Table(TableArgs),
    /// Generating-function coefficients.
    Series(SeriesArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=16))]
    pub n: u64,
    /// Include the refinement by position of the maximum.
    #[arg(long)]
    pub q: bool,
    /// Cross-check every row against brute-force enumeration.
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Theorem1,
    Theoremq,
    NoKCycle,
    Order,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub kind: SeriesKind,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub degree: u64,
    /// Forbidden cycle length (no-k-cycle).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: Option<u64>,
    /// Order bound: count sigma with sigma^m = id (order).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub m: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=16))]
    pub n_max: u64,
    /// Suites to run; `all` (the default) selects every suite.
    #[arg(long = "suite", value_name = "S", num_args = 1..)]
    pub suites: Vec<String>,
}
