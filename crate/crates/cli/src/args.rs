use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hybrid-codes", version, about = "Hybrid quantum-classical stabilizer codes")]
pub struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for sweeps and enumerations (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a code file and certify its distance.
    Verify {
        file: PathBuf,
        /// Distance to confirm; exit status 1 if the code falls short.
        #[arg(long)]
        claimed_d: Option<usize>,
    },
    /// Compute the hybrid distance, or sweep for low-weight logical errors.
    Distance {
        file: PathBuf,
        /// Only check that no error of weight below D is undetectable.
        #[arg(long)]
        sweep_target: Option<usize>,
    },
    /// Weight enumerator of one of the nested codes.
    Enumerate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::C0)]
        which: Which,
    },
    /// Linear-programming bound on the number of classical bits.
    Bound(BoundArgs),
    /// Build new codes from old ones.
    #[command(subcommand)]
    Construct(Construct),
    /// Search for impure hybrid codes starting from self-dual seeds.
    Search(SearchArgs),
    /// List the built-in codes, or print one of them.
    Catalog { name: Option<String> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "c0")]
    C0,
    #[value(name = "c0*")]
    C0Star,
    #[value(name = "c")]
    C,
    #[value(name = "c*")]
    CStar,
    #[value(name = "shadow")]
    Shadow,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, required_unless_present = "table")]
    pub n: Option<usize>,
    #[arg(long, required_unless_present = "table")]
    pub k: Option<usize>,
    #[arg(long, required_unless_present = "table")]
    pub d: Option<usize>,
    /// Decide a single `m` instead of maximizing.
    #[arg(long, conflicts_with = "table")]
    pub m: Option<usize>,
    /// Drop the shadow constraints.
    #[arg(long)]
    pub no_shadow: bool,
    /// Recompute the whole parameter table and compare with published values.
    #[arg(long)]
    pub table: bool,
    /// Largest length in the table.
    #[arg(long, default_value_t = 12, requires = "table")]
    pub max_n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Extend nested codes by a classical code.
    X {
        #[arg(long)]
        inner: PathBuf,
        /// Pauli rows extending the inner normalizer, one per line.
        #[arg(long, conflicts_with = "outer", required_unless_present = "outer")]
        g12: Option<PathBuf>,
        /// Outer code; its normalizer must contain the inner one.
        #[arg(long)]
        outer: Option<PathBuf>,
        /// Classical code as 0/1 rows.
        #[arg(long)]
        classical: PathBuf,
    },
    /// Append qubits fixed in |0>.
    Append {
        file: PathBuf,
        #[arg(long)]
        count: usize,
    },
    /// Turn the last logical qubit into a classical bit.
    Demote { file: PathBuf },
    /// Place a code without classical bits next to a classical code.
    Juxtapose {
        file: PathBuf,
        #[arg(long)]
        classical: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub seeds: PathBuf,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub k: usize,
    /// Candidate translations tried per code.
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
    #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
    pub strategy: StrategyArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Exhaustive,
    Randomized,
}
