use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lehmer_core::SequenceId;
use num_bigint::BigInt;

/// Default scan bound for `family`, `search` and `verify`.
pub const DEFAULT_BOUND: u64 = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "lehmer",
    version,
    about = "Lehmer pairs, primitive divisors and the small-n defective table"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct Jobs {
    /// Worker threads; results do not depend on this.
    #[arg(long, env = "LEHMER_JOBS", default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Term k of an auxiliary sequence (phi, psi, pi, rho, zeta0..zeta3).
    #[command(allow_negative_numbers = true)]
    Seq {
        sequence: SequenceId,
        k: i64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// The Lehmer number u_n of the pair (a, b).
    #[command(allow_negative_numbers = true)]
    U {
        a: BigInt,
        b: BigInt,
        n: u32,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Primitive-divisor witness for (a, b) at index n.
    #[command(allow_negative_numbers = true)]
    Check {
        a: BigInt,
        b: BigInt,
        n: u32,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// (p, q) = (a, (a - b)/4) of a validated pair.
    #[command(allow_negative_numbers = true)]
    Pq {
        a: BigInt,
        b: BigInt,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// (a, b) = (p, p - 4q) of a validated pair.
    #[command(allow_negative_numbers = true)]
    Ab {
        p: BigInt,
        q: BigInt,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Table entries for n with max(|a|, |b|) <= bound.
    Family {
        n: u32,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Exhaustive scan for canonical n-defective pairs.
    Search {
        n: u32,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
        #[command(flatten)]
        jobs: Jobs,
        /// Resumable state file; hits go to PATH.hits.
        #[arg(long, value_name = "PATH")]
        checkpoint: Option<PathBuf>,
        /// Chunk width along the a-axis.
        #[arg(long, default_value_t = lehmer_core::harness::DEFAULT_CHUNK_SIZE)]
        chunk_size: u64,
        /// Stop after scanning this many new chunks (needs --checkpoint).
        #[arg(long, requires = "checkpoint")]
        max_chunks: Option<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Compare the table against the exhaustive scan.
    Verify {
        n: u32,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
        #[command(flatten)]
        jobs: Jobs,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Re-check every correction made to the earlier tables.
    Audit {
        #[command(flatten)]
        fmt: FormatArg,
    },
}
