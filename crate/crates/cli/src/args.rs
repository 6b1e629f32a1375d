use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, ValueEnum};
use nearclique::{Mode, PatternKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Sample-based estimate of the pattern count.
    Count,
    /// Exact counts of all four patterns by enumeration.
    Exact,
    /// Sampled instances of the pattern, one vertex set per line.
    List,
    /// Graph statistics and the sampling normalizer.
    Stats,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Count => "count",
            Command::Exact => "exact",
            Command::List => "list",
            Command::Stats => "stats",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "nearclique",
    version,
    about = "Estimate k-clique and near-clique counts in large sparse graphs",
    after_help = "Exit status: 0 on success, 1 on usage errors, 2 on I/O or parse errors."
)]
pub struct Args {
    /// Edge list: one `u v` pair per line; `#` and `%` start comments.
    #[arg(long)]
    pub input: PathBuf,

    #[arg(long, value_enum)]
    pub command: Command,

    /// kclique, k1, k2t1 or k2t2.
    #[arg(long, default_value = "kclique", value_parser = parse_pattern)]
    pub pattern: PatternKind,

    /// Number of vertices in the pattern.
    #[arg(long)]
    pub k: usize,

    #[arg(long, default_value_t = 500_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    /// Defaults to a value derived from the clock; always echoed in the report.
    #[arg(long)]
    pub seed: Option<u64>,

    /// inverse-ts or peanuts.
    #[arg(long, default_value = "inverse-ts", value_parser = parse_mode)]
    pub mode: Mode,

    #[arg(long, value_enum, default_value = "json")]
    pub output: OutputFormat,

    /// Worker threads. The sample budget is split into this many batches,
    /// so the estimate depends on (seed, threads).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..256))]
    pub threads: Option<u64>,

    /// Cap on the number of instances printed by `list`.
    #[arg(long, default_value_t = 1000)]
    pub max_list: usize,

    /// With `stats`, also compute exact counts and near-clique to clique ratios.
    #[arg(long)]
    pub with_exact: bool,
}

impl Args {
    pub fn seed_or_clock(&self) -> u64 {
        self.seed.unwrap_or_else(|| {
            let t = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .unwrap_or_default();
            t.as_secs().wrapping_mul(1_000_000_007) ^ u64::from(t.subsec_nanos())
        })
    }

    pub fn batches(&self) -> usize {
        self.threads.unwrap_or(1) as usize
    }
}

fn parse_pattern(s: &str) -> Result<PatternKind, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e| format!("{e}"))
}
