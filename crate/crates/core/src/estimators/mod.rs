//! Sampling estimators for sums of a bounded function over `h`-cliques, and
//! the counting functions that turn them into near-clique counters.

mod counters;
mod listing;
mod pattern;
mod phi;
mod sampling;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::shadow::ShadowError;

pub(crate) use counters::count_unchecked;
pub use counters::{count_completions, func_k1, func_k2_type1, func_k2_type2, func_kclique};
pub use listing::list_near_cliques;
pub use pattern::{PatternKind, PatternSpec};
pub use phi::PhiTable;
pub use sampling::{estimate, inverse_ts, peanuts, required_samples};

/// Runs with fewer non-zero samples than this are flagged as unreliable.
pub const LOW_CONFIDENCE_NONZERO: u64 = 5000;

/// Sample budget used when none is given.
pub const DEFAULT_SAMPLES: u64 = 500_000;

#[derive(Debug, Error, PartialEq)]
pub enum EstimatorError {
    #[error("vertex set is not a sorted clique of the graph")]
    NotAClique,
    #[error("clique has {len} vertices, need at least {min}")]
    CliqueTooSmall { len: usize, min: usize },
    #[error("pattern {kind} needs k >= {min}, got k = {k}")]
    PatternTooSmall {
        kind: PatternKind,
        k: usize,
        min: usize,
    },
    #[error("unknown pattern {0:?} (expected kclique, k1, k2t1 or k2t2)")]
    UnknownPattern(String),
    #[error("unknown mode {0:?} (expected inverse-ts or peanuts)")]
    UnknownMode(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Shadow(#[from] ShadowError),
}

/// Which estimator to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Per-vertex shadows built on demand and discarded after use.
    #[default]
    InverseTs,
    /// One shadow of the whole graph, sampled directly.
    Peanuts,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::InverseTs => "inverse-ts",
            Mode::Peanuts => "peanuts",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = EstimatorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inverse-ts" => Ok(Mode::InverseTs),
            "peanuts" => Ok(Mode::Peanuts),
            _ => Err(EstimatorError::UnknownMode(s.to_string())),
        }
    }
}

/// Sample budget, seed and batch split for one estimator run.
///
/// The draws are split into `batches` parts, each with its own ChaCha8
/// stream (`seed`, stream = batch index), and processed in parallel. A fixed
/// `(seed, batches)` pair always gives the same result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingConfig {
    pub samples: u64,
    pub seed: u64,
    pub batches: usize,
}

impl SamplingConfig {
    pub fn new(samples: u64, seed: u64) -> Self {
        SamplingConfig {
            samples,
            seed,
            batches: 1,
        }
    }

    pub fn with_batches(mut self, batches: usize) -> Self {
        self.batches = batches;
        self
    }

    fn validate(&self) -> Result<(), EstimatorError> {
        if self.samples == 0 {
            return Err(EstimatorError::InvalidArgument(
                "sample count must be at least 1".into(),
            ));
        }
        if self.batches == 0 {
            return Err(EstimatorError::InvalidArgument(
                "batch count must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Samples assigned to `batch`.
    fn batch_len(&self, batch: usize) -> u64 {
        let b = self.batches as u64;
        self.samples / b + u64::from((batch as u64) < self.samples % b)
    }
}

/// Random stream for one batch of a run.
pub fn batch_rng(seed: u64, batch: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch as u64);
    rng
}

/// Output of one estimator run.
#[derive(Clone, Debug, PartialEq)]
pub struct Estimate {
    /// The estimate `F̂`.
    pub value: f64,
    pub samples: u64,
    /// Draws that were cliques with a non-zero count.
    pub nonzero_samples: u64,
    /// Shadow weight for PEANUTS, `Φ` for Inverse-TS.
    pub normalizer: f64,
    pub seed: u64,
    pub elapsed_seconds: f64,
    pub low_confidence: bool,
    /// Largest number of shadow leaves held at once.
    pub peak_shadow_leaves: usize,
    /// Shadow leaves built over the whole run.
    pub built_shadow_leaves: usize,
}
