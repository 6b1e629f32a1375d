use std::time::Instant;

use rayon::prelude::*;

use crate::degeneracy::DegeneracyInfo;
use crate::graph::{Graph, VertexId};
use crate::shadow::{build_prefixed_shadow_with, LocalShadowBuilder, PrefixedShadow};

use super::phi::PhiTable;
use super::{
    batch_rng, count_unchecked, Estimate, EstimatorError, Mode, PatternKind, PatternSpec,
    SamplingConfig, LOW_CONFIDENCE_NONZERO,
};

/// Partial sums from one batch.
#[derive(Default)]
struct Tally {
    sum: f64,
    nonzero: u64,
    peak_leaves: usize,
    built_leaves: usize,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.sum += other.sum;
        self.nonzero += other.nonzero;
        self.peak_leaves = self.peak_leaves.max(other.peak_leaves);
        self.built_leaves += other.built_leaves;
        self
    }
}

fn run_batches(cfg: &SamplingConfig, batch: impl Fn(usize) -> Tally + Sync) -> Tally {
    let tallies: Vec<Tally> = if cfg.batches == 1 {
        vec![batch(0)]
    } else {
        (0..cfg.batches).into_par_iter().map(&batch).collect()
    };
    // Fixed summation order keeps results independent of scheduling.
    tallies.into_iter().fold(Tally::default(), Tally::merge)
}

fn finish(tally: Tally, normalizer: f64, cfg: &SamplingConfig, started: Instant) -> Estimate {
    Estimate {
        value: tally.sum / cfg.samples as f64 * normalizer,
        samples: cfg.samples,
        nonzero_samples: tally.nonzero,
        normalizer,
        seed: cfg.seed,
        elapsed_seconds: started.elapsed().as_secs_f64(),
        low_confidence: tally.nonzero < LOW_CONFIDENCE_NONZERO,
        peak_shadow_leaves: tally.peak_leaves,
        built_shadow_leaves: tally.built_leaves,
    }
}

/// Draws `draws` candidates from `shadow` and sums `f` over those that are
/// cliques. Returns `(sum of f, number of non-zero draws)`.
fn sample_shadow(
    g: &Graph,
    d: &DegeneracyInfo,
    kind: PatternKind,
    shadow: &PrefixedShadow,
    draws: u64,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> (u64, u64) {
    let mut subset = Vec::new();
    let mut clique: Vec<VertexId> = Vec::new();
    let (mut sum, mut nonzero) = (0u64, 0u64);
    for _ in 0..draws {
        let leaf = &shadow.leaves()[shadow.draw(rng, &mut subset)];
        // Prefix-prefix and prefix-body pairs are adjacent by construction.
        if !g.is_clique(&subset) {
            continue;
        }
        clique.clear();
        clique.extend_from_slice(&subset);
        clique.extend(leaf.prefix().iter());
        clique.sort_unstable();
        debug_assert!(g.is_clique(&clique));
        let x = count_unchecked(kind, g, d, &clique);
        sum += x;
        nonzero += u64::from(x > 0);
    }
    (sum, nonzero)
}

/// Estimates `Σ f` over the `h`-cliques of `g` by sampling a shadow of the
/// whole graph.
pub fn peanuts(
    g: &Graph,
    d: &DegeneracyInfo,
    pattern: PatternSpec,
    cfg: SamplingConfig,
) -> Result<Estimate, EstimatorError> {
    cfg.validate()?;
    let started = Instant::now();
    let shadow = build_prefixed_shadow_with(g, d, pattern.h())?;
    let weight = shadow.total_weight();
    let leaves = shadow.len();
    if shadow.is_empty() {
        return Ok(finish(Tally::default(), 0.0, &cfg, started));
    }
    let tally = run_batches(&cfg, |batch| {
        let mut rng = batch_rng(cfg.seed, batch);
        let (sum, nonzero) = sample_shadow(
            g,
            d,
            pattern.kind(),
            &shadow,
            cfg.batch_len(batch),
            &mut rng,
        );
        Tally {
            sum: sum as f64,
            nonzero,
            ..Default::default()
        }
    });
    let tally = Tally {
        peak_leaves: leaves,
        built_leaves: leaves,
        ..tally
    };
    Ok(finish(tally, weight, &cfg, started))
}

/// Estimates `Σ f` over the `h`-cliques of `g` by first drawing vertices
/// proportional to `Φ_v`, then sampling from per-vertex shadows that are
/// built one at a time and dropped once their draws are done.
pub fn inverse_ts(
    g: &Graph,
    d: &DegeneracyInfo,
    pattern: PatternSpec,
    cfg: SamplingConfig,
) -> Result<Estimate, EstimatorError> {
    cfg.validate()?;
    let started = Instant::now();
    let h = pattern.h();
    let phi = PhiTable::new(g, d, h);
    if phi.total() <= 0.0 {
        return Ok(finish(Tally::default(), 0.0, &cfg, started));
    }
    let tally = run_batches(&cfg, |batch| {
        let mut rng = batch_rng(cfg.seed, batch);
        let mut draws = vec![0u32; g.num_vertices()];
        for _ in 0..cfg.batch_len(batch) {
            draws[phi.sample(&mut rng) as usize] += 1;
        }
        let mut builder = LocalShadowBuilder::default();
        let mut tally = Tally::default();
        for v in g.vertices() {
            let count = draws[v as usize];
            if count == 0 {
                continue;
            }
            let body = d.out_neighbors(g, v);
            let shadow = builder.build(g, &[v], body.as_slice(), h - 1);
            tally.peak_leaves = tally.peak_leaves.max(shadow.len());
            tally.built_leaves += shadow.len();
            if shadow.is_empty() {
                continue;
            }
            let reweight = shadow.total_weight() / phi.weight(v);
            let (sum, nonzero) =
                sample_shadow(g, d, pattern.kind(), &shadow, count as u64, &mut rng);
            tally.sum += reweight * sum as f64;
            tally.nonzero += nonzero;
        }
        tally
    });
    Ok(finish(tally, phi.total(), &cfg, started))
}

/// Runs the estimator selected by `mode`.
pub fn estimate(
    mode: Mode,
    g: &Graph,
    d: &DegeneracyInfo,
    pattern: PatternSpec,
    cfg: SamplingConfig,
) -> Result<Estimate, EstimatorError> {
    match mode {
        Mode::InverseTs => inverse_ts(g, d, pattern, cfg),
        Mode::Peanuts => peanuts(g, d, pattern, cfg),
    }
}

/// Samples sufficient for an `(ε, δ)` guarantee:
/// `⌈3 · normalizer · B · ln(2/δ) / (ε² · F_lower)⌉`, where `F_lower` is a
/// lower bound on the true sum.
pub fn required_samples(
    normalizer: f64,
    bound: f64,
    epsilon: f64,
    delta: f64,
    f_lower: f64,
) -> Result<u64, EstimatorError> {
    let args = [normalizer, bound, epsilon, delta, f_lower];
    if args.iter().any(|&a| a <= 0.0 || !a.is_finite()) {
        return Err(EstimatorError::InvalidArgument(
            "all sample-size arguments must be positive and finite".into(),
        ));
    }
    if epsilon >= 1.0 {
        return Err(EstimatorError::InvalidArgument(
            "epsilon must be below 1".into(),
        ));
    }
    let s = 3.0 * normalizer * bound * (2.0 / delta).ln() / (epsilon * epsilon * f_lower);
    Ok(s.ceil() as u64)
}
