use std::collections::HashSet;

use rand::Rng;

use crate::degeneracy::DegeneracyInfo;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::shadow::{build_prefixed_shadow_with, LocalShadowBuilder, PrefixedShadow};

use super::counters::instances_unchecked;
use super::phi::PhiTable;
use super::{batch_rng, EstimatorError, Mode, PatternSpec, SamplingConfig};

/// Lists near-cliques by sampling `h`-cliques uniformly and emitting every
/// pattern each sampled clique accounts for.
///
/// Instances sharing a clique are correlated, but every instance of the
/// pattern has the same chance of appearing. The Inverse-TS path keeps a
/// clique drawn from vertex `v` with probability `φ_v / Φ_v`, which makes
/// its clique draws uniform. Duplicates are dropped and at most `max`
/// instances are returned, in discovery order.
pub fn list_near_cliques(
    g: &Graph,
    d: &DegeneracyInfo,
    pattern: PatternSpec,
    cfg: SamplingConfig,
    mode: Mode,
    max: usize,
) -> Result<Vec<VertexSet>, EstimatorError> {
    cfg.validate()?;
    let mut rng = batch_rng(cfg.seed, 0);
    let mut sink = Sink::new(max);
    let h = pattern.h();

    match mode {
        Mode::Peanuts => {
            let shadow = build_prefixed_shadow_with(g, d, h)?;
            if shadow.is_empty() {
                return Ok(Vec::new());
            }
            for _ in 0..cfg.samples {
                if let Some(clique) = draw_clique(g, &shadow, &mut rng) {
                    sink.extend(instances_unchecked(pattern.kind(), g, d, &clique));
                }
                if sink.full() {
                    break;
                }
            }
        }
        Mode::InverseTs => {
            let phi = PhiTable::new(g, d, h);
            if phi.total() <= 0.0 {
                return Ok(Vec::new());
            }
            let mut draws = vec![0u32; g.num_vertices()];
            for _ in 0..cfg.samples {
                draws[phi.sample(&mut rng) as usize] += 1;
            }
            let mut builder = LocalShadowBuilder::default();
            for v in g.vertices() {
                let count = draws[v as usize];
                if count == 0 || sink.full() {
                    continue;
                }
                let body = d.out_neighbors(g, v);
                let shadow = builder.build(g, &[v], body.as_slice(), h - 1);
                if shadow.is_empty() {
                    continue;
                }
                let keep = shadow.total_weight() / phi.weight(v);
                for _ in 0..count {
                    let Some(clique) = draw_clique(g, &shadow, &mut rng) else {
                        continue;
                    };
                    if rng.random::<f64>() < keep {
                        sink.extend(instances_unchecked(pattern.kind(), g, d, &clique));
                    }
                }
            }
        }
    }
    Ok(sink.items)
}

fn draw_clique<R: Rng>(g: &Graph, shadow: &PrefixedShadow, rng: &mut R) -> Option<Vec<VertexId>> {
    let mut subset = Vec::new();
    let idx = shadow.draw(rng, &mut subset);
    if !g.is_clique(&subset) {
        return None;
    }
    subset.extend(shadow.leaves()[idx].prefix().iter());
    subset.sort_unstable();
    Some(subset)
}

struct Sink {
    seen: HashSet<VertexSet>,
    items: Vec<VertexSet>,
    max: usize,
}

impl Sink {
    fn new(max: usize) -> Self {
        Sink {
            seen: HashSet::new(),
            items: Vec::new(),
            max,
        }
    }

    fn full(&self) -> bool {
        self.items.len() >= self.max
    }

    fn extend(&mut self, found: Vec<VertexSet>) {
        for set in found {
            if self.full() {
                return;
            }
            if self.seen.insert(set.clone()) {
                self.items.push(set);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::degeneracy_order;
    use crate::estimators::PatternKind;

    #[test]
    fn k4_minus_edge_lists_its_near_clique() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let d = degeneracy_order(&g);
        let p = PatternSpec::new(PatternKind::K1, 4).unwrap();
        for mode in [Mode::InverseTs, Mode::Peanuts] {
            let list =
                list_near_cliques(&g, &d, p, SamplingConfig::new(2000, 5), mode, 1000).unwrap();
            assert_eq!(list, vec![VertexSet::from(vec![0, 1, 2, 3])]);
        }
    }

    #[test]
    fn complete_graph_has_nothing_to_list() {
        let g = Graph::complete(5);
        let d = degeneracy_order(&g);
        let p = PatternSpec::new(PatternKind::K1, 5).unwrap();
        for mode in [Mode::InverseTs, Mode::Peanuts] {
            let list =
                list_near_cliques(&g, &d, p, SamplingConfig::new(1000, 5), mode, 1000).unwrap();
            assert!(list.is_empty());
        }
    }

    #[test]
    fn respects_the_cap() {
        let g = Graph::complete(8);
        let d = degeneracy_order(&g);
        let p = PatternSpec::new(PatternKind::KClique, 3).unwrap();
        let list =
            list_near_cliques(&g, &d, p, SamplingConfig::new(10_000, 1), Mode::Peanuts, 7).unwrap();
        assert_eq!(list.len(), 7);
    }
}
