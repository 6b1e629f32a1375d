use rand::Rng;

use crate::degeneracy::DegeneracyInfo;
use crate::graph::{Graph, VertexId};
use crate::shadow::binom;

/// First-level weights `Φ_v = C(|N+(v)|, h-1)` and their running sums.
#[derive(Clone, Debug)]
pub struct PhiTable {
    per_vertex: Vec<f64>,
    cumulative: Vec<f64>,
    h: usize,
}

impl PhiTable {
    pub fn new(g: &Graph, d: &DegeneracyInfo, h: usize) -> Self {
        let below = h.saturating_sub(1) as u64;
        let per_vertex: Vec<f64> = g
            .vertices()
            .map(|v| binom(d.out_degree(v) as u64, below))
            .collect();
        let cumulative = per_vertex
            .iter()
            .scan(0.0, |acc, &w| {
                *acc += w;
                Some(*acc)
            })
            .collect();
        PhiTable {
            per_vertex,
            cumulative,
            h,
        }
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn weight(&self, v: VertexId) -> f64 {
        self.per_vertex[v as usize]
    }

    pub fn per_vertex(&self) -> &[f64] {
        &self.per_vertex
    }

    /// `Φ = Σ_v Φ_v`.
    pub fn total(&self) -> f64 {
        self.cumulative.last().copied().unwrap_or(0.0)
    }

    /// Draws `v` with probability `Φ_v / Φ`. Requires `total() > 0`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> VertexId {
        let r = rng.random::<f64>() * self.total();
        let idx = self.cumulative.partition_point(|&c| c <= r);
        // Float round-off can push past the end; fall back to the last
        // vertex with positive weight.
        let idx = if idx < self.per_vertex.len() {
            idx
        } else {
            self.per_vertex.iter().rposition(|&w| w > 0.0).unwrap_or(0)
        };
        idx as VertexId
    }
}
