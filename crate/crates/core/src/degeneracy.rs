//! Degeneracy ordering by repeated minimum-degree removal.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{Graph, VertexId, VertexSet};

/// Degeneracy order of a graph and the orientation it induces.
///
/// Edges point from the earlier to the later vertex in removal order, so
/// `out_degree(v)` counts neighbors removed after `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyInfo {
    position: Vec<u32>,
    order: Vec<VertexId>,
    out_degree: Vec<u32>,
    degeneracy: usize,
}

impl DegeneracyInfo {
    /// Rank of `v` in removal order.
    pub fn position(&self, v: VertexId) -> usize {
        self.position[v as usize] as usize
    }

    /// Vertices in removal order.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_degree[v as usize] as usize
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy
    }

    /// Neighbors of `v` removed after it, sorted by vertex id.
    pub fn out_neighbors(&self, g: &Graph, v: VertexId) -> VertexSet {
        let pv = self.position[v as usize];
        VertexSet::from_sorted(
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| self.position[u as usize] > pv)
                .collect(),
        )
    }
}

/// Computes the degeneracy order of `g`.
///
/// A vertex of minimum residual degree is removed at each step, the smallest
/// vertex id winning ties. Degeneracy is the largest residual degree seen at
/// removal time.
pub fn degeneracy_order(g: &Graph) -> DegeneracyInfo {
    let n = g.num_vertices();
    let mut residual: Vec<u32> = g.vertices().map(|v| g.degree(v) as u32).collect();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(u32, VertexId)>> = g
        .vertices()
        .map(|v| Reverse((residual[v as usize], v)))
        .collect();

    let mut position = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    let mut out_degree = vec![0u32; n];
    let mut degeneracy = 0usize;

    while let Some(Reverse((deg, v))) = heap.pop() {
        let vi = v as usize;
        if removed[vi] || deg != residual[vi] {
            continue;
        }
        removed[vi] = true;
        position[vi] = order.len() as u32;
        order.push(v);
        out_degree[vi] = deg;
        degeneracy = degeneracy.max(deg as usize);
        for &u in g.neighbors(v) {
            let ui = u as usize;
            if !removed[ui] {
                residual[ui] -= 1;
                heap.push(Reverse((residual[ui], u)));
            }
        }
    }

    DegeneracyInfo {
        position,
        order,
        out_degree,
        degeneracy,
    }
}

/// Out-neighbor lists of the degeneracy orientation, each sorted by id.
#[derive(Clone, Debug)]
pub struct OrientedGraph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl OrientedGraph {
    pub fn new(g: &Graph, d: &DegeneracyInfo) -> Self {
        let mut offsets = Vec::with_capacity(g.num_vertices() + 1);
        let mut targets = Vec::with_capacity(g.num_edges());
        offsets.push(0);
        for v in g.vertices() {
            let pv = d.position(v);
            targets.extend(g.neighbors(v).iter().filter(|&&u| d.position(u) > pv));
            offsets.push(targets.len());
        }
        OrientedGraph { offsets, targets }
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}
