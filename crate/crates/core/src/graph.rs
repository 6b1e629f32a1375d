//! Immutable simple undirected graphs in compressed sparse row form.
//!
//! Vertices are dense ids `0..n`. Every neighbor list is strictly increasing,
//! which gives logarithmic adjacency tests and linear merge intersections.

use std::collections::HashMap;
use std::fmt;

/// Dense vertex identifier.
pub type VertexId = u32;

/// A strictly increasing, duplicate-free list of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Sorts and deduplicates `vertices`.
    pub fn from_unsorted(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Self(vertices)
    }

    /// Wraps an already strictly increasing list.
    pub fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self(vertices)
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    /// Union with another set, keeping the result sorted.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<VertexId>> for VertexSet {
    fn from(v: Vec<VertexId>) -> Self {
        Self::from_unsorted(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a VertexId;
    type IntoIter = std::slice::Iter<'a, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

/// Maps dense ids back to the labels found in the input.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<u64>,
    index: HashMap<u64, VertexId>,
}

impl LabelMap {
    /// Returns the dense id for `label`, assigning the next one if unseen.
    fn intern(&mut self, label: u64) -> VertexId {
        let next = self.labels.len() as VertexId;
        *self.index.entry(label).or_insert_with(|| {
            self.labels.push(label);
            next
        })
    }

    pub fn original(&self, v: VertexId) -> u64 {
        self.labels[v as usize]
    }

    pub fn dense(&self, label: u64) -> Option<VertexId> {
        self.index.get(&label).copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Builds a graph from labelled edges.
///
/// Self-loops and repeated edges are dropped. Labels are compacted to dense
/// ids in order of first appearance; an endpoint of a self-loop still gets an
/// id, so it shows up as an isolated vertex.
pub fn build_graph<I>(edges: I) -> (Graph, LabelMap)
where
    I: IntoIterator<Item = (u64, u64)>,
{
    let mut labels = LabelMap::default();
    let mut dense = Vec::new();
    for (a, b) in edges {
        let u = labels.intern(a);
        let v = labels.intern(b);
        dense.push((u, v));
    }
    let graph = Graph::from_edges(labels.len(), dense);
    (graph, labels)
}

impl Graph {
    /// Builds a graph on vertices `0..n` from dense-id edges, dropping
    /// self-loops and duplicates.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut arcs: Vec<(VertexId, VertexId)> = Vec::new();
        for (u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for {n} vertices"
            );
            if u != v {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &arcs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = arcs.into_iter().map(|(_, v)| v).collect();
        Graph { offsets, targets }
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let n32 = n as VertexId;
        Graph::from_edges(n, (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))))
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Graph {
        let n32 = n as VertexId;
        Graph::from_edges(n, (0..n32).map(|u| (u, (u + 1) % n32)))
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let n32 = n as VertexId;
        Graph::from_edges(n, (1..n32).map(|u| (u - 1, u)))
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.num_vertices())
            .map(|v| self.offsets[v + 1] - self.offsets[v])
            .max()
            .unwrap_or(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.num_vertices() as VertexId
    }

    /// Every edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `true` iff `{u, v}` is an edge. Never true for `u == v`.
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        // Search the shorter list.
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// `true` iff every pair in `vertices` is adjacent.
    pub fn is_clique(&self, vertices: &[VertexId]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    /// `m / C(n, 2)`; a graph with at most one vertex counts as fully dense.
    pub fn edge_density(&self) -> f64 {
        let n = self.num_vertices();
        if n <= 1 {
            return 1.0;
        }
        let pairs = (n as f64) * (n as f64 - 1.0) / 2.0;
        self.num_edges() as f64 / pairs
    }

    /// Subgraph induced by `s`. Local vertex `i` corresponds to `s[i]`, so the
    /// slice of `s` is also the local-to-global map.
    pub fn induced_subgraph(&self, s: &VertexSet) -> InducedSubgraph {
        let members = s.as_slice();
        let mut edges = Vec::new();
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    edges.push((i as VertexId, j as VertexId));
                }
            }
        }
        InducedSubgraph {
            graph: Graph::from_edges(members.len(), edges),
            global: members.to_vec(),
        }
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    global: Vec<VertexId>,
}

impl InducedSubgraph {
    pub fn to_global(&self, local: VertexId) -> VertexId {
        self.global[local as usize]
    }

    pub fn to_local(&self, global: VertexId) -> Option<VertexId> {
        self.global
            .binary_search(&global)
            .ok()
            .map(|i| i as VertexId)
    }
}
