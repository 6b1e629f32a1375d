//! Prefixed Turán shadows: a decomposition of the `h`-cliques of a graph into
//! dense pieces that can be sampled from uniformly.
//!
//! A leaf `(P, S, l)` stands for the cliques `P ∪ c` where `c` is an
//! `l`-clique of `G[S]`. Every `h`-clique of the host graph arises from
//! exactly one leaf and one `c`, so drawing a leaf with probability
//! `C(|S|, l) / w` and then a uniform `l`-subset of `S` returns each
//! `h`-clique with probability exactly `1 / w`.

use std::fmt::Write as _;

use rand::Rng;
use thiserror::Error;

use crate::degeneracy::{degeneracy_order, DegeneracyInfo};
use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Error, PartialEq)]
pub enum ShadowError {
    #[error("Turán threshold needs level >= 3, got {0}")]
    LevelTooSmall(usize),
    #[error("target clique size must be at least 1")]
    EmptyTarget,
    #[error("cannot sample from a shadow with zero total weight")]
    ZeroWeight,
}

/// Binomial coefficient `C(a, b)` as a float; `0` when `b > a`.
///
/// Exact whenever the result is below `2^53`. Larger values come from a
/// floating product with relative error around `min(b, a - b) * 2^-53`.
pub fn binom(a: u64, b: u64) -> f64 {
    if b > a {
        return 0.0;
    }
    let b = b.min(a - b);
    let mut exact: u128 = 1;
    let mut overflowed = false;
    for i in 1..=b {
        match exact.checked_mul((a - b + i) as u128) {
            // C(a-b+i, i) = C(a-b+i-1, i-1) * (a-b+i) / i, always integral.
            Some(p) => exact = p / i as u128,
            None => {
                overflowed = true;
                break;
            }
        }
    }
    if !overflowed {
        return exact as f64;
    }
    let mut approx = 1.0f64;
    for i in 1..=b {
        approx = approx * (a - b + i) as f64 / i as f64;
    }
    approx
}

/// Edge density above which a set is dense enough to hold many `level`-cliques:
/// `1 - 1/(level - 1)`.
pub fn turan_threshold(level: usize) -> Result<f64, ShadowError> {
    if level < 3 {
        return Err(ShadowError::LevelTooSmall(level));
    }
    Ok(1.0 - 1.0 / (level as f64 - 1.0))
}

/// Leaf admission: `level <= 2`, at most one vertex, or edge density strictly
/// above the Turán threshold. Evaluated in integers.
fn admits_leaf(level: usize, vertices: usize, edges: u64) -> bool {
    if level <= 2 || vertices <= 1 {
        return true;
    }
    let pairs = (vertices as u128) * (vertices as u128 - 1) / 2;
    (edges as u128) * (level as u128 - 1) > (level as u128 - 2) * pairs
}

/// One `(P, S, l)` triple of a shadow, in global vertex ids.
#[derive(Clone, Debug, PartialEq)]
pub struct ShadowLeaf {
    prefix: VertexSet,
    body: VertexSet,
    level: usize,
    weight: f64,
}

impl ShadowLeaf {
    pub fn new(prefix: VertexSet, body: VertexSet, level: usize) -> Self {
        let weight = binom(body.len() as u64, level as u64);
        ShadowLeaf {
            prefix,
            body,
            level,
            weight,
        }
    }

    pub fn prefix(&self) -> &VertexSet {
        &self.prefix
    }

    pub fn body(&self) -> &VertexSet {
        &self.body
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// `C(|S|, l)`.
    pub fn weight(&self) -> f64 {
        self.weight
    }
}

/// A prefixed Turán shadow for cliques of size `target`.
#[derive(Clone, Debug, Default)]
pub struct PrefixedShadow {
    leaves: Vec<ShadowLeaf>,
    cumulative: Vec<f64>,
    target: usize,
}

impl PrefixedShadow {
    /// Assembles a shadow from explicit leaves. Zero-weight leaves are dropped.
    pub fn from_leaves(target: usize, leaves: impl IntoIterator<Item = ShadowLeaf>) -> Self {
        let mut shadow = PrefixedShadow {
            target,
            ..Default::default()
        };
        for leaf in leaves {
            shadow.push(leaf);
        }
        shadow
    }

    fn push(&mut self, leaf: ShadowLeaf) {
        if leaf.weight <= 0.0 {
            return;
        }
        debug_assert_eq!(leaf.prefix.len() + leaf.level, self.target);
        let total = self.total_weight() + leaf.weight;
        self.cumulative.push(total);
        self.leaves.push(leaf);
    }

    fn append(&mut self, other: PrefixedShadow) {
        for leaf in other.leaves {
            self.push(leaf);
        }
    }

    pub fn leaves(&self) -> &[ShadowLeaf] {
        &self.leaves
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    /// Clique size the shadow was built for.
    pub fn target(&self) -> usize {
        self.target
    }

    /// Sum of leaf weights, the sampling normalizer `w`.
    pub fn total_weight(&self) -> f64 {
        self.cumulative.last().copied().unwrap_or(0.0)
    }

    /// Sum of body sizes over all leaves.
    pub fn body_volume(&self) -> usize {
        self.leaves.iter().map(|l| l.body.len()).sum()
    }

    /// Draws a leaf proportional to its weight and a uniform `l`-subset of its
    /// body. The subset is written to `subset` (unsorted); the leaf index is
    /// returned.
    pub(crate) fn draw<R: Rng + ?Sized>(&self, rng: &mut R, subset: &mut Vec<VertexId>) -> usize {
        let r = rng.random::<f64>() * self.total_weight();
        let idx = self
            .cumulative
            .partition_point(|&c| c <= r)
            .min(self.leaves.len() - 1);
        let leaf = &self.leaves[idx];
        uniform_subset(rng, leaf.body.as_slice(), leaf.level, subset);
        idx
    }

    /// Draws a candidate `target`-set: the chosen leaf's prefix plus a uniform
    /// subset of its body. The caller still has to check whether it is a clique.
    pub fn sample_clique_candidate<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
    ) -> Result<VertexSet, ShadowError> {
        if self.is_empty() {
            return Err(ShadowError::ZeroWeight);
        }
        let mut subset = Vec::new();
        let idx = self.draw(rng, &mut subset);
        subset.extend(self.leaves[idx].prefix.iter());
        Ok(VertexSet::from_unsorted(subset))
    }

    /// One line per leaf: `prefix=[..] |S|=.. ℓ=.. weight=..`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for leaf in &self.leaves {
            let _ = writeln!(
                out,
                "prefix={} |S|={} ℓ={} weight={}",
                leaf.prefix,
                leaf.body.len(),
                leaf.level,
                leaf.weight
            );
        }
        out
    }
}

/// Robert Floyd's combination sampler: a uniform `k`-subset of `items` using
/// exactly `k` random draws and no rejection.
fn uniform_subset<R: Rng + ?Sized>(
    rng: &mut R,
    items: &[VertexId],
    k: usize,
    out: &mut Vec<VertexId>,
) {
    out.clear();
    let n = items.len();
    debug_assert!(k <= n);
    let mut picked: Vec<usize> = Vec::with_capacity(k);
    for j in (n - k)..n {
        let t = rng.random_range(0..=j as u64) as usize;
        if picked.contains(&t) {
            picked.push(j);
        } else {
            picked.push(t);
        }
    }
    out.extend(picked.into_iter().map(|i| items[i]));
}

/// Builds the `h`-clique prefixed Turán shadow of `g`.
pub fn build_prefixed_shadow(g: &Graph, h: usize) -> Result<PrefixedShadow, ShadowError> {
    build_shadow_impl(g, None, h)
}

/// Same as [`build_prefixed_shadow`], reusing a precomputed degeneracy order.
pub fn build_prefixed_shadow_with(
    g: &Graph,
    d: &DegeneracyInfo,
    h: usize,
) -> Result<PrefixedShadow, ShadowError> {
    build_shadow_impl(g, Some(d), h)
}

fn build_shadow_impl(
    g: &Graph,
    d: Option<&DegeneracyInfo>,
    h: usize,
) -> Result<PrefixedShadow, ShadowError> {
    if h == 0 {
        return Err(ShadowError::EmptyTarget);
    }
    let n = g.num_vertices();
    let mut shadow = PrefixedShadow::from_leaves(h, []);
    if n < h {
        return Ok(shadow);
    }
    if admits_leaf(h, n, g.num_edges() as u64) {
        let all = VertexSet::from_sorted(g.vertices().collect());
        shadow.push(ShadowLeaf::new(VertexSet::new(), all, h));
        return Ok(shadow);
    }
    // Not dense: split by the degeneracy order of the whole graph.
    let owned;
    let d = match d {
        Some(d) => d,
        None => {
            owned = degeneracy_order(g);
            &owned
        }
    };
    let mut builder = LocalShadowBuilder::default();
    for v in g.vertices() {
        if d.out_degree(v) + 1 < h {
            continue;
        }
        let body = d.out_neighbors(g, v);
        shadow.append(builder.build(g, &[v], body.as_slice(), h - 1));
    }
    Ok(shadow)
}

/// Builds the shadow of `(v, N+(v), level)`: the `level`-cliques of the
/// out-neighborhood of `v`, each prefixed with `v`. Its target is `level + 1`.
pub fn build_vertex_shadow(
    g: &Graph,
    d: &DegeneracyInfo,
    v: VertexId,
    level: usize,
) -> PrefixedShadow {
    let body = d.out_neighbors(g, v);
    LocalShadowBuilder::default().build(g, &[v], body.as_slice(), level)
}

/// Shadow construction restricted to a fixed vertex set, with adjacency held
/// as bit rows over local ids. Local ids follow global id order.
#[derive(Default)]
pub(crate) struct LocalShadowBuilder {
    global: Vec<VertexId>,
    words: usize,
    rows: Vec<u64>,
    // Scratch reused across expansions.
    mask: Vec<u64>,
    degree: Vec<u32>,
    slot: Vec<u32>,
}

struct WorkItem {
    prefix: Vec<u32>,
    body: Vec<u32>,
    level: usize,
}

impl LocalShadowBuilder {
    /// Runs the worklist from `(base_prefix, body, level)`. `body` must be
    /// sorted and fully adjacent to every vertex of `base_prefix`.
    pub(crate) fn build(
        &mut self,
        g: &Graph,
        base_prefix: &[VertexId],
        body: &[VertexId],
        level: usize,
    ) -> PrefixedShadow {
        let target = base_prefix.len() + level;
        let mut shadow = PrefixedShadow::from_leaves(target, []);
        if body.len() < level {
            return shadow;
        }
        if level == 0 {
            shadow.push(ShadowLeaf::new(
                VertexSet::from_unsorted(base_prefix.to_vec()),
                VertexSet::from_sorted(body.to_vec()),
                0,
            ));
            return shadow;
        }
        self.load(g, body);

        let mut stack = vec![WorkItem {
            prefix: Vec::new(),
            body: (0..body.len() as u32).collect(),
            level,
        }];
        while let Some(item) = stack.pop() {
            debug_assert!(base_prefix.len() + item.prefix.len() < target.max(1));
            let b = item.body.len();
            if item.level <= 2 || b <= 1 {
                self.emit(&mut shadow, base_prefix, &item);
                continue;
            }
            let edges = self.load_degrees(&item.body);
            if admits_leaf(item.level, b, edges) {
                self.emit(&mut shadow, base_prefix, &item);
                continue;
            }
            self.expand(&item, &mut stack);
        }
        shadow
    }

    fn load(&mut self, g: &Graph, body: &[VertexId]) {
        let b = body.len();
        self.global.clear();
        self.global.extend_from_slice(body);
        self.words = b.div_ceil(64);
        self.rows.clear();
        self.rows.resize(b * self.words, 0);
        for (i, &u) in body.iter().enumerate() {
            let row = &mut self.rows[i * self.words..(i + 1) * self.words];
            let nbrs = g.neighbors(u);
            if nbrs.len() > 8 * b {
                for (j, w) in body.iter().enumerate() {
                    if nbrs.binary_search(w).is_ok() {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
            } else {
                let (mut p, mut j) = (0, 0);
                while p < nbrs.len() && j < b {
                    match nbrs[p].cmp(&body[j]) {
                        std::cmp::Ordering::Less => p += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => {
                            row[j / 64] |= 1 << (j % 64);
                            p += 1;
                            j += 1;
                        }
                    }
                }
            }
        }
        self.slot.clear();
        self.slot.resize(b, 0);
    }

    fn row(&self, i: u32) -> &[u64] {
        let i = i as usize;
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    /// Fills `mask` with `body` and `degree[k]` with the degree of `body[k]`
    /// inside `G[body]`. Returns the edge count.
    fn load_degrees(&mut self, body: &[u32]) -> u64 {
        self.mask.clear();
        self.mask.resize(self.words, 0);
        for &i in body {
            self.mask[i as usize / 64] |= 1 << (i % 64);
        }
        self.degree.clear();
        let mut total = 0u64;
        for (k, &i) in body.iter().enumerate() {
            let deg: u32 = self
                .row(i)
                .iter()
                .zip(&self.mask)
                .map(|(r, m)| (r & m).count_ones())
                .sum();
            self.degree.push(deg);
            self.slot[i as usize] = k as u32;
            total += deg as u64;
        }
        total / 2
    }

    /// Peels `G[body]` in degeneracy order and pushes `(P + s, N+(s), l - 1)`
    /// for every body vertex `s`. Expects `load_degrees` to have run on the
    /// same body.
    fn expand(&mut self, item: &WorkItem, stack: &mut Vec<WorkItem>) {
        let b = item.body.len();
        let mut removed = vec![false; b];
        for _ in 0..b {
            let best = (0..b)
                .filter(|&k| !removed[k])
                .min_by_key(|&k| (self.degree[k], k))
                .expect("an unpeeled vertex remains");
            removed[best] = true;
            let s = item.body[best];
            self.mask[s as usize / 64] &= !(1 << (s % 64));

            let mut child = Vec::new();
            for (w, (r, m)) in self.row(s).iter().zip(&self.mask).enumerate() {
                let mut bits = r & m;
                while bits != 0 {
                    let t = bits.trailing_zeros();
                    bits &= bits - 1;
                    child.push((w * 64) as u32 + t);
                }
            }
            for &t in &child {
                self.degree[self.slot[t as usize] as usize] -= 1;
            }
            if child.len() >= item.level - 1 {
                let mut prefix = item.prefix.clone();
                prefix.push(s);
                stack.push(WorkItem {
                    prefix,
                    body: child,
                    level: item.level - 1,
                });
            }
        }
    }

    fn emit(&self, shadow: &mut PrefixedShadow, base_prefix: &[VertexId], item: &WorkItem) {
        let mut prefix: Vec<VertexId> = base_prefix.to_vec();
        prefix.extend(item.prefix.iter().map(|&i| self.global[i as usize]));
        let body = item.body.iter().map(|&i| self.global[i as usize]).collect();
        shadow.push(ShadowLeaf::new(
            VertexSet::from_unsorted(prefix),
            VertexSet::from_sorted(body),
            item.level,
        ));
    }
}
