//! Exact counts used as ground truth.
//!
//! [`enumerate_cliques`] walks the degeneracy orientation, intersecting
//! out-neighbor lists, and [`exact_counts`] feeds every clique it finds to the
//! same counting functions the estimators use. [`naive_subset_counts`]
//! classifies every `k`-subset directly and shares no code with either.

use std::time::Instant;

use thiserror::Error;

use crate::degeneracy::{degeneracy_order, DegeneracyInfo, OrientedGraph};
use crate::estimators::{count_unchecked, PatternKind};
use crate::graph::{Graph, VertexId};
use crate::shadow::binom;

/// Largest number of subsets [`naive_subset_counts`] will look at.
pub const NAIVE_SUBSET_LIMIT: f64 = 1e8;

#[derive(Debug, Error, PartialEq)]
pub enum ExactError {
    #[error("exact counts need k >= 3, got {0}")]
    KTooSmall(usize),
    #[error("C({n}, {k}) = {subsets:e} subsets exceeds the naive limit")]
    TooManySubsets { n: usize, k: usize, subsets: f64 },
}

/// Exact pattern counts for one `k`. The `(k,2)` counts are only defined for
/// `k >= 4`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactCounts {
    pub k: usize,
    pub kclique: u64,
    pub k1: u64,
    pub k2_type1: Option<u64>,
    pub k2_type2: Option<u64>,
    pub elapsed_seconds: f64,
}

impl ExactCounts {
    pub fn get(&self, kind: PatternKind) -> Option<u64> {
        match kind {
            PatternKind::KClique => Some(self.kclique),
            PatternKind::K1 => Some(self.k1),
            PatternKind::K2Type1 => self.k2_type1,
            PatternKind::K2Type2 => self.k2_type2,
        }
    }

    /// Same counts, ignoring timing.
    pub fn same_counts(&self, other: &ExactCounts) -> bool {
        (self.k, self.kclique, self.k1, self.k2_type1, self.k2_type2)
            == (
                other.k,
                other.kclique,
                other.k1,
                other.k2_type1,
                other.k2_type2,
            )
    }
}

/// Calls `visit` once per `h`-clique (vertices sorted by id) and returns the
/// number of cliques.
pub fn enumerate_cliques(g: &Graph, h: usize, visit: impl FnMut(&[VertexId])) -> u64 {
    let d = degeneracy_order(g);
    enumerate_cliques_with(g, &d, h, visit)
}

/// [`enumerate_cliques`] with a precomputed degeneracy order.
pub fn enumerate_cliques_with(
    g: &Graph,
    d: &DegeneracyInfo,
    h: usize,
    mut visit: impl FnMut(&[VertexId]),
) -> u64 {
    if h == 0 {
        return 0;
    }
    let oriented = OrientedGraph::new(g, d);
    let mut walk = Walk {
        oriented: &oriented,
        stack: Vec::with_capacity(h),
        sorted: Vec::with_capacity(h),
        count: 0,
    };
    for v in g.vertices() {
        walk.stack.push(v);
        let cand = oriented.out_neighbors(v).to_vec();
        walk.descend(&cand, h - 1, &mut visit);
        walk.stack.pop();
    }
    walk.count
}

struct Walk<'a> {
    oriented: &'a OrientedGraph,
    stack: Vec<VertexId>,
    sorted: Vec<VertexId>,
    count: u64,
}

impl Walk<'_> {
    fn descend(&mut self, cand: &[VertexId], need: usize, visit: &mut impl FnMut(&[VertexId])) {
        if need == 0 {
            self.sorted.clear();
            self.sorted.extend_from_slice(&self.stack);
            self.sorted.sort_unstable();
            visit(&self.sorted);
            self.count += 1;
            return;
        }
        if cand.len() < need {
            return;
        }
        let mut next = Vec::with_capacity(cand.len());
        for &u in cand {
            next.clear();
            intersect_sorted(cand, self.oriented.out_neighbors(u), &mut next);
            if next.len() + 1 < need {
                continue;
            }
            self.stack.push(u);
            self.descend(&next, need - 1, visit);
            self.stack.pop();
        }
    }
}

fn intersect_sorted(a: &[VertexId], b: &[VertexId], out: &mut Vec<VertexId>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// Exact counts of `k`-cliques and near-cliques by summing the per-clique
/// counting functions over every embedded clique.
pub fn exact_counts(g: &Graph, k: usize) -> Result<ExactCounts, ExactError> {
    if k < 3 {
        return Err(ExactError::KTooSmall(k));
    }
    let started = Instant::now();
    let d = degeneracy_order(g);
    let kclique = enumerate_cliques_with(g, &d, k, |_| {});

    let with_pairs = k >= 4;
    let (mut k1, mut t1) = (0u64, 0u64);
    enumerate_cliques_with(g, &d, k - 1, |c| {
        k1 += count_unchecked(PatternKind::K1, g, &d, c);
        if with_pairs {
            t1 += count_unchecked(PatternKind::K2Type1, g, &d, c);
        }
    });
    let t2 = with_pairs.then(|| {
        let mut t2 = 0u64;
        enumerate_cliques_with(g, &d, k - 2, |c| {
            t2 += count_unchecked(PatternKind::K2Type2, g, &d, c);
        });
        t2
    });

    Ok(ExactCounts {
        k,
        kclique,
        k1,
        k2_type1: with_pairs.then_some(t1),
        k2_type2: t2,
        elapsed_seconds: started.elapsed().as_secs_f64(),
    })
}

/// Classifies every `k`-subset by its missing internal edges. Refuses inputs
/// with more than [`NAIVE_SUBSET_LIMIT`] subsets.
pub fn naive_subset_counts(g: &Graph, k: usize) -> Result<ExactCounts, ExactError> {
    if k < 3 {
        return Err(ExactError::KTooSmall(k));
    }
    let n = g.num_vertices();
    let subsets = binom(n as u64, k as u64);
    if subsets > NAIVE_SUBSET_LIMIT {
        return Err(ExactError::TooManySubsets { n, k, subsets });
    }
    let started = Instant::now();
    let adj: Vec<Vec<bool>> = (0..n as VertexId)
        .map(|u| (0..n as VertexId).map(|v| g.adjacent(u, v)).collect())
        .collect();

    let mut counts = [0u64; 4];
    if n >= k {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut gaps: Vec<(usize, usize)> = Vec::with_capacity(3);
            'scan: for a in 0..k {
                for b in a + 1..k {
                    if !adj[idx[a]][idx[b]] {
                        gaps.push((idx[a], idx[b]));
                        if gaps.len() > 2 {
                            break 'scan;
                        }
                    }
                }
            }
            match gaps.as_slice() {
                [] => counts[0] += 1,
                [_] => counts[1] += 1,
                [(a, b), (c, d)] => {
                    if a == c || a == d || b == c || b == d {
                        counts[2] += 1;
                    } else {
                        counts[3] += 1;
                    }
                }
                _ => {}
            }
            // Next combination in lexicographic order.
            let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                break;
            };
            idx[pos] += 1;
            for i in pos + 1..k {
                idx[i] = idx[i - 1] + 1;
            }
        }
    }

    let with_pairs = k >= 4;
    Ok(ExactCounts {
        k,
        kclique: counts[0],
        k1: counts[1],
        k2_type1: with_pairs.then_some(counts[2]),
        k2_type2: with_pairs.then_some(counts[3]),
        elapsed_seconds: started.elapsed().as_secs_f64(),
    })
}
