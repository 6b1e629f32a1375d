//! Per-clique counting functions.
//!
//! Each function receives an `h`-clique `K` and counts the patterns for which
//! `K` is the canonical embedded clique, so summing over all `h`-cliques
//! counts every pattern exactly once:
//!
//! * `(k,1)`: `K ∪ {c}` where `c` misses exactly one `w ∈ K` and `c > w`.
//! * Type 1 `(k,2)`: `K ∪ {c}` where `c` misses exactly two vertices of `K`.
//!   Such a pattern contains a single `(k-1)`-clique.
//! * Type 2 `(k,2)`: `K ∪ {v, x}` with missing edges `(u,v)` and `(w,x)`,
//!   `u, w ∈ K`, where `u` has the smallest degeneracy position of the four
//!   endpoints, `pos(u) < pos(w) < pos(x)` and `pos(u) < pos(v)`.

use crate::degeneracy::DegeneracyInfo;
use crate::graph::{Graph, VertexId, VertexSet};

use super::{EstimatorError, PatternKind};

/// Vertices of `clique` not adjacent to `c`, up to `limit + 1` of them.
fn missing(
    g: &Graph,
    c: VertexId,
    clique: &[VertexId],
    limit: usize,
    out: &mut [VertexId; 3],
) -> usize {
    let mut count = 0;
    for &z in clique {
        if !g.adjacent(c, z) {
            if count < out.len() {
                out[count] = z;
            }
            count += 1;
            if count > limit {
                break;
            }
        }
    }
    count
}

/// The `r` members of `clique` with the smallest degrees.
fn low_degree_anchors(g: &Graph, clique: &[VertexId], r: usize) -> Vec<VertexId> {
    let mut anchors = clique.to_vec();
    anchors.sort_by_key(|&v| (g.degree(v), v));
    anchors.truncate(r);
    anchors
}

/// Calls `visit` once for each vertex adjacent to at least one anchor.
fn for_each_candidate(g: &Graph, anchors: &[VertexId], mut visit: impl FnMut(VertexId)) {
    for (i, &a) in anchors.iter().enumerate() {
        for &c in g.neighbors(a) {
            if anchors[..i].iter().any(|&b| g.adjacent(c, b)) {
                continue;
            }
            visit(c);
        }
    }
}

fn check_clique(g: &Graph, clique: &[VertexId], min_len: usize) -> Result<(), EstimatorError> {
    if clique.len() < min_len {
        return Err(EstimatorError::CliqueTooSmall {
            len: clique.len(),
            min: min_len,
        });
    }
    if !clique.windows(2).all(|w| w[0] < w[1]) || !g.is_clique(clique) {
        return Err(EstimatorError::NotAClique);
    }
    Ok(())
}

/// Visits each `c` completing `clique` to a `(k,1)`-clique for which `clique`
/// is canonical. `clique` must be a sorted clique with at least 2 vertices.
pub(crate) fn for_each_k1(g: &Graph, clique: &[VertexId], mut visit: impl FnMut(VertexId)) {
    // Any completing vertex misses one member, so it touches one of any two.
    let anchors = low_degree_anchors(g, clique, 2);
    let mut gap = [0; 3];
    for_each_candidate(g, &anchors, |c| {
        if clique.binary_search(&c).is_ok() {
            return;
        }
        if missing(g, c, clique, 1, &mut gap) == 1 && c > gap[0] {
            visit(c);
        }
    });
}

/// Visits each `c` completing `clique` to a Type 1 `(k,2)`-clique. `clique`
/// must be a sorted clique with at least 3 vertices.
pub(crate) fn for_each_k2_type1(g: &Graph, clique: &[VertexId], mut visit: impl FnMut(VertexId)) {
    // A completing vertex misses two members, so it touches one of any three.
    let anchors = low_degree_anchors(g, clique, 3);
    let mut gap = [0; 3];
    for_each_candidate(g, &anchors, |c| {
        if clique.binary_search(&c).is_ok() {
            return;
        }
        if missing(g, c, clique, 2, &mut gap) == 2 {
            visit(c);
        }
    });
}

/// Visits each pair `(v, x)` completing `clique` to a Type 2 `(k,2)`-clique
/// for which `clique` is canonical. `clique` must be a sorted clique with at
/// least 2 vertices.
pub(crate) fn for_each_k2_type2(
    g: &Graph,
    d: &DegeneracyInfo,
    clique: &[VertexId],
    mut visit: impl FnMut(VertexId, VertexId),
) {
    let mut gap = [0; 3];
    let mut xs = Vec::new();
    let mut vs = Vec::new();
    for &u in clique {
        let pu = d.position(u);
        for &w in clique {
            let pw = d.position(w);
            if pw <= pu {
                continue;
            }
            // x: out-neighbor of u after w, missing exactly w.
            xs.clear();
            xs.extend(g.neighbors(u).iter().copied().filter(|&x| {
                d.position(x) > pw
                    && clique.binary_search(&x).is_err()
                    && missing(g, x, clique, 1, &mut gap) == 1
                    && gap[0] == w
            }));
            if xs.is_empty() {
                continue;
            }
            // v: neighbor of w after u, missing exactly u.
            vs.clear();
            vs.extend(g.neighbors(w).iter().copied().filter(|&v| {
                d.position(v) > pu
                    && clique.binary_search(&v).is_err()
                    && missing(g, v, clique, 1, &mut gap) == 1
                    && gap[0] == u
            }));
            for &x in &xs {
                for &v in &vs {
                    if v != x && g.adjacent(v, x) {
                        visit(v, x);
                    }
                }
            }
        }
    }
}

/// `f(K)` for an already validated, sorted `h`-clique.
pub(crate) fn count_unchecked(
    kind: PatternKind,
    g: &Graph,
    d: &DegeneracyInfo,
    clique: &[VertexId],
) -> u64 {
    let mut count = 0u64;
    match kind {
        PatternKind::KClique => count = 1,
        PatternKind::K1 => for_each_k1(g, clique, |_| count += 1),
        PatternKind::K2Type1 => for_each_k2_type1(g, clique, |_| count += 1),
        PatternKind::K2Type2 => for_each_k2_type2(g, d, clique, |_, _| count += 1),
    }
    count
}

/// The patterns of `kind` counted by `f(clique)`, as vertex sets.
pub(crate) fn instances_unchecked(
    kind: PatternKind,
    g: &Graph,
    d: &DegeneracyInfo,
    clique: &[VertexId],
) -> Vec<VertexSet> {
    let extend = |extra: &[VertexId]| {
        let mut v = clique.to_vec();
        v.extend_from_slice(extra);
        VertexSet::from_unsorted(v)
    };
    let mut out = Vec::new();
    match kind {
        PatternKind::KClique => out.push(VertexSet::from_sorted(clique.to_vec())),
        PatternKind::K1 => for_each_k1(g, clique, |c| out.push(extend(&[c]))),
        PatternKind::K2Type1 => for_each_k2_type1(g, clique, |c| out.push(extend(&[c]))),
        PatternKind::K2Type2 => for_each_k2_type2(g, d, clique, |v, x| out.push(extend(&[v, x]))),
    }
    out
}

/// Always 1 for a clique: turns an estimator into a plain clique counter.
pub fn func_kclique(g: &Graph, clique: &VertexSet) -> Result<u64, EstimatorError> {
    check_clique(g, clique.as_slice(), 1)?;
    Ok(1)
}

/// Number of `(k,1)`-cliques for which `clique` (a `(k-1)`-clique) is the
/// canonical embedded clique.
pub fn func_k1(g: &Graph, clique: &VertexSet) -> Result<u64, EstimatorError> {
    check_clique(g, clique.as_slice(), 2)?;
    let mut count = 0;
    for_each_k1(g, clique.as_slice(), |_| count += 1);
    Ok(count)
}

/// Number of Type 1 `(k,2)`-cliques containing the `(k-1)`-clique `clique`.
pub fn func_k2_type1(g: &Graph, clique: &VertexSet) -> Result<u64, EstimatorError> {
    check_clique(g, clique.as_slice(), 3)?;
    let mut count = 0;
    for_each_k2_type1(g, clique.as_slice(), |_| count += 1);
    Ok(count)
}

/// Number of Type 2 `(k,2)`-cliques for which `clique` (a `(k-2)`-clique) is
/// the canonical embedded clique.
pub fn func_k2_type2(
    g: &Graph,
    d: &DegeneracyInfo,
    clique: &VertexSet,
) -> Result<u64, EstimatorError> {
    check_clique(g, clique.as_slice(), 2)?;
    let mut count = 0;
    for_each_k2_type2(g, d, clique.as_slice(), |_, _| count += 1);
    Ok(count)
}

/// Dispatches to the counting function for `kind`.
pub fn count_completions(
    kind: PatternKind,
    g: &Graph,
    d: &DegeneracyInfo,
    clique: &VertexSet,
) -> Result<u64, EstimatorError> {
    match kind {
        PatternKind::KClique => func_kclique(g, clique),
        PatternKind::K1 => func_k1(g, clique),
        PatternKind::K2Type1 => func_k2_type1(g, clique),
        PatternKind::K2Type2 => func_k2_type2(g, d, clique),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::degeneracy_order;

    fn set(v: &[VertexId]) -> VertexSet {
        VertexSet::from(v.to_vec())
    }

    fn k4_minus(missing: &[(VertexId, VertexId)]) -> Graph {
        Graph::from_edges(
            4,
            Graph::complete(4)
                .edges()
                .filter(|e| !missing.contains(e))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn kclique_is_one() {
        let g = Graph::complete(5);
        assert_eq!(func_kclique(&g, &set(&[0, 2, 4])), Ok(1));
        assert_eq!(func_kclique(&g, &set(&[1, 3])), Ok(1));
        assert_eq!(func_kclique(&g, &set(&[2])), Ok(1));
        assert_eq!(
            func_kclique(&Graph::path(3), &set(&[0, 2])),
            Err(EstimatorError::NotAClique)
        );
    }

    #[test]
    fn k1_tie_break() {
        let g = k4_minus(&[(2, 3)]);
        assert_eq!(func_k1(&g, &set(&[0, 1, 2])), Ok(1));
        assert_eq!(func_k1(&g, &set(&[0, 1, 3])), Ok(0));
    }

    #[test]
    fn k1_rejects_bad_input() {
        let g = k4_minus(&[(2, 3)]);
        assert_eq!(
            func_k1(&g, &set(&[0, 2, 3])),
            Err(EstimatorError::NotAClique)
        );
        assert!(matches!(
            func_k1(&g, &set(&[0])),
            Err(EstimatorError::CliqueTooSmall { .. })
        ));
    }

    #[test]
    fn k2_type1_examples() {
        let g = k4_minus(&[(1, 3), (2, 3)]);
        assert_eq!(func_k2_type1(&g, &set(&[0, 1, 2])), Ok(1));
        let k4 = Graph::complete(4);
        assert_eq!(func_k2_type1(&k4, &set(&[0, 1, 2])), Ok(0));
        assert_eq!(func_k2_type1(&k4, &set(&[1, 2, 3])), Ok(0));
    }

    #[test]
    fn k2_type2_on_four_cycle() {
        let g = Graph::cycle(4);
        let d = degeneracy_order(&g);
        let per_edge: Vec<u64> = g
            .edges()
            .map(|(a, b)| func_k2_type2(&g, &d, &set(&[a, b])).unwrap())
            .collect();
        assert_eq!(per_edge.iter().sum::<u64>(), 1);
        assert_eq!(per_edge.iter().filter(|&&c| c == 1).count(), 1);
        // Order 0,1,2,3: u = 0 pairs with v = 2, w = 1 (its smaller other
        // endpoint) pairs with x = 3, so K = {0, 1}.
        assert_eq!(func_k2_type2(&g, &d, &set(&[0, 1])), Ok(1));
    }

    #[test]
    fn k2_type2_on_complete_graph() {
        let g = Graph::complete(4);
        let d = degeneracy_order(&g);
        for (a, b) in g.edges() {
            assert_eq!(func_k2_type2(&g, &d, &set(&[a, b])), Ok(0));
        }
    }

    #[test]
    fn instances_match_counts() {
        let g = k4_minus(&[(1, 3), (2, 3)]);
        let d = degeneracy_order(&g);
        let inst = instances_unchecked(PatternKind::K2Type1, &g, &d, &[0, 1, 2]);
        assert_eq!(inst, vec![set(&[0, 1, 2, 3])]);
        let c4 = Graph::cycle(4);
        let d4 = degeneracy_order(&c4);
        let inst = instances_unchecked(PatternKind::K2Type2, &c4, &d4, &[0, 1]);
        assert_eq!(inst, vec![set(&[0, 1, 2, 3])]);
    }
}
