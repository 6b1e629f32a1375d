mod common;

use common::{brute_cliques, gnp, missing_pairs, subsets};
use nearclique::estimators::{func_k1, func_k2_type1, func_k2_type2, PatternKind, PatternSpec};
use nearclique::{degeneracy_order, Graph, VertexId, VertexSet};

/// Classifies every `k`-subset by its missing pairs: returns
/// `[kclique, (k,1), type 1, type 2]`.
fn classify(g: &Graph, k: usize) -> [u64; 4] {
    let mut out = [0; 4];
    for s in subsets(g.num_vertices(), k) {
        let gaps = missing_pairs(g, &s);
        match gaps.as_slice() {
            [] => out[0] += 1,
            [_] => out[1] += 1,
            [(a, b), (c, d)] => {
                if [a, b].iter().any(|x| *x == c || *x == d) {
                    out[2] += 1
                } else {
                    out[3] += 1
                }
            }
            _ => {}
        }
    }
    out
}

fn sum_over_cliques(g: &Graph, h: usize, f: impl Fn(&VertexSet) -> u64) -> u64 {
    brute_cliques(g, h)
        .into_iter()
        .map(|c| f(&VertexSet::from(c)))
        .sum()
}

#[test]
fn sums_over_cliques_match_subset_classification() {
    let mut seed = 500;
    for n in [12, 16, 20] {
        for p in [0.3, 0.5, 0.7] {
            let g = gnp(n, p, seed);
            seed += 1;
            let d = degeneracy_order(&g);
            for k in 4..=6 {
                let truth = classify(&g, k);
                let k1 = sum_over_cliques(&g, k - 1, |c| func_k1(&g, c).unwrap());
                let t1 = sum_over_cliques(&g, k - 1, |c| func_k2_type1(&g, c).unwrap());
                let t2 = sum_over_cliques(&g, k - 2, |c| func_k2_type2(&g, &d, c).unwrap());
                assert_eq!(
                    [k1, t1, t2],
                    [truth[1], truth[2], truth[3]],
                    "n={n} p={p} k={k}"
                );
            }
        }
    }
}

#[test]
fn k1_matches_full_vertex_scan() {
    let g = gnp(12, 0.5, 12);
    let mut total = 0;
    for tri in brute_cliques(&g, 3) {
        let naive = g
            .vertices()
            .filter(|c| !tri.contains(c))
            .filter(|&c| {
                let gaps: Vec<VertexId> =
                    tri.iter().copied().filter(|&z| !g.adjacent(c, z)).collect();
                gaps.len() == 1 && c > gaps[0]
            })
            .count() as u64;
        assert_eq!(func_k1(&g, &VertexSet::from(tri)).unwrap(), naive);
        total += naive;
    }
    assert_eq!(total, classify(&g, 4)[1]);
}

#[test]
fn type1_and_type2_on_gnp12() {
    let g = gnp(12, 0.5, 13);
    let d = degeneracy_order(&g);
    let t1 = sum_over_cliques(&g, 4, |c| func_k2_type1(&g, c).unwrap());
    assert_eq!(t1, classify(&g, 5)[2]);
    let t2 = sum_over_cliques(&g, 4, |c| func_k2_type2(&g, &d, c).unwrap());
    assert_eq!(t2, classify(&g, 6)[3]);
}

#[test]
fn counts_stay_below_their_bounds() {
    for (seed, n, p) in [(31, 20, 0.5), (32, 25, 0.7), (33, 30, 0.3)] {
        let g = gnp(n, p, seed);
        let d = degeneracy_order(&g);
        let (dmax, alpha) = (g.max_degree(), d.degeneracy());
        for k in 4..=6 {
            let bound = |kind| PatternSpec::new(kind, k).unwrap().bound(n, dmax, alpha);
            for c in brute_cliques(&g, k - 1) {
                let c = VertexSet::from(c);
                assert!(func_k1(&g, &c).unwrap() as f64 <= bound(PatternKind::K1));
                assert!(func_k2_type1(&g, &c).unwrap() as f64 <= bound(PatternKind::K2Type1));
            }
            for c in brute_cliques(&g, k - 2) {
                let c = VertexSet::from(c);
                assert!(func_k2_type2(&g, &d, &c).unwrap() as f64 <= bound(PatternKind::K2Type2));
            }
        }
    }
}
