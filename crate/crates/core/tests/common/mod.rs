#![allow(dead_code)]

use kconn::Digraph;
use proptest::prelude::*;

/// Digraphs with `1..=max_n` vertices and up to `max_m` edges, self-loops
/// and parallel edges included.
pub fn digraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_m)
            .prop_map(move |pairs| Digraph::from_edge_list(n, &pairs).unwrap())
    })
}

/// Strongly connected digraphs: random edges plus the cycle 0 -> 1 -> ... -> 0.
pub fn strong_digraph(min_n: usize, max_n: usize, max_extra: usize) -> impl Strategy<Value = Digraph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_extra).prop_map(move |mut pairs| {
            pairs.extend((0..n).map(|i| (i, (i + 1) % n)));
            Digraph::from_edge_list(n, &pairs).unwrap()
        })
    })
}

/// Vertices reachable from `u`, by plain BFS.
pub fn reachable(g: &Digraph, u: usize) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(v) = stack.pop() {
        for &e in g.out_edges(v) {
            let w = g.head(e);
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}
