//! Small named graphs used throughout the tests and the demo.

use crate::graph::{Digraph, VertexId};

fn build(n: usize, pairs: &[(VertexId, VertexId)]) -> Digraph {
    Digraph::from_edge_list(n, pairs).expect("fixture ids are in range")
}

fn bidirected_clique(vertices: &[VertexId], pairs: &mut Vec<(VertexId, VertexId)>) {
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            pairs.push((a, b));
            pairs.push((b, a));
        }
    }
}

/// Two directed triangles joined by one edge each way.
pub fn twin_cycles() -> Digraph {
    build(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3), (5, 0)],
    )
}

/// Both directions of every pair on four vertices.
pub fn bi_k4() -> Digraph {
    let mut pairs = Vec::new();
    bidirected_clique(&[0, 1, 2, 3], &mut pairs);
    build(4, &pairs)
}

/// Two bidirected triangles sharing vertex 2.
pub fn shared_hub() -> Digraph {
    let mut pairs = Vec::new();
    bidirected_clique(&[0, 1, 2], &mut pairs);
    bidirected_clique(&[2, 3, 4], &mut pairs);
    build(5, &pairs)
}

/// Two bidirected 4-cliques joined by two links in each direction.
pub fn clique_pair() -> Digraph {
    let mut pairs = Vec::new();
    bidirected_clique(&[0, 1, 2, 3], &mut pairs);
    bidirected_clique(&[4, 5, 6, 7], &mut pairs);
    pairs.extend([(3, 4), (4, 3), (0, 5), (5, 0)]);
    build(8, &pairs)
}

/// A bidirected 4-clique hanging off a bidirected 8-clique: two edges out,
/// one edge back.
pub fn planted_kout() -> Digraph {
    let mut pairs = Vec::new();
    bidirected_clique(&[0, 1, 2, 3], &mut pairs);
    bidirected_clique(&[4, 5, 6, 7, 8, 9, 10, 11], &mut pairs);
    pairs.extend([(0, 4), (1, 4), (4, 0)]);
    build(12, &pairs)
}

/// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn cycle(n: usize) -> Digraph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &pairs)
}

/// Bidirected path `0 - 1 - ... - n-1`.
pub fn bidirected_path(n: usize) -> Digraph {
    let mut pairs = Vec::new();
    for i in 1..n {
        pairs.push((i - 1, i));
        pairs.push((i, i - 1));
    }
    build(n, &pairs)
}

pub fn all() -> Vec<(&'static str, Digraph)> {
    vec![
        ("twin-cycles", twin_cycles()),
        ("bi-k4", bi_k4()),
        ("shared-hub", shared_hub()),
        ("clique-pair", clique_pair()),
        ("planted-kout", planted_kout()),
    ]
}
