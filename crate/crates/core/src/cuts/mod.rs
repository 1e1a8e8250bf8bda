//! Global separation primitives: strong bridges, strong articulation points
//! and small directed edge cuts.

mod dominators;
mod flow;
mod naive;

pub use naive::{naive_min_cut, naive_strong_articulation_points, naive_strong_bridges, MinCut};
pub(crate) use naive::MatrixFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, strongly_connected_components, Digraph, EdgeId, VertexId, VertexSet};
use dominators::immediate_dominators;
use flow::CappedFlow;

/// A set of edges whose removal leaves no path from `side_source` to the
/// remaining vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub edges: Vec<EdgeId>,
    pub side_source: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparationWitness {
    Bridge(EdgeId),
    ArticulationPoint(VertexId),
    Cut(EdgeCut),
}

impl SeparationWitness {
    /// True if removing the witness from `g` increases the SCC count.
    pub fn separates(&self, g: &Digraph) -> bool {
        let before = strongly_connected_components(g).count();
        let after = match self {
            SeparationWitness::Bridge(e) => without_edges(g, &[*e]),
            SeparationWitness::Cut(c) => without_edges(g, &c.edges),
            SeparationWitness::ArticulationPoint(v) => {
                let rest: Vec<_> = (0..g.vertex_count()).filter(|w| w != v).collect();
                g.induced_subgraph(&rest).graph
            }
        };
        strongly_connected_components(&after).count() > before
    }
}

fn without_edges(g: &Digraph, edges: &[EdgeId]) -> Digraph {
    let mut h = g.clone();
    for &e in edges {
        h.delete_edge(e);
    }
    h
}

fn require_strong(g: &Digraph) -> Result<()> {
    if is_strongly_connected(g) {
        Ok(())
    } else {
        Err(Error::Precondition("graph is not strongly connected".into()))
    }
}

// Idoms on the graph with one midpoint vertex per edge, in both directions.
fn edge_split_idoms(g: &Digraph, reverse: bool) -> (Vec<Option<usize>>, Vec<EdgeId>) {
    let n = g.vertex_count();
    let edges: Vec<EdgeId> = g.live_edges().collect();
    let mut arcs = Vec::with_capacity(2 * edges.len());
    for (i, &e) in edges.iter().enumerate() {
        let (mut a, mut b) = g.endpoints(e);
        if reverse {
            std::mem::swap(&mut a, &mut b);
        }
        let z = (n + i) as u32;
        arcs.push((a as u32, z));
        arcs.push((z, b as u32));
    }
    (immediate_dominators(n + edges.len(), 0, &arcs), edges)
}

/// All strong bridges of a strongly connected graph, in edge id order.
///
/// An edge is a strong bridge exactly when it dominates its head from a fixed
/// root, or its tail in the reverse graph.
pub fn strong_bridges(g: &Digraph) -> Result<Vec<EdgeId>> {
    require_strong(g)?;
    Ok(strong_bridges_unchecked(g))
}

pub(crate) fn strong_bridges_unchecked(g: &Digraph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    if n <= 1 {
        return Vec::new();
    }
    let (fwd, edges) = edge_split_idoms(g, false);
    let (bwd, _) = edge_split_idoms(g, true);
    edges
        .iter()
        .enumerate()
        .filter(|&(i, &e)| {
            let (a, b) = g.endpoints(e);
            fwd[b] == Some(n + i) || bwd[a] == Some(n + i)
        })
        .map(|(_, &e)| e)
        .collect()
}

/// Every strong articulation point of a strongly connected graph with at
/// least three vertices, ascending.
pub fn strong_articulation_points(g: &Digraph) -> Result<Vec<VertexId>> {
    if g.vertex_count() < 3 {
        return Err(Error::Precondition("need at least three vertices".into()));
    }
    require_strong(g)?;
    Ok(strong_articulation_points_unchecked(g))
}

pub(crate) fn strong_articulation_points_unchecked(g: &Digraph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut is_sap = vec![false; n];
    for reverse in [false, true] {
        let arcs: Vec<(u32, u32)> = g
            .edge_pairs()
            .into_iter()
            .map(|(a, b)| if reverse { (b as u32, a as u32) } else { (a as u32, b as u32) })
            .collect();
        for d in immediate_dominators(n, 0, &arcs).into_iter().flatten() {
            is_sap[d] = true;
        }
    }
    let rest: Vec<_> = (1..n).collect();
    is_sap[0] = !is_strongly_connected(&g.induced_subgraph(&rest).graph);
    (0..n).filter(|&v| is_sap[v]).collect()
}

/// Some directed cut with at most `k - 1` edges, or `None` if the graph is
/// `k`-edge-connected. For `k = 2` this is a strong bridge; otherwise it is
/// the first cut found by capped flows between vertex 0 and every other
/// vertex in both directions.
pub fn small_edge_cut(g: &Digraph, k: usize) -> Result<Option<EdgeCut>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    require_strong(g)?;
    Ok(small_edge_cut_unchecked(g, k))
}

pub(crate) fn small_edge_cut_unchecked(g: &Digraph, k: usize) -> Option<EdgeCut> {
    let n = g.vertex_count();
    if n <= 1 {
        return None;
    }
    let cut = if k == 2 {
        let e = *strong_bridges_unchecked(g).first()?;
        let mut h = g.clone();
        h.delete_edge(e);
        Some(EdgeCut {
            edges: vec![e],
            side_source: VertexSet::new(reachable(&h, g.tail(e))),
        })
    } else {
        flow_cut(g, k)
    };
    if cfg!(debug_assertions) {
        if let Some(c) = &cut {
            assert!(
                SeparationWitness::Cut(c.clone()).separates(g),
                "returned cut does not separate the graph"
            );
        }
    }
    cut
}

fn flow_cut(g: &Digraph, k: usize) -> Option<EdgeCut> {
    let mut flow = CappedFlow::new(g);
    for v in 1..g.vertex_count() {
        for (s, t) in [(0, v), (v, 0)] {
            if flow.run(s, t, k) < k {
                let side = VertexSet::new(flow.source_side());
                let mut edges: Vec<_> = side
                    .members()
                    .iter()
                    .flat_map(|&x| g.out_edges(x).iter().copied())
                    .filter(|&e| !side.contains(g.head(e)))
                    .collect();
                edges.sort_unstable();
                return Some(EdgeCut { edges, side_source: side });
            }
        }
    }
    None
}

pub(crate) fn reachable(g: &Digraph, s: VertexId) -> Vec<VertexId> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![s];
    seen[s] = true;
    let mut out = vec![s];
    while let Some(v) = stack.pop() {
        for &e in g.out_edges(v) {
            let w = g.head(e);
            if !seen[w] {
                seen[w] = true;
                out.push(w);
                stack.push(w);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bridges() {
        assert!(strong_bridges(&fixtures::bi_k4()).unwrap().is_empty());
        let a = fixtures::twin_cycles();
        let mut pairs: Vec<_> = strong_bridges(&a).unwrap().iter().map(|&e| a.endpoints(e)).collect();
        pairs.sort();
        assert_eq!(pairs, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(strong_bridges(&fixtures::cycle(3)).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn bridges_need_strong_connectivity() {
        let g = Digraph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(matches!(strong_bridges(&g), Err(Error::Precondition(_))));
    }

    #[test]
    fn articulation_points() {
        assert_eq!(strong_articulation_points(&fixtures::shared_hub()).unwrap(), vec![2]);
        assert!(strong_articulation_points(&fixtures::bi_k4()).unwrap().is_empty());
        assert_eq!(strong_articulation_points(&fixtures::bidirected_path(3)).unwrap(), vec![1]);
        assert!(strong_articulation_points(&fixtures::bidirected_path(2)).is_err());
    }

    #[test]
    fn small_cuts() {
        let d = fixtures::clique_pair();
        let cut = small_edge_cut(&d, 3).unwrap().unwrap();
        assert_eq!(cut.edges.len(), 2);
        let side = cut.side_source.members().to_vec();
        assert!(side == vec![0, 1, 2, 3] || side == vec![4, 5, 6, 7], "{side:?}");
        assert_eq!(small_edge_cut(&fixtures::bi_k4(), 3).unwrap(), None);
        assert!(small_edge_cut(&fixtures::bi_k4(), 4).unwrap().is_some());
        let a = fixtures::twin_cycles();
        assert!(small_edge_cut(&a, 2).unwrap().is_some());
        assert_eq!(small_edge_cut(&d, 2).unwrap(), None);
        assert!(small_edge_cut(&d, 1).is_err());
    }
}
