//! Slow definitional versions of the cut primitives, kept for cross-checking.

use super::EdgeCut;
use crate::graph::{strongly_connected_components, Digraph, EdgeId, VertexId, VertexSet};

fn scc_count(g: &Digraph) -> usize {
    strongly_connected_components(g).count()
}

/// Edges whose removal increases the number of strongly connected components.
pub fn naive_strong_bridges(g: &Digraph) -> Vec<EdgeId> {
    let before = scc_count(g);
    g.live_edges()
        .filter(|&e| {
            let mut h = g.clone();
            h.delete_edge(e);
            scc_count(&h) > before
        })
        .collect()
}

/// Vertices whose removal increases the number of strongly connected
/// components.
pub fn naive_strong_articulation_points(g: &Digraph) -> Vec<VertexId> {
    let before = scc_count(g);
    (0..g.vertex_count())
        .filter(|&v| {
            let rest: Vec<_> = (0..g.vertex_count()).filter(|&w| w != v).collect();
            scc_count(&g.induced_subgraph(&rest).graph) > before
        })
        .collect()
}

/// Dense residual matrix flow with edge multiplicities as capacities.
pub(crate) struct MatrixFlow {
    n: usize,
    cap: Vec<u32>,
}

impl MatrixFlow {
    pub fn new(g: &Digraph) -> Self {
        let n = g.vertex_count();
        let mut cap = vec![0; n * n];
        for (t, h) in g.edge_pairs() {
            cap[t * n + h] += 1;
        }
        MatrixFlow { n, cap }
    }

    /// Max flow from `s` to `t` capped at `limit`, plus the vertices reachable
    /// from `s` in the final residual matrix.
    pub fn max_flow(&self, s: VertexId, t: VertexId, limit: usize) -> (usize, Vec<bool>) {
        let n = self.n;
        let mut res = self.cap.clone();
        let mut value = 0;
        loop {
            let mut prev = vec![usize::MAX; n];
            prev[s] = s;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in 0..n {
                    if prev[w] == usize::MAX && res[v * n + w] > 0 {
                        prev[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            let reached: Vec<bool> = prev.iter().map(|&p| p != usize::MAX).collect();
            if value >= limit || !reached[t] {
                return (value, reached);
            }
            let mut w = t;
            while w != s {
                let v = prev[w];
                res[v * n + w] -= 1;
                res[w * n + v] += 1;
                w = v;
            }
            value += 1;
        }
    }
}

/// Result of [`naive_min_cut`]. `value` is capped at the requested limit;
/// `witness` is present whenever `value` is below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCut {
    pub value: usize,
    pub witness: Option<EdgeCut>,
}

/// Global directed edge connectivity, capped at `cap`, as the minimum over
/// all `v` of the flows between vertex 0 and `v` in both directions.
pub fn naive_min_cut(g: &Digraph, cap: usize) -> MinCut {
    let n = g.vertex_count();
    let flow = MatrixFlow::new(g);
    let mut best = MinCut { value: cap, witness: None };
    for v in 1..n {
        for (s, t) in [(0, v), (v, 0)] {
            let (value, side) = flow.max_flow(s, t, best.value);
            if value < best.value {
                let side_source: Vec<_> = (0..n).filter(|&x| side[x]).collect();
                let side_source = VertexSet::new(side_source);
                let edges = g
                    .live_edges()
                    .filter(|&e| side_source.contains(g.tail(e)) && !side_source.contains(g.head(e)))
                    .collect();
                best = MinCut {
                    value,
                    witness: Some(EdgeCut { edges, side_source }),
                };
            }
        }
    }
    best
}
