use std::collections::VecDeque;

use crate::graph::{Digraph, EdgeId, VertexId};

/// Unit-capacity augmenting-path flow on the live edges of a graph, stopped
/// after `cap` paths.
pub(crate) struct CappedFlow<'a> {
    g: &'a Digraph,
    used: Vec<bool>,
    // Edges whose flag may be set, so a reset touches only those.
    touched: Vec<EdgeId>,
    seen: Vec<u32>,
    via: Vec<EdgeId>,
    round: u32,
    queue: VecDeque<VertexId>,
}

impl<'a> CappedFlow<'a> {
    pub fn new(g: &'a Digraph) -> Self {
        CappedFlow {
            g,
            used: vec![false; g.edge_id_bound()],
            touched: Vec::new(),
            seen: vec![0; g.vertex_count()],
            via: vec![EdgeId::MAX; g.vertex_count()],
            round: 0,
            queue: VecDeque::new(),
        }
    }

    /// Flow value from `s` to `t`, capped at `cap`. Afterwards
    /// [`CappedFlow::source_side`] describes a minimum cut when the value is
    /// below the cap.
    pub fn run(&mut self, s: VertexId, t: VertexId, cap: usize) -> usize {
        for e in self.touched.drain(..) {
            self.used[e] = false;
        }
        let mut value = 0;
        while value < cap && self.augment(s, t) {
            value += 1;
        }
        value
    }

    // BFS in the residual graph; flips the path if `t` is reached.
    fn augment(&mut self, s: VertexId, t: VertexId) -> bool {
        let g = self.g;
        self.round += 1;
        let round = self.round;
        self.queue.clear();
        self.queue.push_back(s);
        self.seen[s] = round;
        while let Some(v) = self.queue.pop_front() {
            let forward = g.out_edges(v).iter().filter(|&&e| !self.used[e]).map(|&e| (e, g.head(e)));
            let backward = g.in_edges(v).iter().filter(|&&e| self.used[e]).map(|&e| (e, g.tail(e)));
            for (e, w) in forward.chain(backward) {
                if self.seen[w] == round {
                    continue;
                }
                self.seen[w] = round;
                self.via[w] = e;
                if w == t {
                    let mut x = t;
                    while x != s {
                        let e = self.via[x];
                        self.used[e] = !self.used[e];
                        self.touched.push(e);
                        x = if g.head(e) == x && self.used[e] { g.tail(e) } else { g.head(e) };
                    }
                    return true;
                }
                self.queue.push_back(w);
            }
        }
        false
    }

    /// Vertices reached by the last failed augmentation.
    pub fn source_side(&self) -> Vec<VertexId> {
        (0..self.g.vertex_count()).filter(|&v| self.seen[v] == self.round).collect()
    }
}
