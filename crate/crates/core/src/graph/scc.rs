use super::{Digraph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccDecomposition {
    pub component_of: Vec<usize>,
    pub components: Vec<VertexSet>,
    /// Component indices in topological order of the condensation.
    pub order: Vec<usize>,
}

impl SccDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// Iterative Tarjan over live edges. Components are indexed in the order
/// Tarjan closes them, which is a reverse topological order.
pub fn strongly_connected_components(g: &Digraph) -> SccDecomposition {
    const UNSEEN: u32 = u32::MAX;
    let n = g.vertex_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut component_of = vec![usize::MAX; n];
    let mut stack: Vec<VertexId> = Vec::new();
    let mut call: Vec<(VertexId, usize)> = Vec::new();
    let mut components: Vec<VertexSet> = Vec::new();
    let mut next = 0u32;

    for s in 0..n {
        if index[s] != UNSEEN {
            continue;
        }
        call.push((s, 0));
        index[s] = next;
        low[s] = next;
        next += 1;
        stack.push(s);
        on_stack[s] = true;

        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            let adj = g.out_edges(v);
            if *i < adj.len() {
                let w = g.head(adj[*i]);
                *i += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(p, _)) = call.last() {
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                let id = components.len();
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    component_of[w] = id;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                components.push(VertexSet::new(members));
            }
        }
    }

    let order = (0..components.len()).rev().collect();
    SccDecomposition {
        component_of,
        components,
        order,
    }
}

pub fn is_strongly_connected(g: &Digraph) -> bool {
    g.vertex_count() <= 1 || strongly_connected_components(g).count() == 1
}
