use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, EdgeId, VertexId};

/// Origin of every vertex of a graph that has been through splits. Original
/// vertices map to themselves; copies map to the vertex they were split from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitMap {
    origin: Vec<VertexId>,
    originals: usize,
}

impl SplitMap {
    pub fn identity(n: usize) -> Self {
        SplitMap {
            origin: (0..n).collect(),
            originals: n,
        }
    }

    pub fn origin(&self, v: VertexId) -> VertexId {
        self.origin[v]
    }

    pub fn auxiliary_count(&self) -> usize {
        self.origin.len() - self.originals
    }

    pub fn len(&self) -> usize {
        self.origin.len()
    }

    pub fn is_empty(&self) -> bool {
        self.origin.is_empty()
    }
}

/// Moves every edge between `x` and a member of `n_set` onto a fresh copy of
/// `x` and returns the copy.
pub fn split(g: &mut Digraph, map: &mut SplitMap, x: VertexId, n_set: &[VertexId]) -> Result<VertexId> {
    if map.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("split map does not match the graph".into()));
    }
    if x >= g.vertex_count() || n_set.iter().any(|&v| v >= g.vertex_count()) {
        return Err(Error::InvalidParameter("split vertex out of range".into()));
    }
    let mut inside = vec![false; g.vertex_count()];
    for &v in n_set {
        inside[v] = true;
    }
    let edges = edges_to(g, x, |v| inside[v]);
    split_edges(g, map, x, &edges)
}

/// Live edges between `x` and vertices accepted by `keep`, out-edges first.
pub(crate) fn edges_to(g: &Digraph, x: VertexId, keep: impl Fn(VertexId) -> bool) -> Vec<EdgeId> {
    let out = g.out_edges(x).iter().filter(|&&e| g.head(e) != x && keep(g.head(e)));
    let inc = g.in_edges(x).iter().filter(|&&e| g.tail(e) != x && keep(g.tail(e)));
    out.chain(inc).copied().collect()
}

pub(crate) fn split_edges(g: &mut Digraph, map: &mut SplitMap, x: VertexId, edges: &[EdgeId]) -> Result<VertexId> {
    let before = g.edge_count();
    let copy = g.add_vertex();
    map.origin.push(map.origin[x]);
    for &e in edges {
        if g.tail(e) == x {
            g.retarget_tail(e, copy);
        } else {
            g.retarget_head(e, copy);
        }
    }
    if g.edge_count() != before {
        return Err(Error::invariant("split changed the number of edges"));
    }
    Ok(copy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::strongly_connected_components;

    #[test]
    fn split_hub_separates_triangles() {
        let mut g = fixtures::shared_hub();
        let mut map = SplitMap::identity(5);
        let copy = split(&mut g, &mut map, 2, &[0, 1]).unwrap();
        assert_eq!(copy, 5);
        assert_eq!(map.origin(5), 2);
        assert_eq!(g.edge_count(), 12);
        let mut sets: Vec<_> = strongly_connected_components(&g)
            .components
            .into_iter()
            .map(|c| c.into_vec())
            .collect();
        sets.sort();
        assert_eq!(sets, vec![vec![0, 1, 5], vec![2, 3, 4]]);
    }

    #[test]
    fn empty_neighbor_set_gives_isolated_copy() {
        let mut g = fixtures::bi_k4();
        let mut map = SplitMap::identity(4);
        let copy = split(&mut g, &mut map, 0, &[]).unwrap();
        assert!(g.out_edges(copy).is_empty() && g.in_edges(copy).is_empty());
        assert_eq!(map.auxiliary_count(), 1);
    }
}
