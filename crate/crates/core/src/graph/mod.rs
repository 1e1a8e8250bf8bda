//! Directed multigraph substrate: adjacency, SCCs and edge-budgeted DFS.

pub(crate) mod dfs;
mod scc;
mod stamp;

pub use dfs::{bounded_dfs, heavy_path, DfsRun};
pub(crate) use dfs::{Progress, Traversal};
pub use scc::{is_strongly_connected, strongly_connected_components, SccDecomposition};
pub(crate) use stamp::StampMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Which way edges are followed. `In` traverses every edge head to tail,
/// which is the same as working on the reverse graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Out,
    In,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Out => Orientation::In,
            Orientation::In => Orientation::Out,
        }
    }
}

/// Indexed directed multigraph.
///
/// Edge ids are stable for the lifetime of the value: deleting an edge only
/// flips its liveness flag and unlinks it from the two adjacency lists, so
/// overlays and cut witnesses keyed by [`EdgeId`] stay meaningful. Adjacency
/// lists start out in insertion order; a deletion moves the last entry of the
/// affected list into the freed slot.
#[derive(Clone, Debug, Default)]
pub struct Digraph {
    tail: Vec<VertexId>,
    head: Vec<VertexId>,
    alive: Vec<bool>,
    out_adj: Vec<Vec<EdgeId>>,
    in_adj: Vec<Vec<EdgeId>>,
    // Position of each edge inside out_adj[tail] / in_adj[head].
    out_pos: Vec<usize>,
    in_pos: Vec<usize>,
    live: usize,
}

/// Result of [`Digraph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Digraph,
    /// `vertex_of[new] = old`.
    pub vertex_of: Vec<VertexId>,
    /// `edge_of[new] = old`.
    pub edge_of: Vec<EdgeId>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            ..Default::default()
        }
    }

    /// Builds a graph from `(tail, head)` pairs. Self-loops are dropped,
    /// parallel edges are kept. Edge ids follow the order of the surviving
    /// pairs.
    pub fn from_edge_list(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Digraph::new(n);
        for (index, &(t, h)) in pairs.iter().enumerate() {
            for v in [t, h] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { index, vertex: v, n });
                }
            }
            if t != h {
                g.add_edge(t, h);
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    /// Number of live edges.
    pub fn edge_count(&self) -> usize {
        self.live
    }

    /// One past the largest edge id ever handed out (live or dead).
    pub fn edge_id_bound(&self) -> usize {
        self.tail.len()
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.out_adj.push(Vec::new());
        self.in_adj.push(Vec::new());
        self.out_adj.len() - 1
    }

    pub fn add_edge(&mut self, tail: VertexId, head: VertexId) -> EdgeId {
        assert!(tail != head, "self-loops are not representable");
        let e = self.tail.len();
        self.tail.push(tail);
        self.head.push(head);
        self.alive.push(true);
        self.out_pos.push(self.out_adj[tail].len());
        self.out_adj[tail].push(e);
        self.in_pos.push(self.in_adj[head].len());
        self.in_adj[head].push(e);
        self.live += 1;
        e
    }

    #[inline]
    pub fn tail(&self, e: EdgeId) -> VertexId {
        self.tail[e]
    }

    #[inline]
    pub fn head(&self, e: EdgeId) -> VertexId {
        self.head[e]
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.tail[e], self.head[e])
    }

    #[inline]
    pub fn is_alive(&self, e: EdgeId) -> bool {
        self.alive.get(e).copied().unwrap_or(false)
    }

    /// Live out-edges of `v`.
    #[inline]
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_adj[v]
    }

    /// Live in-edges of `v`.
    #[inline]
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_adj[v]
    }

    /// Edges leaving `v` when following `dir`.
    #[inline]
    pub fn edges_from(&self, v: VertexId, dir: Orientation) -> &[EdgeId] {
        match dir {
            Orientation::Out => &self.out_adj[v],
            Orientation::In => &self.in_adj[v],
        }
    }

    /// Endpoint an edge leads to when followed in direction `dir`.
    #[inline]
    pub fn target(&self, e: EdgeId, dir: Orientation) -> VertexId {
        match dir {
            Orientation::Out => self.head[e],
            Orientation::In => self.tail[e],
        }
    }

    /// Endpoint an edge starts from when followed in direction `dir`.
    #[inline]
    pub fn source(&self, e: EdgeId, dir: Orientation) -> VertexId {
        match dir {
            Orientation::Out => self.tail[e],
            Orientation::In => self.head[e],
        }
    }

    pub fn live_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.tail.len()).filter(move |&e| self.alive[e])
    }

    /// Live `(tail, head)` pairs in edge id order.
    pub fn edge_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.live_edges().map(|e| self.endpoints(e)).collect()
    }

    /// Tombstones `e`. Returns false if it was already dead.
    pub fn delete_edge(&mut self, e: EdgeId) -> bool {
        if !self.is_alive(e) {
            return false;
        }
        self.alive[e] = false;
        self.live -= 1;
        let (t, h) = self.endpoints(e);
        unlink(&mut self.out_adj[t], &mut self.out_pos, e);
        unlink(&mut self.in_adj[h], &mut self.in_pos, e);
        true
    }

    /// Moves the tail of a live edge to `v`.
    pub fn retarget_tail(&mut self, e: EdgeId, v: VertexId) {
        debug_assert!(self.is_alive(e));
        let t = self.tail[e];
        unlink(&mut self.out_adj[t], &mut self.out_pos, e);
        self.tail[e] = v;
        self.out_pos[e] = self.out_adj[v].len();
        self.out_adj[v].push(e);
    }

    /// Moves the head of a live edge to `v`.
    pub fn retarget_head(&mut self, e: EdgeId, v: VertexId) {
        debug_assert!(self.is_alive(e));
        let h = self.head[e];
        unlink(&mut self.in_adj[h], &mut self.in_pos, e);
        self.head[e] = v;
        self.in_pos[e] = self.in_adj[v].len();
        self.in_adj[v].push(e);
    }

    /// The reverse graph. Edge ids are preserved; dead edges stay dead.
    pub fn reverse_view(&self) -> Digraph {
        Digraph {
            tail: self.head.clone(),
            head: self.tail.clone(),
            alive: self.alive.clone(),
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            out_pos: self.in_pos.clone(),
            in_pos: self.out_pos.clone(),
            live: self.live,
        }
    }

    /// Subgraph induced by `vertices` (any order, no duplicates), compacted to
    /// ids `0..vertices.len()` in the given order. Edge ids of the result
    /// follow the original edge id order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Induced {
        self.induced_with(vertices, &mut StampMap::new(self.vertex_count()))
    }

    /// [`Digraph::induced_subgraph`] with caller-owned scratch, so repeated
    /// calls on small sets of a large graph stay proportional to the set.
    pub(crate) fn induced_with(&self, vertices: &[VertexId], index: &mut StampMap) -> Induced {
        index.reset(self.vertex_count());
        for (i, &v) in vertices.iter().enumerate() {
            index.set(v, i as u32);
        }
        let mut edges: Vec<EdgeId> = Vec::new();
        for &v in vertices {
            for &e in &self.out_adj[v] {
                if index.contains(self.head[e]) {
                    edges.push(e);
                }
            }
        }
        edges.sort_unstable();
        let mut graph = Digraph::new(vertices.len());
        for &e in &edges {
            let t = index.get(self.tail[e]).unwrap() as usize;
            let h = index.get(self.head[e]).unwrap() as usize;
            graph.add_edge(t, h);
        }
        Induced {
            graph,
            vertex_of: vertices.to_vec(),
            edge_of: edges,
        }
    }

    /// Number of live edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &[VertexId]) -> usize {
        let mut inside = StampMap::new(self.vertex_count());
        for &v in set {
            inside.set(v, 0);
        }
        set.iter()
            .map(|&v| {
                self.out_adj[v]
                    .iter()
                    .filter(|&&e| inside.contains(self.head[e]))
                    .count()
            })
            .sum()
    }

    /// True when both graphs have the same vertex count and the same live
    /// `(tail, head)` sequence in edge id order.
    pub fn same_edges(&self, other: &Digraph) -> bool {
        self.vertex_count() == other.vertex_count() && self.edge_pairs() == other.edge_pairs()
    }
}

fn unlink(list: &mut Vec<EdgeId>, pos: &mut [usize], e: EdgeId) {
    let at = pos[e];
    let last = list.len() - 1;
    if at != last {
        let moved = list[last];
        list[at] = moved;
        pos[moved] = at;
    }
    list.pop();
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new(mut members: Vec<VertexId>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn members(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl From<Vec<VertexId>> for VertexSet {
    fn from(v: Vec<VertexId>) -> Self {
        VertexSet::new(v)
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}
