//! Edge-budgeted searches for small sets that are cut off from the rest of
//! the graph by few edges or by a single vertex.
//!
//! Every search costs time linear in the budget (exponential in `k` for the
//! k-edge variant), never in the size of the graph, provided the same
//! [`Workspace`] is reused.

mod edge_out;
mod k_edge;
mod overlay;
mod vertex_out;

pub use overlay::ResidualOverlay;
pub use vertex_out::{block_state, BlockState};

pub(crate) use edge_out::edge_out_raw;
pub(crate) use k_edge::k_edge_raw;
pub(crate) use vertex_out::vertex_out_raw;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, EdgeId, Orientation, StampMap, Traversal, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedComponent {
    pub vertices: VertexSet,
    /// Edges leaving (out) or entering (in) the set, in edge id order.
    pub boundary: Vec<EdgeId>,
    pub separating_vertex: Option<VertexId>,
    pub orientation: Orientation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalSearchParams {
    pub delta: usize,
    pub k: usize,
}

impl LocalSearchParams {
    pub fn new(delta: usize, k: usize) -> Result<Self> {
        if delta == 0 {
            return Err(Error::InvalidParameter("delta must be at least 1".into()));
        }
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
        }
        Ok(LocalSearchParams { delta, k })
    }
}

/// Scratch space shared by consecutive searches.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub(crate) traversals: Vec<Traversal>,
    pub(crate) status: StampMap,
    pub(crate) path_index: StampMap,
    /// Total edges scanned by all searches run with this workspace.
    pub scanned: usize,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn traversals(&mut self, count: usize) -> &mut [Traversal] {
        if self.traversals.len() < count {
            self.traversals.resize_with(count, Traversal::default);
        }
        &mut self.traversals[..count]
    }
}

fn check(g: &Digraph, u: VertexId, delta: usize, k: usize) -> Result<()> {
    LocalSearchParams::new(delta, k)?;
    if u >= g.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "start vertex {u} out of range for {} vertices",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Edges with their source in `set` and target outside, following `dir`.
pub fn boundary_edges(g: &Digraph, set: &VertexSet, dir: Orientation) -> Vec<EdgeId> {
    let mut out: Vec<EdgeId> = set
        .members()
        .iter()
        .flat_map(|&v| g.edges_from(v, dir).iter().copied())
        .filter(|&e| !set.contains(g.target(e, dir)))
        .collect();
    out.sort_unstable();
    out
}

fn finish(
    g: &Digraph,
    vertices: Vec<VertexId>,
    separating_vertex: Option<VertexId>,
    dir: Orientation,
) -> IsolatedComponent {
    let vertices = VertexSet::new(vertices);
    IsolatedComponent {
        boundary: boundary_edges(g, &vertices, dir),
        vertices,
        separating_vertex,
        orientation: dir,
    }
}

/// Which kind of small component a search looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchKind {
    /// At most `k - 1` boundary edges; `k = 2` runs the 1-edge search.
    Edge { k: usize },
    /// One separating vertex.
    Vertex,
}

/// Any of the searches below, reusing `ws`. `ws.scanned` grows by the
/// number of edges this search examined.
pub fn search(
    ws: &mut Workspace,
    g: &Digraph,
    u: VertexId,
    delta: usize,
    kind: SearchKind,
    dir: Orientation,
) -> Result<Option<IsolatedComponent>> {
    match kind {
        SearchKind::Edge { k } => {
            check(g, u, delta, k)?;
            let found = if k == 2 {
                edge_out_raw(ws, g, u, delta, dir)?
            } else {
                k_edge_raw(ws, g, u, delta, k, dir)?
            };
            Ok(found.map(|s| finish(g, s, None, dir)))
        }
        SearchKind::Vertex => {
            check(g, u, delta, 2)?;
            let found = vertex_out_raw(ws, g, u, delta, dir)?;
            Ok(found.map(|o| finish(g, o.vertices, o.separator, dir)))
        }
    }
}

/// A set containing `u` with at most one leaving edge and at most `2 delta`
/// internal edges, or `None` when every such set has more than `delta` edges.
pub fn one_edge_out(g: &Digraph, u: VertexId, delta: usize) -> Result<Option<IsolatedComponent>> {
    search(&mut Workspace::new(), g, u, delta, SearchKind::Edge { k: 2 }, Orientation::Out)
}

/// Mirror of [`one_edge_out`] for entering edges.
pub fn one_edge_in(g: &Digraph, u: VertexId, delta: usize) -> Result<Option<IsolatedComponent>> {
    search(&mut Workspace::new(), g, u, delta, SearchKind::Edge { k: 2 }, Orientation::In)
}

/// A set containing `u` in which only one vertex other than `u` has leaving
/// edges, reported as the separating vertex.
pub fn one_vertex_out(g: &Digraph, u: VertexId, delta: usize) -> Result<Option<IsolatedComponent>> {
    search(&mut Workspace::new(), g, u, delta, SearchKind::Vertex, Orientation::Out)
}

pub fn one_vertex_in(g: &Digraph, u: VertexId, delta: usize) -> Result<Option<IsolatedComponent>> {
    search(&mut Workspace::new(), g, u, delta, SearchKind::Vertex, Orientation::In)
}

/// A set containing `u` with at most `k - 1` leaving edges and fewer than
/// `(2k - 1)(delta + 1)` internal edges, or `None` when no such set with at
/// most `delta` edges exists.
pub fn k_edge_out(g: &Digraph, u: VertexId, delta: usize, k: usize) -> Result<Option<IsolatedComponent>> {
    search(&mut Workspace::new(), g, u, delta, SearchKind::Edge { k }, Orientation::Out)
}

pub fn k_edge_in(g: &Digraph, u: VertexId, delta: usize, k: usize) -> Result<Option<IsolatedComponent>> {
    search(&mut Workspace::new(), g, u, delta, SearchKind::Edge { k }, Orientation::In)
}
