use super::{ResidualOverlay, Workspace};
use crate::error::Result;
use crate::graph::dfs::View;
use crate::graph::{Digraph, Orientation, Progress, VertexId};

/// Vertex list of a 1-edge-out (or in) set of `u`, unsorted.
pub(crate) fn edge_out_raw(
    ws: &mut Workspace,
    g: &Digraph,
    u: VertexId,
    delta: usize,
    dir: Orientation,
) -> Result<Option<Vec<VertexId>>> {
    let n = g.vertex_count();
    let budget = 2 * delta + 1;
    let [f1, f2] = ws.traversals(2) else { unreachable!() };

    f1.begin(n, u);
    f1.run(&View::plain(g, dir), budget);
    let mut scanned = f1.scanned;
    let result = if f1.scanned < budget {
        Some(f1.verts.clone())
    } else {
        let heavy = f1.heavy_path(delta)?;
        let path: Vec<_> = heavy[1..].iter().map(|&s| f1.parent_edge[s as usize]).collect();
        let overlay = ResidualOverlay::new(dir).apply_path_reversal(g, &path)?;
        f2.begin(n, u);
        let progress = f2.run(&View::with_overlay(g, &overlay), delta + 1);
        scanned += f2.scanned;
        (progress == Progress::Done && f2.scanned <= delta).then(|| f2.verts.clone())
    };
    ws.scanned += scanned;
    Ok(result)
}
