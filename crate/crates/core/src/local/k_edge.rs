use super::{ResidualOverlay, Workspace};
use crate::error::Result;
use crate::graph::dfs::View;
use crate::graph::{Digraph, Orientation, Progress, Traversal, VertexId};

/// Vertex list of a (k-1)-edge-out (or in) set of `u`, unsorted.
pub(crate) fn k_edge_raw(
    ws: &mut Workspace,
    g: &Digraph,
    u: VertexId,
    delta: usize,
    k: usize,
    dir: Orientation,
) -> Result<Option<Vec<VertexId>>> {
    let kp = k - 1;
    let mut search = Search {
        g,
        u,
        delta,
        kp,
        ell: (2 * kp + 1) * (delta + 1),
        scanned: 0,
    };
    let pool = ws.traversals(kp + 1);
    let found = search.level(pool, 1, &ResidualOverlay::new(dir))?;
    ws.scanned += search.scanned;
    Ok(found)
}

struct Search<'a> {
    g: &'a Digraph,
    u: VertexId,
    delta: usize,
    kp: usize,
    ell: usize,
    scanned: usize,
}

impl Search<'_> {
    fn level(
        &mut self,
        pool: &mut [Traversal],
        depth: usize,
        overlay: &ResidualOverlay,
    ) -> Result<Option<Vec<VertexId>>> {
        let (t, deeper) = pool.split_first_mut().expect("one traversal per level");
        let view = View::with_overlay(self.g, overlay);
        t.begin(self.g.vertex_count(), self.u);
        for _ in 0..2 * self.kp + 1 {
            t.mark();
            let before = t.scanned;
            let progress = t.run(&view, before + self.delta + 1);
            self.scanned += t.scanned - before;
            if progress == Progress::Done && t.scanned < self.ell {
                return Ok(Some(t.verts.clone()));
            }
            if depth <= self.kp {
                // The shallowest stack entry touched during the chunk is the
                // common ancestor of everything the chunk visited.
                let nca = t.low_water.max(1) - 1;
                let path = t.stack_path_edges(nca);
                let next = overlay.apply_path_reversal(self.g, &path)?;
                if let Some(found) = self.level(deeper, depth + 1, &next)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }
}
