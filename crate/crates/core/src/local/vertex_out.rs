use super::Workspace;
use crate::error::{Error, Result};
use crate::graph::dfs::View;
use crate::graph::{bounded_dfs, heavy_path, Digraph, DfsRun, Orientation, VertexId};

/// Heavy path of the first search, blocked for the second.
#[derive(Clone, Debug)]
pub struct BlockState {
    /// Blocked vertices from the start vertex downwards.
    pub blocked: Vec<VertexId>,
    pub tree: DfsRun,
}

/// The blocking state `one_vertex_out` would use, or `None` when the first
/// search takes the reachable-set shortcut.
pub fn block_state(g: &Digraph, u: VertexId, delta: usize) -> Result<Option<BlockState>> {
    let tree = bounded_dfs(g, None, u, 2 * delta + 1);
    if tree.edges_scanned < 2 * delta + 1 {
        return Ok(None);
    }
    let blocked = heavy_path(&tree, delta + 1)?;
    Ok(Some(BlockState { blocked, tree }))
}

pub(crate) struct VertexOutcome {
    pub vertices: Vec<VertexId>,
    pub separator: Option<VertexId>,
}

const VISITED: u32 = 0;
const REACHED: u32 = 1;

pub(crate) fn vertex_out_raw(
    ws: &mut Workspace,
    g: &Digraph,
    u: VertexId,
    delta: usize,
    dir: Orientation,
) -> Result<Option<VertexOutcome>> {
    let n = g.vertex_count();
    let budget = 2 * delta + 1;
    let view = View::plain(g, dir);
    let f1 = &mut ws.traversals(1)[0];
    f1.begin(n, u);
    f1.run(&view, budget);
    if f1.scanned < budget {
        ws.scanned += f1.scanned;
        let vertices = ws.traversals[0].verts.clone();
        return Ok(Some(VertexOutcome { vertices, separator: None }));
    }
    let blocked: Vec<VertexId> = f1
        .heavy_path(delta + 1)?
        .iter()
        .map(|&s| f1.verts[s as usize])
        .collect();
    let mut scanned = f1.scanned;

    let Workspace { status, path_index, .. } = ws;
    path_index.reset(n);
    for (i, &v) in blocked.iter().enumerate() {
        path_index.set(v, i as u32);
    }
    status.reset(n);
    status.set(u, VISITED);
    // Blocked path entries before this index are free to visit.
    let mut free_upto = 1usize;
    let mut visited = vec![u];
    let mut stack: Vec<(VertexId, usize)> = vec![(u, 0)];
    let limit = delta + 1;
    let mut over_budget = false;

    'search: while let Some(top) = stack.last_mut() {
        let Some((c, _, w)) = view.next_arc(top.0, top.1) else {
            stack.pop();
            continue;
        };
        if scanned - budget >= limit {
            over_budget = true;
            break 'search;
        }
        top.1 = c;
        scanned += 1;
        if status.get(w) == Some(VISITED) {
            continue;
        }
        match path_index.get(w).map(|i| i as usize) {
            Some(i) if i >= free_upto => {
                for &b in &blocked[free_upto..i] {
                    if status.get(b) == Some(REACHED) {
                        status.set(b, VISITED);
                        visited.push(b);
                        stack.push((b, 0));
                    }
                }
                free_upto = i;
                status.set(w, REACHED);
            }
            _ => {
                status.set(w, VISITED);
                visited.push(w);
                stack.push((w, 0));
            }
        }
    }
    ws.scanned += scanned;
    if over_budget || scanned - budget > delta {
        return Ok(None);
    }

    let mut separator = None;
    for &b in &blocked[free_upto.min(blocked.len())..] {
        if ws.status.get(b) == Some(REACHED) {
            if separator.is_some() {
                return Err(Error::invariant("two blocked vertices remain reached"));
            }
            separator = Some(b);
        }
    }
    if let Some(x) = separator {
        visited.push(x);
    }
    Ok(Some(VertexOutcome { vertices: visited, separator }))
}
