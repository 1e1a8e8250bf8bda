use std::collections::HashMap;

use super::{Digraph, EdgeId, Orientation, StampMap, VertexId};
use crate::error::{Error, Result};
use crate::local::ResidualOverlay;

const NO_PARENT: u32 = u32::MAX;

/// Result of an edge-budgeted DFS. Per-vertex vectors are indexed by visit
/// position, so `visit_order[i]` owns `parent_edge[i]`, `charge[i]` and
/// `weight[i]`, and a parent always precedes its children.
#[derive(Clone, Debug)]
pub struct DfsRun {
    pub root: VertexId,
    pub visit_order: Vec<VertexId>,
    pub parent_edge: Vec<Option<EdgeId>>,
    pub(crate) parent_slot: Vec<u32>,
    pub charge: Vec<usize>,
    pub weight: Vec<usize>,
    pub edges_scanned: usize,
    pub stopped_early: bool,
    position: HashMap<VertexId, usize>,
}

impl DfsRun {
    pub fn contains(&self, v: VertexId) -> bool {
        self.position.contains_key(&v)
    }

    pub fn weight_of(&self, v: VertexId) -> Option<usize> {
        self.position.get(&v).map(|&i| self.weight[i])
    }

    pub fn charge_of(&self, v: VertexId) -> Option<usize> {
        self.position.get(&v).map(|&i| self.charge[i])
    }

    pub fn parent_of(&self, v: VertexId) -> Option<EdgeId> {
        self.position.get(&v).and_then(|&i| self.parent_edge[i])
    }
}

/// DFS from `u` that stops as soon as `budget` edges have been scanned.
///
/// Every examined out-edge (tree or not) is charged to the vertex it was
/// scanned from. When an overlay is given its orientation decides the
/// direction of traversal and its reversed edges are followed backwards.
pub fn bounded_dfs(
    g: &Digraph,
    overlay: Option<&ResidualOverlay>,
    u: VertexId,
    budget: usize,
) -> DfsRun {
    let view = match overlay {
        Some(o) => View::with_overlay(g, o),
        None => View::plain(g, Orientation::Out),
    };
    let mut t = Traversal::default();
    t.begin(g.vertex_count(), u);
    let progress = t.run(&view, budget);
    t.to_run(progress == Progress::Budget)
}

/// Vertices of the root-anchored tree path whose weight is at least
/// `threshold`. Errors if the qualifying vertices branch.
pub fn heavy_path(run: &DfsRun, threshold: usize) -> Result<Vec<VertexId>> {
    let slots = heavy_slots(&run.parent_slot, &run.weight, threshold)?;
    Ok(slots.iter().map(|&s| run.visit_order[s as usize]).collect())
}

fn heavy_slots<W: Copy + Into<usize>>(parent: &[u32], weight: &[W], threshold: usize) -> Result<Vec<u32>> {
    if weight.is_empty() || weight[0].into() < threshold {
        return Ok(Vec::new());
    }
    let mut next = vec![NO_PARENT; weight.len()];
    for s in 1..weight.len() {
        if weight[s].into() < threshold {
            continue;
        }
        let p = parent[s] as usize;
        if weight[p].into() < threshold {
            return Err(Error::invariant("subtree weights are not monotone"));
        }
        if next[p] != NO_PARENT {
            return Err(Error::invariant(format!(
                "vertices with weight >= {threshold} do not form a tree path"
            )));
        }
        next[p] = s as u32;
    }
    let mut path = vec![0u32];
    while next[*path.last().unwrap() as usize] != NO_PARENT {
        path.push(next[*path.last().unwrap() as usize]);
    }
    Ok(path)
}

/// A graph seen in one direction, optionally with some edges reversed.
#[derive(Clone, Copy)]
pub(crate) struct View<'a> {
    pub g: &'a Digraph,
    pub dir: Orientation,
    overlay: Option<&'a ResidualOverlay>,
}

impl<'a> View<'a> {
    pub fn plain(g: &'a Digraph, dir: Orientation) -> Self {
        View { g, dir, overlay: None }
    }

    pub fn with_overlay(g: &'a Digraph, overlay: &'a ResidualOverlay) -> Self {
        View {
            g,
            dir: overlay.orientation(),
            overlay: (!overlay.is_empty()).then_some(overlay),
        }
    }

    /// Next arc leaving `v` at or after `cursor`. Returns the cursor to resume
    /// from, the edge and the vertex it leads to.
    #[inline]
    pub fn next_arc(&self, v: VertexId, cursor: usize) -> Option<(usize, EdgeId, VertexId)> {
        let base = self.g.edges_from(v, self.dir);
        let mut c = cursor;
        while c < base.len() {
            let e = base[c];
            c += 1;
            if self.overlay.is_some_and(|o| o.is_reversed(e)) {
                continue;
            }
            return Some((c, e, self.g.target(e, self.dir)));
        }
        let extra = self.overlay?.departures(v);
        let e = *extra.get(c - base.len())?;
        Some((c + 1, e, self.g.source(e, self.dir)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Progress {
    /// The search ran out of edges.
    Done,
    /// The budget was reached while at least one arc was still unscanned.
    Budget,
}

/// Resumable DFS state with reusable scratch space.
#[derive(Clone, Debug, Default)]
pub(crate) struct Traversal {
    slot: StampMap,
    pub verts: Vec<VertexId>,
    pub parent: Vec<u32>,
    pub parent_edge: Vec<EdgeId>,
    pub charge: Vec<u32>,
    cursor: Vec<u32>,
    /// Slots on the current root path; `stack[i]` sits at depth `i`.
    pub stack: Vec<u32>,
    pub scanned: usize,
    /// Smallest stack length seen since the last [`Traversal::mark`].
    pub low_water: usize,
}

impl Traversal {
    pub fn begin(&mut self, n: usize, root: VertexId) {
        self.slot.reset(n);
        self.verts.clear();
        self.parent.clear();
        self.parent_edge.clear();
        self.charge.clear();
        self.cursor.clear();
        self.stack.clear();
        self.scanned = 0;
        self.visit(root, NO_PARENT, EdgeId::MAX);
        self.low_water = 1;
    }

    fn visit(&mut self, v: VertexId, parent: u32, e: EdgeId) {
        let s = self.verts.len() as u32;
        self.slot.set(v, s);
        self.verts.push(v);
        self.parent.push(parent);
        self.parent_edge.push(e);
        self.charge.push(0);
        self.cursor.push(0);
        self.stack.push(s);
    }

    pub fn mark(&mut self) {
        self.low_water = self.stack.len();
    }

    /// Continues the search until `limit` total edges have been scanned or
    /// nothing is left to scan.
    pub fn run(&mut self, view: &View, limit: usize) -> Progress {
        while let Some(&top) = self.stack.last() {
            let v = self.verts[top as usize];
            match view.next_arc(v, self.cursor[top as usize] as usize) {
                None => {
                    self.stack.pop();
                    self.low_water = self.low_water.min(self.stack.len());
                }
                Some(_) if self.scanned >= limit => return Progress::Budget,
                Some((c, e, w)) => {
                    self.cursor[top as usize] = c as u32;
                    self.charge[top as usize] += 1;
                    self.scanned += 1;
                    if !self.slot.contains(w) {
                        self.visit(w, top, e);
                    }
                }
            }
        }
        Progress::Done
    }

    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.charge.iter().map(|&c| c as usize).collect();
        for s in (1..w.len()).rev() {
            w[self.parent[s] as usize] += w[s];
        }
        w
    }

    /// Slots of the heavy path for `threshold`.
    pub fn heavy_path(&self, threshold: usize) -> Result<Vec<u32>> {
        heavy_slots(&self.parent, &self.weights(), threshold)
    }

    /// Tree edges from the root down to the stack entry at `depth`.
    pub fn stack_path_edges(&self, depth: usize) -> Vec<EdgeId> {
        if depth == 0 {
            return Vec::new();
        }
        self.stack[1..=depth]
            .iter()
            .map(|&s| self.parent_edge[s as usize])
            .collect()
    }

    pub fn to_run(&self, stopped_early: bool) -> DfsRun {
        let position = self.verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        DfsRun {
            root: self.verts[0],
            visit_order: self.verts.clone(),
            parent_edge: self
                .parent_edge
                .iter()
                .map(|&e| (e != EdgeId::MAX).then_some(e))
                .collect(),
            parent_slot: self.parent.clone(),
            charge: self.charge.iter().map(|&c| c as usize).collect(),
            weight: self.weights(),
            edges_scanned: self.scanned,
            stopped_early,
            position,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn zero_budget_on_clique() {
        let run = bounded_dfs(&fixtures::bi_k4(), None, 0, 0);
        assert_eq!(run.visit_order, vec![0]);
        assert_eq!(run.edges_scanned, 0);
        assert!(run.stopped_early);
    }

    #[test]
    fn budget_five_on_clique() {
        let run = bounded_dfs(&fixtures::bi_k4(), None, 0, 5);
        assert_eq!(run.edges_scanned, 5);
        assert!(run.stopped_early);
    }

    #[test]
    fn twin_cycles_full_budget_completes() {
        let run = bounded_dfs(&fixtures::twin_cycles(), None, 5, 8);
        assert_eq!(run.edges_scanned, 8);
        assert!(!run.stopped_early);
        assert_eq!(run.weight_of(5), Some(8));
    }

    // Weights frozen from a hand simulation in insertion order:
    // 5 -(5,3)-> 3 -(3,4)-> 4 -(4,5)x, 3 done, 5 -(5,0)-> 0 -(0,1)-> 1 -(1,2)-> 2 -(2,0)x, then budget.
    #[test]
    fn twin_cycles_budget_seven_weights() {
        let run = bounded_dfs(&fixtures::twin_cycles(), None, 5, 7);
        assert!(run.stopped_early);
        let expect = [(5, 7), (3, 2), (4, 1), (0, 3), (1, 2), (2, 1)];
        for (v, w) in expect {
            assert_eq!(run.weight_of(v), Some(w), "vertex {v}");
        }
        let path = heavy_path(&run, 3).unwrap();
        assert_eq!(path, vec![5, 0]);
        assert!(path.iter().any(|v| ![3, 4, 5].contains(v)));
    }

    #[test]
    fn heavy_path_threshold_edges() {
        let run = bounded_dfs(&fixtures::twin_cycles(), None, 5, 7);
        assert_eq!(heavy_path(&run, 8).unwrap(), Vec::<VertexId>::new());
        assert_eq!(heavy_path(&run, 7).unwrap(), vec![5]);
        assert!(matches!(heavy_path(&run, 0), Err(Error::Invariant(_))));
    }
}
