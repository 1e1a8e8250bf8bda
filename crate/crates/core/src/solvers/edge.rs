//! 2-edge and k-edge decomposition.

use super::worklist::WorkList;
use super::SolverStats;
use crate::cuts::{small_edge_cut_unchecked, EdgeCut};
use crate::error::Result;
use crate::graph::{strongly_connected_components, Digraph, EdgeId, Induced, Orientation, StampMap, VertexId, VertexSet};
use crate::local::{edge_out_raw, k_edge_raw, Workspace};

// Members, a reusable certificate, and whether the sufficiency check applies.
type Part = (Vec<VertexId>, Option<(Induced, EdgeCut)>, bool);

struct Call {
    vertices: Vec<VertexId>,
    seeds: Vec<VertexId>,
    depth: usize,
}

struct Solver {
    g: Digraph,
    k: usize,
    k_search: bool,
    delta: usize,
    guard: usize,
    ws: Workspace,
    list: WorkList,
    index: StampMap,
    owner: StampMap,
    stats: SolverStats,
    found: Vec<VertexSet>,
    calls: Vec<Call>,
}

/// Components with at least two vertices. `k_search` selects the k-edge
/// local search even for `k = 2`.
pub(super) fn solve(
    g: &Digraph,
    k: usize,
    k_search: bool,
    delta: usize,
    guard: usize,
) -> Result<(Vec<VertexSet>, SolverStats)> {
    let mut s = Solver {
        g: g.clone(),
        k,
        k_search,
        delta,
        guard,
        ws: Workspace::new(),
        list: WorkList::new(),
        index: StampMap::new(g.vertex_count()),
        owner: StampMap::new(g.vertex_count()),
        stats: SolverStats {
            delta,
            guard,
            m0: g.edge_count(),
            n0: g.vertex_count(),
            ..Default::default()
        },
        found: Vec::new(),
        calls: Vec::new(),
    };
    let all: Vec<VertexId> = (0..g.vertex_count()).collect();
    s.split_into_calls(&all, Vec::new(), 1, true);
    while let Some(call) = s.calls.pop() {
        s.process(call)?;
    }
    s.stats.edges_scanned = s.ws.scanned;
    Ok((s.found, s.stats))
}

impl Solver {
    /// Most edges one search may scan before giving up.
    fn budget(&self) -> usize {
        if self.k_search {
            super::k_budget(self.k, self.delta)
        } else {
            2 * self.delta + 1
        }
    }

    fn induced(&mut self, vertices: &[VertexId]) -> Induced {
        let h = self.g.induced_with(vertices, &mut self.index);
        self.stats.global_work += vertices.len() + h.graph.edge_count();
        h
    }

    fn cut(&mut self, h: &Induced) -> Option<EdgeCut> {
        self.stats.global_work += h.graph.vertex_count() + h.graph.edge_count();
        small_edge_cut_unchecked(&h.graph, self.k)
    }

    fn delete(&mut self, e: EdgeId, touched: &mut Vec<VertexId>) {
        if self.g.delete_edge(e) {
            let (a, b) = self.g.endpoints(e);
            touched.push(a);
            touched.push(b);
        }
    }

    /// Deletes edges between different SCCs of `vertices` and queues one call
    /// per SCC with at least two vertices, seeded with the members listed in
    /// `touched` (or with every member if `seed_all`).
    fn split_into_calls(&mut self, vertices: &[VertexId], mut touched: Vec<VertexId>, depth: usize, seed_all: bool) {
        let h = self.induced(vertices);
        let scc = strongly_connected_components(&h.graph);
        for e in h.graph.live_edges() {
            let (a, b) = h.graph.endpoints(e);
            if scc.component_of[a] != scc.component_of[b] {
                self.delete(h.edge_of[e], &mut touched);
            }
        }
        let first = self.calls.len();
        self.owner.reset(self.g.vertex_count());
        for c in scc.components.iter().filter(|c| c.len() >= 2) {
            let members: Vec<VertexId> = c.members().iter().map(|&v| h.vertex_of[v]).collect();
            for &v in &members {
                self.owner.set(v, (self.calls.len() - first) as u32);
            }
            let seeds = if seed_all { members.clone() } else { Vec::new() };
            self.calls.push(Call {
                vertices: members,
                seeds,
                depth,
            });
        }
        for v in touched {
            if let Some(i) = self.owner.get(v) {
                self.calls[first + i as usize].seeds.push(v);
            }
        }
    }

    fn search(&mut self, u: VertexId) -> Result<Option<Vec<VertexId>>> {
        for dir in [Orientation::Out, Orientation::In] {
            self.stats.searches += 1;
            let found = if self.k_search {
                k_edge_raw(&mut self.ws, &self.g, u, self.delta, self.k, dir)?
            } else {
                edge_out_raw(&mut self.ws, &self.g, u, self.delta, dir)?
            };
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Deletes every edge with exactly one endpoint in `set` and queues both
    /// endpoints. Returns the number of deleted edges.
    fn isolate(&mut self, set: &[VertexId]) -> usize {
        self.index.reset(self.g.vertex_count());
        for &v in set {
            self.index.set(v, 0);
        }
        let mut crossing = Vec::new();
        for &v in set {
            crossing.extend(self.g.out_edges(v).iter().filter(|&&e| !self.index.contains(self.g.head(e))));
            crossing.extend(self.g.in_edges(v).iter().filter(|&&e| !self.index.contains(self.g.tail(e))));
        }
        for &e in &crossing {
            self.g.delete_edge(e);
            let (a, b) = self.g.endpoints(e);
            self.list.push(a);
            self.list.push(b);
        }
        crossing.len()
    }

    fn process(&mut self, call: Call) -> Result<()> {
        self.stats.calls += 1;
        self.stats.depth = self.stats.depth.max(call.depth);
        let h = self.induced(&call.vertices);
        let Some(cut) = self.cut(&h) else {
            self.found.push(VertexSet::new(call.vertices));
            return Ok(());
        };

        let mut m = h.graph.edge_count();
        let mut changed = false;
        self.list.extend(call.seeds);
        while m > self.guard {
            let Some(u) = self.list.pop() else { break };
            if let Some(set) = self.search(u)? {
                let removed = self.isolate(&set);
                m -= removed;
                changed |= removed > 0;
            }
        }
        let exhausted = self.list.is_empty() && m > self.guard;
        self.list.clear();

        let cached = (!changed).then_some((h, cut));
        self.final_phase(&call.vertices, call.depth, exhausted, cached);
        Ok(())
    }

    fn final_phase(&mut self, vertices: &[VertexId], depth: usize, exhausted: bool, cached: Option<(Induced, EdgeCut)>) {
        let mut touched = Vec::new();
        let parts: Vec<Part> = match cached {
            Some(c) => vec![(vertices.to_vec(), Some(c), exhausted)],
            None => {
                let h = self.induced(vertices);
                let scc = strongly_connected_components(&h.graph);
                let large = if exhausted {
                    let check = super::check_extremal_sccs(&h.graph, &scc.component_of, scc.count(), self.delta, self.budget());
                    self.stats.sufficiency_checks += check.checks;
                    self.stats.sufficiency_violations += check.violations;
                    check.large
                } else {
                    vec![false; scc.count()]
                };
                for e in h.graph.live_edges() {
                    let (a, b) = h.graph.endpoints(e);
                    if scc.component_of[a] != scc.component_of[b] {
                        self.delete(h.edge_of[e], &mut touched);
                    }
                }
                scc.components
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.len() >= 2)
                    .map(|(i, c)| (c.members().iter().map(|&v| h.vertex_of[v]).collect(), None, large[i]))
                    .collect()
            }
        };

        let mut rest = Vec::new();
        for (members, cached, checked) in parts {
            let (hc, cut) = match cached {
                Some(c) => c,
                None => {
                    let hc = self.induced(&members);
                    match self.cut(&hc) {
                        Some(cut) => (hc, cut),
                        None => {
                            self.found.push(VertexSet::new(members));
                            continue;
                        }
                    }
                }
            };
            if checked {
                self.check_cut_sides(&hc.graph, &cut);
            }
            for &e in &cut.edges {
                self.delete(hc.edge_of[e], &mut touched);
            }
            rest.extend(members);
        }
        if !rest.is_empty() {
            self.split_into_calls(&rest, touched, depth + 1, false);
        }
    }

    // Both sides of a cut found after the searches ran dry must be large.
    fn check_cut_sides(&mut self, h: &Digraph, cut: &EdgeCut) {
        let (mut source, mut sink) = (0, 0);
        for e in h.live_edges() {
            let (a, b) = h.endpoints(e);
            match (cut.side_source.contains(a), cut.side_source.contains(b)) {
                (true, true) => source += 1,
                (false, false) => sink += 1,
                _ => {}
            }
        }
        self.stats.sufficiency_checks += 1;
        if source <= self.delta || sink <= self.delta {
            self.stats.sufficiency_violations += 1;
        }
    }
}
