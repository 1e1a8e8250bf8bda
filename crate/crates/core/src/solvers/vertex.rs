//! 2-vertex decomposition with vertex splitting.

use super::split::{edges_to, split_edges, SplitMap};
use super::worklist::WorkList;
use super::SolverStats;
use crate::cuts::strong_articulation_points_unchecked;
use crate::error::{Error, Result};
use crate::graph::{strongly_connected_components, Digraph, EdgeId, Induced, Orientation, StampMap, VertexId, VertexSet};
use crate::local::{vertex_out_raw, Workspace};

// Members, a reusable certificate, and whether the sufficiency check applies.
type Part = (Vec<VertexId>, Option<(Induced, Vec<VertexId>)>, bool);

struct Call {
    vertices: Vec<VertexId>,
    seeds: Vec<VertexId>,
    depth: usize,
}

struct Solver {
    g: Digraph,
    map: SplitMap,
    aux_limit: usize,
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

pub(super) fn solve(g: &Digraph, delta: usize, guard: usize) -> Result<(Vec<VertexSet>, SolverStats)> {
    let n = g.vertex_count();
    let mut s = Solver {
        g: g.clone(),
        map: SplitMap::identity(n),
        aux_limit: 0,
        delta,
        guard,
        ws: Workspace::new(),
        list: WorkList::new(),
        index: StampMap::new(n),
        owner: StampMap::new(n),
        stats: SolverStats {
            delta,
            guard,
            m0: g.edge_count(),
            n0: n,
            ..Default::default()
        },
        found: Vec::new(),
        calls: Vec::new(),
    };
    let all: Vec<VertexId> = (0..n).collect();
    s.split_into_calls(&all, Vec::new(), 1, true);
    // Splits never add edges, and every vertex that takes part in a call
    // keeps at least one edge in each direction when it is created.
    let (m, n_active) = s.calls.iter().fold((0, 0), |(m, k), c| {
        (m + s.g.induced_edge_count(&c.vertices), k + c.vertices.len())
    });
    s.aux_limit = (2 * m).saturating_sub(n_active);
    while let Some(call) = s.calls.pop() {
        s.process(call)?;
    }
    s.stats.edges_scanned = s.ws.scanned;
    s.stats.auxiliary_vertices = s.map.auxiliary_count();
    Ok((s.found, s.stats))
}

impl Solver {
    fn induced(&mut self, vertices: &[VertexId]) -> Induced {
        let h = self.g.induced_with(vertices, &mut self.index);
        self.stats.global_work += vertices.len() + h.graph.edge_count();
        h
    }

    fn articulation_points(&mut self, h: &Induced) -> Vec<VertexId> {
        self.stats.global_work += h.graph.vertex_count() + h.graph.edge_count();
        strong_articulation_points_unchecked(&h.graph)
    }

    fn report(&mut self, members: &[VertexId]) -> Result<()> {
        let set = VertexSet::new(members.iter().map(|&v| self.map.origin(v)).collect());
        if set.len() != members.len() {
            return Err(Error::invariant("a component holds two copies of one vertex"));
        }
        self.found.push(set);
        Ok(())
    }

    fn split(&mut self, x: VertexId, edges: &[EdgeId]) -> Result<VertexId> {
        let copy = split_edges(&mut self.g, &mut self.map, x, edges)?;
        if self.map.auxiliary_count() > self.aux_limit {
            return Err(Error::invariant(format!(
                "{} auxiliary vertices exceed the bound {}",
                self.map.auxiliary_count(),
                self.aux_limit
            )));
        }
        Ok(copy)
    }

    fn delete(&mut self, e: EdgeId, touched: &mut Vec<VertexId>) {
        if self.g.delete_edge(e) {
            let (a, b) = self.g.endpoints(e);
            touched.push(a);
            touched.push(b);
        }
    }

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
        for c in scc.components.iter().filter(|c| c.len() >= 3) {
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

    fn search(&mut self, u: VertexId) -> Result<Option<(Vec<VertexId>, Option<VertexId>)>> {
        for dir in [Orientation::Out, Orientation::In] {
            self.stats.searches += 1;
            if let Some(o) = vertex_out_raw(&mut self.ws, &self.g, u, self.delta, dir)? {
                return Ok(Some((o.vertices, o.separator)));
            }
        }
        Ok(None)
    }

    /// Cuts `set` off from the rest: edges between the separator and the
    /// other members move to a copy of the separator, and every other edge
    /// leaving or entering the set is deleted. Returns the number of deleted
    /// edges and the new copy, if any.
    fn isolate(&mut self, set: &[VertexId], separator: Option<VertexId>) -> Result<(usize, Option<VertexId>)> {
        self.index.reset(self.g.vertex_count());
        for &v in set {
            if Some(v) != separator {
                self.index.set(v, 0);
            }
        }
        let mut copy = None;
        if let Some(x) = separator {
            let inner = edges_to(&self.g, x, |v| self.index.contains(v));
            let degree = self.g.out_edges(x).len() + self.g.in_edges(x).len();
            // Nothing to separate when all of x's edges already stay inside.
            if inner.len() < degree {
                copy = Some(self.split(x, &inner)?);
                self.list.push(x);
            }
        }
        let mut crossing = Vec::new();
        for &v in set {
            if Some(v) == separator {
                continue;
            }
            let g = &self.g;
            let outside = |w: VertexId| !self.index.contains(w) && Some(w) != copy && Some(w) != separator;
            crossing.extend(g.out_edges(v).iter().filter(|&&e| outside(g.head(e))));
            crossing.extend(g.in_edges(v).iter().filter(|&&e| outside(g.tail(e))));
        }
        for &e in &crossing {
            self.g.delete_edge(e);
            let (a, b) = self.g.endpoints(e);
            self.list.push(a);
            self.list.push(b);
        }
        Ok((crossing.len(), copy))
    }

    fn process(&mut self, mut call: Call) -> Result<()> {
        self.stats.calls += 1;
        self.stats.depth = self.stats.depth.max(call.depth);
        if call.vertices.len() < 3 {
            return Ok(());
        }
        let h = self.induced(&call.vertices);
        let saps = self.articulation_points(&h);
        if saps.is_empty() {
            return self.report(&call.vertices);
        }

        let mut m = h.graph.edge_count();
        let mut changed = false;
        self.list.extend(call.seeds.drain(..));
        while m > self.guard {
            let Some(u) = self.list.pop() else { break };
            if let Some((set, separator)) = self.search(u)? {
                let (removed, copy) = self.isolate(&set, separator)?;
                m -= removed;
                changed |= removed > 0 || copy.is_some();
                call.vertices.extend(copy);
            }
        }
        let exhausted = self.list.is_empty() && m > self.guard;
        self.list.clear();

        let cached = (!changed).then_some((h, saps));
        self.final_phase(&call.vertices, call.depth, exhausted, cached)
    }

    fn final_phase(
        &mut self,
        vertices: &[VertexId],
        depth: usize,
        exhausted: bool,
        cached: Option<(Induced, Vec<VertexId>)>,
    ) -> Result<()> {
        let mut touched = Vec::new();
        let parts: Vec<Part> = match cached {
            Some(c) => vec![(vertices.to_vec(), Some(c), exhausted)],
            None => {
                let h = self.induced(vertices);
                let scc = strongly_connected_components(&h.graph);
                let large = if exhausted {
                    let check = super::check_extremal_sccs(&h.graph, &scc.component_of, scc.count(), self.delta, 2 * self.delta + 1);
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
                    .filter(|(_, c)| c.len() >= 3)
                    .map(|(i, c)| (c.members().iter().map(|&v| h.vertex_of[v]).collect(), None, large[i]))
                    .collect()
            }
        };

        let mut rest = Vec::new();
        for (mut members, cached, checked) in parts {
            let (hc, saps) = match cached {
                Some(c) => c,
                None => {
                    let hc = self.induced(&members);
                    let saps = self.articulation_points(&hc);
                    if saps.is_empty() {
                        self.report(&members)?;
                        continue;
                    }
                    (hc, saps)
                }
            };
            let v = saps[0];
            let side = self.side_of(&hc, v, checked);
            let x = hc.vertex_of[v];
            self.index.reset(self.g.vertex_count());
            for &w in &side {
                self.index.set(hc.vertex_of[w], 0);
            }
            let moved = edges_to(&self.g, x, |w| self.index.contains(w));
            for &e in &moved {
                let (a, b) = self.g.endpoints(e);
                touched.push(a);
                touched.push(b);
            }
            let copy = self.split(x, &moved)?;
            touched.push(copy);
            members.push(copy);
            rest.extend(members);
        }
        if !rest.is_empty() {
            self.split_into_calls(&rest, touched, depth + 1, false);
        }
        Ok(())
    }

    /// Among the SCCs of `h - v` adjacent to `v`, the one holding the
    /// neighbor with the smallest original id (ties by current id), in local
    /// ids. When the searches ran dry on a large graph, also
    /// checks that every source or sink SCC of `h - v` plus `v` is large.
    fn side_of(&mut self, h: &Induced, v: VertexId, checked: bool) -> Vec<VertexId> {
        let rest: Vec<VertexId> = (0..h.graph.vertex_count()).filter(|&w| w != v).collect();
        let r = h.graph.induced_subgraph(&rest);
        self.stats.global_work += r.graph.vertex_count() + r.graph.edge_count();
        let scc = strongly_connected_components(&r.graph);
        let key = |w: VertexId| {
            let id = h.vertex_of[r.vertex_of[w]];
            (self.map.origin(id), id)
        };
        // A component not adjacent to v would make the split a no-op.
        let local = |w: VertexId| if w < v { w } else { w - 1 };
        let best = h
            .graph
            .out_edges(v)
            .iter()
            .map(|&e| local(h.graph.head(e)))
            .chain(h.graph.in_edges(v).iter().map(|&e| local(h.graph.tail(e))))
            .min_by_key(|&w| key(w))
            .expect("v lies on a cycle");
        let chosen = scc.component_of[best];

        if checked {
            // A search from a sink (source) piece S of h - v scans the edges
            // leaving (entering) S, including those to v, and finds S + v
            // whenever there are at most delta of them.
            let count = scc.count();
            let mut inner = vec![0usize; count];
            let mut has_out = vec![false; count];
            let mut has_in = vec![false; count];
            for e in r.graph.live_edges() {
                let (a, b) = r.graph.endpoints(e);
                let (ca, cb) = (scc.component_of[a], scc.component_of[b]);
                if ca == cb {
                    inner[ca] += 1;
                } else {
                    has_out[ca] = true;
                    has_in[cb] = true;
                }
            }
            let mut to_v = vec![0usize; count];
            let mut from_v = vec![0usize; count];
            for &e in h.graph.in_edges(v) {
                to_v[scc.component_of[local(h.graph.tail(e))]] += 1;
            }
            for &e in h.graph.out_edges(v) {
                from_v[scc.component_of[local(h.graph.head(e))]] += 1;
            }
            for c in 0..count {
                for (extremal, size) in [(!has_out[c], inner[c] + to_v[c]), (!has_in[c], inner[c] + from_v[c])] {
                    if extremal {
                        self.stats.sufficiency_checks += 1;
                        if size <= self.delta {
                            self.stats.sufficiency_violations += 1;
                        }
                    }
                }
            }
        }

        scc.components[chosen].members().iter().map(|&w| r.vertex_of[w]).collect()
    }
}
