//! Slow reference answers: the straightforward fixpoint algorithms, exact
//! connectivity by flows, and exhaustive enumeration for tiny graphs.
//!
//! Nothing here uses the local searches or the recursive solvers.

mod enumerate;
mod undirected;

pub use enumerate::{enumerate_isolated_components, is_relatively_minimal, ComponentKind};
pub use undirected::undirected_kecs_bruteforce;

use crate::cuts::{naive_min_cut, naive_strong_bridges, strong_bridges_unchecked, MatrixFlow};
use crate::error::{Error, Result};
use crate::graph::{strongly_connected_components, Digraph, VertexId, VertexSet};
use crate::solvers::{Algorithm, ComponentReport, Mode, SolverStats};

fn report(mode: Mode, k: usize, mut components: Vec<VertexSet>, stats: SolverStats) -> ComponentReport {
    components.sort();
    components.dedup();
    ComponentReport {
        components,
        mode,
        k,
        algorithm: Algorithm::Baseline,
        stats,
    }
}

/// Strongly connected pieces of `g[set]` with at least `min` vertices, as
/// vertex lists of `g`.
fn sccs_of(g: &Digraph, set: &[VertexId], min: usize, stats: &mut SolverStats) -> Vec<Vec<VertexId>> {
    let h = g.induced_subgraph(set);
    stats.global_work += set.len() + h.graph.edge_count();
    strongly_connected_components(&h.graph)
        .components
        .into_iter()
        .filter(|c| c.len() >= min)
        .map(|c| c.members().iter().map(|&v| h.vertex_of[v]).collect())
        .collect()
}

/// Removes some separating edge set from every SCC until none is left.
/// `find` sees the induced subgraph of one SCC and returns edges of it.
fn edge_fixpoint(
    g: &Digraph,
    mut find: impl FnMut(&Digraph, &mut SolverStats) -> Option<Vec<usize>>,
) -> (Vec<VertexSet>, SolverStats) {
    let mut g = g.clone();
    let mut stats = SolverStats {
        m0: g.edge_count(),
        n0: g.vertex_count(),
        ..Default::default()
    };
    let all: Vec<VertexId> = (0..g.vertex_count()).collect();
    let mut round = sccs_of(&g, &all, 2, &mut stats);
    let mut found = Vec::new();
    while !round.is_empty() {
        stats.depth += 1;
        let mut next = Vec::new();
        for set in round {
            stats.calls += 1;
            let h = g.induced_subgraph(&set);
            match find(&h.graph, &mut stats) {
                None => found.push(VertexSet::new(set)),
                Some(edges) => {
                    for e in edges {
                        g.delete_edge(h.edge_of[e]);
                    }
                    next.extend(sccs_of(&g, &set, 2, &mut stats));
                }
            }
        }
        round = next;
    }
    (found, stats)
}

/// Removes one strong bridge from each strongly connected component until no
/// component has one. Bridges are found by deleting each edge in turn.
pub fn baseline_2ecs(g: &Digraph) -> ComponentReport {
    let (found, stats) = edge_fixpoint(g, |h, stats| {
        stats.global_work += h.edge_count() * (h.vertex_count() + h.edge_count());
        naive_strong_bridges(h).first().map(|&e| vec![e])
    });
    report(Mode::TwoEdge, 2, found, stats)
}

/// Same fixpoint as [`baseline_2ecs`] with bridges from dominator trees, so
/// each round costs linear time and the whole run `O(mn)`.
pub fn baseline_2ecs_linear(g: &Digraph) -> ComponentReport {
    let (found, stats) = edge_fixpoint(g, |h, stats| {
        stats.global_work += h.vertex_count() + h.edge_count();
        strong_bridges_unchecked(h).first().map(|&e| vec![e])
    });
    report(Mode::TwoEdge, 2, found, stats)
}

/// Removes a minimum edge cut from each strongly connected component while
/// its size is below `k`.
pub fn baseline_kecs(g: &Digraph, k: usize) -> ComponentReport {
    let (found, stats) = edge_fixpoint(g, |h, stats| {
        stats.global_work += h.vertex_count() * h.vertex_count() * (h.vertex_count() + h.edge_count());
        let cut = naive_min_cut(h, k);
        cut.witness.map(|w| w.edges)
    });
    report(Mode::KEdge, k, found, stats)
}

fn is_strong(g: &Digraph, set: &[VertexId]) -> bool {
    let h = g.induced_subgraph(set);
    strongly_connected_components(&h.graph).count() == 1
}

/// Splits along strong articulation points until none is left: if removing
/// `x` breaks a component into `D_1, ..., D_r`, every 2-vertex-connected
/// subgraph lies inside some `D_i + x`.
pub fn baseline_2vcs(g: &Digraph) -> ComponentReport {
    let mut stats = SolverStats {
        m0: g.edge_count(),
        n0: g.vertex_count(),
        ..Default::default()
    };
    let all: Vec<VertexId> = (0..g.vertex_count()).collect();
    let mut stack: Vec<(Vec<VertexId>, usize)> = sccs_of(g, &all, 3, &mut stats).into_iter().map(|c| (c, 1)).collect();
    let mut found = Vec::new();
    while let Some((set, depth)) = stack.pop() {
        stats.calls += 1;
        stats.depth = stats.depth.max(depth);
        let cut = set.iter().position(|&x| {
            let rest: Vec<_> = set.iter().copied().filter(|&v| v != x).collect();
            stats.global_work += set.len();
            !is_strong(g, &rest)
        });
        let Some(i) = cut else {
            found.push(VertexSet::new(set));
            continue;
        };
        let x = set[i];
        let rest: Vec<_> = set.iter().copied().filter(|&v| v != x).collect();
        for mut part in sccs_of(g, &rest, 1, &mut stats) {
            part.push(x);
            for c in sccs_of(g, &part, 3, &mut stats) {
                stack.push((c, depth + 1));
            }
        }
    }
    report(Mode::TwoVertex, 2, found, stats)
}

/// `min(flow(u, v), flow(v, u))`, capped at `cap`.
pub fn pairwise_edge_connectivity(g: &Digraph, u: VertexId, v: VertexId, cap: usize) -> Result<usize> {
    let n = g.vertex_count();
    if u >= n || v >= n {
        return Err(Error::InvalidParameter("vertex out of range".into()));
    }
    if u == v {
        return Err(Error::InvalidParameter("endpoints must differ".into()));
    }
    let flow = MatrixFlow::new(g);
    let there = flow.max_flow(u, v, cap).0;
    let back = flow.max_flow(v, u, cap.min(there)).0;
    Ok(there.min(back))
}

/// Greedily drops edges, then vertices, while `diverges` keeps holding.
pub fn shrink_counterexample(g: &Digraph, mut diverges: impl FnMut(&Digraph) -> bool) -> Digraph {
    let mut best = Digraph::from_edge_list(g.vertex_count(), &g.edge_pairs()).expect("ids in range");
    loop {
        let mut progress = false;
        let mut i = best.edge_count();
        while i > 0 {
            i -= 1;
            let mut fewer = best.edge_pairs();
            if i >= fewer.len() {
                continue;
            }
            fewer.remove(i);
            let cand = Digraph::from_edge_list(best.vertex_count(), &fewer).expect("ids in range");
            if diverges(&cand) {
                best = cand;
                progress = true;
            }
        }
        let mut v = best.vertex_count();
        while v > 0 {
            v -= 1;
            let keep: Vec<VertexId> = (0..best.vertex_count()).filter(|&w| w != v).collect();
            let cand = best.induced_subgraph(&keep).graph;
            if diverges(&cand) {
                best = cand;
                progress = true;
            }
        }
        if !progress {
            return best;
        }
    }
}
