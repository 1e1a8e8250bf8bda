//! Recursive decompositions into maximal 2-edge-connected, 2-vertex-connected
//! and k-edge-connected subgraphs.
//!
//! Each recursive call first peels off small isolated pieces with local
//! searches started from a work list of vertices that recently lost an edge,
//! then falls back to one global separation step per strongly connected
//! component. With `delta = floor(sqrt(m))` this gives `O(m^{3/2})` work for
//! the 2-edge and 2-vertex cases.

mod edge;
mod split;
mod vertex;
mod worklist;

pub use split::{split, SplitMap};
pub use worklist::WorkList;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId, VertexSet};
use crate::oracles;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "2ecs")]
    TwoEdge,
    #[serde(rename = "2vcs")]
    TwoVertex,
    #[serde(rename = "kecs")]
    KEdge,
    #[serde(rename = "kecs-undirected")]
    KEdgeUndirected,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::TwoEdge => "2ecs",
            Mode::TwoVertex => "2vcs",
            Mode::KEdge => "kecs",
            Mode::KEdgeUndirected => "kecs-undirected",
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2ecs" => Ok(Mode::TwoEdge),
            "2vcs" => Ok(Mode::TwoVertex),
            "kecs" => Ok(Mode::KEdge),
            "kecs-undirected" => Ok(Mode::KEdgeUndirected),
            _ => Err(Error::InvalidParameter(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    #[default]
    Fast,
    Baseline,
}

/// Counters collected during one solver run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverStats {
    /// Deepest recursive call, counting the top-level components as depth 1.
    pub depth: usize,
    pub calls: usize,
    pub searches: usize,
    /// Edges scanned by local searches.
    pub edges_scanned: usize,
    /// Vertices plus edges touched by global steps.
    pub global_work: usize,
    pub delta: usize,
    /// Edge count at or below which a call skips its local searches.
    pub guard: usize,
    pub m0: usize,
    pub n0: usize,
    pub auxiliary_vertices: usize,
    pub sufficiency_checks: usize,
    pub sufficiency_violations: usize,
}

impl SolverStats {
    /// Total work: local scans plus global passes.
    pub fn work(&self) -> usize {
        self.edges_scanned + self.global_work
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    /// Sorted by smallest member.
    pub components: Vec<VertexSet>,
    pub mode: Mode,
    pub k: usize,
    /// Which implementation produced the answer.
    pub algorithm: Algorithm,
    pub stats: SolverStats,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverConfig {
    /// Overrides the default search budget.
    pub delta: Option<usize>,
    /// Also report vertices outside every component as singletons. Only
    /// meaningful for the edge modes.
    pub include_singletons: bool,
}

pub(crate) fn isqrt(m: usize) -> usize {
    let mut r = (m as f64).sqrt() as usize;
    while r * r > m {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= m {
        r += 1;
    }
    r
}

fn default_delta(m: usize) -> usize {
    isqrt(m).max(1)
}

fn check_delta(cfg: &SolverConfig, m: usize) -> Result<usize> {
    match cfg.delta {
        Some(0) => Err(Error::InvalidParameter("delta must be at least 1".into())),
        Some(d) => Ok(d),
        None => Ok(default_delta(m)),
    }
}

/// The loop guard: `factor * floor(sqrt(m0))`, raised so that any call that
/// runs searches has at least as many edges as one search may scan before
/// it gives up. Below that, a search from a strongly connected call would
/// just return the whole call.
fn loop_guard(factor: usize, m0: usize, budget: usize) -> usize {
    (factor * isqrt(m0)).max(budget - 1)
}

fn k_budget(k: usize, delta: usize) -> usize {
    (2 * k - 1) * (delta + 1)
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

/// Sorts components by smallest member and, if asked, adds every uncovered
/// vertex as a singleton.
pub(crate) fn finish(n: usize, mut components: Vec<VertexSet>, include_singletons: bool) -> Vec<VertexSet> {
    if include_singletons {
        let mut covered = vec![false; n];
        for c in &components {
            for &v in c.members() {
                covered[v] = true;
            }
        }
        components.extend((0..n).filter(|&v| !covered[v]).map(|v| VertexSet::new(vec![v])));
    }
    components.sort();
    components
}

pub(crate) struct SufficiencyCheck {
    pub checks: usize,
    pub violations: usize,
    /// Per SCC: lies in a weakly connected piece with at least `budget` edges.
    pub large: Vec<bool>,
}

/// Once the searches have run dry, every source or sink SCC of a weakly
/// connected piece with at least `budget` edges must itself have more than
/// `delta` edges, or a search from one of its vertices would have cut it
/// off. Smaller pieces are sets cut off earlier and are skipped.
pub(crate) fn check_extremal_sccs(h: &Digraph, comp: &[usize], count: usize, delta: usize, budget: usize) -> SufficiencyCheck {
    let n = h.vertex_count();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut v: usize) -> usize {
        while root[v] != v {
            root[v] = root[root[v]];
            v = root[v];
        }
        v
    }
    let mut inner = vec![0usize; count];
    let mut has_out = vec![false; count];
    let mut has_in = vec![false; count];
    for e in h.live_edges() {
        let (a, b) = h.endpoints(e);
        let (ra, rb) = (find(&mut root, a), find(&mut root, b));
        root[ra] = rb;
        let (ca, cb) = (comp[a], comp[b]);
        if ca == cb {
            inner[ca] += 1;
        } else {
            has_out[ca] = true;
            has_in[cb] = true;
        }
    }
    let mut piece_edges = vec![0usize; n];
    for e in h.live_edges() {
        let r = find(&mut root, h.tail(e));
        piece_edges[r] += 1;
    }
    let mut large = vec![false; count];
    for v in 0..n {
        let r = find(&mut root, v);
        if piece_edges[r] >= budget {
            large[comp[v]] = true;
        }
    }
    let (mut checks, mut violations) = (0, 0);
    for c in 0..count {
        if !large[c] || (has_out[c] && has_in[c]) {
            continue;
        }
        checks += 1;
        if inner[c] <= delta {
            violations += 1;
        }
    }
    SufficiencyCheck { checks, violations, large }
}

pub fn max_2ecs(g: &Digraph) -> Result<ComponentReport> {
    max_2ecs_with(g, &SolverConfig::default())
}

pub fn max_2ecs_with(g: &Digraph, cfg: &SolverConfig) -> Result<ComponentReport> {
    let m0 = g.edge_count();
    let delta = check_delta(cfg, m0)?;
    let guard = loop_guard(2, m0, 2 * delta + 1);
    let (components, stats) = edge::solve(g, 2, false, delta, guard)?;
    Ok(ComponentReport {
        components: finish(g.vertex_count(), components, cfg.include_singletons),
        mode: Mode::TwoEdge,
        k: 2,
        algorithm: Algorithm::Fast,
        stats,
    })
}

pub fn max_2vcs(g: &Digraph) -> Result<ComponentReport> {
    max_2vcs_with(g, &SolverConfig::default())
}

pub fn max_2vcs_with(g: &Digraph, cfg: &SolverConfig) -> Result<ComponentReport> {
    let m0 = g.edge_count();
    let delta = check_delta(cfg, m0)?;
    let guard = loop_guard(2, m0, 2 * delta + 1);
    let (components, stats) = vertex::solve(g, delta, guard)?;
    Ok(ComponentReport {
        components: finish(g.vertex_count(), components, false),
        mode: Mode::TwoVertex,
        k: 2,
        algorithm: Algorithm::Fast,
        stats,
    })
}

pub fn max_kecs(g: &Digraph, k: usize) -> Result<ComponentReport> {
    max_kecs_with(g, k, &SolverConfig::default())
}

pub fn max_kecs_with(g: &Digraph, k: usize, cfg: &SolverConfig) -> Result<ComponentReport> {
    check_k(k)?;
    let m0 = g.edge_count();
    let delta = check_delta(cfg, m0)?;
    let guard = loop_guard(2 * k, m0, k_budget(k, delta));
    let (components, stats) = edge::solve(g, k, true, delta, guard)?;
    Ok(ComponentReport {
        components: finish(g.vertex_count(), components, cfg.include_singletons),
        mode: Mode::KEdge,
        k,
        algorithm: Algorithm::Fast,
        stats,
    })
}

/// Both directions of every undirected edge; self-loops are dropped.
pub fn bidirect(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Digraph> {
    let pairs: Vec<_> = edges.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    Digraph::from_edge_list(n, &pairs).map_err(|e| match e {
        Error::VertexOutOfRange { index, vertex, n } => Error::VertexOutOfRange {
            index: index / 2,
            vertex,
            n,
        },
        other => other,
    })
}

/// `ceil(m / sqrt(n))`, at least 1, for an undirected graph.
pub fn undirected_delta(n: usize, m: usize) -> usize {
    if n == 0 {
        return 1;
    }
    ((m as f64) / (n as f64).sqrt()).ceil().max(1.0) as usize
}

/// Maximal k-edge-connected subgraphs of an undirected graph, via the
/// bidirected digraph.
pub fn max_kecs_undirected(n: usize, edges: &[(VertexId, VertexId)], k: usize) -> Result<ComponentReport> {
    max_kecs_undirected_with(n, edges, k, &SolverConfig::default())
}

pub fn max_kecs_undirected_with(
    n: usize,
    edges: &[(VertexId, VertexId)],
    k: usize,
    cfg: &SolverConfig,
) -> Result<ComponentReport> {
    check_k(k)?;
    let g = bidirect(n, edges)?;
    let undirected_m = g.edge_count() / 2;
    let delta = match cfg.delta {
        Some(_) => check_delta(cfg, 0)?,
        None => undirected_delta(n, undirected_m),
    };
    let guard = loop_guard(2 * k, g.edge_count(), k_budget(k, delta));
    let (components, stats) = edge::solve(&g, k, true, delta, guard)?;
    Ok(ComponentReport {
        components: finish(n, components, cfg.include_singletons),
        mode: Mode::KEdgeUndirected,
        k,
        algorithm: Algorithm::Fast,
        stats,
    })
}

/// Runs `mode` with the chosen algorithm. `k` is ignored by the 2-connected
/// modes, and the undirected mode reads `g` as a bidirected graph.
pub fn solve(g: &Digraph, mode: Mode, k: usize, algorithm: Algorithm, cfg: &SolverConfig) -> Result<ComponentReport> {
    match (algorithm, mode) {
        (Algorithm::Fast, Mode::TwoEdge) => max_2ecs_with(g, cfg),
        (Algorithm::Fast, Mode::TwoVertex) => max_2vcs_with(g, cfg),
        (Algorithm::Fast, Mode::KEdge) => max_kecs_with(g, k, cfg),
        (Algorithm::Fast, Mode::KEdgeUndirected) => {
            let report = max_kecs_with(g, k, cfg)?;
            Ok(ComponentReport {
                mode,
                ..report
            })
        }
        (Algorithm::Baseline, _) => {
            let mut report = match mode {
                Mode::TwoEdge => oracles::baseline_2ecs(g),
                Mode::TwoVertex => oracles::baseline_2vcs(g),
                Mode::KEdge | Mode::KEdgeUndirected => {
                    check_k(k)?;
                    oracles::baseline_kecs(g, k)
                }
            };
            report.mode = mode;
            if cfg.include_singletons && mode != Mode::TwoVertex {
                report.components = finish(g.vertex_count(), report.components, true);
            }
            Ok(report)
        }
    }
}
