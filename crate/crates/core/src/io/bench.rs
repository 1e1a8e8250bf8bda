use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use super::generate::{generate, Family};
use super::write_graph;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::oracles;
use crate::solvers::{self, Algorithm, ComponentReport, Mode, SolverConfig};

/// One benchmark sweep: every family at every seed in every mode.
#[derive(Clone, Debug)]
pub struct BenchPlan {
    pub modes: Vec<Mode>,
    /// Used by the k-edge modes.
    pub k: usize,
    pub families: Vec<Family>,
    pub seeds: Vec<u64>,
    /// Also time the baseline on graphs with at most this many edges.
    pub baseline_max_m: usize,
    /// Compare fast and baseline answers on graphs with at most this many
    /// vertices.
    pub oracle_max_n: usize,
    pub threads: usize,
}

impl Default for BenchPlan {
    fn default() -> Self {
        BenchPlan {
            modes: vec![Mode::TwoEdge],
            k: 3,
            families: Vec::new(),
            seeds: vec![1],
            baseline_max_m: 20_000,
            oracle_max_n: 200,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub generator: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub mode: Mode,
    pub algorithm: Algorithm,
    pub wall_ms: f64,
    pub edges_scanned: usize,
    pub work: usize,
    pub depth: usize,
    pub components: usize,
}

/// Recursion depth the fast solvers must stay within.
pub fn depth_bound(mode: Mode, k: usize, m0: usize) -> f64 {
    let factor = match mode {
        Mode::TwoEdge | Mode::TwoVertex => 4.0,
        Mode::KEdge | Mode::KEdgeUndirected => 4.0 * k as f64,
    };
    factor * (m0 as f64).sqrt()
}

// The 2-edge baseline here is the linear-time-per-round fixpoint; the
// deletion-based one is far too slow at benchmark sizes.
fn baseline(g: &Digraph, mode: Mode, k: usize) -> Result<ComponentReport> {
    match mode {
        Mode::TwoEdge => Ok(oracles::baseline_2ecs_linear(g)),
        _ => solvers::solve(g, mode, k, Algorithm::Baseline, &SolverConfig::default()),
    }
}

fn record(family: &Family, seed: u64, g: &Digraph, report: &ComponentReport, wall_ms: f64) -> BenchRecord {
    BenchRecord {
        generator: family.name().into(),
        seed,
        n: g.vertex_count(),
        m: g.edge_count(),
        k: report.k,
        mode: report.mode,
        algorithm: report.algorithm,
        wall_ms,
        edges_scanned: report.stats.edges_scanned,
        work: report.stats.work(),
        depth: report.stats.depth,
        components: report.components.len(),
    }
}

fn timed(run: impl FnOnce() -> Result<ComponentReport>) -> Result<(ComponentReport, f64)> {
    let start = Instant::now();
    let report = run()?;
    Ok((report, start.elapsed().as_secs_f64() * 1e3))
}

fn run_cell(plan: &BenchPlan, family: &Family, seed: u64, mode: Mode) -> Result<Vec<BenchRecord>> {
    let g = generate(*family, seed)?;
    let k = plan.k;
    let (fast, ms) = timed(|| solvers::solve(&g, mode, k, Algorithm::Fast, &SolverConfig::default()))?;
    let bound = depth_bound(mode, k, g.edge_count());
    if fast.stats.depth as f64 > bound {
        return Err(Error::invariant(format!(
            "{} depth {} exceeds {bound:.1} on {} seed {seed}",
            mode,
            fast.stats.depth,
            family.name()
        )));
    }
    let mut out = vec![record(family, seed, &g, &fast, ms)];
    if g.edge_count() <= plan.baseline_max_m {
        let (slow, ms) = timed(|| baseline(&g, mode, k))?;
        if g.vertex_count() <= plan.oracle_max_n && slow.components != fast.components {
            let small = oracles::shrink_counterexample(&g, |h| {
                let a = solvers::solve(h, mode, k, Algorithm::Fast, &SolverConfig::default());
                let b = baseline(h, mode, k);
                matches!((a, b), (Ok(a), Ok(b)) if a.components != b.components)
            });
            return Err(Error::Divergence(format!(
                "{mode} on {} seed {seed}; smallest diverging graph:\n{}",
                family.name(),
                write_graph(&small)
            )));
        }
        out.push(record(family, seed, &g, &slow, ms));
    }
    Ok(out)
}

/// Runs every cell of `plan`, up to `plan.threads` at a time. Records come
/// back in plan order: family, then seed, then mode.
pub fn run_benchmark(plan: &BenchPlan) -> Result<Vec<BenchRecord>> {
    let mut cells = Vec::new();
    for family in &plan.families {
        for &seed in &plan.seeds {
            for &mode in &plan.modes {
                cells.push((family, seed, mode));
            }
        }
    }
    let results: Vec<Mutex<Option<Result<Vec<BenchRecord>>>>> = cells.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..plan.threads.clamp(1, cells.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(family, seed, mode)) = cells.get(i) else { break };
                let r = run_cell(plan, family, seed, mode);
                *results[i].lock().expect("no panics while holding the lock") = Some(r);
            });
        }
    });
    let mut records = Vec::new();
    for slot in results {
        let r = slot.into_inner().expect("no panics while holding the lock");
        records.extend(r.expect("every cell ran")?);
    }
    Ok(records)
}

pub fn write_csv<W: std::io::Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
