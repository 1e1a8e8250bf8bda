//! Acceptance criteria. Each criterion prints one PASS or FAIL line; the
//! process exits nonzero if any fails.

use std::time::{Duration, Instant};

use kconn::cuts::{
    naive_strong_articulation_points, naive_strong_bridges, small_edge_cut, strong_articulation_points,
    strong_bridges,
};
use kconn::graph::{is_strongly_connected, strongly_connected_components};
use kconn::io::{generate, random_undirected, Family};
use kconn::oracles::{self, enumerate_isolated_components, is_relatively_minimal, ComponentKind};
use kconn::solvers::{self, ComponentReport};
use kconn::{local, Digraph, Orientation, VertexId, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Runtime structure checks gathered across every solver run.
#[derive(Default)]
struct Structure {
    runs: usize,
    errors: Vec<String>,
    depth_over: usize,
    aux_over: usize,
    worst_depth_ratio: f64,
}

impl Structure {
    fn record(&mut self, g: &Digraph, result: &kconn::Result<ComponentReport>, depth_factor: f64) {
        self.runs += 1;
        let r = match result {
            Ok(r) => r,
            Err(e) => {
                self.errors.push(e.to_string());
                return;
            }
        };
        let bound = depth_factor * (g.edge_count() as f64).sqrt();
        if r.stats.depth as f64 > bound {
            self.depth_over += 1;
        }
        if bound > 0.0 {
            self.worst_depth_ratio = self.worst_depth_ratio.max(r.stats.depth as f64 / bound);
        }
        if r.stats.auxiliary_vertices > aux_bound(g) {
            self.aux_over += 1;
        }
    }
}

// 2m - n over the strongly connected components with at least three
// vertices, the only parts the vertex solver ever splits.
fn aux_bound(g: &Digraph) -> usize {
    let scc = strongly_connected_components(g);
    let (mut m, mut n) = (0, 0);
    for c in scc.components.iter().filter(|c| c.len() >= 3) {
        n += c.len();
        m += g.induced_edge_count(c.members());
    }
    (2 * m).saturating_sub(n)
}

/// Random digraphs with `2..=max_n` vertices and between 1.2n and 6n edges.
fn random_corpus(count: usize, max_n: usize, base: u64) -> Vec<Digraph> {
    (0..count as u64)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(base + i);
            let n = rng.random_range(2..=max_n);
            let m = (n as f64 * rng.random_range(1.2..=6.0)).round() as usize;
            generate(Family::RandomDigraph { n, m }, base + i).unwrap()
        })
        .collect()
}

fn with_fixtures(mut corpus: Vec<Digraph>) -> Vec<Digraph> {
    corpus.extend(kconn::fixtures::all().into_iter().map(|(_, g)| g));
    corpus
}

fn sets(r: &ComponentReport) -> Vec<Vec<VertexId>> {
    r.components.iter().map(|c| c.members().to_vec()).collect()
}

fn dump(g: &Digraph) -> String {
    kconn::io::write_graph(g).replace('\n', "; ")
}

fn two_edge(corpus: &[Digraph], structure: &mut Structure) -> Outcome {
    let start = Instant::now();
    let mut mismatches = 0;
    let mut first = None;
    for g in corpus {
        let fast = solvers::max_2ecs(g);
        structure.record(g, &fast, 4.0);
        let slow = oracles::baseline_2ecs(g);
        if fast.map(|f| sets(&f)).ok() != Some(sets(&slow)) {
            mismatches += 1;
            first.get_or_insert_with(|| dump(g));
        }
    }
    let took = start.elapsed();
    let pass = mismatches == 0 && took < Duration::from_secs(60);
    outcome(
        pass,
        format!(
            "oracle equivalence 2ECS: {} graphs, {mismatches} mismatches, {:.1} s (limit 60 s){}",
            corpus.len(),
            took.as_secs_f64(),
            first.map(|g| format!("; first: {g}")).unwrap_or_default()
        ),
    )
}

fn two_vertex_shape_ok(g: &Digraph, comps: &[VertexSet]) -> bool {
    for (i, c) in comps.iter().enumerate() {
        if c.len() < 3 {
            return false;
        }
        let h = g.induced_subgraph(c.members()).graph;
        if !is_strongly_connected(&h) || !naive_strong_articulation_points(&h).is_empty() {
            return false;
        }
        for d in &comps[i + 1..] {
            if c.members().iter().filter(|&&v| d.contains(v)).count() > 1 {
                return false;
            }
        }
    }
    true
}

fn two_vertex(corpus: &[Digraph], structure: &mut Structure) -> Outcome {
    let start = Instant::now();
    let (mut mismatches, mut malformed) = (0, 0);
    for g in corpus {
        let fast = solvers::max_2vcs(g);
        structure.record(g, &fast, 4.0);
        let slow = oracles::baseline_2vcs(g);
        match fast {
            Ok(f) => {
                if sets(&f) != sets(&slow) {
                    mismatches += 1;
                }
                if !two_vertex_shape_ok(g, &f.components) {
                    malformed += 1;
                }
            }
            Err(_) => mismatches += 1,
        }
    }
    outcome(
        mismatches == 0 && malformed == 0,
        format!(
            "oracle equivalence 2VCS: {} graphs, {mismatches} mismatches, {malformed} outputs breaking size/overlap/connectivity, {:.1} s",
            corpus.len(),
            start.elapsed().as_secs_f64()
        ),
    )
}

fn k_edge(corpus: &[Digraph], structure: &mut Structure) -> Outcome {
    let start = Instant::now();
    let (mut runs, mut mismatches) = (0, 0);
    for g in corpus {
        for k in [3, 4] {
            runs += 1;
            let fast = solvers::max_kecs(g, k);
            structure.record(g, &fast, 4.0 * k as f64);
            let slow = oracles::baseline_kecs(g, k);
            if fast.map(|f| sets(&f)).ok() != Some(sets(&slow)) {
                mismatches += 1;
            }
        }
    }
    let mut planted = 0;
    let mut planted_bad = 0;
    for k in [3usize, 4] {
        for size in k + 1..=k + 3 {
            for cliques in 2..=5 {
                for bridges in 1..k {
                    for seed in 0..3 {
                        let g = generate(Family::PlantedCliques { cliques, size, bridges }, seed).unwrap();
                        let truth: Vec<Vec<VertexId>> =
                            (0..cliques).map(|c| (c * size..(c + 1) * size).collect()).collect();
                        planted += 1;
                        let fast = solvers::max_kecs(&g, k);
                        structure.record(&g, &fast, 4.0 * k as f64);
                        let ok = fast.map(|f| sets(&f) == truth).unwrap_or(false)
                            && sets(&oracles::baseline_kecs(&g, k)) == truth;
                        if !ok {
                            planted_bad += 1;
                        }
                    }
                }
            }
        }
    }
    outcome(
        mismatches == 0 && planted_bad == 0,
        format!(
            "oracle equivalence kECS (k = 3, 4): {runs} random runs, {mismatches} mismatches; {planted} planted-clique runs, {planted_bad} off the planted answer; {:.1} s",
            start.elapsed().as_secs_f64()
        ),
    )
}

#[derive(Clone, Copy)]
enum Search {
    Vertex,
    Edge(usize),
}

fn run_search(g: &Digraph, u: VertexId, delta: usize, search: Search, dir: Orientation) -> kconn::Result<Option<local::IsolatedComponent>> {
    match (search, dir) {
        (Search::Vertex, Orientation::Out) => local::one_vertex_out(g, u, delta),
        (Search::Vertex, Orientation::In) => local::one_vertex_in(g, u, delta),
        (Search::Edge(2), Orientation::Out) => local::one_edge_out(g, u, delta),
        (Search::Edge(2), Orientation::In) => local::one_edge_in(g, u, delta),
        (Search::Edge(k), Orientation::Out) => local::k_edge_out(g, u, delta, k),
        (Search::Edge(k), Orientation::In) => local::k_edge_in(g, u, delta, k),
    }
}

fn induced_edges(g: &Digraph, s: &VertexSet) -> usize {
    g.induced_edge_count(s.members())
}

// Size of a 1-vertex component: edges leaving its members other than the
// separating vertex, whose edges the search never scans.
fn vertex_size(g: &Digraph, s: &VertexSet, sep: Option<VertexId>, dir: Orientation) -> usize {
    s.members()
        .iter()
        .filter(|&&v| Some(v) != sep)
        .map(|&v| g.edges_from(v, dir).len())
        .sum()
}

// The only member other than u with an edge leaving the set, if any.
fn separator_of(g: &Digraph, s: &VertexSet, dir: Orientation) -> Option<VertexId> {
    s.members()
        .iter()
        .copied()
        .find(|&v| g.edges_from(v, dir).iter().any(|&e| !s.contains(g.target(e, dir))))
}

fn local_contracts() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut runs, mut not_minimal, mut missed, mut oversized) = (0usize, 0, 0, 0);
    let mut graphs = 0;
    for _ in 0..300 {
        let n = rng.random_range(2..=10);
        let m = rng.random_range(1..=3 * n);
        let pairs: Vec<_> = (0..m).map(|_| (rng.random_range(0..n), rng.random_range(0..n))).collect();
        let g = Digraph::from_edge_list(n, &pairs).unwrap();
        graphs += 1;
        let searches = [Search::Vertex, Search::Edge(2), Search::Edge(3), Search::Edge(4)];
        for u in 0..n {
            for dir in [Orientation::Out, Orientation::In] {
                for search in searches {
                    let kind = match search {
                        Search::Vertex => ComponentKind::Vertex,
                        Search::Edge(k) => ComponentKind::Edge { k },
                    };
                    let all = enumerate_isolated_components(&g, u, kind, dir).unwrap();
                    for delta in 1..=g.edge_count().max(1) {
                        runs += 1;
                        let found = run_search(&g, u, delta, search, dir).unwrap();
                        let small_exists = all.iter().any(|s| match search {
                            Search::Vertex => vertex_size(&g, s, separator_of(&g, s, dir).filter(|&x| x != u), dir) <= delta,
                            Search::Edge(_) => induced_edges(&g, s) <= delta,
                        });
                        match found {
                            None => missed += small_exists as usize,
                            Some(c) => {
                                if !is_relatively_minimal(&g, u, &c.vertices, kind, dir).unwrap() {
                                    not_minimal += 1;
                                }
                                let (size, bound) = match search {
                                    Search::Vertex => (vertex_size(&g, &c.vertices, c.separating_vertex, dir), 2 * delta),
                                    Search::Edge(2) => (induced_edges(&g, &c.vertices), 2 * delta),
                                    Search::Edge(k) => (induced_edges(&g, &c.vertices), (2 * k - 1) * (delta + 1)),
                                };
                                oversized += (size > bound) as usize;
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(
        not_minimal + missed + oversized == 0,
        format!(
            "local search contracts: {graphs} graphs (n <= 10), {runs} searches over all delta; {not_minimal} non-minimal, {missed} missed, {oversized} over the size bound; {:.1} s",
            start.elapsed().as_secs_f64()
        ),
    )
}

fn structural(s: &Structure) -> Outcome {
    outcome(
        s.errors.is_empty() && s.depth_over == 0 && s.aux_over == 0,
        format!(
            "runtime structure checks: {} solver runs, {} invariant errors, {} over the depth bound (worst depth/bound {:.3}), {} over the auxiliary vertex bound{}",
            s.runs,
            s.errors.len(),
            s.depth_over,
            s.worst_depth_ratio,
            s.aux_over,
            s.errors.first().map(|e| format!("; first: {e}")).unwrap_or_default()
        ),
    )
}

/// Least-squares slope of ln y against ln x.
fn slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

const CHAIN_LEN: usize = 8;

fn chain(target_m: usize) -> Digraph {
    let cycles = target_m / (CHAIN_LEN + 2);
    generate(Family::CycleChain { cycles, len: CHAIN_LEN }, 0).unwrap()
}

fn scaling() -> Outcome {
    let mut fast = Vec::new();
    let mut largest = (0, Duration::ZERO, 0);
    for target in [1_000, 3_000, 10_000, 30_000, 100_000] {
        let g = chain(target);
        let start = Instant::now();
        let r = solvers::max_2ecs(&g).unwrap();
        let took = start.elapsed();
        fast.push((g.edge_count() as f64, r.stats.work() as f64));
        largest = (g.edge_count(), took, r.stats.work());
    }
    // The baseline is quadratic on this family; sizes above 10^4 take
    // minutes, so its sweep stops there.
    let mut slow = Vec::new();
    let mut ordering = true;
    for target in [1_000, 2_000, 4_000, 10_000] {
        let g = chain(target);
        let b = oracles::baseline_2ecs_linear(&g);
        let f = solvers::max_2ecs(&g).unwrap();
        slow.push((g.edge_count() as f64, b.stats.work() as f64));
        ordering = f.stats.work() < b.stats.work();
    }
    let (fs, bs) = (slope(&fast), slope(&slow));
    let pass = fs <= 1.7 && bs >= 1.85 && ordering && largest.1 < Duration::from_secs(10);
    outcome(
        pass,
        format!(
            "scaling on cycle chains: fast slope {fs:.3} (<= 1.7, m 1e3..1e5), baseline slope {bs:.3} (>= 1.85, m 1e3..1e4), fast < baseline at m = 1e4: {ordering}, fast wall time at m = {}: {:.2} s (< 10 s)",
            largest.0,
            largest.1.as_secs_f64()
        ),
    )
}

// Smallest d >= 1 with d * sqrt(n) >= m, in integers.
fn expected_undirected_delta(n: usize, m: usize) -> usize {
    let mut d = 1;
    while d * d * n < m * m {
        d += 1;
    }
    d
}

fn undirected() -> Outcome {
    let start = Instant::now();
    let (mut mismatches, mut wrong_delta) = (0, 0);
    for seed in 0..300u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(7_000 + seed);
        let n = rng.random_range(2..=40);
        let m = rng.random_range(n..=4 * n);
        let edges = random_undirected(n, m, seed).unwrap();
        let r = solvers::max_kecs_undirected(n, &edges, 3).unwrap();
        if r.components != oracles::undirected_kecs_bruteforce(n, &edges, 3) {
            mismatches += 1;
        }
        let json: serde_json::Value = serde_json::from_str(&kconn::io::emit_report(&r, kconn::io::Format::Json)).unwrap();
        if json["stats"]["delta"] != expected_undirected_delta(n, m) {
            wrong_delta += 1;
        }
    }
    outcome(
        mismatches == 0 && wrong_delta == 0,
        format!(
            "undirected k = 3: 300 graphs, {mismatches} mismatches against flow brute force, {wrong_delta} with delta != ceil(m / sqrt n) in the stats; {:.1} s",
            start.elapsed().as_secs_f64()
        ),
    )
}

fn global_connectivity(g: &Digraph, cap: usize) -> usize {
    (1..g.vertex_count())
        .map(|v| oracles::pairwise_edge_connectivity(g, 0, v, cap).unwrap())
        .min()
        .unwrap_or(cap)
}

fn cut_oracles() -> Outcome {
    let start = Instant::now();
    let (mut bridges_bad, mut saps_bad, mut cut_bad) = (0, 0, 0);
    for seed in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(9_000 + seed);
        let n = rng.random_range(3..=40);
        let m = (n as f64 * rng.random_range(0.2..=3.0)).round() as usize;
        let base = generate(Family::RandomDigraph { n, m }, seed).unwrap();
        // A Hamiltonian cycle through a random order makes it strongly connected.
        let mut order: Vec<VertexId> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.random_range(0..=i));
        }
        let mut pairs = base.edge_pairs();
        pairs.extend((0..n).map(|i| (order[i], order[(i + 1) % n])));
        let g = Digraph::from_edge_list(n, &pairs).unwrap();
        if strong_bridges(&g).unwrap() != naive_strong_bridges(&g) {
            bridges_bad += 1;
        }
        if strong_articulation_points(&g).unwrap() != naive_strong_articulation_points(&g) {
            saps_bad += 1;
        }
        let conn = global_connectivity(&g, 5);
        for k in 2..=5 {
            let none = small_edge_cut(&g, k).unwrap().is_none();
            if none != (conn >= k) {
                cut_bad += 1;
            }
        }
    }
    outcome(
        bridges_bad + saps_bad + cut_bad == 0,
        format!(
            "cut oracles: 500 strongly connected graphs; {bridges_bad} bridge, {saps_bad} articulation point, {cut_bad} small-cut disagreements; {:.1} s",
            start.elapsed().as_secs_f64()
        ),
    )
}

fn main() {
    let mut structure = Structure::default();
    let corpus = with_fixtures(random_corpus(1000, 60, 1));
    let small = random_corpus(500, 40, 50_000);
    let mut results: Vec<(usize, Outcome)> = vec![
        (1, two_edge(&corpus, &mut structure)),
        (2, two_vertex(&corpus, &mut structure)),
        (3, k_edge(&small, &mut structure)),
        (4, local_contracts()),
    ];
    results.push((5, structural(&structure)));
    results.push((6, scaling()));
    results.push((7, undirected()));
    results.push((8, cut_oracles()));
    let mut failed = 0;
    for (id, o) in &results {
        println!("{} criterion {id}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += !o.pass as usize;
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
