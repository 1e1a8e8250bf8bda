//! Browser bindings. Every function takes and returns strings: graphs in
//! graph file format, results as JSON.

use kconn::io::{self, Family, Format, GraphFile};
use kconn::local::{self, SearchKind, Workspace};
use kconn::solvers::{self, Algorithm, Mode, SolverConfig};
use kconn::{Digraph, Orientation};
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn directed(text: &str) -> Result<Digraph, String> {
    match io::parse_graph(text).map_err(|e| e.to_string())? {
        GraphFile::Directed(g) => Ok(g),
        GraphFile::Undirected { n, edges } => solvers::bidirect(n, &edges).map_err(|e| e.to_string()),
    }
}

/// Components and counters for `mode` ("2ecs", "2vcs", "kecs").
pub fn decompose_json(text: &str, mode: &str, k: usize, baseline: bool) -> Result<String, String> {
    let g = directed(text)?;
    let mode: Mode = mode.parse().map_err(|e: kconn::Error| e.to_string())?;
    let algorithm = if baseline { Algorithm::Baseline } else { Algorithm::Fast };
    let report = solvers::solve(&g, mode, k, algorithm, &SolverConfig::default()).map_err(|e| e.to_string())?;
    Ok(io::emit_report(&report, Format::Json))
}

#[derive(Serialize)]
struct SearchResult {
    found: bool,
    vertices: Vec<usize>,
    boundary: Vec<(usize, usize)>,
    separating_vertex: Option<usize>,
    edges_scanned: usize,
}

/// One local search from `u`. `kind` is "edge" (with `k`) or "vertex";
/// `dir` is "out" or "in".
pub fn local_search_json(text: &str, u: usize, delta: usize, kind: &str, k: usize, dir: &str) -> Result<String, String> {
    let g = directed(text)?;
    let kind = match kind {
        "edge" => SearchKind::Edge { k },
        "vertex" => SearchKind::Vertex,
        other => return Err(format!("unknown search kind {other:?}")),
    };
    let dir = match dir {
        "out" => Orientation::Out,
        "in" => Orientation::In,
        other => return Err(format!("unknown direction {other:?}")),
    };
    let mut ws = Workspace::new();
    let found = local::search(&mut ws, &g, u, delta, kind, dir).map_err(|e| e.to_string())?;
    let result = match found {
        Some(c) => SearchResult {
            found: true,
            boundary: c.boundary.iter().map(|&e| g.endpoints(e)).collect(),
            vertices: c.vertices.into_vec(),
            separating_vertex: c.separating_vertex,
            edges_scanned: ws.scanned,
        },
        None => SearchResult {
            found: false,
            vertices: Vec::new(),
            boundary: Vec::new(),
            separating_vertex: None,
            edges_scanned: ws.scanned,
        },
    };
    Ok(serde_json::to_string(&result).expect("plain data serializes"))
}

/// A generated graph in graph file format. The meaning of `a`, `b` and `c`
/// depends on the family: cycle-chain (cycles, length), random-digraph and
/// bidirected (n, m), planted-cliques (cliques, size, bridges).
pub fn generate_text(family: &str, a: usize, b: usize, c: usize, seed: u64) -> Result<String, String> {
    let family = match family {
        "cycle-chain" => Family::CycleChain { cycles: a, len: b },
        "random-digraph" => Family::RandomDigraph { n: a, m: b },
        "planted-cliques" => Family::PlantedCliques { cliques: a, size: b, bridges: c },
        "bidirected" => Family::Bidirected { n: a, m: b },
        other => return Err(format!("unknown family {other:?}")),
    };
    let g = io::generate(family, seed).map_err(|e| e.to_string())?;
    Ok(io::write_graph(&g))
}

#[wasm_bindgen]
pub fn decompose(text: &str, mode: &str, k: usize, baseline: bool) -> Result<String, JsError> {
    decompose_json(text, mode, k, baseline).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn local_search(text: &str, u: usize, delta: usize, kind: &str, k: usize, dir: &str) -> Result<String, JsError> {
    local_search_json(text, u, delta, kind, k, dir).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn generate(family: &str, a: usize, b: usize, c: usize, seed: u64) -> Result<String, JsError> {
    generate_text(family, a, b, c, seed).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWIN: &str = "6 8 d\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n2 3\n5 0\n";

    #[test]
    fn decompose_returns_components() {
        let text = generate_text("planted-cliques", 2, 4, 2, 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&decompose_json(&text, "kecs", 3, false).unwrap()).unwrap();
        assert_eq!(v["components"], serde_json::json!([[0, 1, 2, 3], [4, 5, 6, 7]]));
        let v: serde_json::Value = serde_json::from_str(&decompose_json(&text, "kecs", 3, true).unwrap()).unwrap();
        assert_eq!(v["algorithm"], "baseline");
        assert!(decompose_json(TWIN, "3ecs", 2, false).is_err());
    }

    #[test]
    fn search_reports_boundary() {
        let v: serde_json::Value =
            serde_json::from_str(&local_search_json(TWIN, 5, 3, "edge", 2, "out").unwrap()).unwrap();
        assert_eq!(v["vertices"], serde_json::json!([3, 4, 5]));
        assert_eq!(v["boundary"], serde_json::json!([[5, 0]]));
        assert!(v["edges_scanned"].as_u64().unwrap() > 0);
        assert!(local_search_json(TWIN, 9, 3, "edge", 2, "out").is_err());
        assert!(local_search_json(TWIN, 0, 3, "both", 2, "out").is_err());
    }

    #[test]
    fn generate_matches_the_file_format() {
        let text = generate_text("cycle-chain", 2, 3, 0, 0).unwrap();
        assert!(text.starts_with("6 8 d\n"));
        assert!(generate_text("star", 1, 1, 1, 0).is_err());
    }
}
