//! Graph files, report output, random graph families and the benchmark
//! harness.
//!
//! A graph file starts with a header line `n m d` (directed) or `n m u`
//! (undirected), followed by `m` lines `tail head` with 0-based ids. Blank
//! lines and anything after `#` are ignored.

mod bench;
mod generate;

pub use bench::{run_benchmark, write_csv, BenchPlan, BenchRecord};
pub use generate::{generate, random_undirected, Family};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};
use crate::solvers::{ComponentReport, SolverStats};

/// Contents of a graph file.
#[derive(Clone, Debug)]
pub enum GraphFile {
    Directed(Digraph),
    Undirected {
        n: usize,
        edges: Vec<(VertexId, VertexId)>,
    },
}

impl GraphFile {
    pub fn vertex_count(&self) -> usize {
        match self {
            GraphFile::Directed(g) => g.vertex_count(),
            GraphFile::Undirected { n, .. } => *n,
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            GraphFile::Directed(g) => g.edge_count(),
            GraphFile::Undirected { edges, .. } => edges.len(),
        }
    }
}

fn number(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::input(line, format!("{what} must be a non-negative integer, got {tok:?}")))
}

/// Parses a graph file. Edge ids follow line order.
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize, bool)> = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let Some((n, m, _)) = header else {
            if toks.len() != 3 {
                return Err(Error::input(line, "header must be \"n m d\" or \"n m u\""));
            }
            let directed = match toks[2] {
                "d" => true,
                "u" => false,
                other => return Err(Error::input(line, format!("expected d or u, got {other:?}"))),
            };
            header = Some((number(toks[0], line, "n")?, number(toks[1], line, "m")?, directed));
            continue;
        };
        if toks.len() != 2 {
            return Err(Error::input(line, "edge line must be \"tail head\""));
        }
        let (a, b) = (number(toks[0], line, "tail")?, number(toks[1], line, "head")?);
        for v in [a, b] {
            if v >= n {
                return Err(Error::input(line, format!("vertex {v} out of range for {n} vertices")));
            }
        }
        if edges.len() == m {
            return Err(Error::input(line, format!("more than the declared {m} edges")));
        }
        edges.push((a, b));
    }
    let Some((n, m, directed)) = header else {
        return Err(Error::input(last.max(1), "missing header"));
    };
    if edges.len() != m {
        return Err(Error::input(last.max(1), format!("declared {m} edges, found {}", edges.len())));
    }
    Ok(if directed {
        GraphFile::Directed(Digraph::from_edge_list(n, &edges)?)
    } else {
        GraphFile::Undirected { n, edges }
    })
}

fn write_edges(n: usize, flag: char, edges: &[(VertexId, VertexId)]) -> String {
    let mut out = format!("{n} {} {flag}\n", edges.len());
    for (a, b) in edges {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// Writes `g` in graph file format, live edges in id order.
pub fn write_graph(g: &Digraph) -> String {
    write_edges(g.vertex_count(), 'd', &g.edge_pairs())
}

pub fn write_undirected(n: usize, edges: &[(VertexId, VertexId)]) -> String {
    write_edges(n, 'u', edges)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    mode: &'a str,
    k: usize,
    algorithm: crate::solvers::Algorithm,
    components: Vec<&'a [VertexId]>,
    stats: &'a SolverStats,
}

/// Text: one line per component with its sorted ids. JSON: the components
/// plus the solver counters. Components are sorted by smallest member.
pub fn emit_report(report: &ComponentReport, format: Format) -> String {
    let mut comps: Vec<&[VertexId]> = report.components.iter().map(|c| c.members()).collect();
    comps.sort();
    match format {
        Format::Text => {
            let mut out = String::new();
            for c in comps {
                let ids: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                out.push_str(&ids.join(" "));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let body = JsonReport {
                mode: report.mode.name(),
                k: report.k,
                algorithm: report.algorithm,
                components: comps,
                stats: &report.stats,
            };
            let mut out = serde_json::to_string_pretty(&body).expect("report serializes");
            out.push('\n');
            out
        }
    }
}

/// Counters as `# name value` lines, for appending to text output.
pub fn emit_stats(stats: &SolverStats) -> String {
    let value = serde_json::to_value(stats).expect("stats serialize");
    let mut out = String::new();
    if let serde_json::Value::Object(map) = value {
        for (key, v) in map {
            out.push_str(&format!("# {key} {v}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, solvers};

    const TWIN: &str = "6 8 d\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n2 3\n5 0\n";

    #[test]
    fn parses_fixture_text() {
        let GraphFile::Directed(g) = parse_graph(TWIN).unwrap() else {
            panic!("directed header");
        };
        assert!(g.same_edges(&fixtures::twin_cycles()));
        let b = fixtures::bi_k4();
        let GraphFile::Directed(g) = parse_graph(&write_graph(&b)).unwrap() else {
            panic!("directed header");
        };
        assert!(g.same_edges(&b));
        match parse_graph("3 2 u\n0 1 # first\n\n1 2\n").unwrap() {
            GraphFile::Undirected { n, edges } => assert_eq!((n, edges), (3, vec![(0, 1), (1, 2)])),
            GraphFile::Directed(_) => panic!("undirected header"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line = |t: &str| match parse_graph(t) {
            Err(Error::Input { line, .. }) => line,
            other => panic!("expected input error, got {other:?}"),
        };
        assert_eq!(line("3 2 d\n0 1\n1 x\n"), 3);
        assert_eq!(line("# c\n3 2 d\n0 1\n"), 3);
        assert_eq!(line("3 1 d\n0 1\n1 2\n"), 3);
        assert_eq!(line("3 1 q\n"), 1);
        assert_eq!(line("3 1 d\n0 3\n"), 2);
        assert_eq!(line(""), 1);
    }

    #[test]
    fn text_and_json_output() {
        let r = solvers::max_2vcs(&fixtures::shared_hub()).unwrap();
        assert_eq!(emit_report(&r, Format::Text), "0 1 2\n2 3 4\n");
        let r = solvers::max_kecs(&fixtures::clique_pair(), 3).unwrap();
        assert_eq!(emit_report(&r, Format::Text), "0 1 2 3\n4 5 6 7\n");
        let r = solvers::max_2ecs(&fixtures::twin_cycles()).unwrap();
        assert_eq!(emit_report(&r, Format::Text), "");
        let v: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["components"], serde_json::json!([]));
        assert_eq!(v["stats"]["m0"], 8);
        assert_eq!(emit_report(&r, Format::Json), emit_report(&r, Format::Json));
    }
}
