use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};

/// Graph families for tests and benchmarks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// `cycles` directed cycles of `len` vertices in a row; neighbouring
    /// cycles are joined by one edge each way, last vertex to first. Every
    /// edge is a strong bridge, so the bridge-removal fixpoint needs many
    /// rounds. Ignores the seed.
    CycleChain { cycles: usize, len: usize },
    /// `m` uniformly random edges without self-loops.
    RandomDigraph { n: usize, m: usize },
    /// A row of bidirected cliques of `size` vertices; neighbouring cliques
    /// are joined by `bridges` random links, each in both directions. For
    /// `bridges < k <= size - 1` the cliques are exactly the maximal
    /// k-edge-connected subgraphs.
    PlantedCliques { cliques: usize, size: usize, bridges: usize },
    /// `m` random vertex pairs, each added in both directions.
    Bidirected { n: usize, m: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::CycleChain { .. } => "cycle-chain",
            Family::RandomDigraph { .. } => "random-digraph",
            Family::PlantedCliques { .. } => "planted-cliques",
            Family::Bidirected { .. } => "bidirected",
        }
    }
}

fn invalid(msg: &str) -> Error {
    Error::InvalidParameter(msg.into())
}

fn pair(rng: &mut ChaCha8Rng, n: usize) -> (VertexId, VertexId) {
    let a = rng.random_range(0..n);
    let mut b = rng.random_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a, b)
}

/// Same seed, same graph.
pub fn generate(family: Family, seed: u64) -> Result<Digraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    let n = match family {
        Family::CycleChain { cycles, len } => {
            if cycles == 0 || len < 2 {
                return Err(invalid("cycle-chain needs at least one cycle of length 2"));
            }
            for c in 0..cycles {
                let base = c * len;
                pairs.extend((0..len).map(|i| (base + i, base + (i + 1) % len)));
                if c > 0 {
                    let prev = base - len;
                    pairs.push((prev + len - 1, base));
                    pairs.push((base + len - 1, prev));
                }
            }
            cycles * len
        }
        Family::RandomDigraph { n, m } => {
            if n < 2 && m > 0 {
                return Err(invalid("random-digraph needs two vertices for any edge"));
            }
            pairs.extend((0..m).map(|_| pair(&mut rng, n)));
            n
        }
        Family::PlantedCliques { cliques, size, bridges } => {
            if cliques == 0 || size < 2 {
                return Err(invalid("planted-cliques needs at least one clique of size 2"));
            }
            for c in 0..cliques {
                let base = c * size;
                for a in base..base + size {
                    for b in a + 1..base + size {
                        pairs.push((a, b));
                        pairs.push((b, a));
                    }
                }
                if c > 0 {
                    for _ in 0..bridges {
                        let a = base - size + rng.random_range(0..size);
                        let b = base + rng.random_range(0..size);
                        pairs.push((a, b));
                        pairs.push((b, a));
                    }
                }
            }
            cliques * size
        }
        Family::Bidirected { n, m } => {
            let edges = random_undirected(n, m, seed)?;
            pairs.extend(edges.iter().flat_map(|&(a, b)| [(a, b), (b, a)]));
            n
        }
    };
    Digraph::from_edge_list(n, &pairs)
}

/// `m` random undirected vertex pairs without self-loops.
pub fn random_undirected(n: usize, m: usize, seed: u64) -> Result<Vec<(VertexId, VertexId)>> {
    if n < 2 && m > 0 {
        return Err(invalid("need two vertices for any edge"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..m).map(|_| pair(&mut rng, n)).collect())
}
