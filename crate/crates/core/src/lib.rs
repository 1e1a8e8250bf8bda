//! Maximal 2-edge-connected, 2-vertex-connected and k-edge-connected
//! subgraphs of directed graphs, computed by recursive decomposition driven
//! by edge-budgeted local searches.
//!
//! ```
//! use kconn::{fixtures, solvers};
//!
//! let g = fixtures::clique_pair();
//! let report = solvers::max_kecs(&g, 3).unwrap();
//! let sets: Vec<_> = report.components.iter().map(|c| c.members().to_vec()).collect();
//! assert_eq!(sets, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
//! ```

pub mod cuts;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod local;
pub mod oracles;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Digraph, EdgeId, Orientation, VertexId, VertexSet};
