use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Digraph, EdgeId, Orientation, VertexId};

/// Edges traversed against their direction on top of a base graph. The
/// orientation says which way the untouched edges are followed.
#[derive(Clone, Debug)]
pub struct ResidualOverlay {
    orientation: Orientation,
    reversed: HashSet<EdgeId>,
    // Reversed edges keyed by the vertex they now leave.
    departures: HashMap<VertexId, Vec<EdgeId>>,
}

impl ResidualOverlay {
    pub fn new(orientation: Orientation) -> Self {
        ResidualOverlay {
            orientation,
            reversed: HashSet::new(),
            departures: HashMap::new(),
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_empty(&self) -> bool {
        self.reversed.is_empty()
    }

    pub fn len(&self) -> usize {
        self.reversed.len()
    }

    #[inline]
    pub fn is_reversed(&self, e: EdgeId) -> bool {
        self.reversed.contains(&e)
    }

    #[inline]
    pub(crate) fn departures(&self, v: VertexId) -> &[EdgeId] {
        self.departures.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn reversed_edges(&self) -> Vec<EdgeId> {
        let mut r: Vec<_> = self.reversed.iter().copied().collect();
        r.sort_unstable();
        r
    }

    /// Flips the traversal direction of `e`.
    pub fn toggle(&mut self, g: &Digraph, e: EdgeId) -> Result<()> {
        if !g.is_alive(e) {
            return Err(Error::invariant(format!("cannot reverse dead edge {e}")));
        }
        let from = g.target(e, self.orientation);
        if self.reversed.remove(&e) {
            let list = self.departures.get_mut(&from).expect("reversed edge is indexed");
            let at = list.iter().position(|&x| x == e).unwrap();
            list.remove(at);
            if list.is_empty() {
                self.departures.remove(&from);
            }
        } else {
            self.reversed.insert(e);
            self.departures.entry(from).or_default().push(e);
        }
        Ok(())
    }

    /// A copy of `self` with every edge of `path` toggled.
    pub fn apply_path_reversal(&self, g: &Digraph, path: &[EdgeId]) -> Result<Self> {
        let mut next = self.clone();
        for &e in path {
            next.toggle(g, e)?;
        }
        Ok(next)
    }
}
