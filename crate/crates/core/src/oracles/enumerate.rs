use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Orientation, VertexId, VertexSet};

/// Largest graph the exhaustive search accepts.
pub const MAX_ENUMERATION_VERTICES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentKind {
    /// At most `k - 1` edges leave (or enter) the set.
    Edge { k: usize },
    /// `u` has no leaving (entering) edge and at most one other member has.
    Vertex,
}

struct Masks {
    n: usize,
    // One entry per live edge: (source bit index, target bit index).
    arcs: Vec<(usize, usize)>,
}

impl Masks {
    fn new(g: &Digraph, dir: Orientation) -> Self {
        let arcs = g
            .live_edges()
            .map(|e| (g.source(e, dir), g.target(e, dir)))
            .collect();
        Masks { n: g.vertex_count(), arcs }
    }

    /// Boundary size for the edge kind; for the vertex kind, the number of
    /// members with a leaving arc, or `None` if `u` has one.
    fn level(&self, set: u32, u: VertexId, kind: ComponentKind) -> Option<usize> {
        let inside = |v: usize| set & (1 << v) != 0;
        match kind {
            ComponentKind::Edge { .. } => Some(self.arcs.iter().filter(|&&(a, b)| inside(a) && !inside(b)).count()),
            ComponentKind::Vertex => {
                let mut leaving = 0u32;
                for &(a, b) in &self.arcs {
                    if inside(a) && !inside(b) {
                        leaving |= 1 << a;
                    }
                }
                (leaving & (1 << u) == 0).then(|| leaving.count_ones() as usize)
            }
        }
    }
}

fn limit(kind: ComponentKind) -> usize {
    match kind {
        ComponentKind::Edge { k } => k.saturating_sub(1),
        ComponentKind::Vertex => 1,
    }
}

fn check(g: &Digraph, u: VertexId, kind: ComponentKind) -> Result<()> {
    if g.vertex_count() > MAX_ENUMERATION_VERTICES {
        return Err(Error::Precondition(format!(
            "exhaustive enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices"
        )));
    }
    if u >= g.vertex_count() {
        return Err(Error::InvalidParameter(format!("vertex {u} out of range")));
    }
    if let ComponentKind::Edge { k } = kind {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
        }
    }
    Ok(())
}

fn to_set(mask: u32, n: usize) -> VertexSet {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Every inclusion-minimal vertex set containing `u` that meets the
/// definition of `kind` in direction `dir`.
pub fn enumerate_isolated_components(
    g: &Digraph,
    u: VertexId,
    kind: ComponentKind,
    dir: Orientation,
) -> Result<Vec<VertexSet>> {
    check(g, u, kind)?;
    let masks = Masks::new(g, dir);
    let n = masks.n;
    let full = 1usize << n;
    let bound = limit(kind);
    // below[s]: some subset of s containing u qualifies.
    let mut below = vec![false; full];
    let mut out = Vec::new();
    for s in 0..full {
        if s & (1 << u) == 0 {
            continue;
        }
        let sub = (0..n).any(|v| v != u && s & (1 << v) != 0 && below[s & !(1 << v)]);
        let ok = masks.level(s as u32, u, kind).is_some_and(|l| l <= bound);
        if ok && !sub {
            out.push(to_set(s as u32, n));
        }
        below[s] = ok || sub;
    }
    out.sort();
    Ok(out)
}

/// True if `set` contains `u`, meets the definition of `kind`, and no proper
/// subset containing `u` does so with the same or a smaller boundary. A set
/// with an empty boundary thus only has to be minimal among closed sets.
pub fn is_relatively_minimal(
    g: &Digraph,
    u: VertexId,
    set: &VertexSet,
    kind: ComponentKind,
    dir: Orientation,
) -> Result<bool> {
    check(g, u, kind)?;
    if !set.contains(u) {
        return Ok(false);
    }
    let masks = Masks::new(g, dir);
    let own: u32 = set.members().iter().fold(0, |m, &v| m | (1 << v));
    let Some(level) = masks.level(own, u, kind).filter(|&l| l <= limit(kind)) else {
        return Ok(false);
    };
    // Walk the proper subsets of `own` that keep u.
    let rest = own & !(1 << u);
    let mut sub = rest;
    loop {
        sub = sub.wrapping_sub(1) & rest;
        if sub == rest {
            break;
        }
        if masks.level(sub | (1 << u), u, kind).is_some_and(|l| l <= level) {
            return Ok(false);
        }
        if sub == 0 {
            break;
        }
    }
    Ok(true)
}
