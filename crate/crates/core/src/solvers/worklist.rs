use std::collections::VecDeque;

use crate::graph::VertexId;

/// FIFO queue of vertices to search from. A vertex is pending at most once.
#[derive(Clone, Debug, Default)]
pub struct WorkList {
    queue: VecDeque<VertexId>,
    pending: Vec<bool>,
}

impl WorkList {
    pub fn new() -> Self {
        Self::default()
    }

    /// Enqueues `v` unless it is already pending. Returns true if added.
    pub fn push(&mut self, v: VertexId) -> bool {
        if v >= self.pending.len() {
            self.pending.resize(v + 1, false);
        }
        if self.pending[v] {
            return false;
        }
        self.pending[v] = true;
        self.queue.push_back(v);
        true
    }

    pub fn pop(&mut self) -> Option<VertexId> {
        let v = self.queue.pop_front()?;
        self.pending[v] = false;
        Some(v)
    }

    pub fn is_pending(&self, v: VertexId) -> bool {
        self.pending.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.queue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }

    /// Drops every pending vertex in time proportional to their number.
    pub fn clear(&mut self) {
        for v in self.queue.drain(..) {
            self.pending[v] = false;
        }
    }
}

impl Extend<VertexId> for WorkList {
    fn extend<I: IntoIterator<Item = VertexId>>(&mut self, iter: I) {
        for v in iter {
            self.push(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedups_pending_vertices() {
        let mut l = WorkList::new();
        assert!(l.push(3));
        assert!(!l.push(3));
        l.push(1);
        assert_eq!(l.len(), 2);
        assert_eq!(l.pop(), Some(3));
        assert!(l.push(3));
        assert_eq!(l.pop(), Some(1));
        l.clear();
        assert!(l.is_empty());
        assert!(!l.is_pending(3));
    }
}
