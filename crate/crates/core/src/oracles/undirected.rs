use std::collections::VecDeque;

use crate::graph::{VertexId, VertexSet};

// Undirected unit-capacity flow on a dense matrix restricted to `set`.
fn min_cut_side(n: usize, edges: &[(VertexId, VertexId)], set: &[VertexId], k: usize) -> Option<Vec<VertexId>> {
    let mut inside = vec![false; n];
    for &v in set {
        inside[v] = true;
    }
    let mut cap = vec![0i32; n * n];
    for &(a, b) in edges {
        if a != b && inside[a] && inside[b] {
            cap[a * n + b] += 1;
            cap[b * n + a] += 1;
        }
    }
    let s = set[0];
    for &t in &set[1..] {
        let mut res = cap.clone();
        let mut flow = 0;
        loop {
            let mut prev = vec![usize::MAX; n];
            prev[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in set {
                    if prev[w] == usize::MAX && res[v * n + w] > 0 {
                        prev[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            if prev[t] == usize::MAX {
                let side: Vec<_> = set.iter().copied().filter(|&v| prev[v] != usize::MAX).collect();
                return Some(side);
            }
            flow += 1;
            if flow >= k {
                break;
            }
            let mut w = t;
            while w != s {
                let v = prev[w];
                res[v * n + w] -= 1;
                res[w * n + v] += 1;
                w = v;
            }
        }
    }
    None
}

fn connected_pieces(n: usize, edges: &[(VertexId, VertexId)], set: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut label = vec![usize::MAX; n];
    for &v in set {
        label[v] = v;
    }
    // Union by repeated relabeling; fine at oracle scale.
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in edges {
            if a == b || label[a] == usize::MAX || label[b] == usize::MAX {
                continue;
            }
            let low = label[a].min(label[b]);
            if label[a] != low || label[b] != low {
                label[a] = low;
                label[b] = low;
                changed = true;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<VertexId>> = Default::default();
    for &v in set {
        groups.entry(label[v]).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Maximal k-edge-connected vertex sets of an undirected multigraph with at
/// least two vertices, by repeatedly splitting along cuts of fewer than `k`
/// edges found with flows.
pub fn undirected_kecs_bruteforce(n: usize, edges: &[(VertexId, VertexId)], k: usize) -> Vec<VertexSet> {
    let all: Vec<VertexId> = (0..n).collect();
    let mut stack = connected_pieces(n, edges, &all);
    let mut found = Vec::new();
    while let Some(set) = stack.pop() {
        if set.len() < 2 {
            continue;
        }
        match min_cut_side(n, edges, &set, k) {
            None => found.push(VertexSet::new(set)),
            Some(side) => {
                let mut in_side = vec![false; n];
                for &v in &side {
                    in_side[v] = true;
                }
                let other: Vec<_> = set.iter().copied().filter(|&v| !in_side[v]).collect();
                let inner: Vec<_> = edges
                    .iter()
                    .copied()
                    .filter(|&(a, b)| in_side[a] == in_side[b])
                    .collect();
                stack.extend(connected_pieces(n, &inner, &side));
                stack.extend(connected_pieces(n, &inner, &other));
            }
        }
    }
    found.sort();
    found
}
