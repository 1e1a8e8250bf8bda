#![allow(clippy::needless_range_loop)]

mod common;

use common::{digraph, reachable};
use kconn::graph::{bounded_dfs, heavy_path, strongly_connected_components};
use kconn::Digraph;
use proptest::prelude::*;

fn sorted_pairs(g: &Digraph) -> Vec<(usize, usize)> {
    let mut p = g.edge_pairs();
    p.sort();
    p
}

proptest! {
    #[test]
    fn dfs_charges_add_up(g in digraph(12, 40), budget in 0usize..50, root in 0usize..12) {
        let u = root % g.vertex_count();
        let run = bounded_dfs(&g, None, u, budget);
        prop_assert_eq!(run.charge.iter().sum::<usize>(), run.edges_scanned);
        prop_assert_eq!(run.weight[0], run.edges_scanned);
        prop_assert!(run.edges_scanned <= budget);
        for (i, parent) in run.parent_edge.iter().enumerate().skip(1) {
            let p = g.tail(parent.unwrap());
            prop_assert!(run.weight_of(p).unwrap() >= run.weight[i]);
        }
    }

    #[test]
    fn full_budget_visits_the_reachable_set(g in digraph(12, 40), root in 0usize..12) {
        let u = root % g.vertex_count();
        let run = bounded_dfs(&g, None, u, g.edge_count() + 1);
        let seen = reachable(&g, u);
        prop_assert!(!run.stopped_early);
        for v in 0..g.vertex_count() {
            prop_assert_eq!(run.contains(v), seen[v]);
        }
    }

    #[test]
    fn heavy_vertices_form_a_path(g in digraph(12, 40), delta in 1usize..10, root in 0usize..12) {
        let u = root % g.vertex_count();
        let run = bounded_dfs(&g, None, u, 2 * delta + 1);
        let path = heavy_path(&run, delta).unwrap();
        for pair in path.windows(2) {
            prop_assert_eq!(g.tail(run.parent_of(pair[1]).unwrap()), pair[0]);
        }
    }

    #[test]
    fn reverse_is_an_involution(g in digraph(12, 40)) {
        let back = g.reverse_view().reverse_view();
        prop_assert_eq!(sorted_pairs(&back), sorted_pairs(&g));
        let flipped: Vec<_> = g.edge_pairs().into_iter().map(|(a, b)| (b, a)).collect();
        prop_assert_eq!(g.reverse_view().edge_pairs(), flipped);
    }

    #[test]
    fn sccs_are_mutual_reachability(g in digraph(12, 40)) {
        let scc = strongly_connected_components(&g);
        let reach: Vec<Vec<bool>> = (0..g.vertex_count()).map(|u| reachable(&g, u)).collect();
        for a in 0..g.vertex_count() {
            for b in 0..g.vertex_count() {
                let mutual = reach[a][b] && reach[b][a];
                prop_assert_eq!(scc.component_of[a] == scc.component_of[b], mutual);
            }
        }
    }
}
