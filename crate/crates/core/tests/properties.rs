use std::collections::VecDeque;

use proptest::prelude::*;
use scss_core::approx::{scss_approx, ApproxOptions};
use scss_core::classify::{classify_edges, classify_edges_naive};
use scss_core::cover::{max_matching, min_edge_cover};
use scss_core::graph::{
    block_decomposition, condensation, contract_cycle, find_any_cycle, find_cycle_with_length_at_least,
    is_strongly_connected_on, strongly_connected_components, DirectedGraph,
};
use scss_core::io::{parse_edge_set, parse_graph, serialize_edge_set, write_graph};
use scss_core::oracle::{
    gen_random_bipartite, gen_triangle_composite, max_cycle_length, max_matching_bruteforce, min_edge_cover_bruteforce,
    OracleConfig,
};
use scss_core::scss3_minimum;

/// Digraph on 1..=max_n vertices, each ordered pair present with the drawn
/// bit.
fn digraph(max_n: usize) -> impl Strategy<Value = DirectedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v])
                .collect();
            DirectedGraph::new(n, &pairs).unwrap()
        })
    })
}

fn reachable(g: &DirectedGraph, from: usize) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for w in g.successors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn components_match_mutual_reachability(g in digraph(8)) {
        let cond = condensation(&g);
        let reach: Vec<Vec<bool>> = (0..g.vertex_count()).map(|v| reachable(&g, v)).collect();
        for (u, from_u) in reach.iter().enumerate() {
            for (v, from_v) in reach.iter().enumerate() {
                let same = cond.component_of[u] == cond.component_of[v];
                prop_assert_eq!(same, from_u[v] && from_v[u]);
            }
        }
        prop_assert_eq!(&cond.components, &strongly_connected_components(&g));
        prop_assert!(find_any_cycle(&cond.dag).is_none());
        for (d, &(a, b)) in cond.dag.edges().iter().enumerate() {
            let (u, v) = g.edge(cond.representative_edge[d]);
            prop_assert_eq!((cond.component_of[u], cond.component_of[v]), (a, b));
        }
    }

    #[test]
    fn contraction_accounts_for_every_edge(g in digraph(8)) {
        if let Some(cycle) = find_any_cycle(&g) {
            let c = contract_cycle(&g, &cycle);
            prop_assert_eq!(c.graph.vertex_count(), g.vertex_count() - cycle.len() + 1);
            let merged: usize = c.edge_provenance.iter().map(Vec::len).sum();
            prop_assert_eq!(merged + c.dropped_loops, g.edge_count());
            prop_assert!(c.dropped_loops >= cycle.len());
            for (e, olds) in c.edge_provenance.iter().enumerate() {
                let (a, b) = c.graph.edge(e);
                for &old in olds {
                    let (u, v) = g.edge(old);
                    prop_assert_eq!((c.vertex_map[u], c.vertex_map[v]), (a, b));
                }
            }
        }
    }

    #[test]
    fn long_cycle_search_matches_enumeration(g in digraph(7), t in 2usize..8) {
        let longest = max_cycle_length(&g, &OracleConfig::default()).unwrap();
        match find_cycle_with_length_at_least(&g, t) {
            Some(cycle) => {
                prop_assert!(cycle.len() >= t.max(2));
                let vs = cycle.vertices();
                for (i, &e) in cycle.edges().iter().enumerate() {
                    prop_assert_eq!(g.edge(e), (vs[i], vs[(i + 1) % vs.len()]));
                }
            }
            None => prop_assert!(longest < t.max(2)),
        }
    }

    #[test]
    fn fast_classifier_matches_naive_on_blocks(n in 4usize..12, seed in any::<u64>()) {
        let g = gen_triangle_composite(n, seed).unwrap();
        for block in block_decomposition(&g).blocks {
            let sub = g.edge_subgraph(&block).unwrap();
            if sub.graph.vertex_count() >= 4 {
                prop_assert_eq!(classify_edges(&sub.graph).unwrap(), classify_edges_naive(&sub.graph).unwrap());
            }
        }
    }

    #[test]
    fn exact_solution_is_feasible(n in 2usize..60, seed in any::<u64>()) {
        let g = gen_triangle_composite(n, seed).unwrap();
        let s = scss3_minimum(&g).unwrap();
        prop_assert!(is_strongly_connected_on(&g, &s).unwrap());
        prop_assert!(s.len() >= n);
        prop_assert!(s.len() <= 2 * (n - 1));
    }

    #[test]
    fn gallai_identity(left in 1usize..5, right in 1usize..5, density in 0.2f64..1.0, seed in any::<u64>()) {
        let b = gen_random_bipartite(left, right, density, seed).unwrap();
        let cover = min_edge_cover(&b.graph).unwrap();
        let matching = max_matching(&b.graph).unwrap();
        prop_assert!(b.graph.is_edge_cover(cover.edges()));
        prop_assert!(b.graph.is_matching(matching.edges()));
        prop_assert_eq!(cover.len(), left + right - matching.len());
        let cfg = OracleConfig::default();
        prop_assert_eq!(matching.len(), max_matching_bruteforce(&b.graph, &cfg).unwrap().len());
        prop_assert_eq!(cover.len(), min_edge_cover_bruteforce(&b.graph, &cfg).unwrap().len());
    }

    #[test]
    fn approximation_is_feasible_and_accounted(g in digraph(7), k in 4usize..7) {
        if let Ok(s) = scss_approx(&g, ApproxOptions::with_k(k)) {
            prop_assert!(is_strongly_connected_on(&g, &s.edges).unwrap());
            prop_assert_eq!(s.edges.len(), s.trace.contracted_edge_count() + s.trace.final_solution.len());
            prop_assert!(s.trace.final_within_branching_bound());
            prop_assert!(find_cycle_with_length_at_least(&s.trace.final_graph, 4).is_none());
            for phase in &s.trace.phases {
                prop_assert!(phase.cycles.iter().all(|c| c.len() >= phase.threshold));
            }
        }
    }

    #[test]
    fn text_formats_round_trip(g in digraph(9), pick in proptest::collection::vec(any::<bool>(), 72)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g.clone());
        let subset: Vec<usize> = (0..g.edge_count()).filter(|&e| pick[e]).collect();
        let text = serialize_edge_set(&g, &subset).unwrap();
        prop_assert_eq!(parse_edge_set(&g, &text).unwrap(), subset);
    }
}
