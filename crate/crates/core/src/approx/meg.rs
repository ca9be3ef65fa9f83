use std::collections::VecDeque;

use super::{scss_approx, ApproxError, ApproxOptions, BoundsError};
use crate::graph::{condensation, DirectedGraph, EdgeId};

/// Keeps edge `(u, v)` iff no other path leads from `u` to `v`.
pub fn dag_transitive_reduction(dag: &DirectedGraph) -> Result<Vec<EdgeId>, ApproxError> {
    let n = dag.vertex_count();
    let mut indegree: Vec<usize> = (0..n).map(|v| dag.in_degree(v)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut ordered = 0;
    while let Some(v) = queue.pop_front() {
        ordered += 1;
        for w in dag.successors(v) {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    if ordered != n {
        return Err(ApproxError::Cyclic);
    }

    let mut kept = Vec::new();
    let mut seen = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for u in 0..n {
        // Everything reachable from u by a path of two or more edges.
        for w in dag.successors(u) {
            for x in dag.successors(w) {
                if seen[x] != u {
                    seen[x] = u;
                    stack.push(x);
                }
            }
        }
        while let Some(x) = stack.pop() {
            for y in dag.successors(x) {
                if seen[y] != u {
                    seen[y] = u;
                    stack.push(y);
                }
            }
        }
        kept.extend(dag.out_edges(u).iter().copied().filter(|&e| seen[dag.edge(e).1] != u));
    }
    kept.sort_unstable();
    Ok(kept)
}

/// Minimum equivalent graph approximation for an arbitrary digraph: the
/// contraction approximation on every nontrivial strongly connected
/// component plus the transitive reduction of the component DAG, each DAG
/// edge realised by its smallest original edge.
pub fn meg(g: &DirectedGraph, k: usize) -> Result<Vec<EdgeId>, ApproxError> {
    if k < 4 {
        return Err(BoundsError::ThresholdTooSmall(k).into());
    }
    let condensed = condensation(g);
    let mut edges = Vec::new();
    for component in condensed.components.iter().filter(|c| c.len() > 1) {
        let sub = g.induced_subgraph(component).expect("component vertices exist");
        let solution = scss_approx(&sub.graph, ApproxOptions::with_k(k))?;
        edges.extend(sub.lift_edges(&solution.edges));
    }
    let reduced = dag_transitive_reduction(&condensed.dag)?;
    edges.extend(reduced.into_iter().map(|e| condensed.representative_edge[e]));
    edges.sort_unstable();
    Ok(edges)
}
