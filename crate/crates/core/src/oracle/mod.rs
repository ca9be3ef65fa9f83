//! Brute-force ground truth for the solvers.
//!
//! Everything here is deliberately simple: subsets are enumerated in
//! ascending size and, within a size, in lexicographic order of edge ids, so
//! the first witness found is deterministic. Sizes are capped by
//! [`OracleConfig`]; exceeding a cap is an error, never a silent truncation.

mod generate;

use itertools::Itertools;
use thiserror::Error;

use crate::cover::{EdgeCover, Matching, UndirectedCoverGraph};
use crate::graph::{Cycle, DirectedGraph, EdgeId, GraphError};

pub use generate::{
    enumerate_short_cycle_sc_graphs, gen_random_bipartite, gen_random_dag, gen_random_digraph, gen_random_sc_digraph,
    gen_triangle_composite, BipartiteInstance, MAX_ENUMERATION_VERTICES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{edges} edges exceed the oracle cap of {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("{vertices} vertices exceed the oracle cap of {cap}")]
    VertexCapExceeded { vertices: usize, cap: usize },
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("vertex {0} has no incident edge")]
    IsolatedVertex(usize),
    #[error("generator gave up after {0} rejected attempts")]
    GenerationFailed(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest edge count accepted by the subset enumerators.
    pub edge_cap: usize,
    /// Largest vertex count accepted by the cycle enumerators.
    pub cycle_vertex_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            edge_cap: 22,
            cycle_vertex_cap: 10,
        }
    }
}

impl OracleConfig {
    fn check_edges(&self, edges: usize) -> Result<(), OracleError> {
        if edges > self.edge_cap {
            Err(OracleError::EdgeCapExceeded {
                edges,
                cap: self.edge_cap,
            })
        } else {
            Ok(())
        }
    }

    fn check_cycle_vertices(&self, vertices: usize) -> Result<(), OracleError> {
        if vertices > self.cycle_vertex_cap {
            Err(OracleError::VertexCapExceeded {
                vertices,
                cap: self.cycle_vertex_cap,
            })
        } else {
            Ok(())
        }
    }
}

/// Bit-row reachability for graphs with at most 64 vertices.
struct BitGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl BitGraph {
    const MAX_VERTICES: usize = 64;

    fn new(g: &DirectedGraph) -> Result<Self, OracleError> {
        if g.vertex_count() > Self::MAX_VERTICES {
            return Err(OracleError::VertexCapExceeded {
                vertices: g.vertex_count(),
                cap: Self::MAX_VERTICES,
            });
        }
        Ok(Self {
            n: g.vertex_count(),
            edges: g.edges().to_vec(),
        })
    }

    fn rows(&self, subset: impl Iterator<Item = EdgeId>) -> (Vec<u64>, Vec<u64>) {
        let mut out = vec![0u64; self.n];
        let mut inn = vec![0u64; self.n];
        for e in subset {
            let (u, v) = self.edges[e];
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
        }
        (out, inn)
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn reach_from(rows: &[u64], source: usize) -> u64 {
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    fn strongly_connected(&self, subset: impl Iterator<Item = EdgeId>) -> bool {
        if self.n <= 1 {
            return true;
        }
        let (out, inn) = self.rows(subset);
        Self::reach_from(&out, 0) == self.full() && Self::reach_from(&inn, 0) == self.full()
    }

    /// Reachability rows (reflexive) of the spanning subgraph.
    fn closure(&self, subset: impl Iterator<Item = EdgeId>) -> Vec<u64> {
        let (out, _) = self.rows(subset);
        (0..self.n).map(|v| Self::reach_from(&out, v)).collect()
    }
}

/// Smallest subset of `optional` which, together with `forced`, satisfies
/// `accept`; sizes from `min_total` upward.
fn first_accepted(
    forced: &[EdgeId],
    optional: &[EdgeId],
    min_total: usize,
    mut accept: impl FnMut(&[EdgeId]) -> bool,
) -> Option<Vec<EdgeId>> {
    let start = min_total.saturating_sub(forced.len());
    for size in start..=optional.len() {
        for extra in optional.iter().copied().combinations(size) {
            let mut chosen: Vec<EdgeId> = forced.iter().copied().chain(extra).collect();
            chosen.sort_unstable();
            if accept(&chosen) {
                return Some(chosen);
            }
        }
    }
    None
}

/// Minimum strongly connected spanning edge set by enumeration. Edges whose
/// removal alone disconnects `g` are always included.
pub fn min_scss_bruteforce(g: &DirectedGraph, config: &OracleConfig) -> Result<Vec<EdgeId>, OracleError> {
    config.check_edges(g.edge_count())?;
    let bits = BitGraph::new(g)?;
    let all = 0..g.edge_count();
    if !bits.strongly_connected(all.clone()) {
        return Err(OracleError::NotStronglyConnected);
    }
    let (forced, optional): (Vec<EdgeId>, Vec<EdgeId>) =
        all.partition(|&e| !bits.strongly_connected((0..g.edge_count()).filter(|&f| f != e)));
    let min_total = if g.vertex_count() >= 2 { g.vertex_count() } else { 0 };
    Ok(first_accepted(&forced, &optional, min_total, |s| {
        bits.strongly_connected(s.iter().copied())
    })
    .expect("the full edge set qualifies"))
}

/// [`min_scss_bruteforce`] without any pruning: plain ascending enumeration
/// over all subsets.
pub fn min_scss_bruteforce_unpruned(g: &DirectedGraph, config: &OracleConfig) -> Result<Vec<EdgeId>, OracleError> {
    config.check_edges(g.edge_count())?;
    let bits = BitGraph::new(g)?;
    let all: Vec<EdgeId> = (0..g.edge_count()).collect();
    first_accepted(&[], &all, 0, |s| bits.strongly_connected(s.iter().copied()))
        .ok_or(OracleError::NotStronglyConnected)
}

/// Minimum edge subset with the same reachability relation as `g`. Edges
/// whose removal alone changes reachability are always included.
pub fn min_equivalent_bruteforce(g: &DirectedGraph, config: &OracleConfig) -> Result<Vec<EdgeId>, OracleError> {
    config.check_edges(g.edge_count())?;
    let bits = BitGraph::new(g)?;
    let target = bits.closure(0..g.edge_count());
    let (forced, optional): (Vec<EdgeId>, Vec<EdgeId>) =
        (0..g.edge_count()).partition(|&e| bits.closure((0..g.edge_count()).filter(|&f| f != e)) != target);
    Ok(
        first_accepted(&forced, &optional, 0, |s| bits.closure(s.iter().copied()) == target)
            .expect("the full edge set qualifies"),
    )
}

/// Whether the spanning subgraph on `subset` has the same transitive closure
/// as `g`.
pub fn reachability_equal(g: &DirectedGraph, subset: &[EdgeId]) -> Result<bool, GraphError> {
    let mask = g.edge_mask(subset)?;
    let n = g.vertex_count();
    Ok((0..n).all(|v| crate::graph::reach(g, v, true, |_| true) == crate::graph::reach(g, v, true, |e| mask[e])))
}

/// Minimum edge cover by enumeration.
pub fn min_edge_cover_bruteforce(g: &UndirectedCoverGraph, config: &OracleConfig) -> Result<EdgeCover, OracleError> {
    config.check_edges(g.edge_count())?;
    let inc = g.incidence();
    if let Some(v) = inc.iter().position(Vec::is_empty) {
        return Err(OracleError::IsolatedVertex(v));
    }
    let all: Vec<usize> = (0..g.edge_count()).collect();
    let cover = first_accepted(&[], &all, g.vertex_count().div_ceil(2), |s| g.is_edge_cover(s))
        .expect("all edges cover a graph without isolated vertices");
    Ok(EdgeCover(cover))
}

/// Maximum matching by enumeration, largest size first.
pub fn max_matching_bruteforce(g: &UndirectedCoverGraph, config: &OracleConfig) -> Result<Matching, OracleError> {
    config.check_edges(g.edge_count())?;
    let top = (g.vertex_count() / 2).min(g.edge_count());
    for size in (0..=top).rev() {
        if let Some(m) = (0..g.edge_count()).combinations(size).find(|s| g.is_matching(s)) {
            return Ok(Matching(m));
        }
    }
    unreachable!("the empty set is a matching")
}

/// Every simple cycle, each listed once starting from its smallest vertex.
pub fn simple_cycles(g: &DirectedGraph, config: &OracleConfig) -> Result<Vec<Cycle>, OracleError> {
    config.check_cycle_vertices(g.vertex_count())?;
    let mut cycles = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for start in 0..g.vertex_count() {
        path.push(start);
        on_path[start] = true;
        walk(g, start, &mut path, &mut on_path, &mut cycles);
        on_path[start] = false;
        path.pop();
    }
    Ok(cycles)
}

fn walk(g: &DirectedGraph, start: usize, path: &mut Vec<usize>, on_path: &mut [bool], cycles: &mut Vec<Cycle>) {
    let last = *path.last().unwrap();
    for w in g.successors(last) {
        if w == start {
            cycles.push(Cycle::from_vertices(g, path.clone()).expect("closed simple path"));
        } else if w > start && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            walk(g, start, path, on_path, cycles);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Length of the longest simple cycle, 0 if acyclic.
pub fn max_cycle_length(g: &DirectedGraph, config: &OracleConfig) -> Result<usize, OracleError> {
    Ok(simple_cycles(g, config)?.iter().map(Cycle::len).max().unwrap_or(0))
}
