//! Exact minimum strongly connected spanning subgraph for digraphs whose
//! cycles all have at most three edges.
//!
//! The graph is split into blocks (2-connected components of the underlying
//! multigraph); each block is strongly connected and is solved on its own.
//! Blocks with at most three vertices are solved by exhaustive search. Larger
//! blocks are classified, reduced to a bipartite edge cover instance, and the
//! cover is turned back into a set of redundant edges that, with all
//! necessary edges, is optimal for the block.

use itertools::Itertools;
use thiserror::Error;

use crate::classify::{
    build_cover_instance, classify, classify_edges_naive, compute_unsatisfied, Classification, ClassifyError,
    CoverInstance, EdgeClass,
};
use crate::cover::{min_edge_cover, CoverError, UndirectedCoverGraph};
use crate::graph::{
    block_decomposition, find_cycle_with_length_at_least, is_strongly_connected, strongly_connected_under, Cycle,
    DirectedGraph, EdgeId, Subgraph,
};

/// Blocks with at most this many vertices are solved by exhaustive search.
pub const TINY_BLOCK_VERTICES: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Scss3Error {
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("graph has a cycle with {} edges", .0.len())]
    LongCycle(Cycle),
    #[error("unsatisfied edges {0:?} have no chosen provider")]
    Uncovered(Vec<EdgeId>),
    #[error("chosen edge {0} is not redundant")]
    NotRedundant(EdgeId),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

/// Necessary edges plus the chosen redundant edges, ascending.
///
/// Fails if some unsatisfied edge has no provider among `chosen`.
pub fn assemble_scss(classification: &Classification, chosen: &[EdgeId]) -> Result<Vec<EdgeId>, Scss3Error> {
    let mut covered = vec![false; classification.edge_class.len()];
    for &e in chosen {
        let provided = classification.provides.get(&e).ok_or(Scss3Error::NotRedundant(e))?;
        for &u in provided {
            covered[u] = true;
        }
    }
    let uncovered: Vec<EdgeId> = classification
        .unsatisfied
        .iter()
        .copied()
        .filter(|&u| !covered[u])
        .collect();
    if !uncovered.is_empty() {
        return Err(Scss3Error::Uncovered(uncovered));
    }
    let mut edges: Vec<EdgeId> = classification.necessary().chain(chosen.iter().copied()).collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(edges)
}

/// Smallest strongly connected spanning edge set, by subsets in ascending
/// size then lexicographic order. Only meant for tiny graphs.
pub(crate) fn exhaustive_minimum(g: &DirectedGraph) -> Vec<EdgeId> {
    let m = g.edge_count();
    for size in 0..=m {
        for subset in (0..m).combinations(size) {
            let mut mask = vec![false; m];
            for &e in &subset {
                mask[e] = true;
            }
            if strongly_connected_under(g, |e| mask[e]) {
                return subset;
            }
        }
    }
    unreachable!("the full edge set of a strongly connected graph qualifies")
}

/// Splits `g` into blocks after checking strong connectivity and the cycle
/// bound (per block, since every simple cycle lies inside one block).
fn plan_blocks(g: &DirectedGraph) -> Result<Vec<Subgraph>, Scss3Error> {
    if !is_strongly_connected(g) {
        return Err(Scss3Error::NotStronglyConnected);
    }
    let decomposition = block_decomposition(g);
    decomposition
        .blocks
        .iter()
        .map(|block| {
            let sub = g.edge_subgraph(block).expect("block edges exist");
            if let Some(cycle) = find_cycle_with_length_at_least(&sub.graph, 4) {
                return Err(Scss3Error::LongCycle(cycle.lift(&sub)));
            }
            Ok(sub)
        })
        .collect()
}

fn is_tiny(plan: &Subgraph) -> bool {
    plan.graph.vertex_count() <= TINY_BLOCK_VERTICES
}

fn solve_block(plan: &Subgraph) -> Result<Vec<EdgeId>, Scss3Error> {
    let block = &plan.graph;
    let local = if is_tiny(plan) {
        exhaustive_minimum(block)
    } else {
        let classification = classify(block)?;
        let instance = build_cover_instance(&classification);
        let cover = min_edge_cover(&instance.graph)?;
        let chosen: Vec<EdgeId> = cover.edges().iter().map(|&c| instance.edge_origin[c]).collect();
        assemble_scss(&classification, &chosen)?
    };
    Ok(plan.lift_edges(&local))
}

/// A minimum strongly connected spanning edge set of `g`, ascending.
///
/// Requires `g` strongly connected with no cycle longer than three.
pub fn scss3_minimum(g: &DirectedGraph) -> Result<Vec<EdgeId>, Scss3Error> {
    let plans = plan_blocks(g)?;
    let mut edges = Vec::with_capacity(g.vertex_count() * 2);
    for plan in &plans {
        edges.extend(solve_block(plan)?);
    }
    edges.sort_unstable();
    Ok(edges)
}

/// Per-edge classification of a whole graph, block by block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClassification {
    pub edge_class: Vec<EdgeClass>,
    /// Ascending.
    pub unsatisfied: Vec<EdgeId>,
}

impl GraphClassification {
    pub fn is_unsatisfied(&self, e: EdgeId) -> bool {
        self.unsatisfied.binary_search(&e).is_ok()
    }
}

/// The combined edge cover instance of every block with four or more
/// vertices, expressed with the whole graph's edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub instance: CoverInstance,
    /// Edges of blocks small enough to be solved directly; they take no part
    /// in the cover instance.
    pub tiny_block_edges: Vec<EdgeId>,
    pub classification: GraphClassification,
}

/// Classifies every edge of `g` (necessary/redundant relative to `g`, which
/// coincides with the block-level answer) and marks unsatisfied edges.
pub fn classify_graph(g: &DirectedGraph) -> Result<GraphClassification, Scss3Error> {
    Ok(reduce(g)?.classification)
}

/// Builds the edge cover instance for all blocks with four or more vertices.
/// Cover vertices and edges are numbered block by block in block order.
pub fn reduce(g: &DirectedGraph) -> Result<Reduction, Scss3Error> {
    let plans = plan_blocks(g)?;
    let mut edge_class = vec![EdgeClass::Necessary; g.edge_count()];
    let mut unsatisfied = Vec::new();
    let mut tiny_block_edges = Vec::new();
    let mut pairs = Vec::new();
    let mut vertex_origin = Vec::new();
    let mut edge_origin = Vec::new();
    for plan in &plans {
        let lift = |e: EdgeId| plan.edge_origin[e];
        if is_tiny(plan) {
            let classes = classify_edges_naive(&plan.graph)?;
            unsatisfied.extend(compute_unsatisfied(&plan.graph, &classes).into_iter().map(lift));
            for (e, class) in classes.into_iter().enumerate() {
                edge_class[lift(e)] = class;
            }
            tiny_block_edges.extend(plan.edge_origin.iter().copied());
            continue;
        }
        let local = classify(&plan.graph)?;
        for (e, &class) in local.edge_class.iter().enumerate() {
            edge_class[lift(e)] = class;
        }
        unsatisfied.extend(local.unsatisfied.iter().map(|&e| lift(e)));
        let block_instance = build_cover_instance(&local);
        let offset = vertex_origin.len();
        vertex_origin.extend(block_instance.vertex_origin.iter().map(|&e| lift(e)));
        edge_origin.extend(block_instance.edge_origin.iter().map(|&e| lift(e)));
        pairs.extend(
            block_instance
                .graph
                .edges()
                .iter()
                .map(|&(a, b)| (a + offset, b + offset)),
        );
    }
    unsatisfied.sort_unstable();
    tiny_block_edges.sort_unstable();
    let graph = UndirectedCoverGraph::new(vertex_origin.len(), pairs)?;
    Ok(Reduction {
        instance: CoverInstance {
            graph,
            vertex_origin,
            edge_origin,
        },
        tiny_block_edges,
        classification: GraphClassification {
            edge_class,
            unsatisfied,
        },
    })
}
