//! Necessary/redundant classification for 2-connected digraphs whose cycles
//! have at most three edges, and the edge-cover instance built from it.
//!
//! Terminology:
//! - an edge is *redundant* if deleting it leaves the graph strongly
//!   connected, *necessary* otherwise;
//! - `(u, v)` is *unsatisfied* if no path of necessary edges leads from `v`
//!   back to `u`;
//! - a redundant edge *provides a cycle* for an unsatisfied `(u, v)` if
//!   necessary edges plus that redundant edge lead from `v` back to `u`.
//!
//! Under the preconditions (strongly connected, at least four vertices, no
//! cut vertex, no cycle longer than three) each redundant edge lies on exactly
//! one cycle, every other edge of that cycle is necessary, and so each
//! redundant edge provides for at most two unsatisfied edges.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cover::UndirectedCoverGraph;
use crate::graph::{
    block_decomposition, is_strongly_connected, strongly_connected_under, Cycle, DirectedGraph, EdgeId,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Necessary,
    Redundant,
}

impl EdgeClass {
    pub fn is_redundant(self) -> bool {
        self == EdgeClass::Redundant
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeClass::Necessary => "necessary",
            EdgeClass::Redundant => "redundant",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("graph has {0} vertices; the fast classifier needs at least 4")]
    TooFewVertices(usize),
    #[error("vertex {0} is a cut vertex")]
    CutVertex(usize),
    #[error("edge {0} is not on a cycle of length at most 3")]
    LongCycle(EdgeId),
    #[error("redundant edge {0} does not lie on exactly one short cycle")]
    AmbiguousCycle(EdgeId),
    #[error("edge {0} is not redundant")]
    NotRedundant(EdgeId),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
}

/// Classes plus the structure needed for the cover reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub edge_class: Vec<EdgeClass>,
    /// Ascending.
    pub unsatisfied: Vec<EdgeId>,
    /// Redundant edge → its unique cycle, starting with that edge's tail.
    pub redundant_cycle: BTreeMap<EdgeId, Cycle>,
    /// Redundant edge → the unsatisfied edges on its cycle (0, 1 or 2), ascending.
    pub provides: BTreeMap<EdgeId, Vec<EdgeId>>,
}

impl Classification {
    pub fn necessary(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_class
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == EdgeClass::Necessary)
            .map(|(e, _)| e)
    }

    pub fn redundant(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_class
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_redundant())
            .map(|(e, _)| e)
    }
}

/// Definition-level check: is `g` still strongly connected without `e`?
pub fn classify_edge_naive(g: &DirectedGraph, e: EdgeId) -> Result<EdgeClass, ClassifyError> {
    if e >= g.edge_count() {
        return Err(ClassifyError::UnknownEdge(e));
    }
    if !is_strongly_connected(g) {
        return Err(ClassifyError::NotStronglyConnected);
    }
    Ok(if strongly_connected_under(g, |f| f != e) {
        EdgeClass::Redundant
    } else {
        EdgeClass::Necessary
    })
}

/// Naive classification of every edge; works on any strongly connected graph.
pub fn classify_edges_naive(g: &DirectedGraph) -> Result<Vec<EdgeClass>, ClassifyError> {
    (0..g.edge_count()).map(|e| classify_edge_naive(g, e)).collect()
}

fn check_preconditions(g: &DirectedGraph) -> Result<(), ClassifyError> {
    if g.vertex_count() < 4 {
        return Err(ClassifyError::TooFewVertices(g.vertex_count()));
    }
    if !is_strongly_connected(g) {
        return Err(ClassifyError::NotStronglyConnected);
    }
    if let Some(&v) = block_decomposition(g).cut_vertices.first() {
        return Err(ClassifyError::CutVertex(v));
    }
    Ok(())
}

/// Edges of an outgoing and an incoming depth-first branching rooted at 0.
fn branching_edges(g: &DirectedGraph) -> Vec<bool> {
    let mut in_branching = vec![false; g.edge_count()];
    for forward in [true, false] {
        let mut seen = vec![false; g.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            let list = if forward { g.out_edges(v) } else { g.in_edges(v) };
            for &e in list.iter().rev() {
                let (t, h) = g.edge(e);
                let w = if forward { h } else { t };
                if !seen[w] {
                    seen[w] = true;
                    in_branching[e] = true;
                    stack.push(w);
                }
            }
        }
    }
    in_branching
}

/// Fast classification in `O(n^2)`.
///
/// Edges outside the union of two branchings are redundant. Each of the at
/// most `2n - 2` branching edges `(u, v)` is settled by looking only at
/// paths of length at most two:
/// 1. an alternate path `u -> x -> v` makes it redundant;
/// 2. otherwise a reverse edge `(v, u)` makes it necessary;
/// 3. otherwise two or more return paths `v -> w -> u` make it necessary;
/// 4. otherwise, with the unique return path `v -> w -> u`, it is redundant
///    iff walks `u ~> w` and `w ~> v` of length at most two exist that avoid
///    the edge `(u, v)`.
pub fn classify_edges(g: &DirectedGraph) -> Result<Vec<EdgeClass>, ClassifyError> {
    check_preconditions(g)?;
    let in_branching = branching_edges(g);
    let mut classes = vec![EdgeClass::Redundant; g.edge_count()];
    for e in (0..g.edge_count()).filter(|&e| in_branching[e]) {
        classes[e] = classify_branching_edge(g, e)?;
    }
    Ok(classes)
}

fn classify_branching_edge(g: &DirectedGraph, e: EdgeId) -> Result<EdgeClass, ClassifyError> {
    let (u, v) = g.edge(e);
    // (1)
    if g.successors(u).any(|x| x != v && g.has_edge(x, v)) {
        return Ok(EdgeClass::Redundant);
    }
    // (2)
    if g.has_edge(v, u) {
        return Ok(EdgeClass::Necessary);
    }
    // (3)
    let mut returns = g.successors(v).filter(|&w| w != u && g.has_edge(w, u));
    let w = returns.next().ok_or(ClassifyError::LongCycle(e))?;
    if returns.next().is_some() {
        return Ok(EdgeClass::Necessary);
    }
    // (4): u ~> w avoiding (u, v), then w ~> v avoiding (u, v)
    let to_w = g.has_edge(u, w) || g.successors(u).any(|y| y != v && y != w && g.has_edge(y, w));
    let from_w = g.has_edge(w, v) || g.successors(w).any(|z| z != u && z != v && g.has_edge(z, v));
    Ok(if to_w && from_w {
        EdgeClass::Redundant
    } else {
        EdgeClass::Necessary
    })
}

/// Closes every path of one or two necessary edges with the reverse edge, if
/// present. Necessary closers are satisfied; redundant closers get their
/// cycle recorded.
fn close_necessary_paths(
    g: &DirectedGraph,
    edge_class: &[EdgeClass],
) -> (Vec<bool>, BTreeMap<EdgeId, Vec<Vec<usize>>>) {
    let necessary = |e: EdgeId| edge_class[e] == EdgeClass::Necessary;
    let mut satisfied = vec![false; g.edge_count()];
    let mut cycles: BTreeMap<EdgeId, Vec<Vec<usize>>> = BTreeMap::new();
    let mut close = |closer: EdgeId, vertices: Vec<usize>| {
        if necessary(closer) {
            satisfied[closer] = true;
        } else {
            cycles.entry(closer).or_default().push(vertices);
        }
    };
    for first in (0..g.edge_count()).filter(|&e| necessary(e)) {
        let (a, b) = g.edge(first);
        if let Some(closer) = g.find_edge(b, a) {
            close(closer, vec![b, a]);
        }
        for &second in g.out_edges(b) {
            let c = g.edge(second).1;
            if c == a || !necessary(second) {
                continue;
            }
            if let Some(closer) = g.find_edge(c, a) {
                close(closer, vec![c, a, b]);
            }
        }
    }
    (satisfied, cycles)
}

/// Necessary edges with no return path of one or two necessary edges.
///
/// Longer return paths need not be examined: a simple return path with three
/// or more edges would close a cycle longer than three.
pub fn compute_unsatisfied(g: &DirectedGraph, edge_class: &[EdgeClass]) -> Vec<EdgeId> {
    let (satisfied, _) = close_necessary_paths(g, edge_class);
    (0..g.edge_count())
        .filter(|&e| edge_class[e] == EdgeClass::Necessary && !satisfied[e])
        .collect()
}

/// The unique cycle through redundant edge `e`; its other edges are
/// necessary.
pub fn redundant_cycle(g: &DirectedGraph, edge_class: &[EdgeClass], e: EdgeId) -> Result<Cycle, ClassifyError> {
    if e >= g.edge_count() {
        return Err(ClassifyError::UnknownEdge(e));
    }
    if edge_class[e] != EdgeClass::Redundant {
        return Err(ClassifyError::NotRedundant(e));
    }
    let necessary = |f: EdgeId| edge_class[f] == EdgeClass::Necessary;
    let (u, v) = g.edge(e);
    let mut found = Vec::new();
    if g.find_edge(v, u).is_some_and(necessary) {
        found.push(vec![u, v]);
    }
    for &first in g.out_edges(v) {
        let w = g.edge(first).1;
        if w != u && necessary(first) && g.find_edge(w, u).is_some_and(necessary) {
            found.push(vec![u, v, w]);
        }
    }
    match found.len() {
        1 => Ok(Cycle::from_vertices(g, found.pop().unwrap()).expect("closed necessary path is a cycle")),
        0 => Err(ClassifyError::LongCycle(e)),
        _ => Err(ClassifyError::AmbiguousCycle(e)),
    }
}

/// Full classification: classes, unsatisfied edges, each redundant edge's
/// cycle and what it provides.
pub fn classify(g: &DirectedGraph) -> Result<Classification, ClassifyError> {
    let edge_class = classify_edges(g)?;
    classification_from_classes(g, edge_class)
}

/// Builds the rest of a [`Classification`] from already-known classes.
/// Requires every cycle to have at most three edges and at most one redundant
/// edge.
pub fn classification_from_classes(
    g: &DirectedGraph,
    edge_class: Vec<EdgeClass>,
) -> Result<Classification, ClassifyError> {
    let (satisfied, mut closers) = close_necessary_paths(g, &edge_class);
    let unsatisfied: Vec<EdgeId> = (0..g.edge_count())
        .filter(|&e| edge_class[e] == EdgeClass::Necessary && !satisfied[e])
        .collect();
    let mut is_unsatisfied = vec![false; g.edge_count()];
    for &e in &unsatisfied {
        is_unsatisfied[e] = true;
    }

    let mut redundant_cycle = BTreeMap::new();
    let mut provides = BTreeMap::new();
    for e in (0..g.edge_count()).filter(|&e| edge_class[e].is_redundant()) {
        let mut found = closers.remove(&e).unwrap_or_default();
        let vertices = match found.len() {
            1 => found.pop().unwrap(),
            0 => return Err(ClassifyError::LongCycle(e)),
            _ => return Err(ClassifyError::AmbiguousCycle(e)),
        };
        let cycle = Cycle::from_vertices(g, vertices).expect("closed necessary path is a cycle");
        let mut provided: Vec<EdgeId> = cycle.edges().iter().copied().filter(|&f| is_unsatisfied[f]).collect();
        provided.sort_unstable();
        provides.insert(e, provided);
        redundant_cycle.insert(e, cycle);
    }

    Ok(Classification {
        edge_class,
        unsatisfied,
        redundant_cycle,
        provides,
    })
}

/// The edge-cover instance: one vertex per unsatisfied edge, one edge (or
/// loop) per redundant edge that provides for two (or one) of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInstance {
    pub graph: UndirectedCoverGraph,
    /// Cover vertex → unsatisfied edge of the digraph (ascending).
    pub vertex_origin: Vec<EdgeId>,
    /// Cover edge → redundant edge of the digraph (ascending).
    pub edge_origin: Vec<EdgeId>,
}

impl CoverInstance {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }
}

pub fn build_cover_instance(classification: &Classification) -> CoverInstance {
    let vertex_origin = classification.unsatisfied.clone();
    let position: BTreeMap<EdgeId, usize> = vertex_origin.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut pairs = Vec::new();
    let mut edge_origin = Vec::new();
    for (&redundant, provided) in &classification.provides {
        let pair = match provided.as_slice() {
            [] => continue,
            [a] => (position[a], position[a]),
            [a, b] => (position[a], position[b]),
            _ => unreachable!("a redundant edge's cycle has at most two other edges"),
        };
        pairs.push(pair);
        edge_origin.push(redundant);
    }
    let graph = UndirectedCoverGraph::new(vertex_origin.len(), pairs).expect("cover endpoints are in range");
    CoverInstance {
        graph,
        vertex_origin,
        edge_origin,
    }
}
