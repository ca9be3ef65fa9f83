//! Dense-vertex digraphs with stable edge identifiers.
//!
//! Vertices are `0..vertex_count`; every edge is identified by its position in
//! the edge list the graph was built from. Adjacency lists are kept sorted by
//! the opposite endpoint so that every traversal in this crate visits
//! neighbours in ascending vertex order.

mod blocks;
mod contract;
mod cycles;
mod scc;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use contract::{contract_cycle, contract_vertices, ContractionResult};
pub use cycles::{find_any_cycle, find_cycle_with_length_at_least, max_cycle_length_at_most};
pub use scc::{condensation, strongly_connected_components, Condensation};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge}: endpoint {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange {
        edge: EdgeId,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge {edge}: self-loop at vertex {vertex}")]
    SelfLoop { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge}: duplicate of edge {first} ({tail}, {head})")]
    DuplicateEdge {
        edge: EdgeId,
        first: EdgeId,
        tail: VertexId,
        head: VertexId,
    },
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
}

/// A simple directed graph: no self-loops, no parallel edges.
#[derive(Clone)]
pub struct DirectedGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl DirectedGraph {
    /// Builds a graph, keeping `pairs` in order as edge ids `0..pairs.len()`.
    pub fn new(vertex_count: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut index = HashMap::with_capacity(pairs.len());
        let mut out_edges = vec![Vec::new(); vertex_count];
        let mut in_edges = vec![Vec::new(); vertex_count];
        for (edge, &(tail, head)) in pairs.iter().enumerate() {
            for vertex in [tail, head] {
                if vertex >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        edge,
                        vertex,
                        vertex_count,
                    });
                }
            }
            if tail == head {
                return Err(GraphError::SelfLoop { edge, vertex: tail });
            }
            if let Some(&first) = index.get(&(tail, head)) {
                return Err(GraphError::DuplicateEdge {
                    edge,
                    first,
                    tail,
                    head,
                });
            }
            index.insert((tail, head), edge);
            out_edges[tail].push(edge);
            in_edges[head].push(edge);
        }
        for list in &mut out_edges {
            list.sort_by_key(|&e| pairs[e].1);
        }
        for list in &mut in_edges {
            list.sort_by_key(|&e| pairs[e].0);
        }
        Ok(Self {
            vertex_count,
            edges: pairs.to_vec(),
            out_edges,
            in_edges,
            index,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::new(vertex_count, &[]).expect("edgeless graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Endpoints `(tail, head)` of `edge`. Panics on an unknown id.
    pub fn edge(&self, edge: EdgeId) -> (VertexId, VertexId) {
        self.edges[edge]
    }

    /// Outgoing edge ids of `v`, sorted by head.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v]
    }

    /// Incoming edge ids of `v`, sorted by tail.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v]
    }

    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_edges[v].iter().map(move |&e| self.edges[e].1)
    }

    pub fn predecessors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_edges[v].iter().map(move |&e| self.edges[e].0)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_edges[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_edges[v].len()
    }

    pub fn find_edge(&self, tail: VertexId, head: VertexId) -> Option<EdgeId> {
        self.index.get(&(tail, head)).copied()
    }

    pub fn has_edge(&self, tail: VertexId, head: VertexId) -> bool {
        self.index.contains_key(&(tail, head))
    }

    /// Returns a boolean mask over edge ids, rejecting ids that do not exist.
    pub fn edge_mask(&self, subset: &[EdgeId]) -> Result<Vec<bool>, GraphError> {
        let mut mask = vec![false; self.edge_count()];
        for &e in subset {
            *mask.get_mut(e).ok_or(GraphError::UnknownEdge(e))? = true;
        }
        Ok(mask)
    }

    /// The subgraph formed by `edge_ids`, with its vertices renumbered in
    /// ascending order of their ids here and its edges kept in ascending id
    /// order.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> Result<Subgraph, GraphError> {
        let mut ids = edge_ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut used = vec![false; self.vertex_count];
        for &e in &ids {
            let (u, v) = *self.edges.get(e).ok_or(GraphError::UnknownEdge(e))?;
            used[u] = true;
            used[v] = true;
        }
        let vertex_origin: Vec<VertexId> = (0..self.vertex_count).filter(|&v| used[v]).collect();
        Ok(self.restrict(vertex_origin, ids))
    }

    /// The subgraph induced by `vertices`, renumbered in ascending order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Result<Subgraph, GraphError> {
        let mut inside = vec![false; self.vertex_count];
        for &v in vertices {
            *inside.get_mut(v).ok_or(GraphError::UnknownVertex(v))? = true;
        }
        let vertex_origin: Vec<VertexId> = (0..self.vertex_count).filter(|&v| inside[v]).collect();
        let ids = (0..self.edge_count())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                inside[u] && inside[v]
            })
            .collect();
        Ok(self.restrict(vertex_origin, ids))
    }

    fn restrict(&self, vertex_origin: Vec<VertexId>, edge_origin: Vec<EdgeId>) -> Subgraph {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertex_origin.iter().enumerate() {
            local[v] = i;
        }
        let pairs: Vec<_> = edge_origin
            .iter()
            .map(|&e| {
                let (u, v) = self.edges[e];
                (local[u], local[v])
            })
            .collect();
        let graph = DirectedGraph::new(vertex_origin.len(), &pairs).expect("restriction of a valid graph is valid");
        Subgraph {
            graph,
            vertex_origin,
            edge_origin,
        }
    }
}

impl PartialEq for DirectedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for DirectedGraph {}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirectedGraph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A subgraph together with the maps back to its parent graph.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: DirectedGraph,
    /// Local vertex id → parent vertex id.
    pub vertex_origin: Vec<VertexId>,
    /// Local edge id → parent edge id.
    pub edge_origin: Vec<EdgeId>,
}

impl Subgraph {
    pub fn lift_edges(&self, local: &[EdgeId]) -> Vec<EdgeId> {
        local.iter().map(|&e| self.edge_origin[e]).collect()
    }
}

/// A simple directed cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Cycle {
    /// Closes the vertex sequence into a cycle of `g`, or `None` if some
    /// consecutive pair is not an edge, a vertex repeats, or it is too short.
    pub fn from_vertices(g: &DirectedGraph, vertices: Vec<VertexId>) -> Option<Self> {
        if vertices.len() < 2 {
            return None;
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let len = vertices.len();
        let edges = (0..len)
            .map(|i| g.find_edge(vertices[i], vertices[(i + 1) % len]))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { vertices, edges })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Edge `i` runs from `vertices()[i]` to `vertices()[(i + 1) % len]`.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Re-expresses the cycle in terms of a parent graph.
    pub fn lift(&self, sub: &Subgraph) -> Cycle {
        Cycle {
            vertices: self.vertices.iter().map(|&v| sub.vertex_origin[v]).collect(),
            edges: self.edges.iter().map(|&e| sub.edge_origin[e]).collect(),
        }
    }
}

/// Vertices reachable from `source` along edges admitted by `allowed`,
/// following edges forwards or backwards.
pub(crate) fn reach<F>(g: &DirectedGraph, source: VertexId, forward: bool, allowed: F) -> Vec<bool>
where
    F: Fn(EdgeId) -> bool,
{
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::new();
    seen[source] = true;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let list = if forward { g.out_edges(v) } else { g.in_edges(v) };
        for &e in list {
            if !allowed(e) {
                continue;
            }
            let (t, h) = g.edge(e);
            let w = if forward { h } else { t };
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Shortest path (as a vertex sequence, both ends included) from `from` to
/// `to`, avoiding vertices marked in `blocked`. Ties go to smaller ids.
pub(crate) fn shortest_path_avoiding(
    g: &DirectedGraph,
    from: VertexId,
    to: VertexId,
    blocked: &[bool],
) -> Option<Vec<VertexId>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    parent[from] = from;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.successors(v) {
            if parent[w] == usize::MAX && !blocked[w] {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

pub fn is_strongly_connected(g: &DirectedGraph) -> bool {
    strongly_connected_under(g, |_| true)
}

/// Whether the spanning subgraph with edge set `edge_subset` is strongly
/// connected.
pub fn is_strongly_connected_on(g: &DirectedGraph, edge_subset: &[EdgeId]) -> Result<bool, GraphError> {
    let mask = g.edge_mask(edge_subset)?;
    Ok(strongly_connected_under(g, |e| mask[e]))
}

pub(crate) fn strongly_connected_under<F>(g: &DirectedGraph, allowed: F) -> bool
where
    F: Fn(EdgeId) -> bool,
{
    if g.vertex_count() <= 1 {
        return true;
    }
    reach(g, 0, true, &allowed).into_iter().all(|b| b) && reach(g, 0, false, &allowed).into_iter().all(|b| b)
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn build_keeps_edge_order() {
        let g = c3();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(g.find_edge(1, 2), Some(1));
        assert_eq!(g.find_edge(2, 1), None);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            DirectedGraph::new(2, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop { edge: 0, vertex: 0 }
        );
        assert_eq!(
            DirectedGraph::new(3, &[(0, 1), (0, 1)]).unwrap_err(),
            GraphError::DuplicateEdge {
                edge: 1,
                first: 0,
                tail: 0,
                head: 1
            }
        );
        assert!(matches!(
            DirectedGraph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn strong_connectivity_on_subsets() {
        let g = c3();
        assert!(is_strongly_connected_on(&g, &[0, 1, 2]).unwrap());
        for drop in 0..3 {
            let rest: Vec<_> = (0..3).filter(|&e| e != drop).collect();
            assert!(!is_strongly_connected_on(&g, &rest).unwrap());
        }
        let k = k22g();
        // (0,1),(0,2),(3,0),(4,0),(1,3),(2,4)
        assert!(is_strongly_connected_on(&k, &[0, 1, 2, 3, 4, 7]).unwrap());
        assert_eq!(is_strongly_connected_on(&g, &[7]), Err(GraphError::UnknownEdge(7)));
    }

    #[test]
    fn subgraphs_renumber_vertices() {
        let g = k22g();
        let sub = g.edge_subgraph(&[4, 0, 2]).unwrap();
        assert_eq!(sub.vertex_origin, vec![0, 1, 3]);
        assert_eq!(sub.edge_origin, vec![0, 2, 4]);
        assert_eq!(sub.graph.edges(), &[(0, 1), (2, 0), (1, 2)]);

        let ind = g.induced_subgraph(&[0, 1, 3]).unwrap();
        assert_eq!(ind.edge_origin, vec![0, 2, 4]);
    }

    #[test]
    fn cycle_from_vertices() {
        let g = k22g();
        let c = Cycle::from_vertices(&g, vec![0, 1, 3]).unwrap();
        assert_eq!(c.edges(), &[0, 4, 2]);
        assert!(Cycle::from_vertices(&g, vec![0, 3, 1]).is_none());
        assert!(Cycle::from_vertices(&g, vec![0]).is_none());
    }
}
