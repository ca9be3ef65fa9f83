use std::collections::HashMap;

use super::{Cycle, DirectedGraph, EdgeId, GraphError, VertexId};

/// A contracted graph plus the maps back to the graph it came from.
#[derive(Debug, Clone)]
pub struct ContractionResult {
    pub graph: DirectedGraph,
    /// Old vertex → new vertex.
    pub vertex_map: Vec<VertexId>,
    /// New edge → ascending old edge ids merged into it.
    pub edge_provenance: Vec<Vec<EdgeId>>,
    /// Number of old edges that became loops and were dropped.
    pub dropped_loops: usize,
}

impl ContractionResult {
    /// Smallest old edge behind each new edge.
    pub fn representative(&self, new_edge: EdgeId) -> EdgeId {
        self.edge_provenance[new_edge][0]
    }
}

/// Identifies the vertices of each group. Group `i` becomes new vertex `i`.
/// Parallel edges are merged (their old ids pooled in the provenance) and
/// loops are dropped. New edges are ordered by their smallest old id.
pub fn contract_vertices(g: &DirectedGraph, groups: &[Vec<VertexId>]) -> Result<ContractionResult, GraphError> {
    let n = g.vertex_count();
    let mut vertex_map = vec![usize::MAX; n];
    for (i, group) in groups.iter().enumerate() {
        if group.is_empty() {
            return Err(GraphError::MalformedPartition(format!("group {i} is empty")));
        }
        for &v in group {
            if v >= n {
                return Err(GraphError::MalformedPartition(format!("vertex {v} out of range")));
            }
            if vertex_map[v] != usize::MAX {
                return Err(GraphError::MalformedPartition(format!("vertex {v} appears twice")));
            }
            vertex_map[v] = i;
        }
    }
    if let Some(v) = vertex_map.iter().position(|&m| m == usize::MAX) {
        return Err(GraphError::MalformedPartition(format!("vertex {v} is not covered")));
    }

    let mut slot: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    let mut pairs = Vec::new();
    let mut edge_provenance: Vec<Vec<EdgeId>> = Vec::new();
    let mut dropped_loops = 0;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let key = (vertex_map[u], vertex_map[v]);
        if key.0 == key.1 {
            dropped_loops += 1;
            continue;
        }
        let idx = *slot.entry(key).or_insert_with(|| {
            pairs.push(key);
            edge_provenance.push(Vec::new());
            pairs.len() - 1
        });
        edge_provenance[idx].push(e);
    }
    let graph = DirectedGraph::new(groups.len(), &pairs).expect("merged edges are distinct and loop-free");
    Ok(ContractionResult {
        graph,
        vertex_map,
        edge_provenance,
        dropped_loops,
    })
}

/// Contracts the vertices of `cycle` into one. New vertices are numbered by
/// the smallest old vertex they contain.
pub fn contract_cycle(g: &DirectedGraph, cycle: &Cycle) -> ContractionResult {
    let mut on_cycle = vec![false; g.vertex_count()];
    for &v in cycle.vertices() {
        on_cycle[v] = true;
    }
    let first = *cycle.vertices().iter().min().expect("cycles are non-empty");
    let mut groups = Vec::with_capacity(g.vertex_count() - cycle.len() + 1);
    for (v, &merged) in on_cycle.iter().enumerate() {
        if v == first {
            let mut members = cycle.vertices().to_vec();
            members.sort_unstable();
            groups.push(members);
        } else if !merged {
            groups.push(vec![v]);
        }
    }
    contract_vertices(g, &groups).expect("cycle vertices give a valid partition")
}
