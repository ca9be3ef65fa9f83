//! Bipartite matching, minimum edge cover, and the gadget that turns an edge
//! cover instance back into a digraph with no cycle longer than three.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{DirectedGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("cover edge {edge}: endpoint {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("graph is not bipartite (edge {0} closes an odd cycle)")]
    NotBipartite(usize),
    #[error("vertex {0} has no incident edge")]
    IsolatedVertex(usize),
    #[error("edge {0} is a loop")]
    Loop(usize),
    #[error("edge {0} does not cross the bipartition")]
    SameSide(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Undirected multigraph with loops. An edge `(a, a)` is a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedCoverGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedCoverGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, CoverError> {
        for (edge, &(a, b)) in edges.iter().enumerate() {
            for vertex in [a, b] {
                if vertex >= vertex_count {
                    return Err(CoverError::VertexOutOfRange {
                        edge,
                        vertex,
                        vertex_count,
                    });
                }
            }
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (a, b) = self.edges[edge];
        a == b
    }

    /// Incident edge ids per vertex, ascending; a loop is listed once.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            inc[a].push(e);
            if a != b {
                inc[b].push(e);
            }
        }
        inc
    }

    /// A 2-colouring of the loop-free part (`false`/`true` per vertex), or
    /// `None` if it has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        self.try_two_coloring().ok()
    }

    fn try_two_coloring(&self) -> Result<Vec<bool>, CoverError> {
        let inc = self.incidence();
        let mut color: Vec<Option<bool>> = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        for root in 0..self.vertex_count {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &e in &inc[v] {
                    let (a, b) = self.edges[e];
                    if a == b {
                        continue;
                    }
                    let w = if a == v { b } else { a };
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return Err(CoverError::NotBipartite(e)),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(color.into_iter().map(|c| c.unwrap()).collect())
    }

    fn check_no_isolated(&self) -> Result<(), CoverError> {
        let mut touched = vec![false; self.vertex_count];
        for &(a, b) in &self.edges {
            touched[a] = true;
            touched[b] = true;
        }
        match touched.iter().position(|&t| !t) {
            Some(v) => Err(CoverError::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// Whether `edges` touches every vertex.
    pub fn is_edge_cover(&self, edges: &[usize]) -> bool {
        let mut covered = vec![false; self.vertex_count];
        for &e in edges {
            let (a, b) = self.edges[e];
            covered[a] = true;
            covered[b] = true;
        }
        covered.into_iter().all(|c| c)
    }

    /// Whether `edges` is loop-free and pairwise vertex-disjoint.
    pub fn is_matching(&self, edges: &[usize]) -> bool {
        let mut used = vec![false; self.vertex_count];
        for &e in edges {
            let (a, b) = self.edges[e];
            if a == b || used[a] || used[b] {
                return false;
            }
            used[a] = true;
            used[b] = true;
        }
        true
    }
}

/// Pairwise vertex-disjoint, loop-free edge ids, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching(pub Vec<usize>);

impl Matching {
    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Edge ids touching every vertex, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeCover(pub Vec<usize>);

impl EdgeCover {
    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Maximum-cardinality matching (Hopcroft–Karp). Loops are ignored; the
/// bipartition is found by 2-colouring.
pub fn max_matching(g: &UndirectedCoverGraph) -> Result<Matching, CoverError> {
    let color = g.try_two_coloring()?;
    Ok(HopcroftKarp::new(g, &color).run())
}

const INF: usize = usize::MAX;

struct HopcroftKarp {
    /// Left vertex → (right vertex, edge id), in edge id order.
    adjacency: Vec<Vec<(usize, usize)>>,
    left: Vec<usize>,
    mate_left: Vec<Option<(usize, usize)>>,
    mate_right: Vec<Option<usize>>,
    dist: Vec<usize>,
}

impl HopcroftKarp {
    fn new(g: &UndirectedCoverGraph, color: &[bool]) -> Self {
        let n = g.vertex_count();
        let mut adjacency = vec![Vec::new(); n];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if a == b {
                continue;
            }
            let (l, r) = if color[a] { (b, a) } else { (a, b) };
            adjacency[l].push((r, e));
        }
        Self {
            adjacency,
            left: (0..n).filter(|&v| !color[v]).collect(),
            mate_left: vec![None; n],
            mate_right: vec![None; n],
            dist: vec![INF; n],
        }
    }

    fn run(mut self) -> Matching {
        while let Some(limit) = self.layer() {
            let mut cursor = vec![0; self.adjacency.len()];
            for i in 0..self.left.len() {
                let u = self.left[i];
                if self.mate_left[u].is_none() {
                    self.augment(u, limit, &mut cursor);
                }
            }
        }
        let mut edges: Vec<usize> = self
            .left
            .iter()
            .filter_map(|&u| self.mate_left[u].map(|(_, e)| e))
            .collect();
        edges.sort_unstable();
        Matching(edges)
    }

    /// BFS layering from free left vertices; returns the layer at which a
    /// free right vertex is first reached.
    fn layer(&mut self) -> Option<usize> {
        let mut queue = VecDeque::new();
        for &u in &self.left {
            if self.mate_left[u].is_none() {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = INF;
            }
        }
        let mut limit = INF;
        while let Some(u) = queue.pop_front() {
            if self.dist[u] >= limit {
                continue;
            }
            for &(r, _) in &self.adjacency[u] {
                match self.mate_right[r] {
                    None => limit = limit.min(self.dist[u] + 1),
                    Some(next) if self.dist[next] == INF => {
                        self.dist[next] = self.dist[u] + 1;
                        queue.push_back(next);
                    }
                    Some(_) => {}
                }
            }
        }
        (limit != INF).then_some(limit)
    }

    /// Depth-first search for an augmenting path along the layering.
    fn augment(&mut self, root: usize, limit: usize, cursor: &mut [usize]) -> bool {
        let mut stack = vec![root];
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        while let Some(&u) = stack.last() {
            let Some(&(r, e)) = self.adjacency[u].get(cursor[u]) else {
                self.dist[u] = INF;
                stack.pop();
                chosen.pop();
                continue;
            };
            cursor[u] += 1;
            match self.mate_right[r] {
                None if self.dist[u] + 1 == limit => {
                    chosen.push((r, e));
                    for (&l, &(r, e)) in stack.iter().zip(&chosen) {
                        self.mate_left[l] = Some((r, e));
                        self.mate_right[r] = Some(l);
                    }
                    return true;
                }
                Some(next) if self.dist[next] == self.dist[u] + 1 => {
                    chosen.push((r, e));
                    stack.push(next);
                }
                _ => {}
            }
        }
        false
    }
}

/// Minimum edge cover. Vertices whose only edges are loops take their
/// smallest loop; the rest take a maximum matching plus, for each unmatched
/// vertex, its smallest incident non-loop edge.
pub fn min_edge_cover(g: &UndirectedCoverGraph) -> Result<EdgeCover, CoverError> {
    g.check_no_isolated()?;
    let color = g.try_two_coloring()?;
    let matching = HopcroftKarp::new(g, &color).run();
    let inc = g.incidence();
    let mut matched = vec![false; g.vertex_count()];
    for &e in matching.edges() {
        let (a, b) = g.edges()[e];
        matched[a] = true;
        matched[b] = true;
    }
    let mut chosen = matching.0;
    for v in 0..g.vertex_count() {
        if matched[v] {
            continue;
        }
        let pick = inc[v]
            .iter()
            .copied()
            .find(|&e| !g.is_loop(e))
            .or_else(|| inc[v].first().copied())
            .expect("no isolated vertices");
        chosen.push(pick);
    }
    chosen.sort_unstable();
    chosen.dedup();
    Ok(EdgeCover(chosen))
}

/// Directs a bipartite edge cover instance into a digraph whose minimum
/// strongly connected spanning subgraphs are exactly the instance's edge
/// covers plus all root edges.
///
/// Layout: vertex 0 is the root and bipartite vertex `i` becomes `i + 1`.
/// Edges are listed root → left (ascending), then right → root (ascending),
/// then one left → right edge per bipartite edge in id order.
pub fn edge_cover_to_scss3(bipartite: &UndirectedCoverGraph, left: &[usize]) -> Result<DirectedGraph, CoverError> {
    let n = bipartite.vertex_count();
    let mut is_left = vec![false; n];
    for &v in left {
        if v >= n {
            return Err(CoverError::VertexOutOfRange {
                edge: usize::MAX,
                vertex: v,
                vertex_count: n,
            });
        }
        is_left[v] = true;
    }
    bipartite.check_no_isolated()?;
    let mut pairs = Vec::with_capacity(n + bipartite.edge_count());
    pairs.extend((0..n).filter(|&v| is_left[v]).map(|v| (0, v + 1)));
    pairs.extend((0..n).filter(|&v| !is_left[v]).map(|v| (v + 1, 0)));
    for (e, &(a, b)) in bipartite.edges().iter().enumerate() {
        if a == b {
            return Err(CoverError::Loop(e));
        }
        let (l, r) = match (is_left[a], is_left[b]) {
            (true, false) => (a, b),
            (false, true) => (b, a),
            _ => return Err(CoverError::SameSide(e)),
        };
        pairs.push((l + 1, r + 1));
    }
    Ok(DirectedGraph::new(n + 1, &pairs)?)
}
