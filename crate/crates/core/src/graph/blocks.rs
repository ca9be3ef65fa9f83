use super::{DirectedGraph, EdgeId, VertexId};

/// Biconnected components of the underlying undirected multigraph.
///
/// Antiparallel digraph edges become two parallel undirected edges, so a
/// 2-cycle always lands in a single block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge ids of each block, ascending; blocks ordered by smallest edge id.
    pub blocks: Vec<Vec<EdgeId>>,
    /// Articulation vertices, ascending.
    pub cut_vertices: Vec<VertexId>,
}

pub fn block_decomposition(g: &DirectedGraph) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut adjacency: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        adjacency[u].push((v, e));
        adjacency[v].push((u, e));
    }

    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks = Vec::new();
    let mut time = 0;
    // (vertex, edge used to enter it, next adjacency position)
    let mut frames: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN || adjacency[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        frames.push((root, None, 0));

        while let Some(frame) = frames.last_mut() {
            let (v, via, pos) = *frame;
            if let Some(&(w, e)) = adjacency[v].get(pos) {
                frame.2 += 1;
                if Some(e) == via {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            let Some(&(parent, _, _)) = frames.last() else {
                continue;
            };
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let entry = via.expect("non-root frame has an entry edge");
                let mut block = Vec::new();
                loop {
                    let e = edge_stack.pop().expect("block edge stack underflow");
                    block.push(e);
                    if e == entry {
                        break;
                    }
                }
                block.sort_unstable();
                blocks.push(block);
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    blocks.sort_unstable_by_key(|b| b[0]);
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}
