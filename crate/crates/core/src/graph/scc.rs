use super::{DirectedGraph, EdgeId, VertexId};

/// Strongly connected components in a topological order of the condensation
/// (every edge between components goes from an earlier to a later one).
/// Each component is sorted ascending.
pub fn strongly_connected_components(g: &DirectedGraph) -> Vec<Vec<VertexId>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut counter = 0;
    // (vertex, position in its out-edge list)
    let mut frames: Vec<(VertexId, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, 0));

        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            if let Some(&e) = g.out_edges(v).get(*pos) {
                *pos += 1;
                let w = g.edge(e).1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    components.reverse();
    components
}

/// The component DAG of a digraph.
#[derive(Debug, Clone)]
pub struct Condensation {
    pub dag: DirectedGraph,
    pub components: Vec<Vec<VertexId>>,
    pub component_of: Vec<usize>,
    /// DAG edge id → smallest original edge id joining the two components.
    pub representative_edge: Vec<EdgeId>,
}

pub fn condensation(g: &DirectedGraph) -> Condensation {
    let components = strongly_connected_components(g);
    let mut component_of = vec![0; g.vertex_count()];
    for (c, members) in components.iter().enumerate() {
        for &v in members {
            component_of[v] = c;
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut pairs = Vec::new();
    let mut representative_edge = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (cu, cv) = (component_of[u], component_of[v]);
        if cu != cv && seen.insert((cu, cv)) {
            pairs.push((cu, cv));
            representative_edge.push(e);
        }
    }
    let dag = DirectedGraph::new(components.len(), &pairs).expect("condensation edges are distinct");
    Condensation {
        dag,
        components,
        component_of,
        representative_edge,
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn cycle_is_one_component() {
        assert_eq!(strongly_connected_components(&c3()), vec![vec![0, 1, 2]]);
        assert_eq!(strongly_connected_components(&k22g()), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn components_come_in_topological_order() {
        let g = DirectedGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(strongly_connected_components(&g), vec![vec![0], vec![1]]);
        let g = DirectedGraph::new(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(strongly_connected_components(&g), vec![vec![2], vec![1], vec![0]]);
    }

    #[test]
    fn condensation_of_two_linked_two_cycles() {
        let g = DirectedGraph::new(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 2)]).unwrap();
        let c = condensation(&g);
        assert_eq!(c.dag.vertex_count(), 2);
        assert_eq!(c.dag.edges(), &[(0, 1)]);
        assert_eq!(c.representative_edge, vec![2]);

        let c = condensation(&c3());
        assert_eq!(c.dag.vertex_count(), 1);
        assert_eq!(c.dag.edge_count(), 0);
    }

    #[test]
    fn representative_is_smallest_original_edge() {
        let g = DirectedGraph::new(4, &[(0, 1), (1, 0), (2, 3), (3, 2), (1, 3), (0, 2)]).unwrap();
        let c = condensation(&g);
        assert_eq!(c.dag.edge_count(), 1);
        assert_eq!(c.representative_edge, vec![4]);
    }
}
