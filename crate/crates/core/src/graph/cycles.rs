//! Long-cycle search.
//!
//! A digraph has a simple cycle with at least `t >= 3` edges iff it has a
//! simple path `v0 -> v1 -> ... -> v(t-1)` such that `v0` is reachable from
//! `v(t-1)` once the interior `v1 .. v(t-2)` is deleted. The search fixes the
//! interior (a simple path of `t - 2` vertices, enumerated depth-first), then
//! answers "does some out-neighbour of the interior's last vertex reach some
//! other in-neighbour of its first vertex" with a single propagation that
//! tracks up to two distinct sources per vertex. Cost is
//! `O(#interior paths * (n + m))`, i.e. `O(m (n + m))` for `t = 4`.

use std::collections::VecDeque;

use super::scc::strongly_connected_components;
use super::{shortest_path_avoiding, Cycle, DirectedGraph, VertexId};

/// Some simple cycle of `g`, or `None` if `g` is acyclic.
pub fn find_any_cycle(g: &DirectedGraph) -> Option<Cycle> {
    let components = strongly_connected_components(g);
    let component = components.iter().find(|c| c.len() > 1)?;
    let mut inside = vec![false; g.vertex_count()];
    for &v in component {
        inside[v] = true;
    }
    let start = component[0];
    let next = g.successors(start).find(|&w| inside[w])?;
    let blocked: Vec<bool> = inside.iter().map(|&b| !b).collect();
    let path = shortest_path_avoiding(g, next, start, &blocked)?;
    let mut vertices = vec![start];
    vertices.extend_from_slice(&path[..path.len() - 1]);
    Cycle::from_vertices(g, vertices)
}

/// Some simple cycle with at least `t` edges, or `None` if there is none.
///
/// Deterministic: interiors are enumerated depth-first from each start
/// vertex in ascending order with successors in ascending order; the first
/// interior that closes wins, closed through its smallest admissible
/// in-neighbour and a shortest return path.
pub fn find_cycle_with_length_at_least(g: &DirectedGraph, t: usize) -> Option<Cycle> {
    if t <= 2 {
        return find_any_cycle(g);
    }
    if t > g.vertex_count() {
        return None;
    }
    let mut search = LongCycleSearch::new(g, t - 2);
    for start in 0..g.vertex_count() {
        if let Some(cycle) = search.search_from(start) {
            return Some(cycle);
        }
    }
    None
}

/// Whether every simple cycle of `g` has at most `max_len` edges.
pub fn max_cycle_length_at_most(g: &DirectedGraph, max_len: usize) -> bool {
    find_cycle_with_length_at_least(g, max_len + 1).is_none()
}

const NONE: usize = usize::MAX;

struct LongCycleSearch<'g> {
    g: &'g DirectedGraph,
    interior_len: usize,
    interior: Vec<VertexId>,
    in_interior: Vec<bool>,
    labels: Vec<[usize; 2]>,
    touched: Vec<VertexId>,
    queue: VecDeque<(VertexId, usize)>,
}

impl<'g> LongCycleSearch<'g> {
    fn new(g: &'g DirectedGraph, interior_len: usize) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            interior_len,
            interior: Vec::with_capacity(interior_len),
            in_interior: vec![false; n],
            labels: vec![[NONE; 2]; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn search_from(&mut self, start: VertexId) -> Option<Cycle> {
        // Prune starts that cannot be followed or preceded at all.
        if self.g.in_degree(start) == 0 || self.g.out_degree(start) == 0 {
            return None;
        }
        self.push(start);
        let found = self.extend();
        self.pop();
        found
    }

    fn push(&mut self, v: VertexId) {
        self.interior.push(v);
        self.in_interior[v] = true;
    }

    fn pop(&mut self) {
        let v = self.interior.pop().expect("interior underflow");
        self.in_interior[v] = false;
    }

    fn extend(&mut self) -> Option<Cycle> {
        if self.interior.len() == self.interior_len {
            return self.close();
        }
        let last = *self.interior.last().expect("interior is non-empty");
        let g = self.g;
        for w in g.successors(last) {
            if self.in_interior[w] {
                continue;
            }
            self.push(w);
            let found = self.extend();
            self.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn add_label(&mut self, v: VertexId, label: usize) -> bool {
        let slots = &mut self.labels[v];
        if slots[0] == label || slots[1] == label {
            return false;
        }
        if slots[0] == NONE {
            slots[0] = label;
            self.touched.push(v);
        } else if slots[1] == NONE {
            slots[1] = label;
        } else {
            return false;
        }
        self.queue.push_back((v, label));
        true
    }

    fn close(&mut self) -> Option<Cycle> {
        let g = self.g;
        let first = self.interior[0];
        let last = *self.interior.last().expect("interior is non-empty");

        for s in g.successors(last) {
            if !self.in_interior[s] {
                self.add_label(s, s);
            }
        }
        while let Some((v, label)) = self.queue.pop_front() {
            for w in g.successors(v) {
                if !self.in_interior[w] {
                    self.add_label(w, label);
                }
            }
        }

        let mut witness = None;
        for v0 in g.predecessors(first) {
            if self.in_interior[v0] {
                continue;
            }
            let [a, b] = self.labels[v0];
            let source = if a != NONE && a != v0 {
                a
            } else if b != NONE && b != v0 {
                b
            } else {
                continue;
            };
            witness = Some((v0, source));
            break;
        }

        for v in self.touched.drain(..) {
            self.labels[v] = [NONE; 2];
        }

        let (v0, source) = witness?;
        let back = shortest_path_avoiding(g, source, v0, &self.in_interior)
            .expect("labelled vertex is reachable from its label");
        let mut vertices = vec![v0];
        vertices.extend_from_slice(&self.interior);
        vertices.extend_from_slice(&back[..back.len() - 1]);
        let cycle = Cycle::from_vertices(g, vertices).expect("constructed walk is a simple cycle");
        debug_assert!(cycle.len() >= self.interior_len + 2);
        Some(cycle)
    }
}
