//! Seeded instance generators. Every generator is a pure function of its
//! arguments (ChaCha8 seeded from `seed`).

use std::collections::{HashSet, VecDeque};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::OracleError;
use crate::cover::UndirectedCoverGraph;
use crate::graph::{is_strongly_connected, DirectedGraph};

const REJECTION_BUDGET: usize = 10_000;

/// Largest vertex count accepted by [`enumerate_short_cycle_sc_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 5;

fn check_density(density: f64) -> Result<(), OracleError> {
    if (0.0..=1.0).contains(&density) {
        Ok(())
    } else {
        Err(OracleError::InvalidParameter(format!(
            "density {density} outside [0, 1]"
        )))
    }
}

/// Adjacency kept in sync while a graph grows.
struct Growing {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    present: HashSet<(usize, usize)>,
    pairs: Vec<(usize, usize)>,
}

impl Growing {
    fn new() -> Self {
        Self {
            out: Vec::new(),
            inn: Vec::new(),
            present: HashSet::new(),
            pairs: Vec::new(),
        }
    }

    fn n(&self) -> usize {
        self.out.len()
    }

    fn add_vertex(&mut self) -> usize {
        self.out.push(Vec::new());
        self.inn.push(Vec::new());
        self.n() - 1
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.present.contains(&(u, v)));
        self.present.insert((u, v));
        self.out[u].push(v);
        self.inn[v].push(u);
        self.pairs.push((u, v));
    }

    /// Whether `to` is reachable from `from` without passing through
    /// `blocked` vertices and, if given, without using edge `skip`.
    fn reaches(&self, from: usize, to: usize, blocked: &[usize], skip: Option<(usize, usize)>) -> bool {
        let mut seen = vec![false; self.n()];
        for &b in blocked {
            seen[b] = true;
        }
        if seen[from] {
            return false;
        }
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return true;
            }
            for &w in &self.out[v] {
                if !seen[w] && skip != Some((v, w)) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    /// Adding `(a, b)` keeps every cycle at length three or less iff no
    /// simple path from `b` to `a` has three or more edges.
    fn chord_is_safe(&self, a: usize, b: usize) -> bool {
        for &p1 in &self.out[b] {
            if p1 == a {
                continue;
            }
            for &p2 in &self.out[p1] {
                if p2 == a || p2 == b {
                    continue;
                }
                if self.reaches(p2, a, &[b, p1], None) {
                    return false;
                }
            }
        }
        true
    }

    fn into_graph(self) -> DirectedGraph {
        DirectedGraph::new(self.n(), &self.pairs).expect("generator keeps edges simple")
    }
}

/// Random strongly connected digraph on exactly `n` vertices whose cycles
/// all have length two or three, grown from a triangle or 2-cycle by pendant
/// triangles, pendant 2-cycles, ears across existing edges, and chords that
/// only close short cycles.
pub fn gen_triangle_composite(n: usize, seed: u64) -> Result<DirectedGraph, OracleError> {
    if n < 2 {
        return Err(OracleError::InvalidParameter(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Growing::new();
    let a = g.add_vertex();
    let b = g.add_vertex();
    if n >= 3 && rng.gen_bool(0.5) {
        let c = g.add_vertex();
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(c, a);
    } else {
        g.add_edge(a, b);
        g.add_edge(b, a);
    }

    let mut rejected = 0;
    while g.n() < n {
        if rejected > REJECTION_BUDGET {
            return Err(OracleError::GenerationFailed(rejected));
        }
        let remaining = n - g.n();
        let u = rng.gen_range(0..g.n());
        match rng.gen_range(0..4) {
            0 if remaining >= 2 => {
                let x = g.add_vertex();
                let y = g.add_vertex();
                g.add_edge(u, x);
                g.add_edge(x, y);
                g.add_edge(y, u);
            }
            1 => {
                let x = g.add_vertex();
                g.add_edge(u, x);
                g.add_edge(x, u);
            }
            _ => {
                // Ear v -> x -> u across edge (u, v): the new cycles are the
                // triangle plus x spliced into every u ~> v path other than
                // the edge itself, so there must be none.
                let &(u, v) = g.pairs.choose(&mut rng).expect("graph has edges");
                if g.reaches(u, v, &[], Some((u, v))) {
                    rejected += 1;
                    continue;
                }
                let x = g.add_vertex();
                g.add_edge(v, x);
                g.add_edge(x, u);
            }
        }
        if rng.gen_bool(0.5) {
            try_chord(&mut g, &mut rng);
        }
    }
    for _ in 0..n / 3 {
        try_chord(&mut g, &mut rng);
    }
    Ok(g.into_graph())
}

/// One attempt at an extra edge closing a 2- or 3-cycle.
fn try_chord(g: &mut Growing, rng: &mut ChaCha8Rng) {
    let &(w, a) = g.pairs.choose(rng).expect("graph has edges");
    let b = if rng.gen_bool(0.3) {
        // reverse an existing edge: a 2-cycle
        w
    } else {
        // close a triangle b -> w -> a
        match g.inn[w].choose(rng) {
            Some(&b) if b != a => b,
            _ => return,
        }
    };
    if !g.present.contains(&(a, b)) && g.chord_is_safe(a, b) {
        g.add_edge(a, b);
    }
}

/// Each ordered pair becomes an edge independently with probability
/// `density`.
pub fn gen_random_digraph(n: usize, density: f64, seed: u64) -> Result<DirectedGraph, OracleError> {
    check_density(density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_digraph(n, density, &mut rng))
}

fn random_digraph(n: usize, density: f64, rng: &mut ChaCha8Rng) -> DirectedGraph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .cartesian_product(0..n)
        .filter(|&(u, v)| u != v && rng.gen_bool(density))
        .collect();
    DirectedGraph::new(n, &pairs).expect("pairs are distinct and loop-free")
}

/// [`gen_random_digraph`] conditioned on strong connectivity by rejection.
pub fn gen_random_sc_digraph(n: usize, density: f64, seed: u64) -> Result<DirectedGraph, OracleError> {
    check_density(density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let g = random_digraph(n, density, &mut rng);
        if is_strongly_connected(&g) {
            return Ok(g);
        }
    }
    Err(OracleError::GenerationFailed(REJECTION_BUDGET))
}

/// Random DAG: edges only go from a smaller to a larger position in a
/// random vertex order.
pub fn gen_random_dag(n: usize, density: f64, seed: u64) -> Result<DirectedGraph, OracleError> {
    check_density(density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let pairs: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|_| rng.gen_bool(density))
        .map(|(i, j)| (order[i], order[j]))
        .collect();
    Ok(DirectedGraph::new(n, &pairs).expect("pairs are distinct and loop-free"))
}

/// A simple bipartite graph with sides `0..left` and `left..left + right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    pub graph: UndirectedCoverGraph,
    pub left: Vec<usize>,
}

/// Random simple bipartite graph: each left-right pair is an edge with
/// probability `density`, then every isolated vertex gets one edge to a
/// uniformly chosen vertex of the other side.
pub fn gen_random_bipartite(
    left: usize,
    right: usize,
    density: f64,
    seed: u64,
) -> Result<BipartiteInstance, OracleError> {
    check_density(density)?;
    if left == 0 || right == 0 {
        return Err(OracleError::InvalidParameter("both sides need a vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..left)
        .cartesian_product(left..left + right)
        .filter(|_| rng.gen_bool(density))
        .collect();
    let mut touched = vec![false; left + right];
    for &(a, b) in &edges {
        touched[a] = true;
        touched[b] = true;
    }
    for v in 0..left + right {
        if touched[v] {
            continue;
        }
        let edge = if v < left {
            (v, rng.gen_range(left..left + right))
        } else {
            (rng.gen_range(0..left), v)
        };
        touched[edge.0] = true;
        touched[edge.1] = true;
        edges.push(edge);
    }
    edges.sort_unstable();
    Ok(BipartiteInstance {
        graph: UndirectedCoverGraph::new(left + right, edges).expect("endpoints in range"),
        left: (0..left).collect(),
    })
}

/// Every strongly connected digraph on `n` vertices whose longest cycle has
/// at most `max_len` edges, one per isomorphism class. Each representative
/// is the labelling whose edge bitmask is smallest; the result is sorted by
/// edge count, then bitmask.
pub fn enumerate_short_cycle_sc_graphs(n: usize, max_len: usize) -> Result<Vec<DirectedGraph>, OracleError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(OracleError::VertexCapExceeded {
            vertices: n,
            cap: MAX_ENUMERATION_VERTICES,
        });
    }
    if n < 2 {
        return Err(OracleError::InvalidParameter(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let slots: Vec<(usize, usize)> = (0..n).cartesian_product(0..n).filter(|&(u, v)| u != v).collect();
    let slot_of = |u: usize, v: usize| slots.iter().position(|&s| s == (u, v)).unwrap();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let relabel: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| slots.iter().map(|&(u, v)| slot_of(p[u], p[v])).collect())
        .collect();

    let mut seen = HashSet::new();
    let mut found = Vec::new();
    for mask in 0u32..(1 << slots.len()) {
        let mut out = vec![0u32; n];
        for (i, &(u, v)) in slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out[u] |= 1 << v;
            }
        }
        if !strongly_connected_bits(&out) {
            continue;
        }
        let canonical = relabel
            .iter()
            .map(|map| {
                (0..slots.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc | 1 << map[i])
            })
            .min()
            .unwrap();
        if canonical != mask || !seen.insert(mask) {
            continue;
        }
        if longest_cycle_bits(&out) <= max_len {
            let pairs: Vec<(usize, usize)> = (0..slots.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| slots[i])
                .collect();
            found.push((mask.count_ones(), mask, pairs));
        }
    }
    found.sort_unstable_by_key(|&(count, mask, _)| (count, mask));
    Ok(found
        .into_iter()
        .map(|(_, _, pairs)| DirectedGraph::new(n, &pairs).expect("slots are simple"))
        .collect())
}

fn strongly_connected_bits(out: &[u32]) -> bool {
    let n = out.len();
    let full = (1u32 << n) - 1;
    let mut inn = vec![0u32; n];
    for (u, &row) in out.iter().enumerate() {
        for (v, col) in inn.iter_mut().enumerate() {
            if row >> v & 1 == 1 {
                *col |= 1 << u;
            }
        }
    }
    let closure = |rows: &[u32]| {
        let mut seen = 1u32;
        loop {
            let next = (0..n)
                .filter(|&v| seen >> v & 1 == 1)
                .fold(seen, |acc, v| acc | rows[v]);
            if next == seen {
                return seen;
            }
            seen = next;
        }
    };
    closure(out) == full && closure(&inn) == full
}

fn longest_cycle_bits(out: &[u32]) -> usize {
    fn dfs(out: &[u32], start: usize, v: usize, visited: u32, depth: usize, best: &mut usize) {
        for w in 0..out.len() {
            if out[v] >> w & 1 == 0 {
                continue;
            }
            if w == start {
                *best = (*best).max(depth);
            } else if w > start && visited >> w & 1 == 0 {
                dfs(out, start, w, visited | 1 << w, depth + 1, best);
            }
        }
    }
    let mut best = 0;
    for start in 0..out.len() {
        dfs(out, start, start, 1 << start, 1, &mut best);
    }
    best
}
