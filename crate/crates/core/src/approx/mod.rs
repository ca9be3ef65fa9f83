//! Cycle-contraction approximation for strongly connected spanning
//! subgraphs, finished exactly once no cycle longer than three remains.
//!
//! For thresholds `t = k, k-1, ..., 4` the algorithm repeatedly finds a cycle
//! with at least `t` edges in the current graph, keeps its edges, and
//! contracts it to a single vertex. When phase 4 ends the contracted graph
//! `H` has no cycle longer than three and is solved optimally; the answer is
//! the kept cycle edges plus that optimal solution, lifted back to original
//! edge ids.

pub mod bounds;
mod meg;

use thiserror::Error;

use crate::graph::{contract_cycle, find_cycle_with_length_at_least, is_strongly_connected, DirectedGraph, EdgeId};
use crate::scss3::{scss3_minimum, Scss3Error};

pub use bounds::{
    bounded_cycle_bound, exact_bound, performance_bounds, scss_lower_bound, scss_lower_bound_ceil, simplified_bound,
    BoundsError, GuaranteeReport,
};
pub use meg::{dag_transitive_reduction, meg};

/// Default largest contraction threshold.
pub const DEFAULT_THRESHOLD: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("graph has a cycle; transitive reduction needs a DAG")]
    Cyclic,
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Exact(#[from] Scss3Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApproxOptions {
    /// Largest contraction threshold, at least 4.
    pub k: usize,
    /// Solve the final graph optimally. When off, every remaining edge of
    /// the final graph is kept instead.
    pub exact_finish: bool,
}

impl Default for ApproxOptions {
    fn default() -> Self {
        Self {
            k: DEFAULT_THRESHOLD,
            exact_finish: true,
        }
    }
}

impl ApproxOptions {
    pub fn with_k(k: usize) -> Self {
        Self { k, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedCycle {
    /// Original edge ids kept for this cycle (one per cycle edge).
    pub edges: Vec<EdgeId>,
    pub vertices_after: usize,
}

impl ContractedCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase {
    pub threshold: usize,
    pub cycles: Vec<ContractedCycle>,
    pub vertices_remaining: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionTrace {
    pub initial_vertices: usize,
    /// Phases in decreasing threshold order.
    pub phases: Vec<Phase>,
    /// The contracted graph left after the last phase.
    pub final_graph: DirectedGraph,
    /// Final-graph edge → original edge ids it stands for (ascending).
    pub final_provenance: Vec<Vec<EdgeId>>,
    /// Original edge ids chosen for the final graph.
    pub final_solution: Vec<EdgeId>,
}

impl ContractionTrace {
    pub fn contracted_edge_count(&self) -> usize {
        self.phases
            .iter()
            .flat_map(|p| &p.cycles)
            .map(ContractedCycle::len)
            .sum()
    }

    pub fn final_vertices(&self) -> usize {
        self.final_graph.vertex_count()
    }

    /// Any strongly connected graph on `n` vertices has a spanning strongly
    /// connected subgraph with at most `2(n - 1)` edges (two branchings).
    pub fn final_within_branching_bound(&self) -> bool {
        self.final_solution.len() <= 2 * self.final_vertices().saturating_sub(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxSolution {
    /// Ascending original edge ids.
    pub edges: Vec<EdgeId>,
    pub trace: ContractionTrace,
}

/// Contraction approximation with the exact finish.
pub fn scss_approx(g: &DirectedGraph, options: ApproxOptions) -> Result<ApproxSolution, ApproxError> {
    if options.k < 4 {
        return Err(BoundsError::ThresholdTooSmall(options.k).into());
    }
    if !is_strongly_connected(g) {
        return Err(ApproxError::NotStronglyConnected);
    }

    let mut current = g.clone();
    let mut provenance: Vec<Vec<EdgeId>> = (0..g.edge_count()).map(|e| vec![e]).collect();
    let mut kept = Vec::new();
    let mut phases = Vec::new();

    for threshold in (4..=options.k).rev() {
        let mut cycles = Vec::new();
        while let Some(cycle) = find_cycle_with_length_at_least(&current, threshold) {
            let edges: Vec<EdgeId> = cycle.edges().iter().map(|&e| provenance[e][0]).collect();
            let contraction = contract_cycle(&current, &cycle);
            provenance = contraction
                .edge_provenance
                .iter()
                .map(|merged| {
                    let mut ids: Vec<EdgeId> = merged.iter().flat_map(|&e| provenance[e].iter().copied()).collect();
                    ids.sort_unstable();
                    ids
                })
                .collect();
            current = contraction.graph;
            kept.extend_from_slice(&edges);
            cycles.push(ContractedCycle {
                edges,
                vertices_after: current.vertex_count(),
            });
        }
        phases.push(Phase {
            threshold,
            cycles,
            vertices_remaining: current.vertex_count(),
        });
    }

    let final_local = if options.exact_finish {
        scss3_minimum(&current)?
    } else {
        (0..current.edge_count()).collect()
    };
    let final_solution: Vec<EdgeId> = final_local.iter().map(|&e| provenance[e][0]).collect();

    let mut edges = kept;
    edges.extend_from_slice(&final_solution);
    edges.sort_unstable();
    debug_assert!(edges.windows(2).all(|w| w[0] < w[1]), "kept edges are distinct");

    Ok(ApproxSolution {
        edges,
        trace: ContractionTrace {
            initial_vertices: g.vertex_count(),
            phases,
            final_graph: current,
            final_provenance: provenance,
            final_solution,
        },
    })
}
