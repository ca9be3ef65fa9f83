//! Acceptance sweep. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use scss_core::approx::{
    bounded_cycle_bound, dag_transitive_reduction, exact_bound, performance_bounds, scss_lower_bound_ceil,
    simplified_bound,
};
use scss_core::classify::{
    build_cover_instance, classify, classify_edges, classify_edges_naive, compute_unsatisfied, EdgeClass,
};
use scss_core::cover::{edge_cover_to_scss3, max_matching, min_edge_cover, UndirectedCoverGraph};
use scss_core::graph::{block_decomposition, is_strongly_connected_on, DirectedGraph};
use scss_core::io::{parse_edge_set, write_graph};
use scss_core::oracle::{
    enumerate_short_cycle_sc_graphs, gen_random_bipartite, gen_random_dag, gen_random_digraph, gen_random_sc_digraph,
    gen_triangle_composite, max_cycle_length, min_edge_cover_bruteforce, min_equivalent_bruteforce,
    min_scss_bruteforce, reachability_equal, simple_cycles, OracleConfig,
};
use scss_core::scalar::Scalar;
use scss_core::{meg, scss3_minimum, scss_approx, ApproxOptions, Rational, Real};

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

/// Collects the first few failure descriptions.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn summary(&self) -> String {
        match self.0.len() {
            0 => String::new(),
            n => format!("; {n} failures, first: {}", self.0[0]),
        }
    }
}

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn tt() -> DirectedGraph {
    DirectedGraph::new(4, &[(0, 1), (1, 2), (2, 0), (1, 3), (3, 0)]).unwrap()
}

/// Exhaustive small corpus plus generated triangle composites.
fn corpus() -> (Vec<DirectedGraph>, usize) {
    let mut graphs = Vec::new();
    for n in 2..=5 {
        graphs.extend(enumerate_short_cycle_sc_graphs(n, 3).unwrap());
    }
    let exhaustive = graphs.len();
    for seed in 0..600u64 {
        let n = 3 + (seed as usize % 5);
        graphs.push(gen_triangle_composite(n, seed).unwrap());
    }
    (graphs, exhaustive)
}

/// Block subgraphs satisfying the fast classifier's preconditions.
fn large_blocks(g: &DirectedGraph) -> Vec<DirectedGraph> {
    block_decomposition(g)
        .blocks
        .iter()
        .map(|b| g.edge_subgraph(b).unwrap().graph)
        .filter(|b| b.vertex_count() >= 4)
        .collect()
}

fn criterion_1(corpus: &[DirectedGraph], exhaustive: usize) -> Verdict {
    let mut f = Failures::default();
    for (i, g) in corpus.iter().enumerate() {
        let exact = scss3_minimum(g).unwrap();
        let brute = min_scss_bruteforce(g, &cfg()).unwrap();
        f.check(is_strongly_connected_on(g, &exact).unwrap(), || {
            format!("graph {i} infeasible")
        });
        f.check(exact.len() == brute.len(), || {
            format!("graph {i}: {} vs brute force {}", exact.len(), brute.len())
        });
    }
    Verdict::new(
        f.0.is_empty(),
        format!(
            "scss3_minimum = brute force on {exhaustive} enumerated (n <= 5) + {} generated (n <= 7) graphs{}",
            corpus.len() - exhaustive,
            f.summary()
        ),
    )
}

fn criterion_2() -> Verdict {
    let mut f = Failures::default();
    let gadget_cfg = OracleConfig { edge_cap: 24, ..cfg() };
    let k22 = UndirectedCoverGraph::new(4, vec![(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    let k22_size = min_scss_bruteforce(&edge_cover_to_scss3(&k22, &[0, 1]).unwrap(), &gadget_cfg)
        .unwrap()
        .len();
    f.check(k22_size == 6, || format!("complete 2x2 gadget gave {k22_size}"));
    let mut count = 0;
    for seed in 0..200u64 {
        let left = 1 + (seed as usize % 4);
        let right = 1 + (seed as usize / 4 % 4);
        let density = 0.3 + 0.1 * (seed % 6) as f64;
        let b = gen_random_bipartite(left, right, density, seed).unwrap();
        let gadget = edge_cover_to_scss3(&b.graph, &b.left).unwrap();
        let brute = min_scss_bruteforce(&gadget, &gadget_cfg).unwrap().len();
        let cover = min_edge_cover_bruteforce(&b.graph, &cfg()).unwrap().len();
        let exact = scss3_minimum(&gadget).unwrap().len();
        f.check(brute == cover + left + right && exact == brute, || {
            format!("seed {seed}: brute {brute}, cover {cover} + {left} + {right}, exact {exact}")
        });
        count += 1;
    }
    Verdict::new(
        f.0.is_empty(),
        format!(
            "gadget SCSS = cover + |L| + |R| on {count} bipartite graphs; K2,2 -> {k22_size}{}",
            f.summary()
        ),
    )
}

fn criterion_3() -> Verdict {
    let mut f = Failures::default();
    let mut cross_checked = 0;
    let count = 1200u64;
    for seed in 0..count {
        let left = 1 + (seed as usize % 6);
        let right = 1 + (seed as usize / 6 % 6);
        let density = 0.2 + 0.15 * (seed % 5) as f64;
        let b = gen_random_bipartite(left, right, density, seed).unwrap();
        let n = left + right;
        let cover = min_edge_cover(&b.graph).unwrap();
        let matching = max_matching(&b.graph).unwrap();
        f.check(b.graph.is_edge_cover(cover.edges()), || {
            format!("seed {seed}: not a cover")
        });
        f.check(cover.len() == n - matching.len(), || {
            format!("seed {seed}: cover {} vs {n} - {}", cover.len(), matching.len())
        });
        if b.graph.edge_count() <= cfg().edge_cap {
            cross_checked += 1;
            let brute = min_edge_cover_bruteforce(&b.graph, &cfg()).unwrap().len();
            f.check(brute == cover.len(), || {
                format!("seed {seed}: brute-force cover {brute}")
            });
        }
    }
    Verdict::new(
        f.0.is_empty(),
        format!(
            "|cover| = n - |matching| on {count} instances ({cross_checked} also against brute force){}",
            f.summary()
        ),
    )
}

fn criterion_4() -> Verdict {
    let mut f = Failures::default();
    let report = performance_bounds::<Real>(5, Some(5)).unwrap();
    let bounded = report.bounded_cycle_bound.unwrap();
    f.check((bounded - 67.0 / 48.0).abs() < 1e-12 && bounded <= 1.396, || {
        format!("bounded(5, 5) = {bounded}")
    });
    f.check(
        bounded_cycle_bound::<Rational>(5, 5).unwrap() == Rational::ratio(67, 48),
        || "bounded(5, 5) is not exactly 67/48".into(),
    );
    let limit = std::f64::consts::PI.powi(2) / 6.0 - 1.0 / 36.0;
    for k in 4..=64usize {
        let simplified = simplified_bound::<Real>(k).unwrap();
        let exact = exact_bound::<Real>(k).unwrap();
        let gap = simplified - limit - 1.0 / (k * (k - 1)) as Real;
        f.check(gap.abs() < 1e-12, || format!("k = {k}: identity off by {gap:e}"));
        f.check(exact <= simplified, || {
            format!("k = {k}: exact {exact} > simplified {simplified}")
        });
    }
    Verdict::new(
        f.0.is_empty(),
        format!(
            "bounded(5,5) = {bounded:.10} <= 1.396; simplified identity to 1e-12 and exact <= simplified for k = 4..64{}",
            f.summary()
        ),
    )
}

/// Strongly connected samples small enough for the brute-force oracle.
fn oracle_sized_sc_graphs(count: usize, max_n: usize, salt: u64) -> Vec<DirectedGraph> {
    let mut graphs = Vec::new();
    let mut seed = salt;
    while graphs.len() < count {
        seed += 1;
        let n = 3 + (seed as usize % (max_n - 2));
        let density = (2.0 / (n - 1) as f64).min(0.7) * (0.8 + 0.1 * (seed % 4) as f64);
        let g = gen_random_sc_digraph(n, density.min(1.0), seed).unwrap();
        if g.edge_count() <= cfg().edge_cap {
            graphs.push(g);
        }
    }
    graphs
}

fn criterion_5() -> Verdict {
    let mut f = Failures::default();
    let graphs = oracle_sized_sc_graphs(320, 9, 5_000);
    let mut runs = 0;
    let mut worst: (usize, usize) = (1, 1);
    let mut contracted = 0;
    for (i, g) in graphs.iter().enumerate() {
        let opt = min_scss_bruteforce(g, &cfg()).unwrap().len();
        for k in 4..=6 {
            runs += 1;
            let s = scss_approx(g, ApproxOptions::with_k(k)).unwrap();
            let size = s.edges.len();
            f.check(is_strongly_connected_on(g, &s.edges).unwrap(), || {
                format!("graph {i}, k = {k}: infeasible")
            });
            let ratio = Rational::ratio(size, opt);
            f.check(ratio <= exact_bound::<Rational>(k).unwrap(), || {
                format!("graph {i}, k = {k}: {size}/{opt} above the bound")
            });
            f.check(s.trace.final_within_branching_bound(), || {
                format!(
                    "graph {i}, k = {k}: Opt(H) = {} with {} final vertices",
                    s.trace.final_solution.len(),
                    s.trace.final_vertices()
                )
            });
            if size * worst.1 > worst.0 * opt {
                worst = (size, opt);
            }
            if s.trace.contracted_edge_count() > 0 {
                contracted += 1;
            }
        }
    }
    Verdict::new(
        f.0.is_empty(),
        format!(
            "ratio <= exact_bound(k) and Opt(H) <= 2(n4 - 1) on {} graphs x k in {{4,5,6}} ({runs} runs, {contracted} with contractions); worst ratio {}/{}{}",
            graphs.len(),
            worst.0,
            worst.1,
            f.summary()
        ),
    )
}

fn criterion_6() -> Verdict {
    let mut f = Failures::default();
    let mut graphs = oracle_sized_sc_graphs(200, 7, 9_000);
    graphs.extend((0..100u64).map(|s| gen_triangle_composite(2 + (s as usize % 6), s).unwrap()));
    let mut tight = 0;
    for (i, g) in graphs.iter().enumerate() {
        let l = max_cycle_length(g, &cfg()).unwrap();
        let lb = scss_lower_bound_ceil(g.vertex_count(), l);
        let opt = min_scss_bruteforce(g, &cfg()).unwrap().len();
        f.check(lb <= opt, || format!("graph {i}: bound {lb} > optimum {opt}"));
        tight += usize::from(lb == opt);
    }
    let tt_bound = scss_lower_bound_ceil(4, max_cycle_length(&tt(), &cfg()).unwrap());
    let tt_opt = min_scss_bruteforce(&tt(), &cfg()).unwrap().len();
    f.check(tt_bound == 5 && tt_opt == 5, || {
        format!("TT: bound {tt_bound}, optimum {tt_opt}")
    });
    Verdict::new(
        f.0.is_empty(),
        format!(
            "ceil((n-1)l/(l-1)) <= optimum on {} graphs ({tight} tight); TT {tt_bound} = {tt_opt}{}",
            graphs.len(),
            f.summary()
        ),
    )
}

fn criterion_7(corpus: &[DirectedGraph]) -> Verdict {
    let mut f = Failures::default();
    let mut blocks = 0;
    for (i, g) in corpus.iter().enumerate() {
        for b in large_blocks(g) {
            blocks += 1;
            let fast = classify_edges(&b);
            let naive = classify_edges_naive(&b).unwrap();
            f.check(fast.as_ref() == Ok(&naive), || {
                format!("graph {i}: {fast:?} vs {naive:?}")
            });
        }
    }
    Verdict::new(
        f.0.is_empty() && blocks > 0,
        format!(
            "fast = naive classification on {blocks} blocks with >= 4 vertices{}",
            f.summary()
        ),
    )
}

/// Whether the loop-free part of `g` has an undirected cycle (parallel edges
/// count as a 2-cycle).
fn has_undirected_cycle(g: &UndirectedCoverGraph) -> bool {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        parent[v] = r;
        r
    }
    for &(a, b) in g.edges() {
        if a == b {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return true;
        }
        parent[ra] = rb;
    }
    false
}

fn criterion_8(corpus: &[DirectedGraph]) -> Verdict {
    let mut f = Failures::default();
    let mut blocks = 0;
    let mut cyclic_instances = 0;
    let mut loops = 0;
    for (i, g) in corpus.iter().enumerate() {
        for b in large_blocks(g) {
            blocks += 1;
            let classes = classify_edges_naive(&b).unwrap();
            let cycles = simple_cycles(&b, &cfg()).unwrap();
            for e in (0..b.edge_count()).filter(|&e| classes[e] == EdgeClass::Redundant) {
                let through = cycles.iter().filter(|c| c.contains_edge(e)).count();
                f.check(through == 1, || {
                    format!("graph {i}: redundant edge on {through} cycles")
                });
            }
            for c in &cycles {
                let redundant = c.edges().iter().filter(|&&e| classes[e].is_redundant()).count();
                f.check(redundant <= 1, || {
                    format!("graph {i}: cycle with {redundant} redundant edges")
                });
            }
            let unsatisfied = compute_unsatisfied(&b, &classes);
            f.check(unsatisfied.iter().all(|&e| classes[e] == EdgeClass::Necessary), || {
                format!("graph {i}: redundant edge marked unsatisfied")
            });
            let instance = build_cover_instance(&classify(&b).unwrap());
            let cover = &instance.graph;
            let loop_free = UndirectedCoverGraph::new(
                cover.vertex_count(),
                cover.edges().iter().copied().filter(|&(a, b)| a != b).collect(),
            )
            .unwrap();
            f.check(loop_free.two_coloring().is_some(), || {
                format!("graph {i}: G' not bipartite")
            });
            f.check(cover.incidence().iter().all(|inc| !inc.is_empty()), || {
                format!("graph {i}: isolated G' vertex")
            });
            cyclic_instances += usize::from(has_undirected_cycle(cover));
            loops += (0..cover.edge_count()).filter(|&e| cover.is_loop(e)).count();
        }
    }
    Verdict::new(
        f.0.is_empty() && blocks > 0,
        format!(
            "unique cycles, <= 1 redundant edge per cycle, unsatisfied within necessary, G' bipartite without isolated vertices on {blocks} blocks; G' has an undirected cycle in {cyclic_instances} blocks, {loops} G' loops seen{}",
            f.summary()
        ),
    )
}

fn criterion_9() -> Verdict {
    let mut f = Failures::default();
    let mut graphs = 0;
    let mut size_checked = 0;
    for seed in 0..320u64 {
        let n = 1 + (seed as usize % 7);
        let density = 0.15 + 0.1 * (seed % 5) as f64;
        let g = gen_random_digraph(n, density, seed).unwrap();
        graphs += 1;
        let out = meg(&g, 5).unwrap();
        f.check(reachability_equal(&g, &out).unwrap(), || {
            format!("seed {seed}: closure differs")
        });
        if g.edge_count() <= cfg().edge_cap {
            size_checked += 1;
            let best = min_equivalent_bruteforce(&g, &cfg()).unwrap().len();
            let ratio = if best == 0 {
                Rational::from_count(usize::from(!out.is_empty()))
            } else {
                Rational::ratio(out.len(), best)
            };
            f.check(ratio <= exact_bound::<Rational>(5).unwrap(), || {
                format!("seed {seed}: {} vs minimum {best}", out.len())
            });
        }
    }
    let mut dags = 0;
    for seed in 0..220u64 {
        let n = 1 + (seed as usize % 7);
        let g = gen_random_dag(n, 0.2 + 0.15 * (seed % 5) as f64, seed).unwrap();
        dags += 1;
        let reduced = dag_transitive_reduction(&g).unwrap();
        let brute = min_equivalent_bruteforce(&g, &cfg()).unwrap();
        f.check(reduced == brute, || {
            format!("dag seed {seed}: {reduced:?} vs {brute:?}")
        });
    }
    Verdict::new(
        f.0.is_empty(),
        format!(
            "meg preserves reachability on {graphs} digraphs ({size_checked} within exact_bound(5) of the minimum); reduction = brute force on {dags} DAGs{}",
            f.summary()
        ),
    )
}

/// Median wall time of `solve-scss3` on a generated graph, checking the
/// output each run.
fn time_cli_solve(n: usize, seed: u64, runs: usize, f: &mut Failures) -> Duration {
    let g = gen_triangle_composite(n, seed).unwrap();
    let dir = tempfile::TempDir::new().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, write_graph(&g)).unwrap();
    let mut times = Vec::with_capacity(runs);
    for _ in 0..runs {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_scss"))
            .arg("solve-scss3")
            .arg(&path)
            .output()
            .unwrap();
        times.push(start.elapsed());
        f.check(out.status.success(), || {
            format!("n = {n}: exit {:?}", out.status.code())
        });
        let text = String::from_utf8(out.stdout).unwrap();
        let ok = parse_edge_set(&g, &text).is_ok_and(|s| is_strongly_connected_on(&g, &s).unwrap());
        f.check(ok, || format!("n = {n}: output is not a valid solution"));
    }
    times.sort();
    times[runs / 2]
}

fn criterion_10() -> Verdict {
    let mut f = Failures::default();
    let half = time_cli_solve(1000, 7, 5, &mut f);
    let full = time_cli_solve(2000, 7, 5, &mut f);
    let ratio = full.as_secs_f64() / half.as_secs_f64();
    f.check(full < Duration::from_secs(10), || format!("n = 2000 took {full:?}"));
    f.check(ratio <= 4.5, || format!("doubling ratio {ratio:.2}"));
    Verdict::new(
        f.0.is_empty(),
        format!(
            "solve-scss3 median n = 1000: {:.3}s, n = 2000: {:.3}s (< 10s), doubling ratio {ratio:.2} (<= ~4){}",
            half.as_secs_f64(),
            full.as_secs_f64(),
            f.summary()
        ),
    )
}

fn main() -> ExitCode {
    let (corpus, exhaustive) = corpus();
    let criteria: Vec<(usize, Box<dyn Fn() -> Verdict + '_>)> = vec![
        (1, Box::new(|| criterion_1(&corpus, exhaustive))),
        (2, Box::new(criterion_2)),
        (3, Box::new(criterion_3)),
        (4, Box::new(criterion_4)),
        (5, Box::new(criterion_5)),
        (6, Box::new(criterion_6)),
        (7, Box::new(|| criterion_7(&corpus))),
        (8, Box::new(|| criterion_8(&corpus))),
        (9, Box::new(criterion_9)),
        (10, Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (id, run) in &criteria {
        let start = Instant::now();
        let v = run();
        failed += usize::from(!v.pass);
        println!(
            "{} criterion {id}: {} [{:.1}s]",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
