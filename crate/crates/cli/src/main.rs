//! `scss`: command-line front end for the SCSS solvers, oracles and
//! generators.
//!
//! Exit codes: 0 success, 1 infeasible or invalid input, 2 usage error.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use scss_core::approx::{exact_bound, performance_bounds, scss_lower_bound_ceil, DEFAULT_THRESHOLD};
use scss_core::graph::is_strongly_connected_on;
use scss_core::io::{parse_edge_set, parse_graph, serialize_edge_set, write_graph};
use scss_core::oracle::{
    gen_random_sc_digraph, gen_triangle_composite, max_cycle_length, min_equivalent_bruteforce, min_scss_bruteforce,
    reachability_equal, simple_cycles, OracleConfig,
};
use scss_core::scss3::{classify_graph, reduce};
use scss_core::{meg, scss3_minimum, scss_approx, ApproxOptions, DirectedGraph, Real};

/// Largest `--k` accepted without `--allow-large-k`; the cycle search grows
/// like `n^k`.
const MAX_K: usize = 8;

/// Above this many vertices the CLI lower bound uses `n` as the longest
/// cycle length instead of enumerating cycles.
const EXACT_CYCLE_VERTICES: usize = 10;

#[derive(Parser)]
#[command(name = "scss", version, about = "Minimum strongly connected spanning subgraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print each edge as necessary or redundant, marking unsatisfied edges.
    Classify {
        /// Graph file; stdin when omitted or `-`.
        file: Option<PathBuf>,
    },
    /// Print the edge cover instance with a comment block mapping it back.
    Reduce { file: Option<PathBuf> },
    /// Exact minimum solution for graphs with no cycle longer than three.
    #[command(name = "solve-scss3")]
    SolveScss3 { file: Option<PathBuf> },
    /// Cycle-contraction approximation for any strongly connected graph.
    Approx {
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        k: usize,
        /// Keep every edge left after contraction instead of solving exactly.
        #[arg(long)]
        no_exact_finish: bool,
        /// Permit k above 8.
        #[arg(long)]
        allow_large_k: bool,
        file: Option<PathBuf>,
    },
    /// Minimum equivalent graph approximation for any digraph.
    Meg {
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        k: usize,
        #[arg(long)]
        allow_large_k: bool,
        file: Option<PathBuf>,
    },
    /// Exit 0 iff the solution file is feasible for the graph.
    Verify {
        file: PathBuf,
        solution: PathBuf,
        #[arg(long, value_enum, default_value_t = VerifyMode::Scss)]
        mode: VerifyMode,
    },
    /// Brute-force answers for small graphs.
    Oracle {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OracleMode::Scss)]
        mode: OracleMode,
    },
    /// Print the guarantee values for threshold k (and longest cycle l).
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Emit a generated graph file.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Edge probability for the random family.
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Scss,
    Meg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Scss,
    Meg,
    Cycles,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Strongly connected, every cycle of length two or three.
    Triangles,
    /// Uniform random digraph conditioned on strong connectivity.
    Random,
}

enum Failure {
    Infeasible(anyhow::Error),
    Usage(anyhow::Error),
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(anyhow!(msg.into()))
    }
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(err: E) -> Self {
        Failure::Infeasible(err.into())
    }
}

type Outcome = Result<String, Failure>;

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        None => std::io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) if p == Path::new("-") => std::io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) => std::fs::read_to_string(p).map(|t| text = t),
    }
    .map_err(|err| Failure::Usage(anyhow!(err).context(format!("reading {}", display(path)))))?;
    Ok(text)
}

fn display(path: Option<&Path>) -> String {
    path.map_or_else(|| "stdin".to_string(), |p| p.display().to_string())
}

fn load_graph(path: Option<&Path>) -> Result<DirectedGraph, Failure> {
    let text = read_input(path)?;
    Ok(parse_graph(&text).with_context(|| display(path))?)
}

fn check_k(k: usize, allow_large_k: bool) -> Result<(), Failure> {
    if k < 4 {
        return Err(Failure::usage(format!("--k must be at least 4, got {k}")));
    }
    if k > MAX_K && !allow_large_k {
        return Err(Failure::usage(format!(
            "--k {k} exceeds {MAX_K}; pass --allow-large-k to run anyway"
        )));
    }
    Ok(())
}

fn classify_cmd(g: &DirectedGraph) -> Outcome {
    let c = classify_graph(g)?;
    let mut out = String::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        write!(out, "{u} {v} {}", c.edge_class[e].as_str()).unwrap();
        if c.is_unsatisfied(e) {
            out.push_str(" unsatisfied");
        }
        out.push('\n');
    }
    Ok(out)
}

fn reduce_cmd(g: &DirectedGraph) -> Outcome {
    let r = reduce(g)?;
    let cover = &r.instance.graph;
    let mut out = String::new();
    writeln!(out, "{} {}", cover.vertex_count(), cover.edge_count()).unwrap();
    for &(a, b) in cover.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    for (i, &e) in r.instance.vertex_origin.iter().enumerate() {
        let (u, v) = g.edge(e);
        writeln!(out, "# vertex {i} = unsatisfied edge {u} {v}").unwrap();
    }
    for (j, &e) in r.instance.edge_origin.iter().enumerate() {
        let (u, v) = g.edge(e);
        writeln!(out, "# edge {j} = redundant edge {u} {v}").unwrap();
    }
    for &e in &r.tiny_block_edges {
        let (u, v) = g.edge(e);
        writeln!(out, "# small block edge {u} {v}").unwrap();
    }
    Ok(out)
}

/// Longest cycle length used for the lower bound: exact for small graphs,
/// otherwise `n`, which can only weaken the bound.
fn cycle_length_for_bound(g: &DirectedGraph) -> usize {
    let n = g.vertex_count();
    if n <= EXACT_CYCLE_VERTICES {
        max_cycle_length(g, &OracleConfig::default()).unwrap_or(n)
    } else {
        n
    }
}

fn approx_cmd(g: &DirectedGraph, k: usize, exact_finish: bool) -> Outcome {
    let solution = scss_approx(g, ApproxOptions { k, exact_finish })?;
    let l = cycle_length_for_bound(g);
    let lower = if l >= 2 {
        scss_lower_bound_ceil(g.vertex_count(), l)
    } else {
        0
    };
    let guarantee: Real = exact_bound(k)?;
    eprintln!(
        "size={} lower_bound={lower} guarantee={guarantee:.12}",
        solution.edges.len()
    );
    Ok(serialize_edge_set(g, &solution.edges)?)
}

fn verify_cmd(file: &Path, solution: &Path, mode: VerifyMode) -> Outcome {
    let g = load_graph(Some(file))?;
    let text = read_input(Some(solution))?;
    let subset = parse_edge_set(&g, &text).with_context(|| solution.display().to_string())?;
    let feasible = match mode {
        VerifyMode::Scss => is_strongly_connected_on(&g, &subset)?,
        VerifyMode::Meg => reachability_equal(&g, &subset)?,
    };
    if feasible {
        Ok("feasible\n".to_string())
    } else {
        Err(Failure::Infeasible(anyhow!("solution is infeasible")))
    }
}

fn oracle_cmd(g: &DirectedGraph, mode: OracleMode) -> Outcome {
    let cfg = OracleConfig::default();
    match mode {
        OracleMode::Scss => Ok(serialize_edge_set(g, &min_scss_bruteforce(g, &cfg)?)?),
        OracleMode::Meg => Ok(serialize_edge_set(g, &min_equivalent_bruteforce(g, &cfg)?)?),
        OracleMode::Cycles => {
            let cycles = simple_cycles(g, &cfg)?;
            let longest = cycles.iter().map(|c| c.len()).max().unwrap_or(0);
            let mut out = format!("longest={longest} count={}\n", cycles.len());
            for c in &cycles {
                let line: Vec<String> = c.vertices().iter().map(ToString::to_string).collect();
                writeln!(out, "{}", line.join(" ")).unwrap();
            }
            Ok(out)
        }
    }
}

fn bounds_cmd(k: usize, l: Option<usize>) -> Outcome {
    let report = performance_bounds::<Real>(k, l).map_err(|err| Failure::Usage(err.into()))?;
    let mut out = format!(
        "exact_bound={:.12}\nsimplified_bound={:.12}\n",
        report.exact_bound, report.simplified_bound
    );
    if let Some(b) = report.bounded_cycle_bound {
        writeln!(out, "bounded_cycle_bound={b:.12}").unwrap();
    }
    Ok(out)
}

fn gen_cmd(family: Family, n: usize, density: f64, seed: u64) -> Outcome {
    let g = match family {
        Family::Triangles => gen_triangle_composite(n, seed),
        Family::Random => gen_random_sc_digraph(n, density, seed),
    }
    .map_err(|err| Failure::Usage(err.into()))?;
    Ok(write_graph(&g))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Classify { file } => classify_cmd(&load_graph(file.as_deref())?),
        Command::Reduce { file } => reduce_cmd(&load_graph(file.as_deref())?),
        Command::SolveScss3 { file } => {
            let g = load_graph(file.as_deref())?;
            Ok(serialize_edge_set(&g, &scss3_minimum(&g)?)?)
        }
        Command::Approx {
            k,
            no_exact_finish,
            allow_large_k,
            file,
        } => {
            check_k(k, allow_large_k)?;
            approx_cmd(&load_graph(file.as_deref())?, k, !no_exact_finish)
        }
        Command::Meg { k, allow_large_k, file } => {
            check_k(k, allow_large_k)?;
            let g = load_graph(file.as_deref())?;
            Ok(serialize_edge_set(&g, &meg(&g, k)?)?)
        }
        Command::Verify { file, solution, mode } => verify_cmd(&file, &solution, mode),
        Command::Oracle { file, mode } => oracle_cmd(&load_graph(file.as_deref())?, mode),
        Command::Bounds { k, l } => bounds_cmd(k, l),
        Command::Gen {
            family,
            n,
            density,
            seed,
        } => gen_cmd(family, n, density, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Infeasible(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
