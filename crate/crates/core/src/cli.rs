//! Command-line front end. Every command returns a [`RunReport`] and an exit
//! code: 0 solved or valid, 1 NO-instance, 2 input error, 3 invariant
//! violation.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{bound_table, cluster_count_bound, eds_kernel_bound, marked_bag_count_bound};
use crate::eds::eds_kernelize;
use crate::error::Error;
use crate::fdeletion::{f_deletion_brute_force, Family, Solver, SolverOptions};
use crate::generate::{generate, GenParams, Kind};
use crate::graph::{named, parse_graph, parse_vertex_set, serialize_graph, Graph, VertexSet};
use crate::protrusion::{
    build_protrusion_decomposition, validate_protrusion_decomposition, ProtrusionDecomposition,
};
use crate::treewidth::{validate_decomposition, TreeDecomposition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "protrusionkit",
    version,
    about = "Protrusion decompositions, EDS kernels and Planar-F-Deletion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a protrusion decomposition from a treewidth modulator
    Decompose(DecomposeArgs),
    /// Check a tree decomposition or protrusion decomposition
    Validate(ValidateArgs),
    /// Kernelize an Edge Dominating Set instance
    KernelEds(KernelArgs),
    /// Solve Planar-F-Deletion
    Solve(SolveArgs),
    /// Solve Planar-F-Deletion by exhaustive search
    Oracle(OracleArgs),
    /// Print the closed-form bounds
    Bounds(BoundsArgs),
    /// Generate a seeded instance
    Generate(GenerateArgs),
    /// Run the pipeline over a corpus directory and emit CSV
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub modulator: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Tree decomposition JSON
    #[arg(long, conflicts_with = "protrusion")]
    pub decomposition: Option<PathBuf>,
    /// Protrusion decomposition JSON, bare or as written by `decompose`
    #[arg(long)]
    pub protrusion: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct KernelArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 4)]
    pub r: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Comma separated pattern files
    #[arg(long, value_delimiter = ',', required = true)]
    pub family: Vec<PathBuf>,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub tf: Option<usize>,
    #[arg(long)]
    pub test_cap: Option<usize>,
    #[arg(long)]
    pub exact_fallback: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_delimiter = ',', required = true)]
    pub family: Vec<PathBuf>,
    #[arg(long)]
    pub k: usize,
    /// Vertices that may not be deleted
    #[arg(long)]
    pub forbidden: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub r: usize,
    /// t_F used by the marked-vertex and cluster bounds
    #[arg(long, default_value_t = 2)]
    pub t: usize,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 3)]
    pub degree: usize,
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    /// Graph file; planted instances also get `<output>.planted.json`
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub corpus: PathBuf,
    /// Budget for instances without a planted sidecar
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 4)]
    pub r: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// What a command did, with enough detail to recompute its statistics.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub timings_ms: BTreeMap<String, f64>,
    pub stats: BTreeMap<String, Value>,
    pub bounds: BTreeMap<String, Value>,
    pub answer: Value,
}

impl RunReport {
    fn new(command: &[String]) -> Self {
        RunReport {
            command: command.to_vec(),
            ..Default::default()
        }
    }

    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms
            .insert(phase.to_string(), start.elapsed().as_secs_f64() * 1000.0);
        out
    }

    fn stat(&mut self, key: &str, v: impl Serialize) {
        self.stats.insert(key.to_string(), json!(v));
    }

    fn bound(&mut self, key: &str, measured: impl Serialize, formula: impl Serialize) {
        self.bounds.insert(
            key.to_string(),
            json!({"measured": measured, "formula": formula}),
        );
    }
}

/// A failed command: exit code and message for stderr.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) | Error::ModulatorInvalid { .. } | Error::NotASolution => {
                EXIT_INVARIANT
            }
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> CliError {
    CliError {
        code: EXIT_INPUT,
        message,
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_family(paths: &[PathBuf]) -> Result<Family, CliError> {
    let patterns = paths
        .iter()
        .map(|p| read_graph(p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Family::new(patterns)?)
}

/// Output of one command: report plus exit code.
pub type Outcome = Result<(RunReport, i32), CliError>;

pub fn run(cli: &Cli, argv: &[String]) -> Outcome {
    match &cli.command {
        Command::Decompose(a) => cmd_decompose(a, argv),
        Command::Validate(a) => cmd_validate(a, argv),
        Command::KernelEds(a) => cmd_kernel_eds(a, argv),
        Command::Solve(a) => cmd_solve(a, argv),
        Command::Oracle(a) => cmd_oracle(a, argv),
        Command::Bounds(a) => cmd_bounds(a, argv),
        Command::Generate(a) => cmd_generate(a, argv),
        Command::Bench(a) => cmd_bench(a, argv),
    }
}

fn pd_stats(rep: &mut RunReport, g: &Graph, pd: &ProtrusionDecomposition) {
    let boundaries = pd.cluster_boundaries(g);
    rep.stat("y0", pd.y0.len());
    rep.stat("clusters", pd.clusters.len());
    rep.stat("marked_bags", pd.trace.marked_bag_count());
    rep.stat(
        "cluster_sizes",
        pd.clusters.iter().map(|c| c.len()).collect::<Vec<_>>(),
    );
    rep.bound(
        "max_cluster_boundary",
        boundaries.iter().map(|b| b.len()).max().unwrap_or(0),
        pd.beta,
    );
}

pub fn cmd_decompose(a: &DecomposeArgs, argv: &[String]) -> Outcome {
    let mut rep = RunReport::new(argv);
    let g = read_graph(&a.graph)?;
    let x = parse_vertex_set(&read(&a.modulator)?)?;
    let pd = rep.time("decompose", || {
        build_protrusion_decomposition(&g, &x, a.r, a.t)
    })?;
    let report = rep.time("validate", || validate_protrusion_decomposition(&g, &pd));
    pd_stats(&mut rep, &g, &pd);
    let code = if report.is_valid() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    };
    rep.answer = json!({"decomposition": pd, "validation": report});
    if let Some(out) = &a.output {
        write(out, &serde_json::to_string_pretty(&rep.answer).unwrap())?;
    }
    Ok((rep, code))
}

pub fn cmd_validate(a: &ValidateArgs, argv: &[String]) -> Outcome {
    let mut rep = RunReport::new(argv);
    let g = read_graph(&a.graph)?;
    let bad_json = |e: serde_json::Error| input_error(format!("malformed decomposition: {e}"));
    if let Some(path) = &a.decomposition {
        let td: TreeDecomposition = serde_json::from_value(read_json(path)?).map_err(bad_json)?;
        let report = validate_decomposition(&g, &td);
        let code = if report.is_valid() {
            EXIT_OK
        } else {
            EXIT_INVARIANT
        };
        rep.answer = json!(report);
        return Ok((rep, code));
    }
    let Some(path) = &a.protrusion else {
        return Err(input_error(
            "one of --decomposition or --protrusion is required".into(),
        ));
    };
    let mut v = read_json(path)?;
    if let Some(inner) = v.get_mut("decomposition") {
        v = inner.take();
    }
    let pd: ProtrusionDecomposition = serde_json::from_value(v).map_err(bad_json)?;
    let report = validate_protrusion_decomposition(&g, &pd);
    pd_stats(&mut rep, &g, &pd);
    let code = if report.is_valid() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    };
    rep.answer = json!(report);
    Ok((rep, code))
}

pub fn cmd_kernel_eds(a: &KernelArgs, argv: &[String]) -> Outcome {
    let mut rep = RunReport::new(argv);
    let g = read_graph(&a.graph)?;
    let kern = rep.time("kernelize", || eds_kernelize(&g, a.k, a.r))?;
    let bound = eds_kernel_bound(a.k, a.r);
    let Some(kern) = kern else {
        rep.answer = json!({"answer": "NO", "reason": "maximal matching exceeds 2k"});
        return Ok((rep, EXIT_NO));
    };
    pd_stats(&mut rep, &g, &kern.decomposition);
    rep.bound("kernel_vertices", kern.graph.n(), bound);
    if let Some(out) = &a.output {
        write(out, &serialize_graph(&kern.graph))?;
    }
    rep.answer = json!(kern);
    Ok((rep, EXIT_OK))
}

pub fn cmd_solve(a: &SolveArgs, argv: &[String]) -> Outcome {
    let mut rep = RunReport::new(argv);
    let g = read_graph(&a.input)?;
    let f = read_family(&a.family)?;
    let opts = SolverOptions {
        tf: a.tf,
        test_cap: a.test_cap,
        exact_fallback: a.exact_fallback,
        ..Default::default()
    };
    let mut solver = Solver::new(&f, opts)?;
    let answer = rep.time("solve", || solver.solve(&g, a.k))?;
    let st = &solver.stats;
    rep.stat("t_f", solver.t_f());
    rep.stat("test_cap", solver.test_cap());
    rep.stat("solver", st);
    let x = a.k + 1;
    let bounds = json!({
        "marked_bags": {"measured": st.max_marked_bags, "formula": marked_bag_count_bound(x, f.r)},
        "clusters": {"measured": st.clusters, "formula": cluster_count_bound(x, f.r, solver.t_f())},
    });
    rep.bound(
        "marked_bags",
        st.max_marked_bags,
        marked_bag_count_bound(x, f.r),
    );
    rep.bound(
        "clusters",
        st.clusters,
        cluster_count_bound(x, f.r, solver.t_f()),
    );
    let code = if answer.is_some() { EXIT_OK } else { EXIT_NO };
    rep.answer = json!({
        "answer": if answer.is_some() { "YES" } else { "NO" },
        "solution": answer,
        "branches_explored": st.branches_explored,
        "marked_bags": st.max_marked_bags,
        "clusters": st.clusters,
        "heuristic": st.heuristic,
        "bounds": bounds,
    });
    Ok((rep, code))
}

pub fn cmd_oracle(a: &OracleArgs, argv: &[String]) -> Outcome {
    let mut rep = RunReport::new(argv);
    let g = read_graph(&a.input)?;
    let f = read_family(&a.family)?;
    let forbidden = match &a.forbidden {
        Some(p) => parse_vertex_set(&read(p)?)?,
        None => VertexSet::new(),
    };
    let answer = rep.time("brute_force", || {
        f_deletion_brute_force(&g, &f, a.k, &forbidden)
    })?;
    let code = if answer.is_some() { EXIT_OK } else { EXIT_NO };
    rep.answer = json!({
        "answer": if answer.is_some() { "YES" } else { "NO" },
        "solution": answer,
    });
    Ok((rep, code))
}

pub fn cmd_bounds(a: &BoundsArgs, argv: &[String]) -> Outcome {
    let mut rep = RunReport::new(argv);
    rep.answer = json!(bound_table(a.k, a.r, a.t));
    Ok((rep, EXIT_OK))
}

pub fn cmd_generate(a: &GenerateArgs, argv: &[String]) -> Outcome {
    let mut rep = RunReport::new(argv);
    let kind: Kind = a.kind.parse()?;
    let params = GenParams {
        kind,
        n: a.n,
        seed: a.seed,
        k: a.k,
        degree: a.degree,
        p: a.p,
    };
    let gen = rep.time("generate", || generate(&params))?;
    let text = serialize_graph(&gen.graph);
    rep.stat("n", gen.graph.n());
    rep.stat("m", gen.graph.m());
    rep.stat("seed", a.seed);
    if let Some(out) = &a.output {
        write(out, &text)?;
        if gen.solution.is_some() {
            let side = sidecar_path(out);
            write(&side, &serde_json::to_string_pretty(&gen).unwrap())?;
        }
        rep.answer =
            json!({"graph": out, "planted": gen.solution.as_ref().map(|_| sidecar_path(out))});
    } else {
        rep.answer = json!({"graph": text, "planted": gen.solution.as_ref().map(|_| &gen)});
    }
    Ok((rep, EXIT_OK))
}

fn sidecar_path(graph: &Path) -> PathBuf {
    let mut s = graph.as_os_str().to_owned();
    s.push(".planted.json");
    PathBuf::from(s)
}

/// One CSV row of the benchmark.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub y0: Option<usize>,
    pub clusters: Option<usize>,
    pub kernel_vertices: Option<usize>,
    pub eds_kernel_bound: f64,
    pub solver_ms: Option<f64>,
    pub fvs_answer: Option<bool>,
    pub error: Option<String>,
}

pub const BENCH_HEADER: &str =
    "instance,n,m,k,y0,clusters,kernel_vertices,eds_kernel_bound,solver_ms,fvs_answer,error";

impl BenchRow {
    pub fn to_csv(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.n,
            self.m,
            self.k,
            opt(&self.y0),
            opt(&self.clusters),
            opt(&self.kernel_vertices),
            self.eds_kernel_bound,
            opt(&self.solver_ms.map(|t| format!("{t:.3}"))),
            opt(&self.fvs_answer),
            opt(&self.error.as_ref().map(|e| e.replace(',', ";"))),
        )
    }
}

/// Worker count from `PROTRUSIONKIT_THREADS`, at least one.
pub fn thread_count() -> usize {
    std::env::var("PROTRUSIONKIT_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1usize)
        .max(1)
}

fn bench_instance(path: &Path, default_k: usize, r: usize) -> BenchRow {
    let mut row = BenchRow {
        instance: path
            .file_name()
            .unwrap_or_default()
            .to_string_lossy()
            .into_owned(),
        k: default_k,
        ..Default::default()
    };
    let run = |row: &mut BenchRow| -> Result<(), CliError> {
        let g = read_graph(path)?;
        row.n = g.n();
        row.m = g.m();
        let side = sidecar_path(path);
        if side.exists() {
            if let Some(k) = read_json(&side)?.get("k").and_then(Value::as_u64) {
                row.k = k as usize;
            }
        }
        row.eds_kernel_bound = eds_kernel_bound(row.k, r);
        if let Some(kern) = eds_kernelize(&g, row.k, r)? {
            row.y0 = Some(kern.decomposition.y0.len());
            row.clusters = Some(kern.decomposition.clusters.len());
            row.kernel_vertices = Some(kern.graph.n());
        }
        let fvs = Family::new(vec![named::complete(3)])?;
        let start = Instant::now();
        let answer = Solver::new(&fvs, SolverOptions::default())?.solve(&g, row.k)?;
        row.solver_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
        row.fvs_answer = Some(answer.is_some());
        Ok(())
    };
    if let Err(e) = run(&mut row) {
        row.error = Some(e.message);
    }
    row
}

/// Runs the pipeline on every `*.txt` graph of a corpus directory.
pub fn bench_rows(corpus: &Path, k: usize, r: usize) -> Result<Vec<BenchRow>, CliError> {
    let entries =
        fs::read_dir(corpus).map_err(|e| input_error(format!("{}: {e}", corpus.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    paths.sort();
    let threads = thread_count().min(paths.len().max(1));
    let mut rows: Vec<Option<BenchRow>> = vec![None; paths.len()];
    std::thread::scope(|s| {
        for (w, chunk) in rows
            .chunks_mut(paths.len().div_ceil(threads).max(1))
            .enumerate()
        {
            let base = w * paths.len().div_ceil(threads).max(1);
            let paths = &paths;
            s.spawn(move || {
                for (i, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(bench_instance(&paths[base + i], k, r));
                }
            });
        }
    });
    Ok(rows.into_iter().flatten().collect())
}

pub fn cmd_bench(a: &BenchArgs, argv: &[String]) -> Outcome {
    let mut rep = RunReport::new(argv);
    let rows = rep.time("bench", || bench_rows(&a.corpus, a.k, a.r))?;
    let mut csv = String::from(BENCH_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.to_csv());
        csv.push('\n');
    }
    rep.stat("instances", rows.len());
    rep.stat(
        "failures",
        rows.iter().filter(|r| r.error.is_some()).count(),
    );
    if let Some(out) = &a.output {
        write(out, &csv)?;
    }
    rep.answer = json!({"csv": csv});
    Ok((rep, EXIT_OK))
}
