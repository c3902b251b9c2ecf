//! `sqw`: command-line front end for the staggered-walk toolkit.
//!
//! Every subcommand prints a short human-readable report followed by one
//! line of JSON. Failures print `error: ...` and `reason=<Variant>` on
//! stderr and exit with status 1; usage errors exit with status 2.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sqw::classify::{classify_graph, ClassEvidence, Witness};
use sqw::graph::io::{parse_edge_list, write_edge_list};
use sqw::graph::Graph;
use sqw::models::{honeycomb, three_state, BlueAmplitudes};
use sqw::search::{
    amplified_cost, fit_scaling, hitting_time, scaling_points, sweep, torus_instance, SearchOptions,
    MIN_FIT_POINTS,
};
use sqw::tessellation::io::{parse_pair, write_pair};
use sqw::tessellation::{
    build_two_tessellation, intersection_edges, union_covers_edges, validate_pair, TessellationPair,
};
use sqw::tolerance;
use sqw::walk::io::{parse_amplitudes, write_dense};
use sqw::walk::{
    coined_reduce, max_abs_diff, reflection_from, szegedy_convert, verify_block_structure, EvolutionOperator,
    LoopPolicy, ReflectionOperator, StateVector,
};

#[derive(Parser, Debug)]
#[command(name = "sqw", version, about = "Staggered quantum walks on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sort a connected graph into Class 1, 2a, 2b or 2b' with a witness.
    Classify(ClassifyArgs),
    /// Build a blue/red tessellation pair, or check a given one.
    Tessellate(TessellateArgs),
    /// Apply the walk to a state, or dump its dense matrix.
    Evolve(EvolveArgs),
    /// Cast a walk into Szegedy form (or coined form) and certify it.
    Convert(ConvertArgs),
    /// Emit one of the built-in coined-equivalent models.
    Model(ModelArgs),
    /// Run the marked-clique search on tori and fit the peaks.
    Search(SearchArgs),
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Edge-list file.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args, Debug)]
struct WalkInput {
    #[command(flatten)]
    graph: GraphInput,
    /// Tessellation file (`{"blue": [...], "red": [...]}`).
    #[arg(long)]
    tess: PathBuf,
    /// Amplitude CSV for the blue polygons (uniform when absent).
    #[arg(long)]
    blue_amplitudes: Option<PathBuf>,
    /// Amplitude CSV for the red polygons (uniform when absent).
    #[arg(long)]
    red_amplitudes: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TessellateArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Validate this pair instead of building one.
    #[arg(long)]
    check: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EvolveArgs {
    #[command(flatten)]
    walk: WalkInput,
    /// Print the dense matrix of U as CSV instead of evolving a state.
    #[arg(long)]
    dump_dense: bool,
    #[arg(long, default_value_t = 1)]
    steps: usize,
    /// Start on this vertex; uniform superposition when absent.
    #[arg(long)]
    start: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConvertArgs {
    #[command(flatten)]
    walk: WalkInput,
    /// Reduce to coined form instead of Szegedy form.
    #[arg(long)]
    coined: bool,
    /// With --coined, accept red singletons as loops.
    #[arg(long, requires = "coined")]
    allow_loops: bool,
    /// Entrywise tolerance for the operator comparison.
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ModelArgs {
    #[command(subcommand)]
    model: ModelKind,
    /// Write graph.edges and pair.tess here instead of printing them.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ModelKind {
    /// Triangle-inflated honeycomb torus.
    Honeycomb {
        #[arg(long)]
        m: usize,
    },
    /// Three-state walk on a ring.
    ThreeState {
        #[arg(long)]
        sites: usize,
        #[arg(long)]
        rho: f64,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Torus sides, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 200)]
    t_max: usize,
    /// Also record the plain sum of marked amplitudes (not a probability).
    #[arg(long)]
    raw_sums: bool,
    /// Monte-Carlo trials for the classical hitting time (0 skips it).
    #[arg(long, default_value_t = 0)]
    classical_trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failed run: the variant name for `reason=` and a message.
#[derive(Debug)]
struct Failure {
    reason: String,
    message: String,
}

impl Failure {
    fn new(reason: &str, message: impl Into<String>) -> Self {
        Failure {
            reason: reason.to_string(),
            message: message.into(),
        }
    }
}

macro_rules! failure_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::new(e.kind(), e.to_string())
            }
        }
    )*};
}

failure_from!(
    sqw::graph::GraphError,
    sqw::tessellation::TessellationError,
    sqw::classify::ClassifyError,
    sqw::walk::WalkError,
    sqw::models::ModelError,
    sqw::search::SearchError
);

type CliResult<T> = Result<T, Failure>;

/// Human-readable lines plus the machine block.
struct Report {
    lines: Vec<String>,
    data: Value,
}

/// Output directory bookkeeping: data files plus a `meta.json` sidecar.
struct OutDir {
    dir: PathBuf,
    files: Vec<String>,
    warnings: Vec<String>,
}

impl OutDir {
    fn create(dir: &Path) -> CliResult<Self> {
        fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
        Ok(OutDir {
            dir: dir.to_path_buf(),
            files: Vec::new(),
            warnings: Vec::new(),
        })
    }

    fn write(&mut self, name: &str, contents: &str) -> CliResult<()> {
        let path = self.dir.join(name);
        fs::write(&path, contents).map_err(|e| io_failure(&path, e))?;
        self.files.push(name.to_string());
        Ok(())
    }

    fn finish(self, command: &str) -> CliResult<()> {
        let meta = json!({
            "tool": "sqw",
            "version": env!("CARGO_PKG_VERSION"),
            "command": command,
            "args": std::env::args().skip(1).collect::<Vec<_>>(),
            "files": self.files,
            "warnings": self.warnings,
        });
        let path = self.dir.join("meta.json");
        let text = serde_json::to_string_pretty(&meta).expect("json value serialises") + "\n";
        fs::write(&path, text).map_err(|e| io_failure(&path, e))
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::new("Io", format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn load_graph(input: &GraphInput) -> CliResult<Graph> {
    Ok(parse_edge_list(&read(&input.graph)?)?)
}

fn load_walk(input: &WalkInput) -> CliResult<(Graph, EvolutionOperator)> {
    let g = load_graph(&input.graph)?;
    let pair = parse_pair(&read(&input.tess)?, g.vertex_count())?;
    validate_pair(&g, &pair)?;
    let reflection = |t, path: &Option<PathBuf>| -> CliResult<ReflectionOperator> {
        Ok(match path {
            Some(p) => reflection_from(t, parse_amplitudes(&read(p)?, t)?)?,
            None => ReflectionOperator::uniform(t)?,
        })
    };
    let u0 = reflection(&pair.blue, &input.blue_amplitudes)?;
    let u1 = reflection(&pair.red, &input.red_amplitudes)?;
    Ok((g, EvolutionOperator::new(u0, u1)?))
}

fn pair_json(pair: &TessellationPair) -> Value {
    serde_json::from_str(&write_pair(pair)).expect("pair writer emits JSON")
}

fn polygons_json(polys: &[sqw::tessellation::Polygon]) -> Value {
    polys
        .iter()
        .map(|p| p.vertices().to_vec())
        .collect::<Vec<_>>()
        .into()
}

fn witness_json(ev: &ClassEvidence) -> Value {
    match &ev.witness {
        Witness::Forbidden { index, embedding } => json!({
            "kind": "forbidden_subgraph",
            "index": index,
            "embedding": embedding,
        }),
        Witness::NonBipartiteRoot(p) | Witness::BipartiteRoot(p) => json!({
            "kind": "krausz_partition",
            "elements": polygons_json(&p.elements),
            "coloring": p.coloring,
        }),
        Witness::Matching(d) => json!({
            "kind": "matching",
            "matching": d.matching,
            "cliques": d.cliques,
        }),
    }
}

fn classify(args: &ClassifyArgs) -> CliResult<Report> {
    let g = load_graph(&args.input)?;
    let ev = classify_graph(&g)?;
    let witness = witness_json(&ev);
    let mut lines = vec![
        format!("vertices: {}, edges: {}", g.vertex_count(), g.edge_count()),
        format!("class: {}", ev.label.as_str()),
    ];
    lines.push(match &ev.witness {
        Witness::Forbidden { index, embedding } => {
            format!("witness: induced forbidden graph #{index} at {embedding:?}")
        }
        Witness::NonBipartiteRoot(p) => format!(
            "witness: Krausz partition, root not bipartite ({} elements)",
            p.elements.len()
        ),
        Witness::BipartiteRoot(p) => format!(
            "witness: Krausz partition, bipartite root ({} elements)",
            p.elements.len()
        ),
        Witness::Matching(d) => format!("witness: perfect matching {:?}", d.matching),
    });
    let data = json!({
        "class": ev.label.as_str(),
        "witness": witness,
        "rechecked": ev.recheck(&g),
    });
    if let Some(dir) = &args.out {
        let mut out = OutDir::create(dir)?;
        out.write(
            "classification.json",
            &(serde_json::to_string_pretty(&data).unwrap() + "\n"),
        )?;
        out.finish("classify")?;
    }
    Ok(Report { lines, data })
}

fn tessellate(args: &TessellateArgs) -> CliResult<Report> {
    let g = load_graph(&args.input)?;
    let pair = match &args.check {
        Some(path) => {
            let pair = parse_pair(&read(path)?, g.vertex_count())?;
            validate_pair(&g, &pair)?;
            pair
        }
        None => build_two_tessellation(&g)?,
    };
    let coverage = union_covers_edges(&g, &pair);
    if let Some(&(u, v)) = coverage.missing.first() {
        return Err(Failure::new(
            "UncoveredEdge",
            format!(
                "edge {{{u}, {v}}} lies in no polygon ({} uncovered)",
                coverage.missing.len()
            ),
        ));
    }
    let intersection = intersection_edges(&pair);
    let lines = vec![
        format!(
            "{} pair: {} blue and {} red polygons",
            if args.check.is_some() { "valid" } else { "built" },
            pair.blue.len(),
            pair.red.len()
        ),
        format!("edges in both colours: {}", intersection.len()),
    ];
    let data = json!({
        "valid": true,
        "pair": pair_json(&pair),
        "intersection_edges": intersection,
    });
    if let Some(dir) = &args.out {
        let mut out = OutDir::create(dir)?;
        out.write("pair.tess", &write_pair(&pair))?;
        out.finish("tessellate")?;
    }
    Ok(Report { lines, data })
}

/// `Ok(None)` means the dense CSV went to stdout and no report follows.
fn evolve(args: &EvolveArgs) -> CliResult<Option<Report>> {
    let (g, ev) = load_walk(&args.walk)?;
    if args.dump_dense {
        let csv = write_dense(&ev.dense_matrix()?);
        return match &args.out {
            None => {
                print!("{csv}");
                Ok(None)
            }
            Some(dir) => {
                let mut out = OutDir::create(dir)?;
                out.write("dense.csv", &csv)?;
                out.finish("evolve")?;
                Ok(Some(Report {
                    lines: vec![format!("wrote {}x{} matrix", g.vertex_count(), g.vertex_count())],
                    data: json!({ "dimension": g.vertex_count(), "file": "dense.csv" }),
                }))
            }
        };
    }
    let n = g.vertex_count();
    let mut psi = match args.start {
        Some(v) if v >= n => {
            return Err(Failure::new(
                "OutOfRange",
                format!("start vertex {v} not below {n}"),
            ));
        }
        Some(v) => StateVector::basis(n, v),
        None => StateVector::uniform(n),
    };
    for _ in 0..args.steps {
        ev.apply_in_place(&mut psi)?;
    }
    let probs: Vec<f64> = psi.as_slice().iter().map(|a| a.norm_sqr()).collect();
    let mut csv = String::from("vertex,probability\n");
    for (v, p) in probs.iter().enumerate() {
        csv.push_str(&format!("{v},{p:.15e}\n"));
    }
    let norm_drift = (psi.norm_sqr() - 1.0).abs();
    let lines = vec![
        format!("applied {} step(s) on {n} vertices", args.steps),
        format!("norm drift: {norm_drift:.3e}"),
    ];
    let data = json!({ "steps": args.steps, "probabilities": probs, "norm_drift": norm_drift });
    if let Some(dir) = &args.out {
        let mut out = OutDir::create(dir)?;
        out.write("probabilities.csv", &csv)?;
        out.finish("evolve")?;
    }
    Ok(Some(Report { lines, data }))
}

fn convert(args: &ConvertArgs) -> CliResult<Report> {
    let (g, ev) = load_walk(&args.walk)?;
    let tol = args.tolerance.unwrap_or(tolerance::OPERATOR);
    let mut warnings = Vec::new();
    if let Some(t) = args.tolerance {
        warnings.push(format!(
            "operator tolerance overridden: {t:e} (default {:e})",
            tolerance::OPERATOR
        ));
    }
    let (lines, data, files) = if args.coined {
        let policy = if args.allow_loops {
            LoopPolicy::AllowLoops
        } else {
            LoopPolicy::Strict
        };
        let form = coined_reduce(&g, &ev, policy)?;
        let deviation = max_abs_diff(&form.recompose(), &form.relabel_matrix(&ev.dense_matrix()?));
        if deviation >= tol {
            return Err(Failure::new(
                "CoinedMismatch",
                format!("shift * coin differs from U by {deviation:e}"),
            ));
        }
        let lines = vec![
            format!(
                "coined form: {} shrunken vertices, {} edges, {} loops",
                form.degrees.len(),
                form.edges.len(),
                form.loops.len()
            ),
            format!("max deviation of shift*coin from U: {deviation:.3e}"),
        ];
        let data = json!({
            "form": "coined",
            "passed": true,
            "max_deviation": deviation,
            "degrees": form.degrees,
            "edges": form.edges,
            "loops": form.loops,
            "relabel": form.relabel,
        });
        (
            lines,
            data,
            vec![
                ("coined_shift.csv", write_dense(&form.shift_matrix())),
                ("coined_coin.csv", write_dense(&form.coin())),
            ],
        )
    } else {
        let inst = szegedy_convert(&g, &ev)?;
        let check = verify_block_structure(&inst, &ev)?;
        if check.max_deviation >= tol {
            return Err(Failure::new(
                "BlockMismatch",
                format!("block structure off by {:e}", check.max_deviation),
            ));
        }
        let lines = vec![
            format!(
                "Szegedy form: {} x {} root, dimension {}",
                inst.m,
                inst.n,
                inst.dimension()
            ),
            format!("idle dimension: {}", check.idle_dimension),
            format!("max block deviation: {:.3e}", check.max_deviation),
        ];
        let matrix = |m: &nalgebra::DMatrix<f64>| -> Value {
            (0..m.nrows())
                .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .into()
        };
        let data = json!({
            "form": "szegedy",
            "passed": true,
            "m": inst.m,
            "n": inst.n,
            "idle_dimension": check.idle_dimension,
            "max_deviation": check.max_deviation,
            "embedding": inst.embedding,
            "p": matrix(&inst.p),
            "q": matrix(&inst.q),
        });
        (
            lines,
            data,
            vec![("szegedy_walk.csv", write_dense(&inst.walk.dense_matrix()?))],
        )
    };
    if let Some(dir) = &args.out {
        let mut out = OutDir::create(dir)?;
        out.warnings = warnings;
        for (name, text) in files {
            out.write(name, &text)?;
        }
        out.write(
            "certificate.json",
            &(serde_json::to_string_pretty(&data).unwrap() + "\n"),
        )?;
        out.finish("convert")?;
    }
    Ok(Report { lines, data })
}

/// `Ok(None)` means the graph and pair went to stdout.
fn model(args: &ModelArgs) -> CliResult<Option<Report>> {
    let (name, graph, pair, policy, ev) = match args.model {
        ModelKind::Honeycomb { m } => {
            let h = honeycomb(m)?;
            let ev = h.walk(BlueAmplitudes::Uniform)?;
            (
                format!("honeycomb m={m}"),
                h.graph,
                h.pair,
                LoopPolicy::Strict,
                ev,
            )
        }
        ModelKind::ThreeState { sites, rho } => {
            let t = three_state(sites, rho)?;
            let ev = t.walk()?;
            (
                format!("three-state L={sites} rho={rho}"),
                t.graph,
                t.pair,
                LoopPolicy::AllowLoops,
                ev,
            )
        }
    };
    let edges = write_edge_list(&graph);
    let tess = write_pair(&pair);
    let Some(dir) = &args.out else {
        print!("{edges}{tess}");
        return Ok(None);
    };
    let form = coined_reduce(&graph, &ev, policy)?;
    let mut out = OutDir::create(dir)?;
    out.write("graph.edges", &edges)?;
    out.write("pair.tess", &tess)?;
    out.finish("model")?;
    Ok(Some(Report {
        lines: vec![
            format!(
                "{name}: {} vertices, {} edges",
                graph.vertex_count(),
                graph.edge_count()
            ),
            format!(
                "coined form: {} shrunken vertices, {} loops",
                form.degrees.len(),
                form.loops.len()
            ),
        ],
        data: json!({
            "model": name,
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "blue_polygons": pair.blue.len(),
            "red_polygons": pair.red.len(),
        }),
    }))
}

fn search(args: &SearchArgs) -> CliResult<Report> {
    let opts = SearchOptions {
        record_raw_sums: args.raw_sums,
    };
    let results = sweep(&args.n_list, args.t_max, opts)?;
    let (points, skipped) = scaling_points(&results);
    let mut lines = Vec::new();
    let mut per_n = Vec::new();
    let mut out = args.out.as_deref().map(OutDir::create).transpose()?;
    for (n, r) in &results {
        let big_n = 8 * n * n;
        let mut entry = json!({ "n": n, "vertex_count": big_n, "max_norm_drift": r.max_norm_drift });
        match r.peak {
            Some(pk) => {
                let cost = amplified_cost(pk.t as f64, pk.p)?;
                lines.push(format!(
                    "n={n} N={big_n}: t*={} p*={:.6} cost={cost:.2}",
                    pk.t, pk.p
                ));
                entry["t_star"] = json!(pk.t);
                entry["p_star"] = json!(pk.p);
                entry["amplified_cost"] = json!(cost);
            }
            None => lines.push(format!("n={n} N={big_n}: no peak within t <= {}", args.t_max)),
        }
        if args.classical_trials > 0 {
            let inst = torus_instance(*n)?;
            let cap = 1000 * big_n;
            let est = hitting_time(&inst.graph, &inst.marked, args.classical_trials, args.seed, cap)?;
            lines.push(format!(
                "  classical hitting time {:.1} +- {:.1}",
                est.mean, est.std_error
            ));
            entry["classical"] = serde_json::to_value(est).unwrap();
        }
        per_n.push(entry);
        if let Some(out) = out.as_mut() {
            let mut csv = String::from(if args.raw_sums {
                "t,p,raw_re,raw_im\n"
            } else {
                "t,p\n"
            });
            for (t, p) in r.series.iter().enumerate() {
                match &r.raw_sums {
                    Some(raw) => {
                        csv.push_str(&format!("{t},{p:.15e},{:.15e},{:.15e}\n", raw[t].re, raw[t].im))
                    }
                    None => csv.push_str(&format!("{t},{p:.15e}\n")),
                }
            }
            out.write(&format!("series_n{n}.csv"), &csv)?;
        }
    }
    let fit = if points.len() >= MIN_FIT_POINTS {
        let mut fit = fit_scaling(&points)?;
        fit.skipped = skipped;
        lines.push(format!(
            "t* ~ {:.4} N^{:.4} (residual {:.3e})",
            fit.a, fit.b, fit.time_residual
        ));
        lines.push(format!(
            "p* ~ {:.4} / (ln N)^{:.4} (residual {:.3e})",
            fit.c, fit.d, fit.probability_residual
        ));
        serde_json::to_value(&fit).unwrap()
    } else {
        lines.push(format!(
            "fit skipped: {} peak(s), need {MIN_FIT_POINTS}",
            points.len()
        ));
        Value::Null
    };
    let data = json!({ "t_max": args.t_max, "instances": per_n, "fit": fit });
    if let Some(mut out) = out {
        out.write(
            "fit_report.json",
            &(serde_json::to_string_pretty(&data).unwrap() + "\n"),
        )?;
        out.finish("search")?;
    }
    Ok(Report { lines, data })
}

fn run(cli: &Cli) -> CliResult<Option<Report>> {
    match &cli.command {
        Command::Classify(a) => classify(a).map(Some),
        Command::Tessellate(a) => tessellate(a).map(Some),
        Command::Evolve(a) => evolve(a),
        Command::Convert(a) => convert(a).map(Some),
        Command::Model(a) => model(a),
        Command::Search(a) => search(a).map(Some),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Some(report)) => {
            for l in &report.lines {
                println!("{l}");
            }
            println!("{}", report.data);
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            eprintln!("reason={}", f.reason);
            ExitCode::from(1)
        }
    }
}
