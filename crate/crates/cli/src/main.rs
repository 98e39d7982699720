use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use exgraph_core::constructions::{
    cartesian_product, complete, complete_bipartite, critical_family, cycle, glue, glued_prism,
    glued_prism_minus, glued_prism_minus_witness, path, path_prism, prism, star,
};
use exgraph_core::counting::{
    count_copies, count_embeddings, four_cycle_census, hom_cycle, EmbedConstraints, ThinCycleParams,
};
use exgraph_core::graph::{
    degeneracy, is_bipartite, is_critical_r_degenerate, is_k_almost_regular, Bipartition,
};
use exgraph_core::io::{parse_graph, serialize_graph, GraphDocument};
use exgraph_core::procedures::{case2_relation_pipeline, find_glued_copy, GluedOutcome, Route};
use exgraph_core::search::{
    bipartite_extremal_number, extremal_number, zarankiewicz_number, Budget, SearchReport,
};
use exgraph_core::suites::{self, Suite, SuiteReport, DEFAULT_SEED};
use exgraph_core::{BipartiteGraph, Graph, GraphError, RootedGraph};

#[derive(Parser, Debug)]
#[command(name = "exgraph", version, about = "Extremal graph workbench")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, env = "EXGRAPH_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph family as an edge list.
    Construct(ConstructArgs),
    /// Test structural properties of a graph.
    Check(CheckArgs),
    /// Homomorphism and copy counts.
    Count(CountArgs),
    /// List 4-cycles with their diagonal codegrees.
    Census(CensusArgs),
    /// Exact extremal or Zarankiewicz number.
    Extremal(ExtremalArgs),
    /// Run a copy-finding procedure and print its trace.
    Pipeline(PipelineArgs),
    /// Run a batch of property checks.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    Star,
    Prism,
    PathPrism,
    Critical,
    GluedPrism,
    GluedPrismMinus,
    Glue,
    Product,
}

#[derive(clap::Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Cycle or prism length, path edges, clique size, star leaves, or the prism parameter.
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Operands for `glue` (rooted) and `product`.
    #[arg(long)]
    first: Option<PathBuf>,
    #[arg(long)]
    second: Option<PathBuf>,
    /// Elimination order for `glued-prism-minus`, one vertex per line.
    #[arg(long)]
    order_out: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Fail unless the graph is bipartite.
    #[arg(long)]
    bipartite: bool,
    /// Fail unless the graph is critical r-degenerate.
    #[arg(long)]
    critical: Option<usize>,
    /// Fail unless the graph is K-almost-regular.
    #[arg(long)]
    almost_regular: Option<f64>,
    /// Fail if the graph contains this pattern.
    #[arg(long)]
    free_of: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct CountArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Closed-walk counts for even cycle lengths up to this bound.
    #[arg(long, default_value_t = 8)]
    max_cycle: usize,
    /// Also count labeled and unlabeled copies of this pattern.
    #[arg(long)]
    pattern: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct CensusArgs {
    #[arg(long)]
    graph: PathBuf,
    /// A 4-cycle is thin when both diagonal codegrees are at most tau.
    #[arg(long, default_value_t = 2.0)]
    tau: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    General,
    Bip,
    Zar,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::General => "general",
            Mode::Bip => "bip",
            Mode::Zar => "zar",
        }
    }
}

#[derive(clap::Args, Debug)]
struct BudgetArgs {
    #[arg(long, default_value_t = Budget::default().max_nodes)]
    max_nodes: u64,
    #[arg(long, default_value_t = Budget::default().max_seconds)]
    max_seconds: f64,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, Failure> {
        Ok(Budget::new(self.max_nodes, self.max_seconds)?)
    }
}

#[derive(clap::Args, Debug)]
struct ExtremalArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long)]
    n: usize,
    /// Second part size for `bip` and `zar`; defaults to `n`.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    pattern: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Witness edge list; defaults to a file next to the pattern.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PipelineKind {
    Glued,
    Case2,
}

#[derive(clap::Args, Debug)]
struct PipelineArgs {
    #[arg(long, value_enum, default_value_t = PipelineKind::Glued)]
    kind: PipelineKind,
    #[arg(long)]
    graph: PathBuf,
    /// Rooted patterns for `glued`; the root defaults to vertex 0.
    #[arg(long)]
    first: Option<PathBuf>,
    #[arg(long)]
    second: Option<PathBuf>,
    /// Packing threshold is e(G1) / divisor; defaults to 48 v(H1).
    #[arg(long)]
    divisor: Option<f64>,
    #[arg(long, default_value_t = 3.0)]
    tau: f64,
    #[arg(long, default_value_t = 2)]
    l: usize,
    /// Directory for witness edge lists.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    /// Instances for the random suites.
    #[arg(long)]
    count: Option<usize>,
    /// Pattern for `chain`; defaults to C4.
    #[arg(long)]
    pattern: Option<PathBuf>,
    /// Part sizes for `chain`.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3])]
    n: Vec<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Violation(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Violation(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::TooLarge { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let seed = cli.seed;
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Check(a) => check(a),
        Command::Count(a) => count(a),
        Command::Census(a) => census(a),
        Command::Extremal(a) => extremal(a),
        Command::Pipeline(a) => pipeline(a, seed),
        Command::Verify(a) => verify(a, seed),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read_doc(path: &Path) -> Result<GraphDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_rooted(path: &Path) -> Result<RootedGraph, Failure> {
    let doc = read_doc(path)?;
    Ok(RootedGraph::new(doc.graph, doc.root.unwrap_or(0))?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Writes to `out` when given, else returns the text for stdout.
fn emit(out: Option<&Path>, text: String) -> Outcome {
    match out {
        Some(p) => write_file(p, &text).map(|_| String::new()),
        None => Ok(text),
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Input(format!("--{flag} is required for this family")))
}

fn construct(a: ConstructArgs) -> Outcome {
    let plain = |g: Graph| GraphDocument::plain(g);
    let rooted = |g: RootedGraph| GraphDocument {
        root: Some(g.root()),
        ..GraphDocument::plain(g.into_graph())
    };
    let sided = |b: BipartiteGraph| GraphDocument {
        sides: Some(b.sides().to_vec()),
        ..GraphDocument::plain(b.into_graph())
    };
    let doc = match a.family {
        Family::Cycle => plain(cycle(need(a.l, "l")?)?),
        Family::Path => plain(path(need(a.l, "l")?)),
        Family::Complete => plain(complete(need(a.l, "l")?)),
        Family::CompleteBipartite => {
            let (x, y) = (need(a.a, "a")?, need(a.b, "b")?);
            sided(BipartiteGraph::new(
                complete_bipartite(x, y),
                (0..x + y).map(|v| u8::from(v >= x)).collect(),
            )?)
        }
        Family::Star => plain(star(need(a.l, "l")?)),
        Family::Prism => plain(prism(need(a.l, "l")?)?),
        Family::PathPrism => sided(path_prism(need(a.l, "l")?)?),
        Family::Critical => rooted(critical_family(need(a.r, "r")?)?),
        Family::GluedPrism => plain(glued_prism(need(a.l, "l")?)?),
        Family::GluedPrismMinus => {
            let l = need(a.l, "l")?;
            if let Some(p) = &a.order_out {
                let order = glued_prism_minus_witness(l)?;
                let text: String = order.order.iter().map(|v| format!("{v}\n")).collect();
                write_file(p, &text)?;
            }
            rooted(glued_prism_minus(l)?)
        }
        Family::Glue => {
            let first = a
                .first
                .as_deref()
                .ok_or_else(|| Failure::Input("--first is required".into()))?;
            let second = a
                .second
                .as_deref()
                .ok_or_else(|| Failure::Input("--second is required".into()))?;
            rooted(glue(&read_rooted(first)?, &read_rooted(second)?)?)
        }
        Family::Product => {
            let first = a
                .first
                .as_deref()
                .ok_or_else(|| Failure::Input("--first is required".into()))?;
            let second = a
                .second
                .as_deref()
                .ok_or_else(|| Failure::Input("--second is required".into()))?;
            plain(cartesian_product(&read_doc(first)?.graph, &read_doc(second)?.graph)?.graph)
        }
    };
    emit(a.out.as_deref(), serialize_graph(&doc))
}

fn check(a: CheckArgs) -> Outcome {
    let g = read_doc(&a.graph)?.graph;
    let mut out = String::from("property,value\n");
    let mut violations = Vec::new();
    let _ = writeln!(out, "vertices,{}", g.n());
    let _ = writeln!(out, "edges,{}", g.edge_count());
    let _ = writeln!(out, "min_degree,{}", g.min_degree());
    let _ = writeln!(out, "max_degree,{}", g.max_degree());
    let (d, _) = degeneracy(&g);
    let _ = writeln!(out, "degeneracy,{d}");
    match is_bipartite(&g) {
        Bipartition::Bipartite(_) => out.push_str("bipartite,true\n"),
        Bipartition::OddCycle(c) => {
            let cyc: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "bipartite,false\nodd_cycle,{}", cyc.join(" "));
            if a.bipartite {
                violations.push("not bipartite".to_string());
            }
        }
    }
    if let Some(r) = a.critical {
        let ok = is_critical_r_degenerate(&g, r);
        let _ = writeln!(out, "critical_{r}_degenerate,{ok}");
        if !ok {
            violations.push(format!("not critical {r}-degenerate"));
        }
    }
    if let Some(k) = a.almost_regular {
        let ok = is_k_almost_regular(&g, k)?;
        let _ = writeln!(out, "almost_regular_{k},{ok}");
        if !ok {
            violations.push(format!("not {k}-almost-regular"));
        }
    }
    if let Some(p) = &a.free_of {
        let h = read_doc(p)?.graph;
        let found = exgraph_core::counting::find_embedding(&h, &g, &EmbedConstraints::none())?;
        let _ = writeln!(out, "contains_pattern,{}", found.is_some());
        if let Some(e) = found {
            let image: Vec<String> = e.map.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "pattern_image,{}", image.join(" "));
            violations.push("pattern found".to_string());
        }
    }
    if violations.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Violation(violations.join("; ")))
    }
}

fn count(a: CountArgs) -> Outcome {
    let g = read_doc(&a.graph)?.graph;
    let mut out = String::from("name,value\n");
    for len in (2..=a.max_cycle).step_by(2) {
        let _ = writeln!(out, "hom_c{len},{}", hom_cycle(len, &g)?);
    }
    let _ = writeln!(out, "four_cycles,{}", count_copies(&cycle(4)?, &g)?);
    if let Some(p) = &a.pattern {
        let h = read_doc(p)?.graph;
        let _ = writeln!(
            out,
            "pattern_embeddings,{}",
            count_embeddings(&h, &g, &EmbedConstraints::none())?
        );
        let _ = writeln!(out, "pattern_copies,{}", count_copies(&h, &g)?);
    }
    Ok(out)
}

fn census(a: CensusArgs) -> Outcome {
    let g = read_doc(&a.graph)?.graph;
    let params = ThinCycleParams::new(a.tau)?;
    let c = four_cycle_census(&g, params);
    let mut rows: Vec<_> = c
        .thin
        .iter()
        .map(|f| (f, "thin"))
        .chain(c.thick.iter().map(|f| (f, "thick")))
        .collect();
    rows.sort_by_key(|(f, _)| f.vertices);
    let mut out = String::from("x,y,z,w,codegree_xz,codegree_yw,class\n");
    for (f, class) in rows {
        let [x, y, z, w] = f.vertices;
        let _ = writeln!(
            out,
            "{x},{y},{z},{w},{},{},{class}",
            f.first_diagonal, f.second_diagonal
        );
    }
    Ok(out)
}

fn pattern_name(p: &Path) -> String {
    p.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "pattern".into())
}

fn extremal(a: ExtremalArgs) -> Outcome {
    let budget = a.budget.budget()?;
    let doc = read_doc(&a.pattern)?;
    let name = pattern_name(&a.pattern);
    let m = a.m.unwrap_or(a.n);
    let report: SearchReport = match a.mode {
        Mode::General => extremal_number(a.n, &doc.graph, budget)?,
        Mode::Bip => bipartite_extremal_number(a.n, m, &doc.graph, budget)?,
        Mode::Zar => {
            let sided = match doc.bipartite() {
                Some(b) => b,
                None => match is_bipartite(&doc.graph) {
                    Bipartition::Bipartite(b) => b,
                    Bipartition::OddCycle(_) => {
                        return Err(Failure::Input("zar mode needs a bipartite pattern".into()))
                    }
                },
            };
            zarankiewicz_number(a.n, m, &sided, budget)?
        }
    };
    let m_col = if a.mode == Mode::General {
        String::new()
    } else {
        m.to_string()
    };
    let witness_path = a.witness.clone().unwrap_or_else(|| {
        let file = format!(
            "{name}.{}.n{}{}.witness.el",
            a.mode.name(),
            a.n,
            if m_col.is_empty() {
                String::new()
            } else {
                format!("m{m}")
            }
        );
        a.pattern.with_file_name(file)
    });
    let doc = GraphDocument {
        sides: report.witness_sides.clone(),
        ..GraphDocument::plain(report.witness.clone())
    };
    write_file(&witness_path, &serialize_graph(&doc))?;
    let row = format!(
        "mode,n,m,pattern,value,exact,nodes,seconds\n{},{},{},{},{},{},{},{:.3}\n",
        a.mode.name(),
        a.n,
        m_col,
        name,
        report.value,
        report.is_exact(),
        report.nodes_explored,
        report.elapsed
    );
    if report.budget_exhausted {
        print!("{row}");
        return Err(Failure::Budget(format!(
            "budget exhausted; {} is a lower bound",
            report.value
        )));
    }
    Ok(row)
}

fn pipeline(a: PipelineArgs, seed: u64) -> Outcome {
    let g = read_doc(&a.graph)?.graph;
    let mut out = String::new();
    match a.kind {
        PipelineKind::Case2 => {
            let trace = case2_relation_pipeline(&g, a.tau, a.l)?;
            out.push_str(&trace.to_lines());
            if let Some(h) = &trace.halted {
                let _ = writeln!(out, "halted={h}");
            }
        }
        PipelineKind::Glued => {
            let c4 = || RootedGraph::new(cycle(4).expect("valid length"), 0).expect("valid root");
            let h1 = a
                .first
                .as_deref()
                .map(read_rooted)
                .transpose()?
                .unwrap_or_else(c4);
            let h2 = a
                .second
                .as_deref()
                .map(read_rooted)
                .transpose()?
                .unwrap_or_else(c4);
            let _ = writeln!(
                out,
                "seed={seed}\ngraph_vertices={}\ngraph_edges={}",
                g.n(),
                g.edge_count()
            );
            let outcome = find_glued_copy(&g, &h1, &h2, a.divisor, seed)?;
            let stats = match &outcome {
                GluedOutcome::Found { stats, .. } | GluedOutcome::NotFound { stats, .. } => {
                    stats.clone()
                }
            };
            let _ = writeln!(
                out,
                "bipartite_edges={}\npeeled_vertices={}\npeeled_edges={}\npartition_tries={}\nfirst_part_edges={}\nsecond_part_edges={}\nthreshold={:.6}\npacked_copies={}",
                stats.bipartite_edges,
                stats.peeled_vertices,
                stats.peeled_edges,
                stats.partition_tries,
                stats.first_part_edges,
                stats.second_part_edges,
                stats.threshold,
                stats.packed_copies
            );
            match outcome {
                GluedOutcome::Found {
                    embedding,
                    glued,
                    route,
                    ..
                } => {
                    match route {
                        Route::Pipeline { sides_swapped } => {
                            let _ = writeln!(out, "route=pipeline\nsides_swapped={sides_swapped}");
                        }
                        Route::DirectSearch { failed_at } => {
                            let _ = writeln!(
                                out,
                                "route=direct_search\npipeline_failed_at={}",
                                failed_at.name()
                            );
                        }
                    }
                    let image: Vec<String> = embedding.map.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(out, "result=found\nembedding={}", image.join(" "));
                    if let Some(dir) = &a.out_dir {
                        std::fs::create_dir_all(dir)
                            .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
                        let pattern = GraphDocument {
                            root: Some(glued.root()),
                            ..GraphDocument::plain(glued.graph().clone())
                        };
                        write_file(&dir.join("glued_pattern.el"), &serialize_graph(&pattern))?;
                        let edges = glued
                            .graph()
                            .edges()
                            .into_iter()
                            .map(|(u, v)| (embedding.map[u], embedding.map[v]));
                        let copy = Graph::from_edges(g.n(), edges)?;
                        write_file(
                            &dir.join("glued_copy.el"),
                            &serialize_graph(&GraphDocument::plain(copy)),
                        )?;
                    }
                }
                GluedOutcome::NotFound { failed_at, .. } => {
                    let _ = writeln!(
                        out,
                        "result=not_found\npipeline_failed_at={}",
                        failed_at.name()
                    );
                }
            }
        }
    }
    Ok(out)
}

fn verify(a: VerifyArgs, seed: u64) -> Outcome {
    let suite = Suite::from_name(&a.suite).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        Failure::Input(format!(
            "unknown suite '{}'; expected one of {}",
            a.suite,
            names.join(", ")
        ))
    })?;
    let count = a.count.unwrap_or(suite.default_count());
    let report: SuiteReport = match suite {
        Suite::Chain => {
            let budget = a.budget.budget()?;
            let (h, sides) = match &a.pattern {
                Some(p) => {
                    let doc = read_doc(p)?;
                    (doc.graph, doc.sides)
                }
                None => (cycle(4)?, None),
            };
            suites::chain_suite(&h, sides.as_deref(), &a.n, budget)?
        }
        Suite::Interpolation => suites::interpolation_suite(seed, count),
        Suite::BadCycles => suites::bad_cycle_bound_suite(seed, count),
        Suite::DyadicSums => suites::dyadic_sum_suite(seed, count),
        Suite::CutAndPeel => suites::cut_and_peel_suite(seed, count),
        Suite::Critical => suites::critical_suite()?,
    };
    let csv = report.to_csv();
    let failed: Vec<String> = report.failures().map(|r| r.check.clone()).collect();
    let shown = emit(a.out.as_deref(), csv)?;
    if report.budget_exhausted {
        print!("{shown}");
        return Err(Failure::Budget(
            "search budget exhausted; values are lower bounds".into(),
        ));
    }
    if !failed.is_empty() {
        print!("{shown}");
        return Err(Failure::Violation(format!(
            "{} failed: {}",
            failed.len(),
            failed.join(" ")
        )));
    }
    Ok(shown)
}
