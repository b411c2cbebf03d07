//! `cfcolor`: verify, construct and compute conflict-free colorings from the command line.

mod table;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cfcolor::cliquesum::{
    adapt_colorability, extendability_audit, fold_tree_decomposition, AuditConfig, CliqueSumError,
    ExtendableColorer, TorsoSpec,
};
use cfcolor::coloring::{achievement, check_lists, find_witness, verify_proper, verify_proper_s_achieved, Neighborhood};
use cfcolor::decomp::{
    bfs_layering, cycle_decomposition, forest_decomposition, grid_column_decomposition,
    grid_row_layering, path_decomposition, random_decomposed_graph, single_bag, torso_and_frame,
    Layering, TreeDecomposition,
};
use cfcolor::exact::{
    exact_chromatic, refute_choosability, BruteExtendable, ChoosabilityConfig, ChoosabilityResult,
    ExactConfig, ExactKind,
};
use cfcolor::graph::{generators, io};
use cfcolor::ordering::{color_by_plan, OrderingPlan};
use cfcolor::structured::{
    build_layered_plan, build_product_plan, color_minor_degenerate, color_near_bounded_degree,
    near_bounded_list_size, surface_profile, ExactListColorer, ListColorer, MinorColorRequest,
    MinorDegenerate, SquareGreedy,
};
use cfcolor::{AchievementSpec, Coloring, DegeneracyProfile, Graph, ListAssignment, VertexSet};

const DEFAULT_SEED: u64 = 1;

#[derive(Parser)]
#[command(name = "cfcolor", version, about = "Proper conflict-free and odd list coloring")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a coloring; exit 0 if valid, 1 if not, 2 if the input does not parse.
    Verify(VerifyArgs),
    /// Color a graph with one of the constructive strategies.
    Color(ColorArgs),
    /// Exact parameter by exhaustive search, or a choosability counterexample.
    Exact(ExactArgs),
    /// Fold extendable torso colorers along a tree-decomposition.
    Compose(ComposeArgs),
    /// Emit a regression table as CSV.
    Table(TableArgs),
    /// Generate a graph, optionally with a tree-decomposition and layering.
    Gen(GenArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    /// Coloring JSON `{"colors": [...]}`.
    #[arg(long)]
    coloring: PathBuf,
    /// proper, pcf, pcfc, icf, icfc, odd or s:<S>.
    #[arg(long, default_value = "pcf")]
    kind: ExactKind,
    /// List assignment the coloring must respect.
    #[arg(long)]
    lists: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    MinorDegenerate,
    Surface,
    NearBounded,
    SquareGreedy,
    Plan,
    Layered,
    Product,
    Exact,
}

#[derive(clap::Args)]
struct ListArgs {
    /// List assignment JSON `{"lists": [[...], ...]}`.
    #[arg(long, conflicts_with = "list_size")]
    lists: Option<PathBuf>,
    /// Size of every list; defaults to the size the strategy guarantees.
    #[arg(long)]
    list_size: Option<usize>,
    /// Draw random lists from `1..=universe` instead of using `1..=list_size`.
    #[arg(long)]
    universe: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

impl ListArgs {
    fn resolve(&self, n: usize, default_size: usize) -> anyhow::Result<ListAssignment> {
        if let Some(path) = &self.lists {
            let l: ListAssignment = serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
            if l.len() != n {
                return Err(anyhow!("{} lists for {n} vertices", l.len()));
            }
            return Ok(l);
        }
        let k = self.list_size.unwrap_or(default_size);
        Ok(match self.universe {
            Some(u) => ListAssignment::random(n, k, u.max(k), &mut generators::rng(self.seed)),
            None => ListAssignment::uniform(n, k),
        })
    }
}

#[derive(clap::Args)]
struct ColorArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    strategy: Strategy,
    /// Achievement set: cf, odd or a list such as 1,3.
    #[arg(long = "S", default_value = "cf")]
    s: AchievementSpec,
    #[command(flatten)]
    lists: ListArgs,
    /// Degeneracy bound `d` (minor-degenerate, near-bounded).
    #[arg(long)]
    d: Option<f64>,
    /// Degeneracy threshold `q` (minor-degenerate).
    #[arg(long, default_value_t = 1)]
    q: usize,
    /// Euler genus (surface).
    #[arg(long, default_value_t = 0)]
    genus: usize,
    /// Tree-decomposition JSON (layered, product).
    #[arg(long)]
    td: Option<PathBuf>,
    /// Layering JSON (layered).
    #[arg(long)]
    lay: Option<PathBuf>,
    /// Ordering plan JSON (plan).
    #[arg(long)]
    plan: Option<PathBuf>,
    /// Second factor of the strong product (product).
    #[arg(long)]
    factor: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ExactArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "pcf")]
    kind: ExactKind,
    /// Values of k searched concurrently.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = 12)]
    cap: usize,
    /// Look for a k-list-assignment with no coloring instead.
    #[arg(long)]
    refute: Option<usize>,
    /// Color universe for --refute; defaults to 2k.
    #[arg(long)]
    universe: Option<usize>,
    /// Include wall time (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Inner {
    Brute,
    Exact,
    SquareGreedy,
    MinorDegenerate,
}

#[derive(clap::Args)]
struct ComposeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    td: PathBuf,
    #[arg(long = "S", default_value = "cf")]
    s: AchievementSpec,
    /// Torso colorer.
    #[arg(long, value_enum, default_value = "exact")]
    inner: Inner,
    /// Degeneracy bound for --inner minor-degenerate.
    #[arg(long, default_value_t = 2.0)]
    d: f64,
    #[command(flatten)]
    lists: ListArgs,
    /// Also audit the folded colorer on this many sampled requests.
    #[arg(long)]
    audit: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct TableArgs {
    /// paper-tight or random-audit.
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Fan,
    Grid,
    Petersen,
    Tree,
    Outerplanar,
    Planar,
    Gnp,
    Decomposed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Txt,
    Json,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    rows: usize,
    #[arg(long, default_value_t = 4)]
    cols: usize,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Bag size and adhesion for the decomposed family.
    #[arg(long, default_value_t = 3)]
    bag: usize,
    #[arg(long, default_value_t = 1)]
    adhesion: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "txt")]
    format: Format,
    /// Also write a tree-decomposition here (path, cycle, complete, grid, tree, decomposed).
    #[arg(long)]
    td_out: Option<PathBuf>,
    /// Also write a layering here (path, grid, tree).
    #[arg(long)]
    lay_out: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// How a command failed, mapped onto the exit code.
enum Failure {
    /// The input was understood and is wrong (exit 1).
    Invalid(Value),
    /// Bad arguments or unreadable input (exit 2).
    Usage(anyhow::Error),
    /// The requested computation failed (exit 1).
    Error(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Error(e)
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read(path).map_err(usage)?;
    io::parse_any(&text).with_context(|| format!("parsing {}", path.display())).map_err(usage)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read(path).map_err(usage)?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display())).map_err(usage)
}

fn emit(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn witness_json(g: &Graph, phi: &Coloring, s: &AchievementSpec) -> Value {
    Value::Array(
        g.vertices()
            .map(|v| find_witness(g, phi, v, s, None).map_or(Value::Null, |c| json!(c)))
            .collect(),
    )
}

fn cmd_verify(a: &VerifyArgs) -> Result<Value, Failure> {
    let g = read_graph(&a.input)?;
    let phi: Coloring = read_json(&a.coloring)?;
    let lists: Option<ListAssignment> = a.lists.as_deref().map(read_json).transpose()?;
    let check = || -> Result<(), cfcolor::coloring::VerifyError> {
        if a.kind.proper() {
            verify_proper(&g, &phi)?;
        }
        if let Some(s) = a.kind.spec() {
            let nbhd = if a.kind.closed() { Neighborhood::Closed } else { Neighborhood::Open };
            achievement(&g, &phi, &s, nbhd, None)?;
        }
        if let Some(l) = &lists {
            check_lists(&phi, l)?;
        }
        Ok(())
    };
    let report = |violation: Option<String>| {
        json!({
            "kind": a.kind.to_string(),
            "valid": violation.is_none(),
            "violation": violation,
            "colors_used": phi.colors_used(),
        })
    };
    if phi.len() != g.vertex_count() {
        return Err(Failure::Invalid(report(Some(format!(
            "coloring has {} entries but the graph has {} vertices",
            phi.len(),
            g.vertex_count()
        )))));
    }
    match check() {
        Ok(()) => Ok(report(None)),
        Err(e) => Err(Failure::Invalid(report(Some(e.to_string())))),
    }
}

fn need(flag: &Option<PathBuf>, name: &str, strategy: &str) -> Result<PathBuf, Failure> {
    flag.clone().ok_or_else(|| usage(anyhow!("strategy {strategy} needs --{name}")))
}

fn cmd_color(a: &ColorArgs) -> Result<Value, Failure> {
    let g = read_graph(&a.input)?;
    let n = g.vertex_count();
    if a.strategy != Strategy::Exact && !a.s.contains_one() {
        return Err(usage(anyhow!("the constructive strategies produce conflict-free colorings and need 1 in S")));
    }
    let name = a.strategy.to_possible_value().expect("named").get_name().to_string();
    let mut extra = serde_json::Map::new();
    let (graph, lists, phi) = match a.strategy {
        Strategy::MinorDegenerate | Strategy::Surface => {
            let (profile, size) = if a.strategy == Strategy::Surface {
                let sp = surface_profile(a.genus);
                extra.insert("profile".into(), json!({"q": sp.profile.q, "d": sp.profile.d}));
                (sp.profile, sp.list_size)
            } else {
                let p = DegeneracyProfile::new(a.q, a.d.unwrap_or(1.0));
                (p, p.required_list_size())
            };
            let lists = a.lists.resolve(n, size)?;
            let out = color_minor_degenerate(&MinorColorRequest::new(g.clone(), lists.clone(), profile)).map_err(anyhow::Error::from)?;
            extra.insert("contractions".into(), json!(out.contractions));
            extra.insert("deletions".into(), json!(out.deletions));
            (g, lists, out.coloring)
        }
        Strategy::NearBounded => {
            let d = a.d.ok_or_else(|| usage(anyhow!("strategy near-bounded needs --d")))?;
            let lists = a.lists.resolve(n, near_bounded_list_size(d))?;
            let phi = color_near_bounded_degree(&g, &lists, d).map_err(anyhow::Error::from)?;
            (g, lists, phi)
        }
        Strategy::SquareGreedy => {
            let delta = g.max_degree();
            let lists = a.lists.resolve(n, delta * delta + 1)?;
            let phi = SquareGreedy::color_square(&g, &lists).map_err(anyhow::Error::from)?;
            (g, lists, phi)
        }
        Strategy::Plan => {
            let plan: OrderingPlan = read_json(&need(&a.plan, "plan", &name)?)?;
            let widths = cfcolor::ordering::validate_plan(&g, &plan).map_err(anyhow::Error::from)?;
            extra.insert("widths".into(), json!(widths));
            let lists = a.lists.resolve(n, widths.list_size())?;
            let out = color_by_plan(&g, &plan, &lists, false).map_err(anyhow::Error::from)?;
            (g, lists, out.coloring)
        }
        Strategy::Layered => {
            let td: TreeDecomposition = read_json(&need(&a.td, "td", &name)?)?;
            let lay: Layering = read_json(&need(&a.lay, "lay", &name)?)?;
            let lp = build_layered_plan(&g, &td, &lay).map_err(anyhow::Error::from)?;
            extra.insert("layered_width".into(), json!(lp.w));
            extra.insert("widths".into(), json!(lp.widths));
            let lists = a.lists.resolve(n, lp.guaranteed_list_size())?;
            let out = color_by_plan(&g, &lp.plan, &lists, false).map_err(anyhow::Error::from)?;
            (g, lists, out.coloring)
        }
        Strategy::Product => {
            let td: TreeDecomposition = read_json(&need(&a.td, "td", &name)?)?;
            let q = read_graph(&need(&a.factor, "factor", &name)?)?;
            let pp = build_product_plan(&g, &td, &q).map_err(anyhow::Error::from)?;
            extra.insert("w".into(), json!(pp.w));
            extra.insert("d".into(), json!(pp.d));
            extra.insert("widths".into(), json!(pp.widths));
            let product = pp.product.graph.clone();
            let coords: Vec<_> = (0..product.vertex_count()).map(|p| pp.product.coords(p)).collect();
            extra.insert("coords".into(), json!(coords));
            let lists = a.lists.resolve(product.vertex_count(), pp.guaranteed_list_size())?;
            let out = color_by_plan(&product, &pp.plan, &lists, false).map_err(anyhow::Error::from)?;
            (product, lists, out.coloring)
        }
        Strategy::Exact => {
            let lists = a.lists.resolve(n, g.max_degree() + 1)?;
            let phi = ExactListColorer::default()
                .color(&g, &lists, &a.s, &Default::default())
                .map_err(anyhow::Error::from)?;
            (g, lists, phi)
        }
    };
    verify_proper_s_achieved(&graph, &phi, &a.s, None).map_err(|e| anyhow!("internal error, output fails verification: {e}"))?;
    check_lists(&phi, &lists).map_err(|e| anyhow!("internal error, output fails verification: {e}"))?;
    let mut out = json!({
        "strategy": name,
        "S": a.s.to_string(),
        "n": graph.vertex_count(),
        "list_size": lists.min_size(),
        "colors_used": phi.colors_used(),
        "coloring": phi,
        "witness": witness_json(&graph, &phi, &a.s),
    });
    out.as_object_mut().expect("object").extend(extra);
    Ok(out)
}

fn cmd_exact(a: &ExactArgs) -> Result<Value, Failure> {
    let g = read_graph(&a.input)?;
    if let Some(k) = a.refute {
        let cfg = ChoosabilityConfig {
            universe: a.universe,
            max_vertices: a.cap,
            ..Default::default()
        };
        let r = refute_choosability(&g, k, &a.kind, &cfg).map_err(anyhow::Error::from)?;
        return Ok(match r {
            ChoosabilityResult::Counterexample(l) => json!({
                "kind": a.kind.to_string(),
                "k": k,
                "result": "counterexample",
                "lists": l.lists,
            }),
            ChoosabilityResult::Inconclusive { examined, exhausted } => json!({
                "kind": a.kind.to_string(),
                "k": k,
                "result": "inconclusive",
                "examined": examined,
                "exhausted": exhausted,
            }),
        });
    }
    let cfg = ExactConfig {
        max_vertices: a.cap,
        jobs: a.jobs,
    };
    let r = exact_chromatic(&g, &a.kind, &cfg).map_err(anyhow::Error::from)?;
    if !a.kind.verify(&g, &r.witness) {
        return Err(anyhow!("internal error, witness fails verification").into());
    }
    let mut v = serde_json::to_value(&r).expect("serializable");
    if a.timing {
        v["wall_ms"] = json!(r.elapsed.as_secs_f64() * 1000.0);
    }
    Ok(v)
}

fn torso_factory(
    inner: Inner,
    s: AchievementSpec,
    d: f64,
) -> impl FnMut(&TorsoSpec) -> Result<Box<dyn ExtendableColorer>, CliqueSumError> {
    move |ts: &TorsoSpec| {
        let list_colorer: Arc<dyn ListColorer> = match inner {
            Inner::Brute => {
                let c = BruteExtendable::new(ts.graph.clone(), ts.frame.clone(), ts.lists.clone(), ts.adhesion, s.clone())?;
                return Ok(Box::new(c));
            }
            Inner::Exact => Arc::new(ExactListColorer::default()),
            Inner::SquareGreedy => Arc::new(SquareGreedy),
            Inner::MinorDegenerate => Arc::new(MinorDegenerate {
                profile: DegeneracyProfile::degenerate(d),
            }),
        };
        let c = adapt_colorability(ts.graph.clone(), ts.frame.clone(), ts.lists.clone(), ts.adhesion, s.clone(), list_colorer)?;
        Ok(Box::new(c))
    }
}

/// `t + 2ξ`, with `t` the list size the inner colorer needs on the largest torso.
fn compose_list_size(g: &Graph, td: &TreeDecomposition, inner: Inner, d: f64) -> Result<usize, Failure> {
    let xi = td.adhesion();
    let mut t = 0;
    for x in 0..td.node_count() {
        let tf = torso_and_frame(g, td, x).map_err(|e| usage(anyhow::Error::from(e)))?;
        let need = match inner {
            Inner::Brute | Inner::Exact => tf.vertices.len(),
            Inner::SquareGreedy => tf.torso.max_degree().pow(2) + 1,
            Inner::MinorDegenerate => DegeneracyProfile::degenerate(d).required_list_size(),
        };
        t = t.max(need);
    }
    Ok(t + 2 * xi)
}

fn cmd_compose(a: &ComposeArgs) -> Result<Value, Failure> {
    let g = read_graph(&a.input)?;
    let td: TreeDecomposition = read_json(&a.td)?;
    td.validate(&g).map_err(|e| usage(anyhow::Error::from(e)))?;
    if !a.s.contains_one() && a.inner != Inner::Brute {
        return Err(usage(anyhow!("adapted torso colorers need 1 in S; use --inner brute")));
    }
    let size = compose_list_size(&g, &td, a.inner, a.d)?;
    let lists = a.lists.resolve(g.vertex_count(), size)?;
    let folded = fold_tree_decomposition(&g, &td, &lists, torso_factory(a.inner, a.s.clone(), a.d)).map_err(anyhow::Error::from)?;
    let phi = folded.color().map_err(anyhow::Error::from)?;
    verify_proper_s_achieved(&g, &phi, &a.s, None).map_err(|e| anyhow!("internal error, output fails verification: {e}"))?;
    check_lists(&phi, &lists).map_err(|e| anyhow!("internal error, output fails verification: {e}"))?;
    let mut out = json!({
        "strategy": "compose",
        "S": a.s.to_string(),
        "n": g.vertex_count(),
        "adhesion": td.adhesion(),
        "fill_edges": folded.fill_edge_count(),
        "list_size": lists.min_size(),
        "colors_used": phi.colors_used(),
        "coloring": phi,
        "witness": witness_json(&g, &phi, &a.s),
    });
    if let Some(samples) = a.audit {
        let cfg = AuditConfig {
            seed: a.lists.seed,
            samples,
            exhaustive_max_vertices: 0,
            ..Default::default()
        };
        let r = extendability_audit(&folded, &cfg);
        out["audit"] = json!({
            "checked": r.checked,
            "passed": r.passed(),
            "failure": r.failure.map(|f| f.reason),
        });
    }
    Ok(out)
}

fn cmd_table(a: &TableArgs) -> Result<String, Failure> {
    match a.suite.as_str() {
        "paper-tight" => Ok(table::paper_tight()?),
        "random-audit" => Ok(table::random_audit(a.seed)?),
        other => Err(usage(anyhow!("unknown suite {other:?}; expected paper-tight or random-audit"))),
    }
}

fn cmd_gen(a: &GenArgs) -> Result<String, Failure> {
    let seed = a.seed;
    let (g, td, lay): (Graph, Option<TreeDecomposition>, Option<Layering>) = match a.family {
        Family::Path => {
            let g = generators::path(a.n);
            let lay = bfs_layering(&g, &[0].into_iter().collect());
            (g, Some(path_decomposition(a.n)), Some(lay))
        }
        Family::Cycle => (generators::cycle(a.n), Some(cycle_decomposition(a.n)), None),
        Family::Complete => (generators::complete(a.n), Some(single_bag(a.n)), None),
        Family::Star => (generators::star(a.n), None, None),
        Family::Fan => (generators::fan(a.n), None, None),
        Family::Grid => (
            generators::grid(a.rows, a.cols),
            Some(grid_column_decomposition(a.rows, a.cols, 2)),
            Some(grid_row_layering(a.rows, a.cols)),
        ),
        Family::Petersen => (generators::petersen(), None, None),
        Family::Tree => {
            let g = generators::random_tree(a.n, seed);
            let td = forest_decomposition(&g).map_err(anyhow::Error::from)?;
            let lay = bfs_layering(&g, &VertexSet::new());
            (g, Some(td), Some(lay))
        }
        Family::Outerplanar => (generators::random_maximal_outerplanar(a.n, seed), None, None),
        Family::Planar => (generators::random_planar_triangulation(a.n, seed), None, None),
        Family::Gnp => (generators::random_gnp(a.n, a.p, seed), None, None),
        Family::Decomposed => {
            if a.bag == 0 || a.adhesion >= a.bag || a.n == 0 {
                return Err(usage(anyhow!("decomposed needs --n ≥ 1 nodes and 0 ≤ --adhesion < --bag")));
            }
            let (g, td) = random_decomposed_graph(a.n, a.bag, a.adhesion, a.p, seed);
            (g, Some(td), None)
        }
    };
    let family = a.family.to_possible_value().expect("named").get_name().to_string();
    if let Some(path) = &a.td_out {
        let td = td.ok_or_else(|| usage(anyhow!("family {family} has no built-in decomposition")))?;
        emit(&render(&serde_json::to_value(&td).expect("serializable")), Some(path))?;
    }
    if let Some(path) = &a.lay_out {
        let lay = lay.ok_or_else(|| usage(anyhow!("family {family} has no built-in layering")))?;
        emit(&render(&serde_json::to_value(&lay).expect("serializable")), Some(path))?;
    }
    Ok(match a.format {
        Format::Txt => io::write_edge_list(&g),
        Format::Json => render(&serde_json::to_value(io::GraphJson::from(&g)).expect("serializable")),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (text, output) = match &cli.cmd {
        Cmd::Verify(a) => match cmd_verify(a) {
            Ok(v) => (render(&v), a.output.as_deref()),
            Err(Failure::Invalid(v)) => {
                emit(&render(&v), a.output.as_deref())?;
                return Err(Failure::Invalid(v));
            }
            Err(e) => return Err(e),
        },
        Cmd::Color(a) => (render(&cmd_color(a)?), a.output.as_deref()),
        Cmd::Exact(a) => (render(&cmd_exact(a)?), a.output.as_deref()),
        Cmd::Compose(a) => (render(&cmd_compose(a)?), a.output.as_deref()),
        Cmd::Table(a) => (cmd_table(a)?, a.output.as_deref()),
        Cmd::Gen(a) => (cmd_gen(a)?, a.output.as_deref()),
    };
    emit(&text, output)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(v)) => {
            if let Some(msg) = v.get("violation").and_then(Value::as_str) {
                eprintln!("invalid: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
