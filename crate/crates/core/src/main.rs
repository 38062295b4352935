use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use colorgraph::catalog::{self, CatalogOptions, OutputFormat};
use colorgraph::coloring::{enumerate_coloring_classes, is_vine_class, KleinElement, PolygonColoring};
use colorgraph::colorgraph::{
    build_color_graph_capped, contains_subgraph, graph_stats, graphs_isomorphic, Classification,
};
use colorgraph::embedding::lattice::parse_box;
use colorgraph::embedding::vine::{vine_vector, simplex_points};
use colorgraph::embedding::{
    best_forbidden_color, dimension_bound, find_diamond_ring, hypercube_embed, lattice_embed_search,
    partial_cube_check, verify_vine_isomorphism, vine_coordinates, vine_from_coordinates, LatticeBudget,
    LatticeOutcome, PartialCubeStatus,
};
use colorgraph::graph::Graph;
use colorgraph::polygon::{BinaryTree, DEFAULT_MAX_N};
use colorgraph::verify::{format_report, run_all, VerifyOptions};
use colorgraph::{labels, Error};

/// Color graphs of polygon triangulations: catalogs, embeddings and checks.
#[derive(Parser)]
#[command(name = "colorgraph", version)]
struct Cli {
    /// Largest polygon size the tool will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse every coloring class of an n-gon.
    Catalog(CatalogArgs),
    /// Print the color graph of one coloring.
    Graph {
        #[command(flatten)]
        input: ColoringInput,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    #[command(subcommand)]
    Embed(EmbedCommand),
    #[command(subcommand)]
    Check(CheckCommand),
    /// Run every invariant suite over a range of polygon sizes.
    Verify {
        /// Inclusive range such as `4..8`.
        #[arg(long, default_value = "4..8")]
        range: String,
        /// Corrupt one embedding to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Vine coordinates and trees for the color vector 1^p 2 1^q.
    Vine {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Comma-separated nondecreasing coordinates; prints that vine only.
        #[arg(long)]
        coords: Option<String>,
    },
    /// Gather evidence on the open dimension questions.
    #[command(subcommand)]
    Explore(ExploreCommand),
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    n: usize,
    /// Formats to produce; all three when writing to a directory and none given.
    #[arg(long, value_enum)]
    format: Vec<CatalogFormat>,
    /// Output directory. Without it the first format goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    include_rigid: bool,
    /// Node limit per lattice search.
    #[arg(long, default_value_t = LatticeBudget::default().max_nodes)]
    max_nodes: u64,
    /// Wall-clock limit per lattice search in seconds (makes output timing dependent).
    #[arg(long)]
    timeout: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogFormat {
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Plain,
}

#[derive(Args, Clone)]
struct ColoringInput {
    /// Comma-separated vertex colors 0..3, e.g. `0,1,0,3,0,2`.
    #[arg(long, conflicts_with = "class")]
    coloring: Option<String>,
    /// A labelled class such as `8-T` or `6-3`.
    #[arg(long)]
    class: Option<String>,
}

#[derive(Args, Clone)]
struct GraphInput {
    #[command(flatten)]
    coloring: ColoringInput,
    /// Plain graph file (`p N` / `e u v` lines) instead of a coloring.
    #[arg(long, conflicts_with_all = ["coloring", "class"])]
    graph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum EmbedCommand {
    /// Vertex-induced hypercube embedding through a forbidden color.
    Hypercube {
        #[command(flatten)]
        input: ColoringInput,
        #[arg(long)]
        forbidden: Option<u8>,
    },
    /// Embedding as a subgraph of the integer lattice.
    Lattice {
        #[command(flatten)]
        input: GraphInput,
        /// Lattice dimension; defaults to floor((n-2)/2) for colorings.
        #[arg(long)]
        dim: Option<usize>,
        /// Box extents in edge lengths, e.g. `3,3,2`.
        #[arg(long = "box")]
        bbox: Option<String>,
        #[arg(long)]
        timeout: Option<u64>,
        #[arg(long, default_value_t = LatticeBudget::default().max_nodes)]
        max_nodes: u64,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Isometric hypercube embeddability; exit 1 when not a partial cube.
    PartialCube {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Diamond-ring obstruction; exit 1 when none is found.
    DiamondRing {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Vine class detection, or the simplex isomorphism for given p and q.
    Vine {
        #[command(flatten)]
        input: ColoringInput,
        #[arg(long, requires = "q")]
        p: Option<usize>,
        #[arg(long, requires = "p")]
        q: Option<usize>,
    },
    /// Graph isomorphism between two color graphs.
    Isomorphic {
        #[command(flatten)]
        input: GraphInput,
        /// Second coloring or class.
        #[arg(long)]
        other: String,
    },
    /// Whether the pattern's color graph is a subgraph of the host's.
    Subgraph {
        #[command(flatten)]
        input: GraphInput,
        /// Pattern coloring or class.
        #[arg(long)]
        pattern: String,
    },
}

#[derive(Subcommand)]
enum ExploreCommand {
    /// Smallest lattice dimension of every non-rigid class.
    LatticeDimension {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = LatticeBudget::default().max_nodes)]
        max_nodes: u64,
    },
    /// Hypercube dimensions used per class against the general bound.
    HypercubeDimension {
        #[arg(long)]
        n: usize,
    },
}

/// Command outcome: success, or a check whose predicate does not hold.
enum Outcome {
    Ok,
    CheckFailed,
}

fn parse_coloring_or_class(text: &str) -> Result<PolygonColoring, Error> {
    if let Some((n, label)) = text.split_once('-') {
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad class id {text:?}")))?;
        return labels::representative(n, label).ok_or_else(|| Error::Parse(format!("unknown class {text:?}")));
    }
    text.parse()
}

impl ColoringInput {
    fn resolve(&self) -> Result<PolygonColoring, Error> {
        match (&self.coloring, &self.class) {
            (Some(c), _) => c.parse(),
            (None, Some(id)) => parse_coloring_or_class(id),
            (None, None) => Err(Error::Parse("one of --coloring or --class is required".into())),
        }
    }
}

impl GraphInput {
    /// The graph plus, for colorings, the polygon size.
    fn resolve(&self, cap: usize) -> anyhow::Result<(Graph, Option<usize>)> {
        if let Some(path) = &self.graph {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return Ok((Graph::parse_plain(&text)?, None));
        }
        let c = self.coloring.resolve()?;
        let g = build_color_graph_capped(&c, cap)?;
        Ok((g.graph().clone(), Some(c.n())))
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn print_json(v: &serde_json::Value) {
    emit(&(serde_json::to_string_pretty(v).expect("json value serializes") + "\n"));
}

fn budget(max_nodes: u64, timeout: Option<u64>) -> LatticeBudget {
    LatticeBudget { max_nodes, timeout: timeout.map(Duration::from_secs) }
}

fn parse_range(text: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("bad range {text:?}, expected a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn cmd_catalog(args: &CatalogArgs, cap: usize) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let opts = CatalogOptions {
        include_rigid: args.include_rigid,
        lattice_budget: budget(args.max_nodes, args.timeout),
        cap,
    };
    let cat = catalog::build_catalog(args.n, &opts)?;
    let formats: Vec<OutputFormat> = args
        .format
        .iter()
        .map(|f| match f {
            CatalogFormat::Json => OutputFormat::Json,
            CatalogFormat::Csv => OutputFormat::Csv,
            CatalogFormat::Dot => OutputFormat::Dot,
        })
        .collect();
    match &args.out {
        Some(dir) => {
            let formats =
                if formats.is_empty() { vec![OutputFormat::Json, OutputFormat::Csv, OutputFormat::Dot] } else { formats };
            let files = catalog::write_catalog(&cat, dir, &formats)?;
            let meta = catalog::write_metadata(dir, args.n, start.elapsed(), &files)?;
            eprintln!("wrote {} files and {}", files.len(), meta.display());
        }
        None => match formats.first().copied().unwrap_or(OutputFormat::Json) {
            OutputFormat::Json => emit(&catalog::to_json(&cat)),
            OutputFormat::Csv => emit(&catalog::to_csv(&cat)?),
            OutputFormat::Dot => {
                for e in &cat.entries {
                    emit(&catalog::to_dot(e)?);
                }
            }
        },
    }
    Ok(Outcome::Ok)
}

fn cmd_graph(input: &ColoringInput, format: GraphFormat, cap: usize) -> anyhow::Result<Outcome> {
    let c = input.resolve()?;
    let g = build_color_graph_capped(&c, cap)?;
    let stats = graph_stats(g.graph());
    if stats.classification == Classification::Empty {
        eprintln!("note: no triangulation is compatible with {c}; the color graph is empty");
    }
    match format {
        GraphFormat::Dot => emit(&g.graph().to_dot(&c.to_string(), &g.labels())),
        GraphFormat::Plain => emit(&g.graph().to_plain()),
        GraphFormat::Json => print_json(&json!({
            "coloring": c.to_string(),
            "vertices": g.labels(),
            "edges": g.graph().edges().collect::<Vec<_>>(),
            "stats": stats,
        })),
    }
    Ok(Outcome::Ok)
}

fn cmd_embed(cmd: &EmbedCommand, cap: usize) -> anyhow::Result<Outcome> {
    match cmd {
        EmbedCommand::Hypercube { input, forbidden } => {
            let c = input.resolve()?;
            let g = build_color_graph_capped(&c, cap)?;
            let f = match forbidden {
                Some(v) => KleinElement::new(*v)?,
                None => best_forbidden_color(&c),
            };
            let emb = hypercube_embed(&g, f)?;
            let labels = g.labels();
            let assignment: Vec<_> = emb
                .assignment
                .iter()
                .enumerate()
                .map(|(v, set)| json!({ "vertex": labels[v], "subset": set.iter().map(|&k| emb.allowed[k].to_string()).collect::<Vec<_>>() }))
                .collect();
            print_json(&json!({
                "coloring": c.to_string(),
                "forbidden_color": f.value(),
                "allowed": emb.allowed.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "dimension": emb.dimension(),
                "bound": dimension_bound(c.n()),
                "assignment": assignment,
                "verified": true,
            }));
            Ok(Outcome::Ok)
        }
        EmbedCommand::Lattice { input, dim, bbox, timeout, max_nodes } => {
            let (g, n) = input.resolve(cap)?;
            let m = match (dim, n) {
                (Some(m), _) => *m,
                (None, Some(n)) => ((n - 2) / 2).max(1),
                (None, None) => return Err(Error::Parse("--dim is required with --graph".into()).into()),
            };
            let b = bbox.as_deref().map(parse_box).transpose()?;
            let outcome = lattice_embed_search(&g, m, b.as_deref(), budget(*max_nodes, *timeout))?;
            print_json(&json!({ "dim": m, "box": b, "result": outcome }));
            Ok(match outcome {
                LatticeOutcome::None => Outcome::CheckFailed,
                _ => Outcome::Ok,
            })
        }
    }
}

fn cmd_check(cmd: &CheckCommand, cap: usize) -> anyhow::Result<Outcome> {
    let holds = |b: bool| if b { Outcome::Ok } else { Outcome::CheckFailed };
    match cmd {
        CheckCommand::PartialCube { input } => {
            let (g, _) = input.resolve(cap)?;
            let r = partial_cube_check(&g)?;
            print_json(&serde_json::to_value(&r)?);
            Ok(holds(r.status == PartialCubeStatus::PartialCube))
        }
        CheckCommand::DiamondRing { input } => {
            let (g, _) = input.resolve(cap)?;
            let ring = find_diamond_ring(&g);
            print_json(&json!({ "found": ring.is_some(), "ring": ring }));
            Ok(holds(ring.is_some()))
        }
        CheckCommand::Vine { input, p, q } => {
            if let (Some(p), Some(q)) = (p, q) {
                let ok = verify_vine_isomorphism(*p, *q)?;
                print_json(&json!({ "p": p, "q": q, "isomorphic_to_simplex": ok }));
                return Ok(holds(ok));
            }
            let c = input.resolve()?;
            let shape = is_vine_class(&c);
            print_json(&json!({ "coloring": c.to_string(), "vine": shape.map(|(p, q)| json!({ "p": p, "q": q })) }));
            Ok(holds(shape.is_some()))
        }
        CheckCommand::Isomorphic { input, other } => {
            let (g, _) = input.resolve(cap)?;
            let h = build_color_graph_capped(&parse_coloring_or_class(other)?, cap)?;
            let map = graphs_isomorphic(&g, h.graph());
            print_json(&json!({ "isomorphic": map.is_some(), "mapping": map }));
            Ok(holds(map.is_some()))
        }
        CheckCommand::Subgraph { input, pattern } => {
            let (host, _) = input.resolve(cap)?;
            let p = build_color_graph_capped(&parse_coloring_or_class(pattern)?, cap)?;
            let map = contains_subgraph(&host, p.graph());
            print_json(&json!({ "contained": map.is_some(), "mapping": map }));
            Ok(holds(map.is_some()))
        }
    }
}

fn cmd_vine(p: usize, q: usize, coords: Option<&str>, cap: usize) -> anyhow::Result<Outcome> {
    if p + q == 0 {
        return Err(Error::InvalidInput("p + q must be at least 1".into()).into());
    }
    if p + q + 2 > cap {
        return Err(Error::ResourceCap { n: p + q + 2, cap }.into());
    }
    let render = |x: &[usize]| -> anyhow::Result<serde_json::Value> {
        let tree = vine_from_coordinates(x, q)?;
        let t = tree.to_triangulation()?;
        debug_assert_eq!(vine_coordinates(&BinaryTree::from_triangulation(&t), p, q)?, x);
        Ok(json!({ "coordinates": x, "tree": tree.to_string(), "triangulation": t.label() }))
    };
    let coloring = vine_vector(p, q).to_coloring()?;
    let vines = match coords {
        Some(text) => {
            let x: Vec<usize> = text
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad coordinate {s:?}"))))
                .collect::<Result<_, _>>()?;
            if x.len() != p {
                return Err(Error::InvalidInput(format!("{} coordinates for p = {p}", x.len())).into());
            }
            vec![render(&x)?]
        }
        None => simplex_points(p, q).iter().map(|x| render(x)).collect::<anyhow::Result<_>>()?,
    };
    print_json(&json!({
        "p": p,
        "q": q,
        "color_vector": vine_vector(p, q).to_string(),
        "coloring": coloring.to_string(),
        "vines": vines,
    }));
    Ok(Outcome::Ok)
}

fn cmd_explore(cmd: &ExploreCommand, cap: usize) -> anyhow::Result<Outcome> {
    match cmd {
        ExploreCommand::LatticeDimension { n, max_nodes } => {
            let mut rows = Vec::new();
            let mut worst = 0;
            let mut unsettled = 0;
            for class in enumerate_coloring_classes(*n)? {
                let g = build_color_graph_capped(&class.representative, cap)?;
                if g.graph().size() == 0 {
                    continue;
                }
                let b = budget(*max_nodes, None);
                let mut dim = None;
                for m in 1..=g.graph().max_degree().max(1) * 2 {
                    match lattice_embed_search(g.graph(), m, None, b)? {
                        LatticeOutcome::Found { .. } => {
                            dim = Some(m);
                            break;
                        }
                        LatticeOutcome::None => {}
                        LatticeOutcome::Unknown => {
                            unsettled += 1;
                            break;
                        }
                    }
                }
                worst = worst.max(dim.unwrap_or(0));
                rows.push(json!({ "coloring": class.representative.to_string(), "order": g.graph().order(), "lattice_dimension": dim }));
            }
            print_json(&json!({
                "n": n,
                "pattern": (n - 2) / 2,
                "max_lattice_dimension": worst,
                "unsettled": unsettled,
                "classes": rows,
            }));
        }
        ExploreCommand::HypercubeDimension { n } => {
            let mut rows = Vec::new();
            for class in enumerate_coloring_classes(*n)? {
                let c = &class.representative;
                let g = build_color_graph_capped(c, cap)?;
                if g.graph().size() == 0 {
                    continue;
                }
                let dims: Vec<usize> = KleinElement::ALL
                    .iter()
                    .map(|&f| hypercube_embed(&g, f).map(|e| e.dimension()))
                    .collect::<Result<_, _>>()?;
                let iso = if g.graph().is_connected() { partial_cube_check(g.graph())?.isometric_dimension } else { None };
                rows.push(json!({
                    "coloring": c.to_string(),
                    "induced_dimension": dims.iter().min(),
                    "isometric_dimension": iso,
                }));
            }
            print_json(&json!({ "n": n, "bound": dimension_bound(*n), "classes": rows }));
        }
    }
    Ok(Outcome::Ok)
}

fn cmd_verify(range: &str, inject_fault: bool, cap: usize) -> anyhow::Result<Outcome> {
    let (lo, hi) = parse_range(range)?;
    if hi > cap {
        return Err(Error::ResourceCap { n: hi, cap }.into());
    }
    let results = run_all(lo, hi, VerifyOptions { inject_fault })?;
    emit(&format_report(&results));
    Ok(if results.iter().all(|r| r.passed()) { Outcome::Ok } else { Outcome::CheckFailed })
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::ResourceCap { .. }) => 3,
        Some(Error::Verification(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli.cap;
    let result = match &cli.command {
        Command::Catalog(args) => cmd_catalog(args, cap),
        Command::Graph { input, format } => cmd_graph(input, *format, cap),
        Command::Embed(cmd) => cmd_embed(cmd, cap),
        Command::Check(cmd) => cmd_check(cmd, cap),
        Command::Verify { range, inject_fault } => cmd_verify(range, *inject_fault, cap),
        Command::Vine { p, q, coords } => cmd_vine(*p, *q, coords.as_deref(), cap),
        Command::Explore(cmd) => cmd_explore(cmd, cap),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
