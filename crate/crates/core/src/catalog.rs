//! Catalogs of all coloring classes of an n-gon with every analysis attached,
//! and their JSON, CSV and DOT renderings.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::coloring::{enumerate_coloring_classes, is_vine_class, partition_label, PolygonColoring};
use crate::colorgraph::{color_graph_in, graph_stats, graphs_isomorphic, Classification, ColorGraph};
use crate::embedding::lattice::boxes_by_size;
use crate::embedding::{
    best_forbidden_color, dimension_bound, find_diamond_ring, hypercube_embed, lattice_embed_search,
    partial_cube_check, DistanceWitness, LatticeBudget, LatticeOutcome, PartialCubeStatus,
};
use crate::error::{invalid, Error, Result};
use crate::labels;
use crate::polygon::{build_associahedron_capped, DEFAULT_MAX_N};

pub const FORMAT_NAME: &str = "colorgraph-catalog";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VineShape {
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypercubeRecord {
    pub forbidden_color: u8,
    pub dimension: usize,
    pub bound: usize,
    pub within_bound: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsometricStatus {
    PartialCube,
    NotPartialCube,
    /// Rigid graphs with several vertices have no metric to embed.
    Disconnected,
    Empty,
}

impl IsometricStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            IsometricStatus::PartialCube => "partial_cube",
            IsometricStatus::NotPartialCube => "not_partial_cube",
            IsometricStatus::Disconnected => "disconnected",
            IsometricStatus::Empty => "empty",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialCubeRecord {
    pub status: IsometricStatus,
    pub isometric_dimension: Option<usize>,
    /// Vertex indices refer to the order of the class's DOT file.
    pub witness: Option<DistanceWitness>,
    /// Length of the diamond ring found, if any.
    pub diamond_ring: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeStatus {
    Found,
    /// Exhaustively ruled out up to the maximum dimension searched.
    None,
    Unknown,
    Empty,
}

impl LatticeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            LatticeStatus::Found => "found",
            LatticeStatus::None => "none",
            LatticeStatus::Unknown => "unknown",
            LatticeStatus::Empty => "empty",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRecord {
    pub status: LatticeStatus,
    pub max_dimension: usize,
    pub dimension: Option<usize>,
    /// Smallest box (extent sum, then most balanced) in that dimension.
    pub extents: Option<Vec<usize>>,
    pub assignment: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub n: usize,
    pub class_id: String,
    pub coloring: String,
    pub partition: String,
    pub orbit_size: usize,
    pub classification: Classification,
    pub order: usize,
    pub size: usize,
    pub diameter: Option<usize>,
    pub max_degree: usize,
    pub bipartite: bool,
    pub vine: Option<VineShape>,
    pub hypercube: HypercubeRecord,
    pub partial_cube: PartialCubeRecord,
    pub lattice: LatticeRecord,
    /// `class_id` of the first class in catalog order with an isomorphic graph.
    pub isomorphism_group: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub format: String,
    pub version: u32,
    pub n: usize,
    pub include_rigid: bool,
    pub lattice_node_budget: u64,
    pub entries: Vec<CatalogEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogOptions {
    pub include_rigid: bool,
    pub lattice_budget: LatticeBudget,
    pub cap: usize,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions { include_rigid: false, lattice_budget: LatticeBudget::default(), cap: DEFAULT_MAX_N }
    }
}

/// Smallest lattice dimension up to `max_m` with an embedding, then the
/// smallest box in that dimension.
pub fn lattice_record(g: &crate::graph::Graph, max_m: usize, budget: LatticeBudget) -> Result<LatticeRecord> {
    let mut rec = LatticeRecord { status: LatticeStatus::None, max_dimension: max_m, dimension: None, extents: None, assignment: None };
    if g.order() == 0 {
        rec.status = LatticeStatus::Empty;
        return Ok(rec);
    }
    for m in 1..=max_m {
        let free = match lattice_embed_search(g, m, None, budget)? {
            LatticeOutcome::Found { embedding } => embedding,
            LatticeOutcome::None => continue,
            LatticeOutcome::Unknown => {
                rec.status = LatticeStatus::Unknown;
                return Ok(rec);
            }
        };
        let mut best = free;
        best.extents.sort_unstable_by(|a, b| b.cmp(a));
        let limit: usize = best.extents.iter().sum();
        for b in boxes_by_size(m, limit, g.order()) {
            match lattice_embed_search(g, m, Some(&b), budget)? {
                LatticeOutcome::Found { embedding } => {
                    best = embedding;
                    break;
                }
                LatticeOutcome::None => {}
                // An unsettled smaller box keeps the unbounded result's box.
                LatticeOutcome::Unknown => break,
            }
        }
        if best.extents.windows(2).any(|w| w[0] < w[1]) {
            // Only reached through the unbounded result: sort its axes.
            let mut axes: Vec<usize> = (0..m).collect();
            axes.sort_by(|&a, &b| best.extents[b].cmp(&best.extents[a]).then(a.cmp(&b)));
            best.assignment = best.assignment.iter().map(|p| axes.iter().map(|&k| p[k]).collect()).collect();
            best.extents = axes.iter().map(|&k| best.extents[k]).collect();
        }
        best.verify(g, Some(&best.extents))?;
        rec.status = LatticeStatus::Found;
        rec.dimension = Some(m);
        rec.extents = Some(best.extents);
        rec.assignment = Some(best.assignment);
        return Ok(rec);
    }
    Ok(rec)
}

/// Every per-class field except the id and the isomorphism group.
pub fn analyze(g: &ColorGraph, budget: LatticeBudget) -> Result<CatalogEntry> {
    let c = g.coloring();
    let n = c.n();
    let graph = g.graph();
    let stats = graph_stats(graph);

    let forbidden = best_forbidden_color(c);
    let emb = hypercube_embed(g, forbidden)?;
    let bound = dimension_bound(n);

    let partial_cube = if graph.order() == 0 {
        PartialCubeRecord { status: IsometricStatus::Empty, isometric_dimension: None, witness: None, diamond_ring: None }
    } else if !graph.is_connected() {
        PartialCubeRecord { status: IsometricStatus::Disconnected, isometric_dimension: None, witness: None, diamond_ring: None }
    } else {
        let report = partial_cube_check(graph)?;
        if let Some(w) = &report.witness {
            w.verify(graph)?;
        }
        let ring = find_diamond_ring(graph);
        if let Some(r) = &ring {
            r.verify(graph)?;
        }
        PartialCubeRecord {
            status: match report.status {
                PartialCubeStatus::PartialCube => IsometricStatus::PartialCube,
                PartialCubeStatus::NotPartialCube => IsometricStatus::NotPartialCube,
            },
            isometric_dimension: report.isometric_dimension,
            witness: report.witness,
            diamond_ring: ring.map(|r| r.j),
        }
    };

    Ok(CatalogEntry {
        n,
        class_id: String::new(),
        coloring: c.to_string(),
        partition: partition_label(&c.partition()),
        orbit_size: crate::coloring::orbit_size(c),
        classification: stats.classification,
        order: stats.order,
        size: stats.size,
        diameter: stats.diameter,
        max_degree: stats.max_degree,
        bipartite: stats.is_bipartite,
        vine: is_vine_class(c).map(|(p, q)| VineShape { p, q }),
        hypercube: HypercubeRecord {
            forbidden_color: forbidden.value(),
            dimension: emb.dimension(),
            bound,
            within_bound: emb.dimension() <= bound,
        },
        partial_cube,
        lattice: lattice_record(graph, (n - 2) / 2, budget)?,
        isomorphism_group: String::new(),
    })
}

/// Catalog order and ids: non-rigid classes by labelled-table position when
/// one exists, else by partition and canonical form, as `n-A` or `n-1`;
/// then rigid classes `n-r1..` and empty ones `n-e1..`.
pub fn build_catalog(n: usize, opts: &CatalogOptions) -> Result<Catalog> {
    if n < 4 {
        return invalid(format!("catalogs start at n = 4, got {n}"));
    }
    if n > opts.cap {
        return Err(Error::ResourceCap { n, cap: opts.cap });
    }
    let assoc = build_associahedron_capped(n, opts.cap)?;
    let mut graphs: Vec<(usize, ColorGraph)> = Vec::new();
    for (rank, class) in enumerate_coloring_classes(n)?.into_iter().enumerate() {
        let g = color_graph_in(&assoc, &class.representative)?;
        graphs.push((rank, g));
    }
    let key = |g: &ColorGraph| -> (Classification, usize) {
        let c = crate::colorgraph::classify(g.graph());
        (c, labels::lookup(g.coloring()).map_or(usize::MAX, |(r, _)| r))
    };
    graphs.sort_by(|(ra, a), (rb, b)| {
        let (ca, la) = key(a);
        let (cb, lb) = key(b);
        cb.cmp(&ca).then(la.cmp(&lb)).then(ra.cmp(rb))
    });

    let mut entries = Vec::new();
    let mut kept: Vec<&ColorGraph> = Vec::new();
    let mut counters = [0usize; 3];
    for (_, g) in &graphs {
        let class = crate::colorgraph::classify(g.graph());
        if class != Classification::Nonrigid && !opts.include_rigid {
            continue;
        }
        let mut e = analyze(g, opts.lattice_budget)?;
        let slot = class as usize;
        counters[slot] += 1;
        e.class_id = match (class, labels::lookup(g.coloring())) {
            (Classification::Nonrigid, Some((_, label))) if labels::table(n).is_some() => format!("{n}-{label}"),
            (Classification::Nonrigid, _) => format!("{n}-{}", counters[slot]),
            (Classification::Rigid, _) => format!("{n}-r{}", counters[slot]),
            (Classification::Empty, _) => format!("{n}-e{}", counters[slot]),
        };
        entries.push(e);
        kept.push(g);
    }
    assign_isomorphism_groups(&mut entries, &kept);
    Ok(Catalog {
        format: FORMAT_NAME.into(),
        version: FORMAT_VERSION,
        n,
        include_rigid: opts.include_rigid,
        lattice_node_budget: opts.lattice_budget.max_nodes,
        entries,
    })
}

fn assign_isomorphism_groups(entries: &mut [CatalogEntry], graphs: &[&ColorGraph]) {
    let mut leaders: Vec<usize> = Vec::new();
    for i in 0..entries.len() {
        let gi = graphs[i].graph();
        let mut degrees = gi.degrees();
        degrees.sort_unstable();
        let leader = leaders.iter().copied().find(|&l| {
            let gl = graphs[l].graph();
            let mut dl = gl.degrees();
            dl.sort_unstable();
            dl == degrees && gl.size() == gi.size() && graphs_isomorphic(gl, gi).is_some()
        });
        entries[i].isomorphism_group = match leader {
            Some(l) => entries[l].class_id.clone(),
            None => {
                leaders.push(i);
                entries[i].class_id.clone()
            }
        };
    }
}

pub fn to_json(catalog: &Catalog) -> String {
    let mut s = serde_json::to_string_pretty(catalog).expect("catalog serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Catalog> {
    let cat: Catalog = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if cat.format != FORMAT_NAME {
        return Err(Error::Parse(format!("not a catalog file (format {:?})", cat.format)));
    }
    Ok(cat)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    class_id: &'a str,
    n: usize,
    coloring: &'a str,
    partition: &'a str,
    orbit_size: usize,
    classification: &'static str,
    order: usize,
    size: usize,
    diameter: Option<usize>,
    max_degree: usize,
    bipartite: bool,
    vine_p: Option<usize>,
    vine_q: Option<usize>,
    forbidden_color: u8,
    hypercube_dimension: usize,
    hypercube_bound: usize,
    within_bound: bool,
    isometric_status: &'static str,
    isometric_dimension: Option<usize>,
    diamond_ring: Option<usize>,
    lattice_status: &'static str,
    lattice_dimension: Option<usize>,
    lattice_box: String,
    isomorphism_group: &'a str,
}

pub fn to_csv(catalog: &Catalog) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for e in &catalog.entries {
        w.serialize(CsvRow {
            class_id: &e.class_id,
            n: e.n,
            coloring: &e.coloring,
            partition: &e.partition,
            orbit_size: e.orbit_size,
            classification: e.classification.as_str(),
            order: e.order,
            size: e.size,
            diameter: e.diameter,
            max_degree: e.max_degree,
            bipartite: e.bipartite,
            vine_p: e.vine.as_ref().map(|v| v.p),
            vine_q: e.vine.as_ref().map(|v| v.q),
            forbidden_color: e.hypercube.forbidden_color,
            hypercube_dimension: e.hypercube.dimension,
            hypercube_bound: e.hypercube.bound,
            within_bound: e.hypercube.within_bound,
            isometric_status: e.partial_cube.status.as_str(),
            isometric_dimension: e.partial_cube.isometric_dimension,
            diamond_ring: e.partial_cube.diamond_ring,
            lattice_status: e.lattice.status.as_str(),
            lattice_dimension: e.lattice.dimension,
            lattice_box: e.lattice.extents.as_ref().map_or(String::new(), |b| {
                b.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
            }),
            isomorphism_group: &e.isomorphism_group,
        })
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// DOT description of the class's color graph, node ids in vertex order.
pub fn to_dot(entry: &CatalogEntry) -> Result<String> {
    let c: PolygonColoring = entry.coloring.parse()?;
    let g = crate::colorgraph::build_color_graph(&c)?;
    Ok(g.graph().to_dot(&entry.class_id, &g.labels()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
}

/// Writes the requested formats under `dir` and returns the files written.
/// DOT files go to `dir/dot-<n>/<class_id>.dot`.
pub fn write_catalog(catalog: &Catalog, dir: &Path, formats: &[OutputFormat]) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let n = catalog.n;
    for f in formats {
        match f {
            OutputFormat::Json => {
                let p = dir.join(format!("catalog-{n}.json"));
                fs::write(&p, to_json(catalog))?;
                written.push(p);
            }
            OutputFormat::Csv => {
                let p = dir.join(format!("catalog-{n}.csv"));
                fs::write(&p, to_csv(catalog)?)?;
                written.push(p);
            }
            OutputFormat::Dot => {
                let sub = dir.join(format!("dot-{n}"));
                fs::create_dir_all(&sub)?;
                for e in &catalog.entries {
                    let p = sub.join(format!("{}.dot", e.class_id));
                    fs::write(&p, to_dot(e)?)?;
                    written.push(p);
                }
            }
        }
    }
    Ok(written)
}

/// Run metadata kept apart from the primary outputs, which stay byte-stable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunMetadata {
    pub tool: String,
    pub version: String,
    pub n: usize,
    pub unix_time: u64,
    pub elapsed_ms: u128,
    pub files: Vec<String>,
}

pub fn write_metadata(dir: &Path, n: usize, elapsed: std::time::Duration, files: &[PathBuf]) -> Result<PathBuf> {
    let meta = RunMetadata {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        n,
        unix_time: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |d| d.as_secs()),
        elapsed_ms: elapsed.as_millis(),
        files: files.iter().map(|p| p.display().to_string()).collect(),
    };
    let p = dir.join(format!("catalog-{n}.meta.json"));
    fs::write(&p, serde_json::to_string_pretty(&meta).expect("metadata serializes") + "\n")?;
    Ok(p)
}

/// Recomputes each entry from its coloring and compares every field,
/// including the isomorphism grouping.
pub fn check_round_trip(catalog: &Catalog) -> Result<()> {
    let budget = LatticeBudget { max_nodes: catalog.lattice_node_budget, timeout: None };
    let mut graphs = Vec::new();
    let mut fresh = Vec::new();
    for e in &catalog.entries {
        let g = crate::colorgraph::build_color_graph(&e.coloring.parse()?)?;
        let mut r = analyze(&g, budget)?;
        r.class_id = e.class_id.clone();
        fresh.push(r);
        graphs.push(g);
    }
    let refs: Vec<&ColorGraph> = graphs.iter().collect();
    assign_isomorphism_groups(&mut fresh, &refs);
    for (old, new) in catalog.entries.iter().zip(&fresh) {
        if old != new {
            return Err(Error::Verification(format!("entry {} does not reproduce from its coloring", old.class_id)));
        }
    }
    Ok(())
}
