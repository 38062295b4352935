//! Acceptance criteria 1-10, one PASS/FAIL line each.
//!
//! Oracles here (BFS distances, binomials, hypercube images, lattice checks)
//! are written independently of the library's own verifiers.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::panic;
use std::path::Path;
use std::process::Command;

use colorgraph::coloring::{enumerate_coloring_classes, is_vine_class, KleinElement, PolygonColoring};
use colorgraph::colorgraph::{build_color_graph, contains_subgraph, graphs_isomorphic, ColorGraph};
use colorgraph::embedding::{
    best_forbidden_color, count_formula, dimension_bound, find_diamond_ring, hypercube_embed, lattice_embed_search,
    partial_cube_check, verify_vine_isomorphism, vine_coordinates, vine_from_coordinates, LatticeBudget,
    LatticeOutcome, PartialCubeStatus,
};
use colorgraph::graph::Graph;
use colorgraph::labels;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn class(n: usize, label: &str) -> ColorGraph {
    build_color_graph(&labels::representative(n, label).unwrap()).unwrap()
}

fn all_classes(n: usize) -> Vec<(PolygonColoring, ColorGraph)> {
    enumerate_coloring_classes(n)
        .unwrap()
        .into_iter()
        .map(|c| {
            let g = build_color_graph(&c.representative).unwrap();
            (c.representative, g)
        })
        .collect()
}

fn bfs(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; g.order()];
    d[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if d[v].is_none() {
                d[v] = Some(d[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    d
}

fn diameter(g: &Graph) -> Option<usize> {
    (0..g.order()).map(|s| bfs(g, s).into_iter().collect::<Option<Vec<_>>>().map(|d| d.into_iter().max().unwrap())).max()?
}

fn binom(n: usize, k: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1usize; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k]
}

fn sym_diff(a: &BTreeSet<(usize, usize)>, b: &BTreeSet<(usize, usize)>) -> usize {
    a.symmetric_difference(b).count()
}

fn nonrigid_counts() -> Check {
    let expected: [(usize, usize, &[(&str, &str)]); 3] = [
        (6, 5, &[("1", "3,1,1,1"), ("2", "2,2,1,1"), ("3", "2,2,1,1"), ("4", "2,2,1,1"), ("5", "2,2,1,1")]),
        (7, 7, &[]),
        (8, 26, &[]),
    ];
    for (n, count, groups) in expected {
        let nonrigid: Vec<_> = all_classes(n).into_iter().filter(|(_, g)| g.graph().size() > 0).collect();
        ensure(nonrigid.len() == count, || format!("n={n}: {} non-rigid classes", nonrigid.len()))?;
        for (label, part) in groups {
            let c = labels::representative(n, label).unwrap();
            ensure(c.partition().iter().map(ToString::to_string).collect::<Vec<_>>().join(",") == *part, || {
                format!("{n}-{label} has partition {:?}", c.partition())
            })?;
        }
    }
    let octagon = [("AB", "4,2,1,1"), ("CDEFG", "3,3,1,1"), ("HIJKLMNOPQRS", "3,2,2,1"), ("TUVWXYZ", "2,2,2,2")];
    let mut seen = 0;
    for (letters, part) in octagon {
        for l in letters.chars() {
            let c = labels::representative(8, &l.to_string()).unwrap();
            let got = c.partition().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            ensure(got == part, || format!("8-{l} has partition {got}, expected {part}"))?;
            ensure(build_color_graph(&c).unwrap().graph().size() > 0, || format!("8-{l} is rigid"))?;
            seen += 1;
        }
    }
    ensure(seen == 26, || "octagon labels incomplete".into())
}

fn diameters() -> Check {
    for n in 4..=8 {
        for (c, g) in all_classes(n) {
            if let Some((p, q)) = is_vine_class(&c) {
                ensure(diameter(g.graph()) == Some(p * q), || format!("{c}: vine ({p},{q}) diameter {:?}", diameter(g.graph())))?;
            }
        }
    }
    ensure(diameter(class(7, "4").graph()) == Some(6), || "7-4 diameter".into())?;
    let larger: Vec<_> = (1..=7)
        .map(|k| diameter(class(7, &k.to_string()).graph()).unwrap())
        .filter(|&d| d > 6)
        .collect();
    ensure(larger.len() == 3 && larger.iter().all(|d| (7..=8).contains(d)), || format!("heptagon diameters above 6: {larger:?}"))?;
    ensure(diameter(class(8, "T").graph()) == Some(9), || "8-T diameter".into())?;
    for l in ["I", "N", "P", "R"] {
        ensure(diameter(class(8, l).graph()) == Some(10), || format!("8-{l} diameter {:?}", diameter(class(8, l).graph())))?;
    }
    Ok(())
}

/// Image of each triangulation: its diagonals avoiding the forbidden color.
fn images(g: &ColorGraph, f: KleinElement) -> Vec<BTreeSet<(usize, usize)>> {
    let c = g.coloring();
    g.vertices()
        .iter()
        .map(|t| {
            t.diagonals()
                .iter()
                .map(|d| d.endpoints())
                .filter(|&(i, j)| c.color(i) != f && c.color(j) != f)
                .collect()
        })
        .collect()
}

fn hypercube_maps() -> Check {
    for n in 4..=8 {
        for (c, g) in all_classes(n) {
            for f in KleinElement::ALL {
                hypercube_embed(&g, f).map_err(|e| format!("{c} forbidden {f}: {e}"))?;
                let img = images(&g, f);
                let gr = g.graph();
                for u in 0..gr.order() {
                    for v in u + 1..gr.order() {
                        let h = sym_diff(&img[u], &img[v]);
                        ensure(h > 0, || format!("{c} forbidden {f}: {u} and {v} collide"))?;
                        ensure(gr.has_edge(u, v) == (h == 1), || format!("{c} forbidden {f}: pair {u},{v} at Hamming {h}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn hypercube_dimension() -> Check {
    for (n, b) in [(6, 3), (7, 5), (8, 8)] {
        ensure(dimension_bound(n) == b, || format!("bound({n}) = {}", dimension_bound(n)))?;
    }
    for n in 4..=9 {
        let bound = n * (3 * n - 8) / 16;
        for (c, g) in all_classes(n) {
            let used = hypercube_embed(&g, best_forbidden_color(&c)).unwrap().dimension();
            ensure(used <= bound, || format!("{c}: dimension {used} > {bound}"))?;
        }
    }
    for n in 4..=64usize {
        for x in 1..=n {
            for y in 1..=n - x {
                for z in 1..=n - x - y {
                    let w = n - x - y - z;
                    let k = count_formula(n, w, x, y, z).unwrap();
                    ensure(k.simplified == Some(k.expanded), || format!("n={n} ({w},{x},{y},{z}): {k:?}"))?;
                }
            }
        }
    }
    Ok(())
}

fn vines() -> Check {
    for p in 0..=4 {
        for q in p..=4 {
            // p = q = 0 would be a 2-gon.
            if p + q == 0 {
                continue;
            }
            ensure(verify_vine_isomorphism(p, q).unwrap(), || format!("vine ({p},{q})"))?;
        }
    }
    let tree = vine_from_coordinates(&[1, 3, 4], 5).unwrap();
    ensure(tree.to_string() == "((1,(((2,((3,(4,5)),6)),7),8)),9)", || format!("anchor tree {tree}"))?;
    ensure(vine_coordinates(&tree, 3, 5).unwrap() == [1, 3, 4], || "anchor coordinates".into())?;
    for n in 4..=8 {
        for (c, g) in all_classes(n) {
            if let Some((p, q)) = is_vine_class(&c) {
                ensure(g.graph().order() == binom(p + q, p), || format!("{c}: order {}", g.graph().order()))?;
            }
        }
    }
    ensure(class(8, "T").graph().order() == 20, || "8-T order".into())
}

fn bipartite_connected() -> Check {
    for n in 4..=9 {
        for (c, g) in all_classes(n) {
            let gr = g.graph();
            if gr.order() == 0 {
                continue;
            }
            let d = bfs(gr, 0);
            ensure(gr.size() == 0 || d.iter().all(Option::is_some), || format!("{c}: disconnected with edges"))?;
            // Same-parity distances on an edge would close an odd cycle.
            ensure(gr.edges().all(|(u, v)| d[u].is_none() || d[u].unwrap() % 2 != d[v].unwrap() % 2), || {
                format!("{c}: not bipartite")
            })?;
        }
    }
    Ok(())
}

fn isometric_labels(g: &Graph) -> Check {
    let r = partial_cube_check(g).map_err(|e| e.to_string())?;
    let labels = r.labels.ok_or("no labels for a partial cube")?;
    for u in 0..g.order() {
        let d = bfs(g, u);
        for v in 0..g.order() {
            let a: BTreeSet<_> = labels[u].iter().collect();
            let b: BTreeSet<_> = labels[v].iter().collect();
            let h = a.symmetric_difference(&b).count();
            ensure(d[v] == Some(h), || format!("labels of {u},{v} at Hamming {h}, distance {:?}", d[v]))?;
        }
    }
    Ok(())
}

fn obstructions() -> Check {
    for l in 'A'..='Z' {
        let g = class(8, &l.to_string());
        let gr = g.graph();
        let r = partial_cube_check(gr).unwrap();
        let expect_negative = ('U'..='Z').contains(&l);
        if expect_negative {
            ensure(r.status == PartialCubeStatus::NotPartialCube, || format!("8-{l} reported a partial cube"))?;
            let w = r.witness.ok_or_else(|| format!("8-{l}: no witness"))?;
            let [a, b, c, d] = w.cycle;
            ensure(gr.has_edge(a, b) && gr.has_edge(b, c) && gr.has_edge(c, d) && gr.has_edge(d, a), || format!("8-{l}: witness cycle"))?;
            let dv = bfs(gr, w.vertex);
            ensure(dv[a] == dv[c] && dv[b] == dv[d], || format!("8-{l}: witness distances {dv:?}"))?;
            let ring = find_diamond_ring(gr).ok_or_else(|| format!("8-{l}: no diamond ring"))?;
            ring.verify(gr).map_err(|e| format!("8-{l}: {e}"))?;
        } else {
            ensure(r.status == PartialCubeStatus::PartialCube, || format!("8-{l} not a partial cube"))?;
            isometric_labels(gr).map_err(|e| format!("8-{l}: {e}"))?;
        }
    }
    for j in [2, 4, 6] {
        let r = partial_cube_check(&Graph::diamond_ring(j)).unwrap();
        ensure(r.status == PartialCubeStatus::NotPartialCube, || format!("DR_{j} accepted"))?;
    }
    isometric_labels(&Graph::cycle(4)).map_err(|e| format!("C4: {e}"))?;
    for len in 1..=6 {
        isometric_labels(&Graph::path(len)).map_err(|e| format!("path {len}: {e}"))?;
    }
    for k in 1..=5 {
        isometric_labels(class(6, &k.to_string()).graph()).map_err(|e| format!("6-{k}: {e}"))?;
    }
    Ok(())
}

/// Checks a lattice embedding from scratch; returns the sorted axis spans.
fn lattice_spans(g: &Graph, points: &[Vec<i64>]) -> Result<Vec<usize>, String> {
    let distinct: BTreeSet<_> = points.iter().collect();
    ensure(distinct.len() == points.len(), || "points collide".into())?;
    for (u, v) in g.edges() {
        let l1: i64 = points[u].iter().zip(&points[v]).map(|(a, b)| (a - b).abs()).sum();
        ensure(l1 == 1, || format!("edge {u}-{v} has length {l1}"))?;
    }
    let dim = points.first().map_or(0, Vec::len);
    let mut spans: Vec<usize> = (0..dim)
        .map(|k| {
            let (lo, hi) = points.iter().fold((i64::MAX, i64::MIN), |(lo, hi), p| (lo.min(p[k]), hi.max(p[k])));
            (hi - lo) as usize
        })
        .collect();
    spans.sort_unstable_by(|a, b| b.cmp(a));
    Ok(spans)
}

fn fits(g: &Graph, bbox: &[usize]) -> Result<bool, String> {
    match lattice_embed_search(g, bbox.len(), Some(bbox), LatticeBudget::default()).map_err(|e| e.to_string())? {
        LatticeOutcome::Found { embedding } => {
            let spans = lattice_spans(g, &embedding.assignment)?;
            let mut want = bbox.to_vec();
            want.sort_unstable_by(|a, b| b.cmp(a));
            ensure(spans.iter().zip(&want).all(|(s, w)| s <= w), || format!("spans {spans:?} exceed {bbox:?}"))?;
            Ok(true)
        }
        LatticeOutcome::None => Ok(false),
        LatticeOutcome::Unknown => Err(format!("search for box {bbox:?} ran out of budget")),
    }
}

fn lattices() -> Check {
    for n in 4..=8 {
        let m = (n - 2) / 2;
        for (c, g) in all_classes(n) {
            if g.graph().order() == 0 {
                continue;
            }
            match lattice_embed_search(g.graph(), m, None, LatticeBudget::default()).unwrap() {
                LatticeOutcome::Found { embedding } => {
                    ensure(embedding.assignment[0].len() == m, || format!("{c}: wrong dimension"))?;
                    lattice_spans(g.graph(), &embedding.assignment).map_err(|e| format!("{c}: {e}"))?;
                }
                other => return Err(format!("{c}: L({m}) search {}", other.as_str())),
            }
        }
    }
    for l in ["W", "X", "Y", "Z"] {
        ensure(fits(class(8, l).graph(), &[3, 3, 2])?, || format!("8-{l} does not fit 3x3x2"))?;
    }
    for k in 1..=5 {
        let g = class(6, &k.to_string());
        ensure(fits(g.graph(), &[2, 2])? || fits(g.graph(), &[3, 1])?, || format!("6-{k} fits neither 2x2 nor 3x1"))?;
    }
    for k in 1..=7 {
        let g = class(7, &k.to_string());
        ensure(fits(g.graph(), &[3, 3])? || fits(g.graph(), &[4, 2])?, || format!("7-{k} fits neither 3x3 nor 4x2"))?;
    }
    Ok(())
}

fn is_subgraph_map(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    map.len() == pattern.order()
        && map.iter().collect::<BTreeSet<_>>().len() == map.len()
        && pattern.edges().all(|(u, v)| host.has_edge(map[u], map[v]))
}

fn inclusions() -> Check {
    let pairs = [("T", "U"), ("U", "X"), ("H", "O"), ("H", "Q"), ("H", "V"), ("H", "W"), ("H", "Y")];
    for (small, big) in pairs {
        let (p, h) = (class(8, small), class(8, big));
        let map = contains_subgraph(h.graph(), p.graph()).ok_or_else(|| format!("{small} not in {big}"))?;
        ensure(is_subgraph_map(h.graph(), p.graph(), &map), || format!("{small} in {big}: bad map"))?;
    }
    for ((na, a), (nb, b)) in [((6, "3"), (6, "5")), ((8, "E"), (8, "F"))] {
        let (ga, gb) = (class(na, a), class(nb, b));
        let map = graphs_isomorphic(ga.graph(), gb.graph()).ok_or_else(|| format!("{a} and {b} not isomorphic"))?;
        ensure(is_subgraph_map(gb.graph(), ga.graph(), &map) && ga.graph().size() == gb.graph().size(), || {
            format!("{a} ~ {b}: bad map")
        })?;
    }
    Ok(())
}

fn read_outputs(dir: &Path) -> HashMap<String, Vec<u8>> {
    let mut files = HashMap::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else if !path.to_string_lossy().ends_with(".meta.json") {
                let rel = path.strip_prefix(dir).unwrap().to_string_lossy().into_owned();
                files.insert(rel, std::fs::read(&path).unwrap());
            }
        }
    }
    files
}

fn determinism() -> Check {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_colorgraph"))
            .args(["catalog", "--n", "8", "--out"])
            .arg(dir.path())
            .output()
            .unwrap();
        (out.status.success(), read_outputs(dir.path()))
    };
    let (ok1, a) = run();
    let (ok2, b) = run();
    ensure(ok1 && ok2, || "catalog run failed".into())?;
    ensure(a.contains_key("catalog-8.json") && a.contains_key("catalog-8.csv"), || format!("outputs: {:?}", a.keys()))?;
    ensure(a == b, || "outputs differ between runs".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("non-rigid class counts and partitions", nonrigid_counts),
        ("diameters", diameters),
        ("hypercube maps injective, edge-preserving, induced", hypercube_maps),
        ("hypercube dimension bound and count identity", hypercube_dimension),
        ("vine simplex isomorphism", vines),
        ("bipartite and connected-or-edgeless", bipartite_connected),
        ("partial-cube obstructions", obstructions),
        ("lattice embeddings", lattices),
        ("subgraph inclusions and isomorphisms", inclusions),
        ("catalog determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
