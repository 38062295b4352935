//! Invariant suites run by `colorgraph verify`, with timings.

use std::time::{Duration, Instant};

use crate::coloring::{
    canonicalize_coloring, color_vector, enumerate_coloring_classes, is_compatible, is_valid, is_vine_class,
    KleinElement, PolygonColoring,
};
use crate::colorgraph::{color_graph_in, graph_stats, is_connected_or_edgeless, Classification, ColorGraph};
use crate::embedding::quads::max_rainbow_quads;
use crate::embedding::{
    allowed_diagonals, best_forbidden_color, count_formula, dimension_bound, find_diamond_ring, hypercube_assignment,
    lattice_embed_search, partial_cube_check, verify_vine_isomorphism, LatticeBudget, LatticeOutcome,
    PartialCubeStatus,
};
use crate::error::Result;
use crate::polygon::{build_associahedron, BinaryTree};

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    /// First counterexample, if any.
    pub failure: Option<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Corrupts one hypercube assignment so the embedding suite must fail.
    pub inject_fault: bool,
}

struct Class {
    coloring: PolygonColoring,
    graph: ColorGraph,
}

fn classes(n: usize) -> Result<Vec<Class>> {
    let assoc = build_associahedron(n)?;
    enumerate_coloring_classes(n)?
        .into_iter()
        .map(|c| Ok(Class { graph: color_graph_in(&assoc, &c.representative)?, coloring: c.representative }))
        .collect()
}

struct Suite {
    name: &'static str,
    checks: usize,
    failure: Option<String>,
}

impl Suite {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn run(name: &'static str, body: impl FnOnce(&mut Suite) -> Result<()>) -> SuiteResult {
    let start = Instant::now();
    let mut s = Suite { name, checks: 0, failure: None };
    if let Err(e) = body(&mut s) {
        s.failure.get_or_insert_with(|| format!("error: {e}"));
    }
    SuiteResult { name: s.name, checks: s.checks, failure: s.failure, elapsed: start.elapsed() }
}

fn catalan(k: usize) -> usize {
    (0..k).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Edges `e Θ f` and `f Θ h` with `e` and `h` unrelated, so a bipartite
/// graph is not a partial cube. Used when no 4-cycle witness exists.
fn theta_intransitive(g: &crate::graph::Graph) -> bool {
    let dist = g.distance_matrix();
    let d = |a: usize, b: usize| dist[a][b].map_or(usize::MAX / 4, |x| x);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let theta: Vec<Vec<bool>> = edges
        .iter()
        .map(|&(u, v)| edges.iter().map(|&(x, y)| d(u, x) + d(v, y) != d(u, y) + d(v, x)).collect())
        .collect();
    let m = edges.len();
    (0..m).any(|e| (0..m).any(|h| !theta[e][h] && (0..m).any(|f| theta[e][f] && theta[f][h])))
}

/// Runs every suite over polygon sizes `lo..=hi` (each at least 4).
pub fn run_all(lo: usize, hi: usize, opts: VerifyOptions) -> Result<Vec<SuiteResult>> {
    let lo = lo.max(4);
    let mut per_n = Vec::new();
    for n in lo..=hi {
        per_n.push((n, classes(n)?));
    }
    let mut out = Vec::new();

    out.push(run("associahedron", |s| {
        for n in lo..=hi {
            let a = build_associahedron(n)?;
            s.check(a.vertices().len() == catalan(n - 2), || format!("n={n}: {} triangulations", a.vertices().len()));
            s.check(a.graph().degrees().iter().all(|&d| d == n - 3), || format!("n={n}: flip graph not (n-3)-regular"));
            s.check(a.graph().is_connected(), || format!("n={n}: flip graph disconnected"));
        }
        Ok(())
    }));

    out.push(run("coloring-classes", |s| {
        for (n, cls) in &per_n {
            let total: usize = cls.iter().map(|c| crate::coloring::orbit_size(&c.coloring)).sum();
            let expected = 3usize.pow(*n as u32) as i64 + if n % 2 == 0 { 3 } else { -3 };
            s.check(total as i64 == expected, || format!("n={n}: orbits cover {total} colorings, expected {expected}"));
            for c in cls {
                let img = c.coloring.transformed(1, true, &[0, 2, 3, 1]);
                s.check(canonicalize_coloring(&img) == c.coloring, || format!("{}: canonical form not invariant", c.coloring));
                let nonrigid = crate::colorgraph::classify(c.graph.graph()) == Classification::Nonrigid;
                s.check(nonrigid == (c.coloring.colors_used() == 4), || {
                    format!("{}: four colors used <=> non-rigid fails", c.coloring)
                });
            }
        }
        Ok(())
    }));

    out.push(run("compatible-iff-valid", |s| {
        for (n, cls) in &per_n {
            if *n > 8 {
                continue;
            }
            let all = build_associahedron(*n)?;
            for c in cls {
                let v = color_vector(&c.coloring);
                for t in all.vertices() {
                    let tree = BinaryTree::from_triangulation(t);
                    s.check(is_compatible(&c.coloring, t)? == is_valid(&v, &tree)?, || {
                        format!("{} on {}: compatibility and validity disagree", c.coloring, t.label())
                    });
                }
            }
        }
        Ok(())
    }));

    out.push(run("bipartite-and-connected", |s| {
        for (_, cls) in &per_n {
            for c in cls {
                let g = c.graph.graph();
                s.check(g.is_bipartite(), || format!("{}: color graph not bipartite", c.coloring));
                s.check(is_connected_or_edgeless(g), || format!("{}: disconnected with edges", c.coloring));
            }
        }
        Ok(())
    }));

    out.push(run("hypercube-embedding", |s| {
        let mut injected = opts.inject_fault;
        for (_, cls) in &per_n {
            for c in cls {
                for f in KleinElement::ALL {
                    let mut emb = hypercube_assignment(&c.graph, f);
                    if injected && emb.assignment.len() >= 2 {
                        emb.assignment[1] = emb.assignment[0].clone();
                        injected = false;
                    }
                    let r = emb.verify(&c.graph);
                    s.check(r.is_ok(), || format!("{} forbidden {f}: {}", c.coloring, r.unwrap_err()));
                }
            }
        }
        Ok(())
    }));

    out.push(run("hypercube-dimension", |s| {
        for (n, cls) in &per_n {
            let bound = dimension_bound(*n);
            for c in cls {
                let f = best_forbidden_color(&c.coloring);
                let used = allowed_diagonals(&c.coloring, f).len();
                s.check(used <= bound, || format!("{}: dimension {used} > bound {bound}", c.coloring));
                let m = c.coloring.multiplicities();
                let others: Vec<usize> = (0..4).filter(|&i| i != f.index()).map(|i| m[i]).collect();
                let count = count_formula(*n, m[f.index()], others[0], others[1], others[2])?;
                s.check(count.expanded == used as i64, || {
                    format!("{}: count formula {} but {used} allowed diagonals", c.coloring, count.expanded)
                });
            }
        }
        for n in 4..=64usize {
            for x in 1..n {
                for y in 1..n - x {
                    for z in 1..n - x - y {
                        let w = n - x - y - z;
                        let c = count_formula(n, w, x, y, z)?;
                        s.check(c.simplified == Some(c.expanded), || format!("n={n} ({w},{x},{y},{z}): forms disagree"));
                    }
                }
            }
        }
        Ok(())
    }));

    out.push(run("hypercube-region", |s| {
        for (n, cls) in &per_n {
            for c in cls {
                let f = best_forbidden_color(&c.coloring);
                let w = c.coloring.multiplicities()[f.index()];
                let lower = w.saturating_sub(1).max(n.div_ceil(4).saturating_sub(1));
                for set in hypercube_assignment(&c.graph, f).assignment {
                    let k = set.len();
                    s.check(k >= lower && k <= n - 3, || format!("{}: image size {k} outside [{lower}, {}]", c.coloring, n - 3));
                }
            }
        }
        Ok(())
    }));

    out.push(run("vine-isomorphism", |s| {
        for p in 0..=4usize {
            for q in p..=4usize {
                let n = p + q + 2;
                if p + q == 0 || n < lo || n > hi {
                    continue;
                }
                s.check(verify_vine_isomorphism(p, q)?, || format!("vine ({p},{q}) is not the simplex"));
            }
        }
        Ok(())
    }));

    out.push(run("vine-diameter", |s| {
        for (_, cls) in &per_n {
            for c in cls {
                if let Some((p, q)) = is_vine_class(&c.coloring) {
                    let st = graph_stats(c.graph.graph());
                    s.check(st.order == binom(p + q, p), || format!("{}: vine order {}", c.coloring, st.order));
                    let want = if p == 0 { None } else { Some(p * q) };
                    s.check(st.diameter == want, || format!("{}: vine diameter {:?}, expected {want:?}", c.coloring, st.diameter));
                }
            }
        }
        Ok(())
    }));

    out.push(run("partial-cube-consistency", |s| {
        for (_, cls) in &per_n {
            for c in cls {
                let g = c.graph.graph();
                if g.order() == 0 || !g.is_connected() {
                    continue;
                }
                let report = partial_cube_check(g)?;
                if let Some(w) = &report.witness {
                    s.check(w.verify(g).is_ok(), || format!("{}: bad distance witness", c.coloring));
                }
                if report.status == PartialCubeStatus::NotPartialCube && report.bipartite && report.witness.is_none() {
                    s.check(theta_intransitive(g), || format!("{}: negative answer without a certificate", c.coloring));
                }
                if let Some(ring) = find_diamond_ring(g) {
                    s.check(ring.verify(g).is_ok(), || format!("{}: bad diamond ring", c.coloring));
                    s.check(report.status == PartialCubeStatus::NotPartialCube, || {
                        format!("{}: diamond ring in a partial cube", c.coloring)
                    });
                }
            }
        }
        Ok(())
    }));

    out.push(run("lattice-dimension", |s| {
        // The floor((n-2)/2) pattern breaks at n = 9, so stop at octagons.
        for (n, cls) in per_n.iter().filter(|(n, _)| *n <= 8) {
            let m = (n - 2) / 2;
            for c in cls {
                if c.graph.graph().size() == 0 {
                    continue;
                }
                let r = lattice_embed_search(c.graph.graph(), m.max(1), None, LatticeBudget::default())?;
                s.check(matches!(r, LatticeOutcome::Found { .. }), || format!("{}: no embedding in L({m}): {}", c.coloring, r.as_str()));
            }
        }
        Ok(())
    }));

    out.push(run("rainbow-quads", |s| {
        for (n, cls) in &per_n {
            for c in cls {
                for quads in max_rainbow_quads(&c.coloring).into_iter().take(1) {
                    s.check(quads.len() <= (n - 2) / 2, || format!("{}: {} quadrilaterals", c.coloring, quads.len()));
                    if let Some(cube) = crate::embedding::rainbow_quad_cube(&c.graph, &quads)? {
                        s.check(cube.vertices.len() == 1 << quads.len(), || format!("{}: cube size", c.coloring));
                    }
                }
            }
        }
        Ok(())
    }));

    Ok(out)
}

/// One line per suite plus a summary line.
pub fn format_report(results: &[SuiteResult]) -> String {
    let mut s = String::new();
    for r in results {
        s.push_str(&format!(
            "{:<26} {:<4} {:>8} checks {:>8} ms\n",
            r.name,
            if r.passed() { "PASS" } else { "FAIL" },
            r.checks,
            r.elapsed.as_millis()
        ));
        if let Some(f) = &r.failure {
            s.push_str(&format!("    counterexample: {f}\n"));
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    s.push_str(&format!("{} suites, {failed} failed\n", results.len()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        let r = run_all(4, 6, VerifyOptions::default()).unwrap();
        for s in &r {
            assert!(s.passed(), "{}: {:?}", s.name, s.failure);
        }
    }

    #[test]
    fn negative_without_four_cycle_witness() {
        let c: PolygonColoring = "0,1,0,2,1,2,3,1,3".parse().unwrap();
        let g = crate::colorgraph::build_color_graph(&c).unwrap();
        let r = partial_cube_check(g.graph()).unwrap();
        assert_eq!(r.status, PartialCubeStatus::NotPartialCube);
        assert!(r.bipartite && r.witness.is_none());
        assert!(theta_intransitive(g.graph()));
        assert!(!theta_intransitive(&crate::graph::Graph::cycle(8)));
    }

    #[test]
    fn injected_fault_is_reported() {
        let r = run_all(4, 4, VerifyOptions { inject_fault: true }).unwrap();
        let hc = r.iter().find(|s| s.name == "hypercube-embedding").unwrap();
        assert!(hc.failure.as_deref().unwrap().contains("not injective"));
        assert!(format_report(&r).contains("FAIL"));
    }
}
