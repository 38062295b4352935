use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Graph vertices placed on integer points so that every edge is a unit step.
/// Non-adjacent vertices may land on adjacent points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeEmbedding {
    pub dim: usize,
    pub assignment: Vec<Vec<i64>>,
    /// Per-axis extent of the bounding box, in edge lengths.
    pub extents: Vec<usize>,
}

impl LatticeEmbedding {
    /// Checks injectivity, unit edges and, when given, containment in `bbox`.
    pub fn verify(&self, g: &Graph, bbox: Option<&[usize]>) -> Result<()> {
        if self.assignment.len() != g.order() {
            return Err(Error::Verification(format!("{} points for {} vertices", self.assignment.len(), g.order())));
        }
        if let Some(p) = self.assignment.iter().find(|p| p.len() != self.dim) {
            return Err(Error::Verification(format!("point {p:?} is not in dimension {}", self.dim)));
        }
        let mut seen = HashSet::new();
        for (v, p) in self.assignment.iter().enumerate() {
            if !seen.insert(p) {
                return Err(Error::Verification(format!("vertex {v} reuses point {p:?}")));
            }
        }
        for (u, v) in g.edges() {
            if l1(&self.assignment[u], &self.assignment[v]) != 1 {
                return Err(Error::Verification(format!(
                    "edge {u} -- {v} maps to {:?} and {:?}",
                    self.assignment[u], self.assignment[v]
                )));
            }
        }
        if let Some(b) = bbox {
            for p in &self.assignment {
                if p.iter().zip(b).any(|(&c, &e)| c < 0 || c > e as i64) {
                    return Err(Error::Verification(format!("point {p:?} leaves the box {b:?}")));
                }
            }
        }
        if self.extents != extents_of(&self.assignment, self.dim) {
            return Err(Error::Verification("recorded extents do not match the points".into()));
        }
        Ok(())
    }
}

fn l1(a: &[i64], b: &[i64]) -> usize {
    a.iter().zip(b).map(|(x, y)| x.abs_diff(*y) as usize).sum()
}

fn extents_of(points: &[Vec<i64>], dim: usize) -> Vec<usize> {
    (0..dim)
        .map(|k| {
            let lo = points.iter().map(|p| p[k]).min().unwrap_or(0);
            let hi = points.iter().map(|p| p[k]).max().unwrap_or(0);
            (hi - lo) as usize
        })
        .collect()
}

/// Search limits. The node limit makes outcomes reproducible; the timeout
/// is an extra wall-clock cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeBudget {
    pub max_nodes: u64,
    pub timeout: Option<Duration>,
}

impl Default for LatticeBudget {
    fn default() -> Self {
        LatticeBudget { max_nodes: 2_000_000, timeout: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LatticeOutcome {
    Found { embedding: LatticeEmbedding },
    /// The search was exhaustive.
    None,
    /// The budget ran out first.
    Unknown,
}

impl LatticeOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            LatticeOutcome::Found { .. } => "found",
            LatticeOutcome::None => "none",
            LatticeOutcome::Unknown => "unknown",
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    m: usize,
    bbox: Option<&'a [usize]>,
    dist: Vec<Vec<Option<usize>>>,
    order: Vec<usize>,
    /// `anchor[i]`: an earlier vertex in `order` adjacent to `order[i]`.
    anchor: Vec<Option<usize>>,
    pos: Vec<Option<Vec<i64>>>,
    used: HashSet<Vec<i64>>,
    nodes: u64,
    budget: LatticeBudget,
    start: Instant,
    exhausted: bool,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            self.exhausted = true;
        } else if let Some(t) = self.budget.timeout {
            if self.nodes % 1024 == 0 && self.start.elapsed() > t {
                self.exhausted = true;
            }
        }
        self.exhausted
    }

    fn in_box(&self, p: &[i64]) -> bool {
        match self.bbox {
            Some(b) => p.iter().zip(b).all(|(&c, &e)| c >= 0 && c <= e as i64),
            None => true,
        }
    }

    /// Points for the first vertex of a component.
    fn roots(&self, first: bool) -> Vec<Vec<i64>> {
        match self.bbox {
            None => {
                // Components never interact, so shift each one clear of the rest.
                let shift = self.pos.iter().flatten().map(|p| p[0]).max().map_or(0, |x| x + self.g.order() as i64 + 1);
                let mut p = vec![0; self.m];
                p[0] = shift;
                vec![p]
            }
            Some(b) => {
                let mut out = Vec::new();
                let mut p = vec![0i64; self.m];
                loop {
                    let canonical = !first
                        || (p.iter().zip(b).all(|(&c, &e)| 2 * c <= e as i64)
                            && (1..self.m).all(|k| b[k] != b[k - 1] || p[k - 1] <= p[k]));
                    if canonical && !self.used.contains(&p) {
                        out.push(p.clone());
                    }
                    let mut k = 0;
                    while k < self.m && p[k] == b[k] as i64 {
                        p[k] = 0;
                        k += 1;
                    }
                    if k == self.m {
                        break;
                    }
                    p[k] += 1;
                }
                out
            }
        }
    }

    fn consistent(&self, v: usize, p: &[i64]) -> bool {
        for (w, q) in self.pos.iter().enumerate() {
            let Some(q) = q else { continue };
            if let Some(d) = self.dist[v][w] {
                let l = l1(p, q);
                if l > d || (d - l) % 2 == 1 {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        if self.out_of_budget() {
            return false;
        }
        let v = self.order[depth];
        let candidates: Vec<Vec<i64>> = match self.anchor[depth] {
            None => self.roots(depth == 0),
            Some(a) => {
                let base = self.pos[a].clone().unwrap();
                // Without a box all unit directions are equivalent for the first edge.
                let dirs: Vec<(usize, i64)> = if self.bbox.is_none() && depth == 1 {
                    vec![(0, 1)]
                } else {
                    (0..self.m).flat_map(|k| [(k, 1), (k, -1)]).collect()
                };
                dirs.into_iter()
                    .map(|(k, s)| {
                        let mut p = base.clone();
                        p[k] += s;
                        p
                    })
                    .collect()
            }
        };
        for p in candidates {
            if self.used.contains(&p) || !self.in_box(&p) || !self.consistent(v, &p) {
                continue;
            }
            if !self.g.neighbors(v).iter().all(|&w| self.pos[w].as_ref().map_or(true, |q| l1(q, &p) == 1)) {
                continue;
            }
            self.used.insert(p.clone());
            self.pos[v] = Some(p.clone());
            if self.extend(depth + 1) {
                return true;
            }
            self.pos[v] = None;
            self.used.remove(&p);
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Looks for an embedding of `g` as a (not necessarily induced) subgraph of
/// the `m`-dimensional integer lattice, optionally inside the box
/// `[0, bbox[0]] x ... x [0, bbox[m-1]]`.
pub fn lattice_embed_search(g: &Graph, m: usize, bbox: Option<&[usize]>, budget: LatticeBudget) -> Result<LatticeOutcome> {
    if m == 0 {
        return invalid("lattice dimension must be at least 1");
    }
    if let Some(b) = bbox {
        if b.len() != m {
            return invalid(format!("box has {} extents for dimension {m}", b.len()));
        }
        let capacity = b.iter().try_fold(1usize, |acc, &e| acc.checked_mul(e + 1));
        if capacity.is_some_and(|c| c < g.order()) {
            return Ok(LatticeOutcome::None);
        }
    }
    if g.max_degree() > 2 * m || !g.is_bipartite() {
        return Ok(LatticeOutcome::None);
    }

    // Each next vertex has the most placed neighbours; ties by degree.
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut anchor = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        anchor.push(g.neighbors(v).iter().copied().find(|&w| placed[w]));
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }

    let mut search = Search {
        g,
        m,
        bbox,
        dist: g.distance_matrix(),
        order,
        anchor,
        pos: vec![None; n],
        used: HashSet::new(),
        nodes: 0,
        budget,
        start: Instant::now(),
        exhausted: false,
    };
    if !search.extend(0) {
        return Ok(if search.exhausted { LatticeOutcome::Unknown } else { LatticeOutcome::None });
    }
    let mut assignment: Vec<Vec<i64>> = search.pos.into_iter().map(Option::unwrap).collect();
    if bbox.is_none() {
        for k in 0..m {
            let lo = assignment.iter().map(|p| p[k]).min().unwrap_or(0);
            for p in &mut assignment {
                p[k] -= lo;
            }
        }
    }
    let extents = extents_of(&assignment, m);
    let embedding = LatticeEmbedding { dim: m, assignment, extents };
    embedding.verify(g, bbox)?;
    Ok(LatticeOutcome::Found { embedding })
}

/// Parses `"3,3,2"` into box extents.
pub fn parse_box(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad box extent {s:?} in {text:?}"))))
        .collect()
}

/// Boxes of dimension `m` with nonincreasing extents, ordered by extent sum
/// and then lexicographically, holding at least `min_points` lattice points.
pub fn boxes_by_size(m: usize, max_sum: usize, min_points: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in (0..=cap.min(left)).rev() {
            cur.push(e);
            rec(m, left - e, e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for sum in 0..=max_sum {
        let mut level = Vec::new();
        rec(m, sum, sum, &mut Vec::new(), &mut level);
        level.reverse();
        out.extend(level.into_iter().filter(|b| b.iter().map(|&e| e + 1).product::<usize>() >= min_points));
    }
    out
}
