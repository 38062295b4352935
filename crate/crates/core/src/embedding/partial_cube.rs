use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartialCubeStatus {
    PartialCube,
    NotPartialCube,
}

impl PartialCubeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PartialCubeStatus::PartialCube => "partial_cube",
            PartialCubeStatus::NotPartialCube => "not_partial_cube",
        }
    }
}

/// A 4-cycle `a b c d` and an outside vertex `v` with `d(v,a) = d(v,c)` and
/// `d(v,b) = d(v,d)`. No isometric subgraph of a hypercube contains one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceWitness {
    pub cycle: [usize; 4],
    pub vertex: usize,
    /// `d(v,a) = d(v,c)`.
    pub dist_ac: usize,
    /// `d(v,b) = d(v,d)`.
    pub dist_bd: usize,
}

impl DistanceWitness {
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let [a, b, c, d] = self.cycle;
        let v = self.vertex;
        if self.cycle.contains(&v) {
            return Err(Error::Verification(format!("witness vertex {v} lies on its cycle")));
        }
        if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a)) {
            return Err(Error::Verification(format!("{:?} is not a 4-cycle", self.cycle)));
        }
        let dist = g.bfs(v);
        let at = |x: usize| dist[x];
        if at(a) != Some(self.dist_ac) || at(c) != Some(self.dist_ac) || at(b) != Some(self.dist_bd) || at(d) != Some(self.dist_bd) {
            return Err(Error::Verification(format!("distances from {v} to {:?} do not match the witness", self.cycle)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialCubeReport {
    pub status: PartialCubeStatus,
    /// Number of Djoković–Winkler classes, for partial cubes.
    pub isometric_dimension: Option<usize>,
    /// `labels[v]` lists the classes on whose far side `v` lies, for partial cubes.
    pub labels: Option<Vec<Vec<usize>>>,
    pub witness: Option<DistanceWitness>,
    pub bipartite: bool,
}

/// Every 4-cycle `[a, b, c, d]` once, with `a` its smallest vertex and `b < d`.
pub fn four_cycles(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..g.order() {
        let nb = g.neighbors(a);
        for (i, &b) in nb.iter().enumerate() {
            if b < a {
                continue;
            }
            for &d in &nb[i + 1..] {
                for &c in g.neighbors(b) {
                    if c > a && c != d && g.has_edge(c, d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// First distance witness in vertex order.
pub fn find_distance_witness(g: &Graph, dist: &[Vec<Option<usize>>]) -> Option<DistanceWitness> {
    for cycle in four_cycles(g) {
        let [a, b, c, d] = cycle;
        for v in 0..g.order() {
            if cycle.contains(&v) {
                continue;
            }
            let dv = &dist[v];
            if let (Some(da), Some(db)) = (dv[a], dv[b]) {
                if dv[c] == Some(da) && dv[d] == Some(db) {
                    return Some(DistanceWitness { cycle, vertex: v, dist_ac: da, dist_bd: db });
                }
            }
        }
    }
    None
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Decides isometric embeddability in a hypercube. Positive answers carry a
/// labeling whose Hamming distances were checked against all graph distances.
pub fn partial_cube_check(g: &Graph) -> Result<PartialCubeReport> {
    if !g.is_connected() {
        return invalid("partial cube check needs a connected graph");
    }
    let dist: Vec<Vec<usize>> =
        g.distance_matrix().into_iter().map(|row| row.into_iter().map(|d| d.unwrap()).collect()).collect();
    let bipartite = g.is_bipartite();
    let negative = |g: &Graph| -> PartialCubeReport {
        let opt: Vec<Vec<Option<usize>>> = dist.iter().map(|r| r.iter().map(|&d| Some(d)).collect()).collect();
        PartialCubeReport {
            status: PartialCubeStatus::NotPartialCube,
            isometric_dimension: None,
            labels: None,
            witness: find_distance_witness(g, &opt),
            bipartite,
        }
    };
    if !bipartite {
        return Ok(negative(g));
    }

    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    for i in 0..edges.len() {
        let (u, v) = edges[i];
        for (j, &(x, y)) in edges.iter().enumerate().skip(i + 1) {
            if dist[u][x] + dist[v][y] != dist[u][y] + dist[v][x] {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut class_of_root = vec![usize::MAX; edges.len()];
    let mut reps = Vec::new();
    for i in 0..edges.len() {
        let r = find(&mut parent, i);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = reps.len();
            reps.push(edges[i]);
        }
    }

    // Side of each class: closer to the second endpoint of its representative.
    let labels: Vec<Vec<usize>> = (0..g.order())
        .map(|w| (0..reps.len()).filter(|&k| dist[w][reps[k].1] < dist[w][reps[k].0]).collect())
        .collect();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if super::hypercube::hamming(&labels[u], &labels[v]) != dist[u][v] {
                return Ok(negative(g));
            }
        }
    }
    Ok(PartialCubeReport {
        status: PartialCubeStatus::PartialCube,
        isometric_dimension: Some(reps.len()),
        labels: Some(labels),
        witness: None,
        bipartite,
    })
}

/// A diamond ring inside a graph: the 4-cycle `a b c d` plus a path from `a`
/// to `c` avoiding `b` and `d`, through a vertex `v` equidistant from `a`
/// and `c` and from `b` and `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondRing {
    pub cycle: [usize; 4],
    /// Vertices from `a` to `c`, both included.
    pub path: Vec<usize>,
    pub middle: usize,
    /// Path length.
    pub j: usize,
    /// Whether the path is a concatenation of two geodesics through `middle`.
    pub geodesic: bool,
}

impl DiamondRing {
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let [a, b, c, d] = self.cycle;
        DistanceWitness {
            cycle: self.cycle,
            vertex: self.middle,
            dist_ac: g.bfs(self.middle)[a].unwrap_or(usize::MAX),
            dist_bd: g.bfs(self.middle)[b].unwrap_or(usize::MAX),
        }
        .verify(g)?;
        let p = &self.path;
        if p.first() != Some(&a) || p.last() != Some(&c) || p.len() != self.j + 1 || !p.contains(&self.middle) {
            return Err(Error::Verification(format!("path {p:?} does not join {a} and {c} through {}", self.middle)));
        }
        let mut seen = std::collections::HashSet::new();
        if !p.iter().all(|x| seen.insert(*x)) || p.contains(&b) || p.contains(&d) {
            return Err(Error::Verification(format!("path {p:?} is not internally disjoint from the cycle")));
        }
        if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return Err(Error::Verification(format!("path {p:?} uses a non-edge")));
        }
        Ok(())
    }
}

/// Shortest path from `s` to `t` avoiding `blocked`, as a vertex list.
fn shortest_path_avoiding(g: &Graph, s: usize, t: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.order()];
    let mut queue = std::collections::VecDeque::from([s]);
    prev[s] = s;
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut path = vec![t];
            let mut cur = t;
            while cur != s {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if prev[w] == usize::MAX && !blocked[w] {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

fn ring_through(g: &Graph, cycle: [usize; 4], v: usize, dist_v: &[Option<usize>], geodesic: bool) -> Option<DiamondRing> {
    let [a, b, c, d] = cycle;
    let mut blocked = vec![false; g.order()];
    blocked[b] = true;
    blocked[d] = true;
    for (s, t) in [(a, c), (c, a)] {
        let mut blocked = blocked.clone();
        blocked[t] = true;
        let Some(first) = shortest_path_avoiding(g, v, s, &blocked) else { continue };
        if geodesic && Some(first.len() - 1) != dist_v[s] {
            continue;
        }
        blocked[t] = false;
        for &x in &first {
            blocked[x] = true;
        }
        blocked[v] = false;
        let Some(second) = shortest_path_avoiding(g, v, t, &blocked) else { continue };
        if geodesic && Some(second.len() - 1) != dist_v[t] {
            continue;
        }
        // first: v..s, second: v..t; orient from a to c.
        let (to_a, to_c) = if s == a { (first, second) } else { (second, first) };
        let mut path: Vec<usize> = to_a.into_iter().rev().collect();
        path.extend(to_c.into_iter().skip(1));
        return Some(DiamondRing { cycle, j: path.len() - 1, path, middle: v, geodesic });
    }
    None
}

/// Searches for a diamond ring whose middle vertex satisfies the distance
/// conditions; geodesic halves are tried first, then arbitrary paths.
pub fn find_diamond_ring(g: &Graph) -> Option<DiamondRing> {
    let dist = g.distance_matrix();
    let mut candidates: Vec<([usize; 4], usize)> = four_cycles(g)
        .into_iter()
        .flat_map(|cycle| (0..g.order()).map(move |v| (cycle, v)))
        .filter(|&(cycle, v)| {
            let [a, b, c, d] = cycle;
            let dv = &dist[v];
            !cycle.contains(&v) && dv[a].is_some() && dv[b].is_some() && dv[a] == dv[c] && dv[b] == dv[d]
        })
        .collect();
    // Closest middles first, so geodesic rings come out as short as possible.
    candidates.sort_by_key(|&(cycle, v)| dist[v][cycle[0]]);
    for geodesic in [true, false] {
        for &(cycle, v) in &candidates {
            if let Some(ring) = ring_through(g, cycle, v, &dist[v], geodesic) {
                return Some(ring);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hypercube(k: usize) -> Graph {
        let mut g = Graph::new(1 << k);
        for u in 0..1usize << k {
            for b in 0..k {
                g.add_edge(u, u ^ (1 << b));
            }
        }
        g
    }

    #[test]
    fn four_cycle_is_a_square() {
        let r = partial_cube_check(&Graph::cycle(4)).unwrap();
        assert_eq!(r.status, PartialCubeStatus::PartialCube);
        assert_eq!(r.isometric_dimension, Some(2));
    }

    #[test]
    fn cubes_paths_and_even_cycles() {
        assert_eq!(partial_cube_check(&hypercube(3)).unwrap().isometric_dimension, Some(3));
        assert_eq!(partial_cube_check(&Graph::path(5)).unwrap().isometric_dimension, Some(5));
        assert_eq!(partial_cube_check(&Graph::cycle(8)).unwrap().isometric_dimension, Some(4));
        let r = partial_cube_check(&Graph::cycle(5)).unwrap();
        assert_eq!(r.status, PartialCubeStatus::NotPartialCube);
        assert!(!r.bipartite);
    }

    #[test]
    fn k23_has_a_witness() {
        let dr2 = Graph::diamond_ring(2);
        let r = partial_cube_check(&dr2).unwrap();
        assert_eq!(r.status, PartialCubeStatus::NotPartialCube);
        let w = r.witness.unwrap();
        w.verify(&dr2).unwrap();
        assert_eq!((w.dist_ac, w.dist_bd), (1, 2));
    }

    #[test]
    fn diamond_rings_fail() {
        for j in [2, 4, 6] {
            let g = Graph::diamond_ring(j);
            assert_eq!(partial_cube_check(&g).unwrap().status, PartialCubeStatus::NotPartialCube);
            let ring = find_diamond_ring(&g).unwrap();
            ring.verify(&g).unwrap();
            assert!(ring.geodesic);
            if j > 2 {
                assert_eq!(ring.j, j);
            }
        }
    }

    #[test]
    fn trees_and_cubes_have_no_ring() {
        assert!(find_diamond_ring(&Graph::star(4)).is_none());
        assert!(find_diamond_ring(&Graph::path(6)).is_none());
        assert!(find_diamond_ring(&hypercube(3)).is_none());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(partial_cube_check(&g).is_err());
    }

    #[test]
    fn bad_witness_rejected() {
        let g = Graph::cycle(6);
        let w = DistanceWitness { cycle: [0, 1, 2, 3], vertex: 4, dist_ac: 1, dist_bd: 1 };
        assert!(w.verify(&g).is_err());
    }
}
