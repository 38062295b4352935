//! Simple undirected graphs on `0..n` with sorted adjacency lists.
//!
//! Also hosts the plain text exchange format:
//!
//! ```text
//! # comment
//! p 4
//! e 0 1
//! e 1 2
//! ```

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(order: usize) -> Self {
        Graph { adj: vec![Vec::new(); order] }
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(order);
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidInput(format!("edge ({u},{v}) out of range for order {order}")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Path on `len + 1` vertices.
    pub fn path(len: usize) -> Self {
        Graph::from_edges(len + 1, (0..len).map(|i| (i, i + 1))).unwrap()
    }

    pub fn cycle(len: usize) -> Self {
        Graph::from_edges(len, (0..len).map(|i| (i, (i + 1) % len))).unwrap()
    }

    /// Star with one centre (vertex 0) and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    /// The 4-cycle `0-1-2-3` plus a path of length `j` joining 0 and 2.
    pub fn diamond_ring(j: usize) -> Self {
        assert!(j >= 1);
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        if j == 1 {
            edges.push((0, 2));
            return Graph::from_edges(4, edges).unwrap();
        }
        let inner: Vec<usize> = (4..4 + j - 1).collect();
        let mut prev = 0;
        for &v in &inner {
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, 2));
        Graph::from_edges(4 + j - 1, edges).unwrap()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
        }
        if let Err(pos) = self.adj[v].binary_search(&u) {
            self.adj[v].insert(pos, u);
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.order()).map(|u| self.bfs(u)).collect()
    }

    /// The graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// A proper 2-coloring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side: Vec<Option<u8>> = vec![None; self.order()];
        for s in 0..self.order() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(1 - su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Longest shortest path; `None` when empty or disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if self.order() == 0 {
            return None;
        }
        let mut best = 0;
        for u in 0..self.order() {
            for d in self.bfs(u) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let pos: std::collections::HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = pos.get(w) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn parse_plain(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}: {raw:?}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| err("expected a non-negative integer"));
            match fields.as_slice() {
                ["p", k] => {
                    if graph.is_some() {
                        return Err(err("duplicate header"));
                    }
                    graph = Some(Graph::new(num(k)?));
                }
                ["e", u, v] => {
                    let g = graph.as_mut().ok_or_else(|| err("edge before the `p N` header"))?;
                    let (u, v) = (num(u)?, num(v)?);
                    if u >= g.order() || v >= g.order() {
                        return Err(err("vertex out of range"));
                    }
                    if u == v {
                        return Err(err("self-loop"));
                    }
                    g.add_edge(u, v);
                }
                _ => return Err(err("expected `p N` or `e U V`")),
            }
        }
        graph.ok_or_else(|| Error::Parse("missing `p N` header".into()))
    }

    pub fn to_plain(&self) -> String {
        let mut s = format!("p {}\n", self.order());
        for (u, v) in self.edges() {
            writeln!(s, "e {u} {v}").unwrap();
        }
        s
    }

    /// Undirected DOT; `labels[i]` names vertex `i`.
    pub fn to_dot(&self, name: &str, labels: &[String]) -> String {
        let mut s = format!("graph \"{}\" {{\n", escape(name));
        for u in 0..self.order() {
            let label = labels.get(u).map(String::as_str).unwrap_or("");
            writeln!(s, "  {u} [label=\"{}\"];", escape(label)).unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(s, "  {u} -- {v};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_format_round_trip() {
        let text = "# star\np 4\n\ne 0 1\ne 0 2\n  e 3 0\n";
        let g = Graph::parse_plain(text).unwrap();
        assert_eq!(g, Graph::star(3));
        assert_eq!(Graph::parse_plain(&g.to_plain()).unwrap(), g);
    }

    #[test]
    fn plain_format_errors() {
        assert!(Graph::parse_plain("e 0 1\n").is_err());
        assert!(Graph::parse_plain("p 2\ne 0 2\n").is_err());
        assert!(Graph::parse_plain("p 2\ne 1 1\n").is_err());
        assert!(Graph::parse_plain("p x\n").is_err());
        assert!(Graph::parse_plain("# nothing\n").is_err());
        assert!(Graph::parse_plain("p 2\np 3\n").is_err());
    }

    #[test]
    fn metrics() {
        assert_eq!(Graph::path(4).diameter(), Some(4));
        assert_eq!(Graph::cycle(6).diameter(), Some(3));
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        assert_eq!(Graph::new(2).diameter(), None);
        assert_eq!(Graph::new(0).diameter(), None);
        assert!(!Graph::new(2).is_connected());
        assert_eq!(Graph::star(3).max_degree(), 3);
    }

    #[test]
    fn diamond_rings() {
        let dr2 = Graph::diamond_ring(2);
        assert_eq!((dr2.order(), dr2.size()), (5, 6));
        let dr4 = Graph::diamond_ring(4);
        assert_eq!((dr4.order(), dr4.size()), (7, 8));
        assert!(!Graph::diamond_ring(3).is_bipartite());
    }

    #[test]
    fn dot_output() {
        let g = Graph::path(1);
        let dot = g.to_dot("p", &["{1,3}".into(), "{1,5}".into()]);
        assert_eq!(dot, "graph \"p\" {\n  0 [label=\"{1,3}\"];\n  1 [label=\"{1,5}\"];\n  0 -- 1;\n}\n");
    }
}
