use crate::graph::Graph;

/// Searches for an injective map from `pattern` into `host` sending every
/// pattern edge to a host edge (an ordinary, not necessarily induced,
/// subgraph). Returns `map[u]` = image of pattern vertex `u`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return None;
    }
    let mut hd = host.degrees();
    let mut pd = pattern.degrees();
    hd.sort_unstable_by(|a, b| b.cmp(a));
    pd.sort_unstable_by(|a, b| b.cmp(a));
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return None;
    }

    // Greedy order: each next vertex has the most already-placed neighbors.
    let np = pattern.order();
    let mut order = Vec::with_capacity(np);
    let mut placed = vec![false; np];
    let mut links = vec![0usize; np];
    while order.len() < np {
        let next = (0..np)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &w in pattern.neighbors(next) {
            links[w] += 1;
        }
    }

    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; host.order()];
    fn extend(depth: usize, order: &[usize], host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        let mapped_nbrs: Vec<usize> =
            pattern.neighbors(u).iter().filter(|&&w| map[w] != usize::MAX).map(|&w| map[w]).collect();
        let candidates: Vec<usize> = match mapped_nbrs.first() {
            Some(&anchor) => host.neighbors(anchor).to_vec(),
            None => (0..host.order()).collect(),
        };
        for x in candidates {
            if used[x] || host.degree(x) < pattern.degree(u) {
                continue;
            }
            if !mapped_nbrs.iter().all(|&y| host.has_edge(x, y)) {
                continue;
            }
            map[u] = x;
            used[x] = true;
            if extend(depth + 1, order, host, pattern, map, used) {
                return true;
            }
            used[x] = false;
            map[u] = usize::MAX;
        }
        false
    }
    extend(0, &order, host, pattern, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(host: &Graph, pattern: &Graph, map: &[usize]) {
        let mut img = map.to_vec();
        img.sort_unstable();
        img.dedup();
        assert_eq!(img.len(), pattern.order());
        for (u, v) in pattern.edges() {
            assert!(host.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn star_not_in_path() {
        assert!(contains_subgraph(&Graph::path(3), &Graph::star(3)).is_none());
    }

    #[test]
    fn path_in_cycle_not_induced() {
        let host = Graph::cycle(4);
        let pattern = Graph::path(3);
        let map = contains_subgraph(&host, &pattern).unwrap();
        check(&host, &pattern, &map);
    }

    #[test]
    fn cycle_in_grid() {
        let mut host = Graph::new(9);
        for r in 0..3 {
            for c in 0..3 {
                let v = r * 3 + c;
                if c < 2 {
                    host.add_edge(v, v + 1);
                }
                if r < 2 {
                    host.add_edge(v, v + 3);
                }
            }
        }
        let map = contains_subgraph(&host, &Graph::cycle(8)).unwrap();
        check(&host, &Graph::cycle(8), &map);
        assert!(contains_subgraph(&host, &Graph::cycle(5)).is_none());
        assert!(contains_subgraph(&host, &Graph::star(5)).is_none());
    }

    #[test]
    fn disconnected_pattern() {
        let pattern = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let map = contains_subgraph(&Graph::path(3), &pattern).unwrap();
        check(&Graph::path(3), &pattern, &map);
        assert!(contains_subgraph(&Graph::path(2), &pattern).is_none());
    }
}
