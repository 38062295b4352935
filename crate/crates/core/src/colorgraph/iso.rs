use std::collections::{BTreeMap, VecDeque};

use crate::graph::Graph;

/// Joint color refinement of two graphs so that class ids are comparable.
fn refine_jointly(a: &Graph, b: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut ca = a.degrees();
    let mut cb = b.degrees();
    let mut classes = usize::MAX;
    loop {
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..a.order()).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.order()).map(|v| sig(b, &cb, v)).collect();
        let ids: BTreeMap<_, usize> = sa
            .iter()
            .chain(sb.iter())
            .cloned()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        ca = sa.iter().map(|s| ids[s]).collect();
        cb = sb.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (ca, cb);
        }
        classes = ids.len();
    }
}

/// Returns `map` with `map[u]` the image in `b` of vertex `u` of `a`, such
/// that `u ~ v` in `a` iff `map[u] ~ map[v]` in `b`.
pub fn graphs_isomorphic(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.size() != b.size() {
        return None;
    }
    let (ca, cb) = refine_jointly(a, b);
    let histogram = |c: &[usize]| {
        let mut h = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_insert(0usize) += 1;
        }
        h
    };
    if histogram(&ca) != histogram(&cb) {
        return None;
    }

    // Visit vertices of `a` in BFS order so candidates are constrained early.
    let mut order = Vec::with_capacity(a.order());
    let mut seen = vec![false; a.order()];
    let mut starts: Vec<usize> = (0..a.order()).collect();
    let h = histogram(&ca);
    starts.sort_by_key(|&v| (h[&ca[v]], std::cmp::Reverse(a.degree(v))));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            order.push(u);
            for &v in a.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    fn extend(
        depth: usize,
        order: &[usize],
        a: &Graph,
        b: &Graph,
        ca: &[usize],
        cb: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        for x in 0..b.order() {
            if used[x] || cb[x] != ca[u] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| a.has_edge(u, w) == b.has_edge(x, map[w]));
            if !consistent {
                continue;
            }
            map[u] = x;
            used[x] = true;
            if extend(depth + 1, order, a, b, ca, cb, map, used) {
                return true;
            }
            used[x] = false;
            map[u] = usize::MAX;
        }
        false
    }
    extend(0, &order, a, b, &ca, &cb, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_witness(a: &Graph, b: &Graph, map: &[usize]) {
        let mut img = map.to_vec();
        img.sort_unstable();
        img.dedup();
        assert_eq!(img.len(), a.order());
        for u in 0..a.order() {
            for v in 0..a.order() {
                if u != v {
                    assert_eq!(a.has_edge(u, v), b.has_edge(map[u], map[v]));
                }
            }
        }
    }

    #[test]
    fn relabelled_cycle() {
        let a = Graph::cycle(6);
        let b = Graph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        let map = graphs_isomorphic(&a, &b).unwrap();
        check_witness(&a, &b, &map);
    }

    #[test]
    fn star_versus_path() {
        assert!(graphs_isomorphic(&Graph::star(3), &Graph::path(3)).is_none());
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 versus two triangles: 2-regular on 6 vertices.
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(graphs_isomorphic(&Graph::cycle(6), &two_triangles).is_none());
    }

    #[test]
    fn regular_graph_needs_backtracking() {
        // Two labelings of the 3-cube.
        let cube = |perm: [usize; 8]| {
            let mut edges = Vec::new();
            for u in 0..8usize {
                for bit in 0..3 {
                    let v = u ^ (1 << bit);
                    if u < v {
                        edges.push((perm[u], perm[v]));
                    }
                }
            }
            Graph::from_edges(8, edges).unwrap()
        };
        let a = cube([0, 1, 2, 3, 4, 5, 6, 7]);
        let b = cube([5, 2, 7, 0, 3, 6, 1, 4]);
        let map = graphs_isomorphic(&a, &b).unwrap();
        check_witness(&a, &b, &map);
    }

    #[test]
    fn empty_graphs() {
        assert_eq!(graphs_isomorphic(&Graph::new(0), &Graph::new(0)), Some(vec![]));
        assert!(graphs_isomorphic(&Graph::new(1), &Graph::new(2)).is_none());
    }
}
