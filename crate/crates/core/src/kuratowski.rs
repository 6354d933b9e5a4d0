//! Brute-force search for K5 and K3,3 subdivisions.
//!
//! Exponential in the number of vertices; intended for graphs of order at
//! most about eight, where it serves as a witness extractor and as an
//! independent planarity decision by Kuratowski's theorem.

use crate::graph::{Edge, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    K5,
    K33,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub kind: Obstruction,
    pub branch_vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

pub fn find_subdivision(g: &Graph) -> Option<Subdivision> {
    let n = g.order();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    assert!(n <= 64, "brute-force subdivision search needs n <= 64");
    let deg4: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    for branch in combinations(&deg4, 5) {
        let pairs: Vec<(Vertex, Vertex)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .map(|(i, j)| (branch[i], branch[j]))
            .collect();
        if let Some(edges) = route_all(&adj, &branch, &pairs) {
            return Some(Subdivision { kind: Obstruction::K5, branch_vertices: branch, edges });
        }
    }
    let deg3: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    for six in combinations(&deg3, 6) {
        // the side holding six[0] is fixed to avoid trying each split twice
        for rest in combinations(&six[1..], 2) {
            let side_a = vec![six[0], rest[0], rest[1]];
            let side_b: Vec<Vertex> = six.iter().copied().filter(|v| !side_a.contains(v)).collect();
            let pairs: Vec<(Vertex, Vertex)> = side_a
                .iter()
                .flat_map(|&a| side_b.iter().map(move |&b| (a, b)))
                .collect();
            if let Some(edges) = route_all(&adj, &six, &pairs) {
                let mut branch = side_a;
                branch.extend(side_b);
                return Some(Subdivision { kind: Obstruction::K33, branch_vertices: branch, edges });
            }
        }
    }
    None
}

/// Connects every pair by internally disjoint paths avoiding all branch vertices.
fn route_all(adj: &[u64], branch: &[Vertex], pairs: &[(Vertex, Vertex)]) -> Option<Vec<Edge>> {
    let branch_mask = branch.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut paths = Vec::with_capacity(pairs.len());
    if route(adj, pairs, 0, branch_mask, &mut paths) {
        let mut edges: Vec<Edge> = paths
            .iter()
            .flat_map(|p: &Vec<Vertex>| p.windows(2).map(|w| Edge::new(w[0], w[1])))
            .collect();
        edges.sort_unstable();
        Some(edges)
    } else {
        None
    }
}

fn route(adj: &[u64], pairs: &[(Vertex, Vertex)], idx: usize, used: u64, paths: &mut Vec<Vec<Vertex>>) -> bool {
    let Some(&(a, b)) = pairs.get(idx) else {
        return true;
    };
    let mut path = vec![a];
    extend_path(adj, pairs, idx, b, used, &mut path, paths)
}

fn extend_path(
    adj: &[u64],
    pairs: &[(Vertex, Vertex)],
    idx: usize,
    target: Vertex,
    used: u64,
    path: &mut Vec<Vertex>,
    paths: &mut Vec<Vec<Vertex>>,
) -> bool {
    let last = *path.last().unwrap();
    if adj[last] >> target & 1 == 1 {
        path.push(target);
        paths.push(path.clone());
        if route(adj, pairs, idx + 1, used, paths) {
            return true;
        }
        paths.pop();
        path.pop();
    }
    let mut free = adj[last] & !used;
    while free != 0 {
        let w = free.trailing_zeros() as Vertex;
        free &= free - 1;
        path.push(w);
        if extend_path(adj, pairs, idx, target, used | 1 << w, path, paths) {
            return true;
        }
        path.pop();
    }
    false
}

fn combinations(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    fn go(items: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn finds_k5_in_complete_graphs() {
        let s = find_subdivision(&complete_graph(6)).unwrap();
        assert_eq!(s.kind, Obstruction::K5);
        assert_eq!(s.edges.len(), 10);
        assert!(find_subdivision(&complete_graph(4)).is_none());
    }

    #[test]
    fn finds_subdivided_k33() {
        // K3,3 with edge (0,3) replaced by the path 0-6-3
        let mut e = vec![(0, 6), (6, 3)];
        for a in 0..3 {
            for b in 3..6 {
                if (a, b) != (0, 3) {
                    e.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(7, e.clone()).unwrap();
        let s = find_subdivision(&g).unwrap();
        assert_eq!(s.kind, Obstruction::K33);
        assert_eq!(s.edges.len(), 10);
        for edge in &s.edges {
            assert!(g.has_edge(edge.0, edge.1));
        }
    }
}
