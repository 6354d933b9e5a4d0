//! Brute-force oracles shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use girth4_core::decomposition::Decomposition;
use girth4_core::graph::{complete_graph, Edge, Girth, Graph};
use girth4_core::verification::verify;

/// Shortest cycle by enumerating every simple cycle from its smallest vertex.
pub fn girth_by_enumeration(g: &Graph) -> Girth {
    fn walk(g: &Graph, start: usize, cur: usize, len: usize, on_path: &mut Vec<bool>, best: &mut usize) {
        for &w in g.neighbors(cur) {
            if w == start && len >= 3 {
                *best = (*best).min(len);
            } else if w > start && !on_path[w] && len + 1 < *best {
                on_path[w] = true;
                walk(g, start, w, len + 1, on_path, best);
                on_path[w] = false;
            }
        }
    }
    let mut best = usize::MAX;
    for s in 0..g.order() {
        let mut on_path = vec![false; g.order()];
        on_path[s] = true;
        walk(g, s, s, 1, &mut on_path, &mut best);
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Bit i of `mask` selects the i-th pair in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((a, b));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Tries every map from edges to parts, checking only complete assignments.
pub fn exists_by_enumeration(n: usize, t: usize, g: usize) -> bool {
    let edges: Vec<Edge> = complete_graph(n).edges().collect();
    let total = (t as u64).pow(edges.len() as u32);
    (0..total).any(|mut code| {
        let mut parts = vec![Vec::new(); t];
        for e in &edges {
            parts[(code % t as u64) as usize].push(*e);
            code /= t as u64;
        }
        verify(&Decomposition { n, girth_claim: g, optimal: false, parts }).ok
    })
}

/// (n, t, g) triples with n <= 6 small enough for `exists_by_enumeration`.
pub fn enumerable_cases() -> Vec<(usize, usize, usize)> {
    let mut cases = Vec::new();
    for n in 1..=6 {
        for t in 1..=3 {
            for g in 3..=5 {
                let m = n * (n - 1) / 2;
                if (t as u64).pow(m as u32) <= 20_000_000 {
                    cases.push((n, t, g));
                }
            }
        }
    }
    // 3^15 leaves, but a valid leaf turns up early
    cases.extend([(6, 3, 3), (6, 3, 4)]);
    cases
}
