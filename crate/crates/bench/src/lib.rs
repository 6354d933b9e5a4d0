//! Input generators for the benchmarks.

use girth4_core::graph::{Edge, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// w x w grid, planar with girth 4.
pub fn grid(w: usize) -> Vec<Edge> {
    let mut edges = Vec::new();
    for r in 0..w {
        for c in 0..w {
            let v = r * w + c;
            if c + 1 < w {
                edges.push(Edge(v, v + 1));
            }
            if r + 1 < w {
                edges.push(Edge(v, v + w));
            }
        }
    }
    edges
}
