//! Undirected simple graphs on dense vertex ids `0..n`, plus girth.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

pub type Vertex = usize;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn is_loop(&self) -> bool {
        self.0 == self.1
    }

    /// Normalized copy; input from files is not guaranteed to have `u < v`.
    pub fn normalized(self) -> Self {
        Edge::new(self.0, self.1)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Self {
        Edge::new(a, b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Graph::empty(n);
        for e in edges {
            g.add_edge(e.into())?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        let e = e.normalized();
        if e.1 >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: e.1, n: self.n });
        }
        if e.is_loop() {
            return Err(GraphError::SelfLoop(e.0));
        }
        if !self.edges.insert(e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        self.adjacency[e.0].push(e.1);
        self.adjacency[e.1].push(e.0);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.contains(&Edge::new(a, b))
    }

    /// Induced subgraph on the vertices not in `drop`, relabelled to
    /// `0..n - |drop|` in increasing order of the surviving ids.
    pub fn remove_vertices(&self, drop: &[Vertex]) -> Result<Graph, GraphError> {
        let relabel = survivor_relabelling(self.n, drop)?;
        let kept = relabel.iter().filter(|r| r.is_some()).count();
        let mut g = Graph::empty(kept);
        for e in &self.edges {
            if let (Some(a), Some(b)) = (relabel[e.0], relabel[e.1]) {
                g.add_edge(Edge::new(a, b))
                    .expect("relabelling preserves simplicity");
            }
        }
        Ok(g)
    }

    /// Shortest cycle length, or [`Girth::Infinite`] for a forest.
    pub fn girth(&self) -> Girth {
        match self.shortest_cycle() {
            Some(c) => Girth::Finite(c.len()),
            None => Girth::Infinite,
        }
    }

    /// A shortest cycle as a vertex sequence (the closing edge is implied).
    ///
    /// BFS from every root; a non-tree edge `(a, b)` closes a walk of length
    /// `d(a) + d(b) + 1`, whose minimum over all roots is the girth. At the
    /// minimising root the two tree paths meet only at the root, so the walk
    /// is a simple cycle.
    pub fn shortest_cycle(&self) -> Option<Vec<Vertex>> {
        let n = self.n;
        let mut best: Option<(usize, Vertex, Vertex, Vertex)> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if self.adjacency[root].len() < 2 {
                continue;
            }
            if let Some((len, ..)) = best {
                if len == 3 {
                    break;
                }
            }
            if let Some((len, a, b)) = self.bfs_cycle(root, &mut dist, &mut parent, &mut queue, best.map(|b| b.0)) {
                if best.is_none_or(|(l, ..)| len < l) {
                    best = Some((len, root, a, b));
                }
            }
        }
        let (_, root, a, b) = best?;
        self.bfs_cycle(root, &mut dist, &mut parent, &mut queue, None);
        // a .. root along tree edges, then root's child .. b; b-a closes it
        let mut cycle = vec![a];
        let mut cur = a;
        while cur != root {
            cur = parent[cur];
            cycle.push(cur);
        }
        let mut tail = Vec::new();
        cur = b;
        while cur != root {
            tail.push(cur);
            cur = parent[cur];
        }
        cycle.extend(tail.into_iter().rev());
        debug_assert!(cycle.len() >= 3);
        Some(cycle)
    }

    /// BFS from `root`; returns the shortest closed walk `(len, a, b)` through
    /// the root found via non-tree edge `a-b`, stopping early once no walk
    /// shorter than `bound` is possible.
    fn bfs_cycle(
        &self,
        root: Vertex,
        dist: &mut [usize],
        parent: &mut [Vertex],
        queue: &mut VecDeque<Vertex>,
        bound: Option<usize>,
    ) -> Option<(usize, Vertex, Vertex)> {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        let mut found: Option<(usize, Vertex, Vertex)> = None;
        while let Some(u) = queue.pop_front() {
            let limit = found.map(|f| f.0).or(bound).unwrap_or(usize::MAX);
            // any cycle closed from here has length at least 2 d(u) + 1
            if 2 * dist[u] + 1 >= limit {
                break;
            }
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if found.is_none_or(|f| len < f.0) && len < bound.unwrap_or(usize::MAX) {
                        found = Some((len, u, w));
                    }
                }
            }
        }
        found
    }
}

/// Maps each old id to its new id, or `None` if dropped.
pub(crate) fn survivor_relabelling(n: usize, drop: &[Vertex]) -> Result<Vec<Option<Vertex>>, GraphError> {
    let mut dropped = vec![false; n];
    for &v in drop {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        dropped[v] = true;
    }
    let mut next = 0;
    Ok(dropped
        .iter()
        .map(|&d| {
            if d {
                None
            } else {
                next += 1;
                Some(next - 1)
            }
        })
        .collect())
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(Edge(a, b)).expect("pairs are distinct");
        }
    }
    g
}

/// Girth of a graph: a cycle length, or infinite for acyclic graphs.
/// Serializes as an integer or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_finite(&self) -> bool {
        matches!(self, Girth::Finite(_))
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct GirthVisitor;
        impl Visitor<'_> for GirthVisitor {
            type Value = Girth;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a cycle length or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Girth, E> {
                Ok(Girth::Finite(v as usize))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Girth, E> {
                usize::try_from(v)
                    .map(Girth::Finite)
                    .map_err(|_| E::custom("negative girth"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Girth, E> {
                if v == "inf" {
                    Ok(Girth::Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }
        d.deserialize_any(GirthVisitor)
    }
}
