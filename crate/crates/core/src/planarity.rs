//! Planarity testing and planar edge bounds.
//!
//! The decision procedure is the left-right planarity test: a DFS orients
//! the graph and computes low points, then a second DFS processes outgoing
//! edges by nesting depth while maintaining a stack of conflict pairs of
//! return-edge intervals. The graph is planar iff every return edge can be
//! assigned a side without conflict.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Girth, Graph, Vertex};
use crate::kuratowski;

/// Graphs with at most this many vertices get a Kuratowski witness when non-planar.
pub const WITNESS_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    /// Edge set of a K5 or K3,3 subdivision contained in the input.
    pub witness: Option<Vec<Edge>>,
}

pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    let edges: Vec<Edge> = g.edges().collect();
    let planar = is_planar_edges(g.order(), &edges);
    let witness = if !planar && g.order() <= WITNESS_MAX_ORDER {
        kuratowski::find_subdivision(g).map(|w| w.edges)
    } else {
        None
    };
    PlanarityVerdict { planar, witness }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("planar edge bound is undefined for the empty graph")]
    EmptyGraph,
    #[error("girth lower bound must be at least 3, got {0}")]
    GirthTooSmall(usize),
}

/// Maximum size of a planar graph of order `n` whose girth is at least `girth_lb`.
///
/// Finite `g` gives `floor(g (n - 2) / (g - 2))` for `n >= 3`, but never less
/// than the `n - 1` edges of a spanning tree, which has infinite girth.
pub fn max_planar_size(n: usize, girth_lb: Girth) -> Result<usize, BoundError> {
    if n == 0 {
        return Err(BoundError::EmptyGraph);
    }
    let tree = n - 1;
    match girth_lb {
        Girth::Infinite => Ok(tree),
        Girth::Finite(g) if g < 3 => Err(BoundError::GirthTooSmall(g)),
        Girth::Finite(_) if n < 3 => Ok(tree),
        Girth::Finite(g) => Ok((g * (n - 2) / (g - 2)).max(tree)),
    }
}

/// Left-right planarity test on an edge list over vertices `0..n`.
///
/// Loops and repeated edges are ignored.
pub fn is_planar_edges(n: usize, edges: &[Edge]) -> bool {
    let mut clean: Vec<Edge> = edges
        .iter()
        .map(|e| e.normalized())
        .filter(|e| !e.is_loop() && e.1 < n)
        .collect();
    clean.sort_unstable();
    clean.dedup();
    if n >= 3 && clean.len() > 3 * n - 6 {
        return false;
    }
    if clean.len() < 9 {
        // K3,3 is the smallest non-planar graph by size
        return true;
    }
    LrState::new(n, &clean).run()
}

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Edge-indexed state for one run. Edge `e` is oriented `tail[e] -> head[e]`
/// during the first DFS.
struct LrState {
    n: usize,
    adj: Vec<Vec<(Vertex, usize)>>,
    tail: Vec<Vertex>,
    head: Vec<Vertex>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    lowpt_edge: Vec<usize>,
    reference: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl LrState {
    fn new(n: usize, edges: &[Edge]) -> Self {
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.0].push((e.1, i));
            adj[e.1].push((e.0, i));
        }
        LrState {
            n,
            adj,
            tail: vec![NONE; m],
            head: vec![NONE; m],
            oriented: vec![false; m],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out_edges: vec![Vec::new(); n],
            lowpt_edge: vec![NONE; m],
            reference: vec![NONE; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        let mut roots = Vec::new();
        for v in 0..self.n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.n {
            let mut out = std::mem::take(&mut self.out_edges[v]);
            out.sort_by_key(|&e| self.nesting_depth[e]);
            self.out_edges[v] = out;
        }
        roots.into_iter().all(|r| self.test(r))
    }

    fn orient(&mut self, v: Vertex) {
        let parent = self.parent_edge[v];
        for idx in 0..self.adj[v].len() {
            let (w, e) = self.adj[v][idx];
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            self.tail[e] = v;
            self.head[e] = w;
            self.out_edges[v].push(e);
            self.lowpt[e] = self.height[v];
            self.lowpt2[e] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = e;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[e] = self.height[w];
            }
            self.nesting_depth[e] = 2 * self.lowpt[e];
            if self.lowpt2[e] < self.height[v] {
                // chordal
                self.nesting_depth[e] += 1;
            }
            if parent != NONE {
                let (lo, lo2) = (self.lowpt[e], self.lowpt2[e]);
                let (plo, plo2) = (self.lowpt[parent], self.lowpt2[parent]);
                if lo < plo {
                    self.lowpt2[parent] = plo.min(lo2);
                    self.lowpt[parent] = lo;
                } else if lo > plo {
                    self.lowpt2[parent] = plo2.min(lo);
                } else {
                    self.lowpt2[parent] = plo2.min(lo2);
                }
            }
        }
    }

    fn test(&mut self, v: Vertex) -> bool {
        let parent = self.parent_edge[v];
        for idx in 0..self.out_edges[v].len() {
            let e = self.out_edges[v][idx];
            self.stack_bottom[e] = self.stack.len();
            if self.parent_edge[self.head[e]] == e {
                if !self.test(self.head[e]) {
                    return false;
                }
            } else {
                self.lowpt_edge[e] = e;
                self.stack.push(ConflictPair {
                    left: Interval::EMPTY,
                    right: Interval { low: e, high: e },
                });
            }
            if self.lowpt[e] < self.height[v] {
                if idx == 0 {
                    if parent != NONE {
                        self.lowpt_edge[parent] = self.lowpt_edge[e];
                    }
                } else if !self.add_constraints(e, parent) {
                    return false;
                }
            }
        }
        if parent != NONE {
            self.remove_back_edges(parent);
        }
        true
    }

    fn conflicting(&self, i: Interval, e: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[e]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            self.lowpt[p.right.low]
        } else if p.right.is_empty() {
            self.lowpt[p.left.low]
        } else {
            self.lowpt[p.left.low].min(self.lowpt[p.right.low])
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("ei has return edges");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(top.left, ei) || self.conflicting(top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(q.right, ei) {
                q.swap();
            }
            if self.conflicting(q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.reference[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head[p.left.high] == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head[p.right.high] == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        // side of e is the side of a highest return edge
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                    hl
                } else {
                    hr
                };
            }
        }
    }
}
