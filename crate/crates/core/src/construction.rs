//! Explicit decompositions of `K_n` into `ceil((n + 2) / 4)` planar parts of
//! girth at least four.
//!
//! `K_{4k}` is split into two copies of `K_{2k}`, the unprimed vertices
//! `v_1..v_2k` and the primed vertices `v'_1..v'_2k`. Each copy carries the
//! cyclic factorization into `k` zig-zag Hamiltonian paths. Part `G_i` takes
//! path `i` on both copies together with all cross edges between
//! consecutive pair classes `{v_s, v'_s}` of that path, so it is a chain of
//! `K_{2,2}` blocks; the last part is the matching `v_j v'_j`.
//!
//! `K_{4k+2}` adds the hubs `x` and `y`: the matching part gains `xy` and an
//! alternating star from each hub, and every `G_i` gains four hub edges
//! selected by the parity of `k`, of `i` and of `ceil(k / 2)`.
//!
//! Odd orders come from deleting the highest vertex of the next even order.

use std::fmt;

use thiserror::Error;

use crate::decomposition::Decomposition;
use crate::fixtures::{self, FixtureError, FixtureSource};
use crate::graph::{Edge, Vertex};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("parameter k = {k} is below the minimum {min}")]
    KTooSmall { k: usize, min: usize },
    #[error("k = 2 (n = 10) is excluded from the 4k+2 construction")]
    ExcludedTen,
    #[error("K_0 has no decomposition")]
    EmptyGraph,
    #[error(transparent)]
    Fixture(#[from] FixtureError),
}

/// A vertex name of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    /// `v_j`, `1 <= j <= 2k`.
    V(usize),
    /// `v'_j`, `1 <= j <= 2k`.
    VPrime(usize),
    X,
    Y,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::V(j) => write!(f, "v_{j}"),
            Label::VPrime(j) => write!(f, "v'_{j}"),
            Label::X => f.write_str("x"),
            Label::Y => f.write_str("y"),
        }
    }
}

/// Bijection `v_j <-> j - 1`, `v'_j <-> 2k + j - 1`, `x <-> 4k`, `y <-> 4k + 1`.
///
/// Index arguments are taken modulo `2k` with representatives `1..=2k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexMap {
    k: usize,
}

impl VertexMap {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1);
        VertexMap { k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Reduces any integer index to its representative in `1..=2k`.
    pub fn reduce(&self, j: i64) -> usize {
        let m = 2 * self.k as i64;
        ((j - 1).rem_euclid(m) + 1) as usize
    }

    pub fn v(&self, j: i64) -> Vertex {
        self.reduce(j) - 1
    }

    pub fn vp(&self, j: i64) -> Vertex {
        2 * self.k + self.reduce(j) - 1
    }

    pub fn x(&self) -> Vertex {
        4 * self.k
    }

    pub fn y(&self) -> Vertex {
        4 * self.k + 1
    }

    pub fn id(&self, label: Label) -> Option<Vertex> {
        let two_k = 2 * self.k;
        match label {
            Label::V(j) if (1..=two_k).contains(&j) => Some(j - 1),
            Label::VPrime(j) if (1..=two_k).contains(&j) => Some(two_k + j - 1),
            Label::X => Some(self.x()),
            Label::Y => Some(self.y()),
            _ => None,
        }
    }

    pub fn label(&self, v: Vertex) -> Option<Label> {
        let two_k = 2 * self.k;
        match v {
            _ if v < two_k => Some(Label::V(v + 1)),
            _ if v < 2 * two_k => Some(Label::VPrime(v - two_k + 1)),
            _ if v == self.x() => Some(Label::X),
            _ if v == self.y() => Some(Label::Y),
            _ => None,
        }
    }
}

/// The index order `i, i+1, i-1, i+2, i-2, ..., i+k+1, i+k` (mod `2k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigZag {
    pub k: usize,
    pub i: usize,
    pub sequence: Vec<usize>,
}

impl ZigZag {
    pub fn new(k: usize, i: usize) -> Self {
        let map = VertexMap::new(k);
        let base = i as i64;
        let mut sequence = Vec::with_capacity(2 * k);
        sequence.push(map.reduce(base));
        for m in 1..=k as i64 {
            sequence.push(map.reduce(base + m));
            if sequence.len() < 2 * k {
                sequence.push(map.reduce(base - m));
            }
        }
        ZigZag { k, i, sequence }
    }

    /// Consecutive index pairs; these are the path edges.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.sequence.windows(2).map(|w| (w[0], w[1]))
    }

    /// The `k`-th of the `2k - 1` path edges.
    pub fn middle_pair(&self) -> (usize, usize) {
        (self.sequence[self.k - 1], self.sequence[self.k])
    }
}

/// Partition of `E(K_{2k})` (vertices `0..2k`) into the `k` zig-zag
/// Hamiltonian paths; path `i - 1` follows `ZigZag(k, i)`.
pub fn hamiltonian_factorization(k: usize) -> Result<Vec<Vec<Edge>>, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::KTooSmall { k, min: 1 });
    }
    let map = VertexMap::new(k);
    Ok((1..=k)
        .map(|i| {
            ZigZag::new(k, i)
                .pairs()
                .map(|(a, b)| Edge::new(map.v(a as i64), map.v(b as i64)))
                .collect()
        })
        .collect())
}

/// `G_i`: path `i` on both copies plus the `K_{2,2}` cross edges between
/// consecutive pair classes.
fn chain_part(map: &VertexMap, i: usize) -> Vec<Edge> {
    let zz = ZigZag::new(map.k(), i);
    let mut part = Vec::with_capacity(8 * map.k() - 4);
    for (a, b) in zz.pairs() {
        let (a, b) = (a as i64, b as i64);
        part.push(Edge::new(map.v(a), map.v(b)));
        part.push(Edge::new(map.vp(a), map.vp(b)));
        part.push(Edge::new(map.v(a), map.vp(b)));
        part.push(Edge::new(map.vp(a), map.v(b)));
    }
    part.sort_unstable();
    part
}

fn matching_part(map: &VertexMap) -> Vec<Edge> {
    (1..=2 * map.k() as i64).map(|j| Edge::new(map.v(j), map.vp(j))).collect()
}

/// Decomposition of `K_{4k}` into `k` chains `G_1..G_k` of size `8k - 4` and
/// the perfect matching `v_j v'_j`.
pub fn build_case_4k(k: usize) -> Result<Decomposition, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::KTooSmall { k, min: 2 });
    }
    let map = VertexMap::new(k);
    let mut parts: Vec<Vec<Edge>> = (1..=k).map(|i| chain_part(&map, i)).collect();
    parts.push(matching_part(&map));
    Ok(Decomposition { n: 4 * k, girth_claim: 4, optimal: true, parts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hub {
    X,
    Y,
}

/// Which ceiling the attachment index is measured from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    /// `ceil(3k / 2)`
    ThreeHalves,
    /// `ceil(k / 2)`
    Half,
}

/// One hub edge `hub - v_{i + anchor + offset}` (or `v'` when `primed`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HubEdge {
    pub hub: Hub,
    pub offset: i64,
    pub primed: bool,
}

const fn hub(hub: Hub, offset: i64, primed: bool) -> HubEdge {
    HubEdge { hub, offset, primed }
}

/// The four hub edges added to `G_i` in `K_{4k+2}`, keyed by the parities of
/// `k`, `i` and `ceil(k / 2)`.
pub fn hub_edges(k_odd: bool, i_odd: bool, half_even: bool) -> (Anchor, [HubEdge; 4]) {
    use Hub::{X, Y};
    let anchor = if i_odd { Anchor::ThreeHalves } else { Anchor::Half };
    let edges = match (k_odd, i_odd, half_even) {
        // x v'_{a-1}, x v_a, y v_{a-1}, y v'_a
        (true, _, true) => [hub(X, -1, true), hub(X, 0, false), hub(Y, -1, false), hub(Y, 0, true)],
        // y v'_{a-1}, y v_a, x v_{a-1}, x v'_a
        (true, _, false) => [hub(Y, -1, true), hub(Y, 0, false), hub(X, -1, false), hub(X, 0, true)],
        // x v_{a+1}, x v'_a, y v'_{a+1}, y v_a
        (false, true, true) => [hub(X, 1, false), hub(X, 0, true), hub(Y, 1, true), hub(Y, 0, false)],
        // y v_{a+1}, y v'_a, x v'_{a+1}, x v_a
        (false, true, false) => [hub(Y, 1, false), hub(Y, 0, true), hub(X, 1, true), hub(X, 0, false)],
        // x v_a, x v'_{a-1}, y v'_a, y v_{a-1}
        (false, false, true) => [hub(X, 0, false), hub(X, -1, true), hub(Y, 0, true), hub(Y, -1, false)],
        // y v_a, y v'_{a-1}, x v'_a, x v_{a-1}
        (false, false, false) => [hub(Y, 0, false), hub(Y, -1, true), hub(X, 0, true), hub(X, -1, false)],
    };
    (anchor, edges)
}

/// The four hub edges of `H_i` as vertex ids.
pub fn hub_edges_for(k: usize, i: usize) -> [Edge; 4] {
    let map = VertexMap::new(k);
    let half = k.div_ceil(2);
    let three_halves = (3 * k).div_ceil(2);
    let (anchor, table) = hub_edges(k % 2 == 1, i % 2 == 1, half.is_multiple_of(2));
    let a = i as i64
        + match anchor {
            Anchor::ThreeHalves => three_halves as i64,
            Anchor::Half => half as i64,
        };
    table.map(|h| {
        let hub = match h.hub {
            Hub::X => map.x(),
            Hub::Y => map.y(),
        };
        let end = if h.primed { map.vp(a + h.offset) } else { map.v(a + h.offset) };
        Edge::new(hub, end)
    })
}

/// Decomposition of `K_{4k+2}` for `k >= 3` into `H_1..H_k` (size `8k`) and
/// `H_{k+1}` (size `6k + 1`).
pub fn build_case_4k_plus_2(k: usize) -> Result<Decomposition, ConstructionError> {
    match k {
        2 => return Err(ConstructionError::ExcludedTen),
        0 | 1 => return Err(ConstructionError::KTooSmall { k, min: 3 }),
        _ => {}
    }
    let map = VertexMap::new(k);
    let mut parts: Vec<Vec<Edge>> = (1..=k)
        .map(|i| {
            let mut part = chain_part(&map, i);
            part.extend(hub_edges_for(k, i));
            part.sort_unstable();
            part
        })
        .collect();
    let mut last = matching_part(&map);
    last.push(Edge::new(map.x(), map.y()));
    for j in 1..=2 * k as i64 {
        if j % 2 == 1 {
            last.push(Edge::new(map.x(), map.v(j)));
            last.push(Edge::new(map.y(), map.vp(j)));
        } else {
            last.push(Edge::new(map.x(), map.vp(j)));
            last.push(Edge::new(map.y(), map.v(j)));
        }
    }
    last.sort_unstable();
    parts.push(last);
    Ok(Decomposition { n: 4 * k + 2, girth_claim: 4, optimal: true, parts })
}

/// Orders served from search-generated fixtures rather than the construction.
pub const FIXTURE_ORDERS: [usize; 7] = [1, 2, 3, 4, 5, 6, 9];

/// A decomposition of `K_n` with the optimal part count (four parts for
/// `n = 10`, where optimality is open), using the embedded fixtures.
pub fn decompose(n: usize) -> Result<Decomposition, ConstructionError> {
    decompose_with(n, &FixtureSource::Embedded)
}

pub fn decompose_with(n: usize, fixtures: &FixtureSource) -> Result<Decomposition, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::EmptyGraph);
    }
    if FIXTURE_ORDERS.contains(&n) {
        return Ok(fixtures::load(n, fixtures)?);
    }
    let d = match n % 4 {
        0 => build_case_4k(n / 4)?,
        3 => restrict(build_case_4k(n.div_ceil(4))?, 1),
        2 if n == 10 => {
            let mut d = restrict(build_case_4k(3)?, 2);
            d.optimal = false;
            d
        }
        2 => build_case_4k_plus_2((n - 2) / 4)?,
        _ => restrict(build_case_4k_plus_2((n - 1) / 4)?, 1),
    };
    Ok(d)
}

/// Drops the `count` highest vertices.
fn restrict(d: Decomposition, count: usize) -> Decomposition {
    let drop: Vec<Vertex> = (d.n - count..d.n).collect();
    let r = d.remove_vertices(&drop).expect("dropped ids are in range");
    assert!(
        r.parts.iter().all(|p| !p.is_empty()),
        "restriction emptied a part of K_{}",
        r.n
    );
    r
}

/// Vertex names for the constructed orders, `None` for fixture orders.
pub fn paper_labels(n: usize) -> Option<Vec<Label>> {
    let (k, with_hubs, keep) = match n % 4 {
        _ if FIXTURE_ORDERS.contains(&n) => return None,
        0 => (n / 4, false, n),
        3 => (n.div_ceil(4), false, n),
        2 if n == 10 => (3, false, n),
        2 => ((n - 2) / 4, true, n),
        _ => ((n - 1) / 4, true, n),
    };
    let map = VertexMap::new(k);
    let total = if with_hubs { 4 * k + 2 } else { 4 * k };
    debug_assert!(keep <= total);
    Some((0..keep).map(|v| map.label(v).expect("id within map")).collect())
}
