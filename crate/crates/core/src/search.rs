//! Exact backtracking search for decompositions of `K_n` into `t` planar
//! parts of girth at least `g`.
//!
//! Edges are assigned one at a time, ordered by larger endpoint and then
//! lexicographically, so the search grows `K_m` into `K_{m+1}`. A branch is
//! cut when a part would exceed the planar edge bound, when the new edge
//! would close a cycle shorter than `g`, when a part becomes non-planar, or
//! when the remaining edges cannot fit into the remaining part capacity.
//! All four rules are necessary conditions, so an exhausted search is a
//! proof that no decomposition exists.
//!
//! Symmetry breaking only uses part interchangeability: parts are opened in
//! increasing order, which forces edge `(0, 1)` into the first part.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{counting_lower_bound, theta4};
use crate::decomposition::Decomposition;
use crate::graph::{Edge, Girth};
use crate::planarity::{is_planar_edges, max_planar_size};

/// Largest order the bitset search supports.
pub const MAX_SEARCH_ORDER: usize = 64;

/// How often (in nodes) the wall clock is consulted.
const TIME_CHECK_INTERVAL: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    /// Number of parts.
    pub t: usize,
    /// Girth lower bound for every part.
    pub g: usize,
    pub node_budget: u64,
    pub time_budget_secs: f64,
    /// Zero keeps the canonical edge order; other values shuffle edges that
    /// share their larger endpoint.
    pub seed: u64,
    pub symmetry_breaking: bool,
}

impl SearchConfig {
    pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;
    pub const DEFAULT_TIME_BUDGET_SECS: f64 = 600.0;

    pub fn new(n: usize, t: usize, g: usize) -> Self {
        SearchConfig {
            n,
            t,
            g,
            node_budget: Self::DEFAULT_NODE_BUDGET,
            time_budget_secs: Self::DEFAULT_TIME_BUDGET_SECS,
            seed: 0,
            symmetry_breaking: true,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.t == 0 {
            return Err(SearchError::NoParts);
        }
        if self.g < 3 {
            return Err(SearchError::GirthTooSmall(self.g));
        }
        if self.n == 0 || self.n > MAX_SEARCH_ORDER {
            return Err(SearchError::OrderOutOfRange(self.n));
        }
        if self.node_budget == 0 || self.time_budget_secs.is_nan() || self.time_budget_secs <= 0.0 {
            return Err(SearchError::EmptyBudget);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("at least one part is required")]
    NoParts,
    #[error("girth bound must be at least 3, got {0}")]
    GirthTooSmall(usize),
    #[error("order must be in 1..={MAX_SEARCH_ORDER}, got {0}")]
    OrderOutOfRange(usize),
    #[error("node and time budgets must be positive")]
    EmptyBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStatus {
    Found,
    ExhaustedNoSolution,
    BudgetExceeded,
}

impl SearchStatus {
    /// Process exit code used by the command-line search.
    pub fn exit_code(self) -> i32 {
        match self {
            SearchStatus::Found => 0,
            SearchStatus::ExhaustedNoSolution => 3,
            SearchStatus::BudgetExceeded => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneCounts {
    pub size: u64,
    pub girth: u64,
    pub planarity: u64,
    pub capacity: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetKind {
    Nodes,
    Time,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Edge-assignment attempts.
    pub nodes: u64,
    /// Most edges assigned at once.
    pub max_depth: usize,
    pub prunes: PruneCounts,
    pub budget_hit: Option<BudgetKind>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
    pub decomposition: Option<Decomposition>,
}

impl SearchOutcome {
    /// The found decomposition in fixture layout, with the generating
    /// configuration embedded under `"generator"`.
    pub fn fixture_json(&self, cfg: &SearchConfig) -> Option<String> {
        let d = self.decomposition.as_ref()?;
        let generator = serde_json::to_string(cfg).expect("config serializes");
        Some(d.to_json_with(&[("generator", generator)]))
    }
}

pub fn search_decomposition(cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    let mut search = Search::new(cfg);
    let status = match search.descend(0) {
        Ok(true) => SearchStatus::Found,
        Ok(false) => SearchStatus::ExhaustedNoSolution,
        Err(kind) => {
            search.stats.budget_hit = Some(kind);
            SearchStatus::BudgetExceeded
        }
    };
    let decomposition = (status == SearchStatus::Found).then(|| search.decomposition());
    Ok(SearchOutcome { status, stats: search.stats, decomposition })
}

/// Edges of `K_n` by larger endpoint, then smaller endpoint; a nonzero seed
/// permutes edges within each larger-endpoint group.
pub fn edge_order(n: usize, seed: u64) -> Vec<Edge> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for b in 1..n {
        let start = order.len();
        order.extend((0..b).map(|a| Edge(a, b)));
        if seed != 0 {
            order[start..].shuffle(&mut rng);
        }
    }
    order
}

struct Search<'a> {
    cfg: &'a SearchConfig,
    order: Vec<Edge>,
    cap: usize,
    /// `adj[p * n + v]`: neighbours of `v` in part `p`.
    adj: Vec<u64>,
    part_edges: Vec<Vec<Edge>>,
    parts_open: usize,
    slack: usize,
    stats: SearchStats,
    started: Instant,
    time_budget: Duration,
}

impl<'a> Search<'a> {
    fn new(cfg: &'a SearchConfig) -> Self {
        let cap = max_planar_size(cfg.n, Girth::Finite(cfg.g)).expect("validated config");
        Search {
            cfg,
            order: edge_order(cfg.n, cfg.seed),
            cap,
            adj: vec![0; cfg.t * cfg.n],
            part_edges: vec![Vec::new(); cfg.t],
            parts_open: 0,
            slack: cap * cfg.t,
            stats: SearchStats::default(),
            started: Instant::now(),
            time_budget: Duration::from_secs_f64(cfg.time_budget_secs.min(1e9)),
        }
    }

    fn descend(&mut self, depth: usize) -> Result<bool, BudgetKind> {
        if depth == self.order.len() {
            return Ok(self.all_parts_planar());
        }
        if self.order.len() - depth > self.slack {
            self.stats.prunes.capacity += 1;
            return Ok(false);
        }
        let Edge(a, b) = self.order[depth];
        let choices = if self.cfg.symmetry_breaking {
            (self.parts_open + 1).min(self.cfg.t)
        } else {
            self.cfg.t
        };
        for p in 0..choices {
            if self.stats.nodes == self.cfg.node_budget {
                return Err(BudgetKind::Nodes);
            }
            self.stats.nodes += 1;
            if self.stats.nodes.is_multiple_of(TIME_CHECK_INTERVAL) && self.started.elapsed() > self.time_budget {
                return Err(BudgetKind::Time);
            }
            if self.part_edges[p].len() >= self.cap {
                self.stats.prunes.size += 1;
                continue;
            }
            if self.closes_short_cycle(p, a, b) {
                self.stats.prunes.girth += 1;
                continue;
            }
            self.push(p, a, b);
            let size = self.part_edges[p].len();
            if size > self.cap / 2 && !is_planar_edges(self.cfg.n, &self.part_edges[p]) {
                self.stats.prunes.planarity += 1;
                self.pop(p, a, b);
                continue;
            }
            let opened = p == self.parts_open;
            if opened {
                self.parts_open += 1;
            }
            self.stats.max_depth = self.stats.max_depth.max(depth + 1);
            let found = self.descend(depth + 1);
            if opened {
                self.parts_open -= 1;
            }
            match found {
                Ok(true) => return Ok(true),
                Ok(false) => self.pop(p, a, b),
                Err(kind) => return Err(kind),
            }
        }
        Ok(false)
    }

    fn push(&mut self, p: usize, a: usize, b: usize) {
        let n = self.cfg.n;
        self.adj[p * n + a] |= 1 << b;
        self.adj[p * n + b] |= 1 << a;
        self.part_edges[p].push(Edge(a, b));
        self.slack -= 1;
    }

    fn pop(&mut self, p: usize, a: usize, b: usize) {
        let n = self.cfg.n;
        self.adj[p * n + a] &= !(1 << b);
        self.adj[p * n + b] &= !(1 << a);
        self.part_edges[p].pop();
        self.slack += 1;
    }

    /// Whether `a` and `b` are within distance `g - 2` in part `p`, so that
    /// edge `a-b` would close a cycle shorter than `g`.
    fn closes_short_cycle(&self, p: usize, a: usize, b: usize) -> bool {
        let g = self.cfg.g;
        if g <= 3 {
            return false;
        }
        let n = self.cfg.n;
        let adj = &self.adj[p * n..(p + 1) * n];
        let target = 1u64 << b;
        let mut seen = 1u64 << a;
        let mut frontier = seen;
        for _ in 0..g - 2 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            if next & target != 0 {
                return true;
            }
            next &= !seen;
            if next == 0 {
                return false;
            }
            seen |= next;
            frontier = next;
        }
        false
    }

    fn all_parts_planar(&mut self) -> bool {
        for p in 0..self.cfg.t {
            if !is_planar_edges(self.cfg.n, &self.part_edges[p]) {
                self.stats.prunes.planarity += 1;
                return false;
            }
        }
        true
    }

    fn decomposition(&self) -> Decomposition {
        let lower = counting_lower_bound(self.cfg.n).unwrap_or(1);
        let known_lower = if self.cfg.g == 4 {
            theta4(self.cfg.n).lower().max(lower)
        } else {
            self.order.len().div_ceil(self.cap.max(1)).max(1)
        };
        let mut d = Decomposition {
            n: self.cfg.n,
            girth_claim: self.cfg.g,
            optimal: self.cfg.t <= known_lower,
            parts: self.part_edges.clone(),
        };
        d.canonicalize();
        d
    }
}

/// Two-colourings of `E(K_n)` with no monochromatic triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RamseyCount {
    pub n: usize,
    pub total_colorings: u64,
    pub triangle_free: u64,
}

/// Enumerates all `2^C(n,2)` two-colourings of `K_n`; `n <= 7`.
pub fn ramsey_check(n: usize) -> RamseyCount {
    assert!(n <= 7, "2^C(n,2) colourings are enumerated explicitly");
    let bit = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        b * (b - 1) / 2 + a
    };
    let m = n * n.saturating_sub(1) / 2;
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triangles.push((1u32 << bit(a, b)) | (1 << bit(a, c)) | (1 << bit(b, c)));
            }
        }
    }
    let total = 1u64 << m;
    let triangle_free = (0..total as u32)
        .filter(|&colouring| {
            triangles.iter().all(|&t| {
                let red = colouring & t;
                red != 0 && red != t
            })
        })
        .count() as u64;
    RamseyCount { n, total_colorings: total, triangle_free }
}

pub fn ramsey_k6_check() -> RamseyCount {
    ramsey_check(6)
}

/// The configuration of the open `K_10` three-part experiment.
pub fn k10_config() -> SearchConfig {
    SearchConfig::new(10, 3, 4)
}

/// One line of an experiment log.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub config: SearchConfig,
    pub status: SearchStatus,
    pub nodes: u64,
    pub depth: usize,
    pub prunes: PruneCounts,
    pub wall_ms: u64,
    /// Milliseconds since the Unix epoch.
    pub timestamp: u64,
}

/// Runs a search and appends its record as one JSON line to `log_path`.
pub fn run_logged(cfg: &SearchConfig, log_path: &Path) -> Result<(SearchOutcome, ExperimentRecord), ExperimentError> {
    let started = Instant::now();
    let outcome = search_decomposition(cfg)?;
    let record = ExperimentRecord {
        config: cfg.clone(),
        status: outcome.status,
        nodes: outcome.stats.nodes,
        depth: outcome.stats.max_depth,
        prunes: outcome.stats.prunes,
        wall_ms: started.elapsed().as_millis() as u64,
        timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_millis() as u64),
    };
    let mut line = serde_json::to_string(&record).expect("record serializes");
    line.push('\n');
    let mut file = OpenOptions::new().create(true).append(true).open(log_path)?;
    file.write_all(line.as_bytes())?;
    Ok((outcome, record))
}

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Config(#[from] SearchError),
    #[error("writing experiment log: {0}")]
    Log(#[from] std::io::Error),
}
