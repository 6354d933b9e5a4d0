//! Independent certification of a [`Decomposition`].
//!
//! Only graph primitives and the planarity test are used here, never the
//! construction, so a passing report is evidence on its own.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::decomposition::Decomposition;
use crate::graph::{Edge, Girth, Graph, Vertex};
use crate::planarity::is_planar;

pub const DEFAULT_VIOLATION_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Maximum number of violations kept in the report.
    pub violation_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { violation_cap: DEFAULT_VIOLATION_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    MissingEdge { u: Vertex, v: Vertex },
    DuplicateEdge { u: Vertex, v: Vertex, part_a: usize, part_b: usize },
    /// A loop or an endpoint outside `0..n`.
    ForeignEdge { u: Vertex, v: Vertex, part: usize },
    NonPlanar { part: usize, witness: Option<Vec<Edge>> },
    GirthViolation { part: usize, cycle: Vec<Vertex> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartResult {
    pub size: usize,
    pub planar: bool,
    pub girth: Girth,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub n: usize,
    pub girth_claim: usize,
    pub part_results: Vec<PartResult>,
    pub violations: Vec<Violation>,
    /// Violations found beyond the cap and not listed.
    pub truncated: usize,
}

pub fn verify(d: &Decomposition) -> VerificationReport {
    verify_with(d, VerifyOptions::default())
}

pub fn verify_with(d: &Decomposition, opts: VerifyOptions) -> VerificationReport {
    let n = d.n;
    let mut violations = Vec::new();
    let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut part_graphs = Vec::with_capacity(d.parts.len());

    for (p, part) in d.parts.iter().enumerate() {
        let mut g = Graph::empty(n);
        for &raw in part {
            let e = raw.normalized();
            if e.is_loop() || e.1 >= n {
                violations.push(Violation::ForeignEdge { u: raw.0, v: raw.1, part: p });
                continue;
            }
            match owner.get(&e) {
                Some(&first) => violations.push(Violation::DuplicateEdge { u: e.0, v: e.1, part_a: first, part_b: p }),
                None => {
                    owner.insert(e, p);
                    g.add_edge(e).expect("edge checked above");
                }
            }
        }
        part_graphs.push(g);
    }

    for a in 0..n {
        for b in a + 1..n {
            if !owner.contains_key(&Edge(a, b)) {
                violations.push(Violation::MissingEdge { u: a, v: b });
            }
        }
    }

    let claim = Girth::Finite(d.girth_claim.max(3));
    let mut part_results = Vec::with_capacity(part_graphs.len());
    for (p, g) in part_graphs.iter().enumerate() {
        // parts with a duplicated edge are judged on their first copies only
        let verdict = is_planar(g);
        let cycle = g.shortest_cycle();
        let girth = cycle.as_ref().map_or(Girth::Infinite, |c| Girth::Finite(c.len()));
        if !verdict.planar {
            violations.push(Violation::NonPlanar { part: p, witness: verdict.witness.clone() });
        }
        if girth < claim {
            violations.push(Violation::GirthViolation { part: p, cycle: cycle.unwrap_or_default() });
        }
        part_results.push(PartResult { size: d.parts[p].len(), planar: verdict.planar, girth });
    }

    violations.sort();
    let truncated = violations.len().saturating_sub(opts.violation_cap);
    violations.truncate(opts.violation_cap);
    VerificationReport {
        ok: violations.is_empty() && truncated == 0,
        n,
        girth_claim: d.girth_claim,
        part_results,
        violations,
        truncated,
    }
}

/// The statement "`K_n` splits into `parts` planar graphs of girth at least
/// `girth`", backed by a passing verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub n: usize,
    pub girth: usize,
    pub parts: usize,
}

pub fn certify_upper_bound(d: &Decomposition) -> Result<UpperBound, Box<VerificationReport>> {
    let report = verify(d);
    if report.ok {
        Ok(UpperBound { n: d.n, girth: d.girth_claim, parts: d.parts.len() })
    } else {
        Err(Box::new(report))
    }
}
