use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{survivor_relabelling, Edge, Graph, GraphError, Vertex};

/// An ordered list of edge sets claimed to partition `E(K_n)` into planar
/// parts of girth at least `girth_claim`.
///
/// Nothing here is checked on construction; see [`crate::verification`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub n: usize,
    pub girth_claim: usize,
    /// False when the part count is not known to be minimum (only `n = 10`).
    pub optimal: bool,
    pub parts: Vec<Vec<Edge>>,
}

impl Decomposition {
    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn part_graph(&self, part: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.parts[part].iter().copied())
    }

    /// Restricts every part to the vertices not in `drop`, relabelling the
    /// survivors to `0..n - |drop|` in order.
    pub fn remove_vertices(&self, drop: &[Vertex]) -> Result<Decomposition, GraphError> {
        let relabel = survivor_relabelling(self.n, drop)?;
        let parts = self
            .parts
            .iter()
            .map(|p| {
                p.iter()
                    .filter_map(|e| match (relabel.get(e.0).copied().flatten(), relabel.get(e.1).copied().flatten()) {
                        (Some(a), Some(b)) => Some(Edge::new(a, b)),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        Ok(Decomposition {
            n: self.n - drop.len(),
            girth_claim: self.girth_claim,
            optimal: self.optimal,
            parts,
        })
    }

    /// Sorts the edges inside every part; part order is kept.
    pub fn canonicalize(&mut self) {
        for p in &mut self.parts {
            for e in p.iter_mut() {
                *e = e.normalized();
            }
            p.sort_unstable();
        }
    }

    /// Line-oriented JSON: one part per line, fields in fixed order.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        self.write_json_fields(&mut s);
        s.push_str("\n}\n");
        s
    }

    /// Same layout as [`Decomposition::to_json`] with extra trailing fields,
    /// each given as `(name, already-serialized JSON value)`.
    pub fn to_json_with(&self, extra: &[(&str, String)]) -> String {
        let mut s = String::new();
        self.write_json_fields(&mut s);
        for (name, value) in extra {
            let _ = write!(s, ",\n  \"{name}\": {value}");
        }
        s.push_str("\n}\n");
        s
    }

    fn write_json_fields(&self, s: &mut String) {
        let _ = write!(
            s,
            "{{\n  \"n\": {},\n  \"girth_claim\": {},\n  \"optimal\": {},\n  \"parts\": [",
            self.n, self.girth_claim, self.optimal
        );
        for (i, part) in self.parts.iter().enumerate() {
            s.push_str(if i == 0 { "\n    [" } else { ",\n    [" });
            for (j, e) in part.iter().enumerate() {
                if j > 0 {
                    s.push(',');
                }
                let _ = write!(s, "[{},{}]", e.0, e.1);
            }
            s.push(']');
        }
        s.push_str(if self.parts.is_empty() { "]" } else { "\n  ]" });
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
