//! Graphviz output: one undirected `graph` block per part.

use std::fmt::Write as _;

use girth4_core::verification::VerificationReport;
use girth4_core::Decomposition;

pub fn render(d: &Decomposition, report: &VerificationReport, labels: Option<&[String]>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "// K_{} in {} parts, girth >= {}", d.n, d.parts.len(), d.girth_claim);
    for (i, part) in d.parts.iter().enumerate() {
        let r = &report.part_results[i];
        let _ = writeln!(s, "graph part_{} {{", i + 1);
        let _ = writeln!(
            s,
            "  label=\"part {}: size {}, girth {}, {}\";",
            i + 1,
            r.size,
            r.girth,
            if r.planar { "planar" } else { "non-planar" }
        );
        for v in 0..d.n {
            match labels {
                Some(names) => {
                    let _ = writeln!(s, "  {v} [label=\"{}\"];", names[v]);
                }
                None => {
                    let _ = writeln!(s, "  {v};");
                }
            }
        }
        for e in part {
            let _ = writeln!(s, "  {} -- {};", e.0, e.1);
        }
        s.push_str("}\n");
    }
    s
}
