//! Command implementations for the `girth4` binary.
//!
//! Each command writes its primary output to the given writer and returns the
//! process exit code, so the commands can be driven from tests directly.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use girth4_core::bounds::{closed_form_lower_bound, counting_lower_bound, theta4, ThetaValue};
use girth4_core::construction::{decompose_with, paper_labels};
use girth4_core::fixtures::FixtureSource;
use girth4_core::search::{self, RamseyCount, SearchConfig};
use girth4_core::verification::{verify, VerificationReport};
use girth4_core::Decomposition;

pub mod dot;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "girth4", version, about = "Planar girth-4 decompositions of complete graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Labels {
    Int,
    Paper,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the counting lower bound and the known value for K_n.
    Bound {
        #[arg(long)]
        n: usize,
    },
    /// Build, verify and write a decomposition of K_n.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Vertex naming in DOT output and in the summary.
        #[arg(long, value_enum, default_value = "int")]
        labels: Labels,
        #[arg(long, default_value = "./fixtures")]
        fixtures_dir: PathBuf,
    },
    /// Verify a decomposition file; exit 0 if valid, 1 if not, 2 if unreadable.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Girth bound to check instead of the file's own claim.
        #[arg(long)]
        girth: Option<usize>,
    },
    /// Backtracking search; exit 0 found, 3 exhausted, 4 budget exceeded.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        parts: usize,
        #[arg(long, default_value_t = 4)]
        girth: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        no_symmetry_breaking: bool,
        /// Write a found decomposition here, with the configuration embedded.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append a JSON-lines experiment record here.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// The three-part K_10 search, always logged.
    K10 {
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, default_value = "./k10-log.jsonl")]
        log: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count two-colourings of K_6 without a monochromatic triangle.
    #[command(name = "ramsey-k6")]
    RamseyK6 {
        /// Order to check instead of 6 (at most 7).
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(0..=7))]
        n: u8,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct BudgetArgs {
    /// Maximum edge-assignment attempts; accepts forms like 1e8.
    #[arg(long, value_parser = parse_count, default_value = "1e7")]
    pub node_budget: u64,
    /// Wall-clock cap in seconds.
    #[arg(long, default_value_t = SearchConfig::DEFAULT_TIME_BUDGET_SECS)]
    pub time_budget: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Parses a positive integer count, allowing scientific notation.
pub fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let f: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if !f.is_finite() || f < 0.0 || f.fract() != 0.0 || f > 9.007_199_254_740_992e15 {
        return Err(format!("not a whole count: {s}"));
    }
    Ok(f as u64)
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{context}: {source}")]
    Io { context: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

fn io_err(context: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Io { context, source }
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Bound { n } => cmd_bound(n, out),
        Command::Decompose { n, format, out: path, labels, fixtures_dir } => {
            cmd_decompose(n, format, path.as_deref(), labels, &FixtureSource::dir_or_embedded(&fixtures_dir), out, err)
        }
        Command::Verify { input, girth } => cmd_verify(&input, girth, out, err),
        Command::Search { n, parts, girth, budget, no_symmetry_breaking, out: path, log } => {
            let mut cfg = budget.config(n, parts, girth);
            cfg.symmetry_breaking = !no_symmetry_breaking;
            cmd_search(&cfg, path.as_deref(), log.as_deref(), out)
        }
        Command::K10 { budget, log, out: path } => {
            let cfg = budget.config(10, 3, 4);
            cmd_search(&cfg, path.as_deref(), Some(&log), out)
        }
        Command::RamseyK6 { n } => cmd_ramsey(n as usize, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

impl BudgetArgs {
    fn config(&self, n: usize, t: usize, g: usize) -> SearchConfig {
        let mut cfg = SearchConfig::new(n, t, g);
        cfg.node_budget = self.node_budget;
        cfg.time_budget_secs = self.time_budget;
        cfg.seed = self.seed;
        cfg
    }
}

#[derive(Debug, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub lower_bound: usize,
    pub theta: ThetaValue,
}

pub fn bound_report(n: usize) -> Result<BoundReport, CliError> {
    let counted = counting_lower_bound(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let closed = closed_form_lower_bound(n);
    if counted != closed {
        return Err(CliError::Usage(format!(
            "internal error: counting bound {counted} disagrees with closed form {closed} for n = {n}"
        )));
    }
    Ok(BoundReport { n, lower_bound: counted, theta: theta4(n) })
}

pub fn cmd_bound(n: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = bound_report(n)?;
    writeln!(out, "{}", serde_json::to_string(&report).expect("serializable")).map_err(io_err("writing output"))?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct DecomposeSummary<'a> {
    n: usize,
    parts: usize,
    optimal: bool,
    report: &'a VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn cmd_decompose(
    n: usize,
    format: Format,
    path: Option<&Path>,
    labels: Labels,
    fixtures: &FixtureSource,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let d = decompose_with(n, fixtures).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = verify(&d);
    let names: Option<Vec<String>> = match labels {
        Labels::Int => None,
        Labels::Paper => match paper_labels(n) {
            Some(l) => Some(l.iter().map(ToString::to_string).collect()),
            None => {
                let _ = writeln!(err, "note: K_{n} comes from a search fixture and has no construction labels");
                None
            }
        },
    };
    if !report.ok {
        let _ = writeln!(err, "internal error: decomposition of K_{n} failed verification");
        let _ = writeln!(err, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
        return Ok(EXIT_VERIFY_FAILED);
    }
    let body = match format {
        Format::Json => d.to_json(),
        Format::Dot => dot::render(&d, &report, names.as_deref()),
    };
    let summary = DecomposeSummary { n, parts: d.parts.len(), optimal: d.optimal, report: &report, labels: names };
    let summary = serde_json::to_string(&summary).expect("serializable");
    match path {
        Some(p) => {
            fs::write(p, body).map_err(io_err(format!("writing {}", p.display())))?;
            writeln!(out, "{summary}").map_err(io_err("writing output"))?;
        }
        None => {
            out.write_all(body.as_bytes()).map_err(io_err("writing output"))?;
            let _ = writeln!(err, "{summary}");
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(path: &Path, girth: Option<usize>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: reading {}: {e}", path.display());
            return Ok(EXIT_USAGE);
        }
    };
    let mut d = match Decomposition::from_json(&text) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: parsing {}: {e}", path.display());
            return Ok(EXIT_USAGE);
        }
    };
    if let Some(g) = girth {
        d.girth_claim = g;
    }
    let report = verify(&d);
    writeln!(out, "{}", serde_json::to_string(&report).expect("serializable")).map_err(io_err("writing output"))?;
    Ok(if report.ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

pub fn cmd_search(cfg: &SearchConfig, path: Option<&Path>, log: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let outcome = match log {
        Some(log) => search::run_logged(cfg, log).map(|(o, _)| o).map_err(|e| CliError::Usage(e.to_string()))?,
        None => search::search_decomposition(cfg).map_err(|e| CliError::Usage(e.to_string()))?,
    };
    if let (Some(p), Some(text)) = (path, outcome.fixture_json(cfg)) {
        fs::write(p, text).map_err(io_err(format!("writing {}", p.display())))?;
    }
    writeln!(out, "{}", serde_json::to_string(&outcome).expect("serializable")).map_err(io_err("writing output"))?;
    Ok(outcome.status.exit_code())
}

pub fn cmd_ramsey(n: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let count: RamseyCount = search::ramsey_check(n);
    writeln!(out, "{}", serde_json::to_string(&count).expect("serializable")).map_err(io_err("writing output"))?;
    Ok(EXIT_OK)
}
