//! Search-generated decompositions for the orders the construction does not
//! cover (`n <= 6` and `n = 9`).
//!
//! The files live in the repository's `fixtures/` directory and are also
//! compiled in, so the library works from any working directory. Every load
//! is re-verified.

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::decomposition::Decomposition;
use crate::verification::verify;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureSource {
    /// The copies compiled into the crate.
    Embedded,
    Dir(PathBuf),
}

impl FixtureSource {
    /// `dir` if it exists, otherwise the embedded copies.
    pub fn dir_or_embedded(dir: impl AsRef<Path>) -> Self {
        let dir = dir.as_ref();
        if dir.is_dir() {
            FixtureSource::Dir(dir.to_path_buf())
        } else {
            FixtureSource::Embedded
        }
    }
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("no fixture for n = {0}")]
    Missing(usize),
    #[error("reading fixture {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parsing fixture for n = {n}: {source}")]
    Parse { n: usize, source: serde_json::Error },
    #[error("fixture for n = {n} describes K_{found}")]
    WrongOrder { n: usize, found: usize },
    #[error("fixture for n = {n} failed verification with {violations} violation(s)")]
    Invalid { n: usize, violations: usize },
}

pub fn file_name(n: usize) -> String {
    format!("k{n}.json")
}

fn embedded(n: usize) -> Option<&'static str> {
    Some(match n {
        1 => include_str!("../../../fixtures/k1.json"),
        2 => include_str!("../../../fixtures/k2.json"),
        3 => include_str!("../../../fixtures/k3.json"),
        4 => include_str!("../../../fixtures/k4.json"),
        5 => include_str!("../../../fixtures/k5.json"),
        6 => include_str!("../../../fixtures/k6.json"),
        9 => include_str!("../../../fixtures/k9.json"),
        _ => return None,
    })
}

pub fn load(n: usize, source: &FixtureSource) -> Result<Decomposition, FixtureError> {
    let text = match source {
        FixtureSource::Embedded => embedded(n).ok_or(FixtureError::Missing(n))?.to_owned(),
        FixtureSource::Dir(dir) => {
            let path = dir.join(file_name(n));
            std::fs::read_to_string(&path).map_err(|source| FixtureError::Io { path, source })?
        }
    };
    let d = Decomposition::from_json(&text).map_err(|source| FixtureError::Parse { n, source })?;
    if d.n != n {
        return Err(FixtureError::WrongOrder { n, found: d.n });
    }
    let report = verify(&d);
    if !report.ok {
        return Err(FixtureError::Invalid { n, violations: report.violations.len() });
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::theta4;

    #[test]
    fn embedded_fixtures_verify_with_optimal_part_counts() {
        for n in [1, 2, 3, 4, 5, 6, 9] {
            let d = load(n, &FixtureSource::Embedded).unwrap();
            assert_eq!(d.parts.len(), theta4(n).upper(), "n = {n}");
            assert_eq!(d.girth_claim, 4);
            assert!(d.optimal);
        }
        assert!(matches!(load(7, &FixtureSource::Embedded), Err(FixtureError::Missing(7))));
    }

    #[test]
    fn directory_source_reports_missing_files() {
        let src = FixtureSource::Dir(PathBuf::from("/nonexistent-fixture-dir"));
        assert!(matches!(load(5, &src), Err(FixtureError::Io { .. })));
        assert_eq!(FixtureSource::dir_or_embedded("/nonexistent-fixture-dir"), FixtureSource::Embedded);
    }
}
