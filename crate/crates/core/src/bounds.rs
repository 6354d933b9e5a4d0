//! Counting lower bound and the known value of the girth-4 thickness of `K_n`.

use serde::{Deserialize, Serialize};

use crate::graph::Girth;
use crate::planarity::{max_planar_size, BoundError};

/// `ceil((n + 2) / 4)`.
pub fn closed_form_lower_bound(n: usize) -> usize {
    (n + 2).div_ceil(4)
}

/// `ceil(C(n, 2) / max_planar_size(n, 4))`: how many triangle-free planar
/// parts the edges of `K_n` need by counting alone. For `n = 1` there are no
/// edges but a decomposition still has one (empty) part.
pub fn counting_lower_bound(n: usize) -> Result<usize, BoundError> {
    let cap = max_planar_size(n, Girth::Finite(4))? as u64;
    let n64 = n as u64;
    let total = n64 * n64.saturating_sub(1) / 2;
    if cap == 0 {
        return Ok(1);
    }
    Ok(total.div_ceil(cap) as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaKind {
    Exact(usize),
    Range { lo: usize, hi: usize },
}

/// What is known about the minimum number of planar girth-4 parts of `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaValue {
    pub n: usize,
    pub kind: ThetaKind,
}

impl ThetaValue {
    /// The number of parts a decomposition achieving the upper end has.
    pub fn upper(&self) -> usize {
        match self.kind {
            ThetaKind::Exact(m) => m,
            ThetaKind::Range { hi, .. } => hi,
        }
    }

    pub fn lower(&self) -> usize {
        match self.kind {
            ThetaKind::Exact(m) => m,
            ThetaKind::Range { lo, .. } => lo,
        }
    }
}

pub fn theta4(n: usize) -> ThetaValue {
    let kind = match n {
        6 => ThetaKind::Exact(3),
        10 => ThetaKind::Range { lo: 3, hi: 4 },
        _ => ThetaKind::Exact(closed_form_lower_bound(n)),
    };
    ThetaValue { n, kind }
}
