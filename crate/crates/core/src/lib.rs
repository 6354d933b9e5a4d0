//! Planar decompositions of complete graphs into parts of girth at least four.
//!
//! The crate builds explicit decompositions of `K_n` into `ceil((n + 2) / 4)`
//! planar triangle-free parts (three parts for `n = 6`, four for `n = 10`),
//! certifies them independently, and searches small instances exhaustively.

pub mod bounds;
pub mod construction;
pub mod decomposition;
pub mod fixtures;
pub mod graph;
pub mod kuratowski;
pub mod planarity;
pub mod search;
pub mod verification;

pub use bounds::{theta4, ThetaKind, ThetaValue};
pub use construction::{build_case_4k, build_case_4k_plus_2, decompose, ConstructionError};
pub use decomposition::Decomposition;
pub use graph::{complete_graph, Edge, Girth, Graph, GraphError, Vertex};
pub use planarity::{is_planar, max_planar_size, PlanarityVerdict};
pub use search::{search_decomposition, SearchConfig, SearchOutcome, SearchStatus};
pub use verification::{certify_upper_bound, verify, VerificationReport, Violation};
