//! Correlation clustering for signed general graphs.
//!
//! The crate provides the six-step clustering pipeline ([`run_cc`]), the
//! structural analyses around it (weakly negative cycles and their packings,
//! clusterability, the chordless triangle condition, forbidden patterns), and
//! brute-force oracles ([`brute_force_optimum`], [`min_deletion_set`]) that
//! certify results on small instances.

mod bitset;
mod unionfind;

pub mod bench;
pub mod clustering;
pub mod cycles;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod patterns;
pub mod pipeline;

pub use clustering::Clustering;
pub use cycles::{
    condition_theorem_check, enumerate_weakly_negative_cycles, is_clusterable,
    max_edge_disjoint_wnc_packing, strongly_positive_triangles, triangle_chain_components,
    triangle_condition_check, Clusterability, Cycle, CycleBound,
};
pub use error::{Error, Result};
pub use graph::{Edge, Sign, SignedGraph};
pub use oracle::{
    approximation_report, brute_force_optimum, count_disagreements, min_deletion_set,
};
pub use patterns::{forbidden_subgraph_scan, ForbiddenPattern, PatternId};
pub use pipeline::{run_cc, run_cc_with, CcOptions, CcOutcome};
