//! Estimating k-clique and near-clique counts in large sparse graphs by
//! sampling cliques from prefixed Turán shadows.
//!
//! The main entry points are [`estimators::inverse_ts`] and
//! [`estimators::peanuts`]; [`exact`] provides ground truth for small graphs.

pub mod degeneracy;
pub mod edgelist;
pub mod estimators;
pub mod exact;
pub mod graph;
pub mod shadow;

pub use degeneracy::{degeneracy_order, DegeneracyInfo};
pub use estimators::{Estimate, Mode, PatternKind, PatternSpec, SamplingConfig};
pub use exact::{exact_counts, naive_subset_counts, ExactCounts};
pub use graph::{build_graph, Graph, LabelMap, VertexId, VertexSet};
pub use shadow::{build_prefixed_shadow, PrefixedShadow, ShadowLeaf};
