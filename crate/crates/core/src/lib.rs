//! Metric dimension and partition dimension of unicyclic graphs.
//!
//! The crate computes both invariants exactly on small graphs, evaluates the
//! known structural bounds for them, builds explicit resolving sets and
//! partitions with a verification certificate, and scans graph families for
//! the gap between `pd(G)` and `pd(T)` over spanning trees `T`.

pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod resolve;
pub mod scan;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{all_pairs_distances, parse_edge_list, validate_unicyclic, DistanceMatrix, Graph, SpanningTree, UnicyclicGraph, Vertex};
pub use resolve::{
    check_resolving_partition, check_resolving_set, metric_dimension_exact, partition_dimension_exact,
    OrderedPartition, ResolutionWitness, SolverCaps,
};
