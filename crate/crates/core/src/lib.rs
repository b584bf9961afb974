//! Packing colorings and S-colorings of graphs, with emphasis on subdivided
//! graphs: an exact solver, a distance-based verifier, and constructive
//! colorers for generalized prisms, cubic graphs with a 2-factor,
//! generalized Petersen graphs, and `S_i` subdivisions of complete graphs
//! and trees.

pub mod battery;
pub mod coloring;
pub mod constructive;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod solver;
pub mod transforms;

pub use coloring::{
    coloring_to_partition, lift_to_subdivision, partition_predicate_holds, partition_to_1122,
    verify_s_coloring, verify_with_distances, PackingVector, SColoring, TriPartition, Verdict, Violation,
};
pub use error::{Error, Result};
pub use generators::{PrismSpec, TwoFactorSpec};
pub use graph::{DistanceMatrix, Graph};
pub use solver::{
    all_subdiv_one_possible, diameter_bound, packing_chromatic, s_colorable, DiameterBound, PackingChromatic,
    SearchConfig, SearchOutcome,
};
pub use transforms::{subdivide, SubdividedGraph, VertexTag};
