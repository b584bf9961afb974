//! Inputs shared by the benchmarks.

use packcolor::generators::{complete, generalized_petersen};
use packcolor::{subdivide, Graph};

/// The Petersen graph, the standard negative instance for (1,1,2,2).
pub fn petersen() -> Graph {
    generalized_petersen(5, 2).expect("valid").0
}

/// `S_i(K_n)`.
pub fn subdivided_complete(n: usize, i: usize) -> Graph {
    subdivide(&complete(n).expect("valid"), i).expect("valid").graph
}
