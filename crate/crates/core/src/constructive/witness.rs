//! A stored 5-packing coloring of the subdivided Petersen graph.

use crate::coloring::{verify_s_coloring, PackingVector, SColoring, Verdict};
use crate::error::{Error, Result};
use crate::generators::generalized_petersen;
use crate::transforms::{subdivide, SubdividedGraph};

/// Classes by vertex id of `S(P(5,2))` as produced by
/// [`subdivide`]`(&generalized_petersen(5, 2).0, 1)`: ids `0..10` are the
/// Petersen vertices, `10..25` the subdivision vertices in edge order.
pub const PETERSEN_SUBDIVISION_CLASSES: [usize; 25] = [
    2, 4, 1, 1, 3, 1, 1, 1, 1, 2, //
    1, 1, 5, 2, 3, 5, 3, 2, 4, 1, 2, 3, 2, 5, 4,
];

/// `S(P)` with a 5-packing coloring in which some subdivision vertices are
/// not in class 1 (no coloring of `S(P)` with 5 classes can avoid that).
pub fn petersen_subdivision_witness() -> Result<(SubdividedGraph, SColoring)> {
    let (pet, _) = generalized_petersen(5, 2)?;
    let sg = subdivide(&pet, 1)?;
    let c = SColoring::new(PackingVector::packing(5), PETERSEN_SUBDIVISION_CLASSES.to_vec())?;
    match verify_s_coloring(&sg.graph, &c)? {
        Verdict::Ok => Ok((sg, c)),
        Verdict::Violations(v) => Err(Error::InvalidColoring(v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// The drawing's 25 nodes (1-based), its 30 edges and its labels.
    #[rustfmt::skip]
    const DRAWING_EDGES: [(usize, usize); 30] = [
        (1, 2), (2, 3), (1, 14), (14, 4), (3, 15), (15, 5), (4, 12), (12, 6), (5, 13), (13, 6),
        (6, 18), (18, 7), (4, 19), (19, 8), (5, 20), (20, 9), (1, 16), (16, 10), (3, 17), (17, 11),
        (7, 23), (23, 10), (10, 21), (21, 9), (11, 22), (22, 8), (8, 25), (9, 25), (7, 24), (11, 24),
    ];
    const DRAWING_LABELS: [usize; 25] = [
        2, 1, 4, 3, 1, 1, 1, 2, 1, 1, 1, 2, 5, 1, 2, 5, 3, 4, 1, 3, 2, 5, 3, 2, 4,
    ];
    /// Drawing node of each Petersen vertex: outer u_1..u_5, inner v_1..v_5.
    const DRAWING_OF_PETERSEN: [usize; 10] = [1, 3, 5, 6, 4, 10, 11, 9, 7, 8];

    #[test]
    fn drawing_matches_stored_classes() {
        let fig = Graph::from_edges(25, DRAWING_EDGES.iter().map(|&(a, b)| (a - 1, b - 1))).unwrap();
        let (sg, c) = petersen_subdivision_witness().unwrap();
        // drawing node -> S(P) id
        let mut to_id = vec![usize::MAX; 25];
        for (p, &f) in DRAWING_OF_PETERSEN.iter().enumerate() {
            to_id[f - 1] = p;
        }
        for f in 0..25 {
            if to_id[f] != usize::MAX {
                continue;
            }
            // a subdivision node: its two drawing neighbors are originals
            let nb = fig.neighbors(f);
            assert_eq!(nb.len(), 2, "node {}", f + 1);
            let (a, b) = (to_id[nb[0]], to_id[nb[1]]);
            to_id[f] = sg.vertex_from(a, b, 1).expect("Petersen edge");
        }
        let mut seen = to_id.clone();
        seen.sort_unstable();
        assert_eq!(seen, (0..25).collect::<Vec<_>>());
        for &(a, b) in &DRAWING_EDGES {
            assert!(sg.graph.has_edge(to_id[a - 1], to_id[b - 1]));
        }
        for f in 0..25 {
            assert_eq!(c.class(to_id[f]), DRAWING_LABELS[f], "drawing node {}", f + 1);
        }
    }

    #[test]
    fn some_subdivision_vertex_is_not_class_one() {
        let (sg, c) = petersen_subdivision_witness().unwrap();
        assert!((0..25).any(|v| !sg.is_original(v) && c.class(v) > 1));
    }
}
