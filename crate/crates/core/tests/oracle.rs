//! Exhaustive cross-checks of the solver against plain enumeration.

use packcolor::battery::oracle_disagreements;
use packcolor::enumerate::{all_graphs, connected_graphs};
use packcolor::PackingVector;
use rayon::prelude::*;

/// Every nondecreasing vector over {1, 2} with 1 to 4 entries.
fn vectors() -> Vec<PackingVector> {
    let mut out = Vec::new();
    for k in 1..=4u32 {
        for twos in 0..=k {
            let s = (0..k).map(|i| if i < k - twos { 1 } else { 2 }).collect();
            out.push(PackingVector::new(s).unwrap());
        }
    }
    out
}

#[test]
fn eight_vertex_counts() {
    let all = all_graphs(8).unwrap();
    assert_eq!(all.len(), 12346);
    assert_eq!(all.iter().filter(|g| g.is_connected()).count(), 11117);
}

#[test]
fn solver_matches_enumeration_on_small_connected_graphs() {
    let vs = vectors();
    assert_eq!(vs.len(), 14);
    for n in 1..=8 {
        let bad: Vec<String> = connected_graphs(n)
            .unwrap()
            .par_iter()
            .flat_map_iter(|g| {
                vs.iter()
                    .flat_map(|s| oracle_disagreements(g, s).unwrap())
                    .map(|d| format!("{:?}: {d}", g.edges()))
                    .collect::<Vec<_>>()
            })
            .collect();
        assert!(bad.is_empty(), "n={n}: {:?}", &bad[..bad.len().min(5)]);
    }
}
