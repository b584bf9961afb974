//! Packing colorings of subdivided graphs `S_i(G)`.

use std::collections::VecDeque;

use crate::coloring::{verify_s_coloring, PackingVector, SColoring, Verdict};
use crate::error::{Error, Result};
use crate::generators::complete;
use crate::graph::Graph;
use crate::transforms::{subdivide, SubdividedGraph, VertexTag};

fn finish(g: &Graph, class_of: Vec<usize>) -> Result<SColoring> {
    let k = class_of.iter().copied().max().unwrap_or(1).max(1);
    let c = SColoring::new(PackingVector::packing(k), class_of)?;
    match verify_s_coloring(g, &c)? {
        Verdict::Ok => Ok(c),
        Verdict::Violations(v) => Err(Error::InvalidColoring(v)),
    }
}

fn bipartite_classes(g: &Graph, sg: &SubdividedGraph) -> Result<Vec<usize>> {
    let (a, _) = g.two_coloring().map_err(|_| Error::NotBipartite)?;
    let mut side_a = vec![false; g.n()];
    for v in a {
        side_a[v] = true;
    }
    Ok(sg
        .tags
        .iter()
        .map(|t| match *t {
            VertexTag::Original(v) if side_a[v] => 2,
            VertexTag::Original(_) => 3,
            VertexTag::Subdiv { .. } => 1,
        })
        .collect())
}

/// Packing 3-coloring of `S(g)` for a connected bipartite `g` of order at
/// least 3: subdivision vertices get 1, the two sides of `g` get 2 and 3.
pub fn color_bipartite_subdivision(g: &Graph) -> Result<(SubdividedGraph, SColoring)> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!("order {} < 3", g.n())));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let sg = subdivide(g, 1)?;
    let classes = bipartite_classes(g, &sg)?;
    let c = finish(&sg.graph, classes)?;
    Ok((sg, c))
}

/// Class of the original vertices and the classes of the `i` internal
/// vertices of each path, listed from the smaller endpoint. `variant`
/// selects the pair order for even `i >= 6`.
fn path_pattern(i: usize, variant: usize) -> (usize, Vec<usize>) {
    const BLOCK: [usize; 4] = [3, 1, 2, 1];
    match i % 4 {
        3 => {
            let mut p = vec![1, 2, 1];
            while p.len() < i {
                p.extend(BLOCK);
            }
            (3, p)
        }
        1 => {
            let mut p = vec![1, 3, 1, 2, 1];
            while p.len() < i {
                p.extend(BLOCK);
            }
            (4, p)
        }
        _ => {
            let mut p = vec![1, 2, 3, 1];
            let pairs = if variant == 0 {
                [[2, 1], [3, 1]]
            } else {
                [[3, 1], [2, 1]]
            };
            let mut k = 0;
            while p.len() < i {
                p.extend(pairs[k % 2]);
                k += 1;
            }
            (4, p)
        }
    }
}

fn pattern_classes(sg: &SubdividedGraph, hub: usize, pattern: &[usize]) -> Vec<usize> {
    sg.tags
        .iter()
        .map(|t| match *t {
            VertexTag::Original(_) => hub,
            VertexTag::Subdiv { position, .. } => pattern[position - 1],
        })
        .collect()
}

/// Path-pattern coloring of `S_i(g)` for `i >= 3`; tries the alternative
/// pair order for even `i` if the first is rejected.
fn pattern_coloring(g: &Graph, i: usize) -> Result<(SubdividedGraph, SColoring)> {
    if i < 3 {
        return Err(Error::InvalidParameter(format!(
            "path patterns need i >= 3, got {i} (S_2(K_n) has no bounded pattern)"
        )));
    }
    let sg = subdivide(g, i)?;
    let variants = if i.is_multiple_of(2) && i >= 6 { 2 } else { 1 };
    let mut last = None;
    for variant in 0..variants {
        let (hub, pattern) = path_pattern(i, variant);
        match finish(&sg.graph, pattern_classes(&sg, hub, &pattern)) {
            Ok(c) => return Ok((sg, c)),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one variant"))
}

/// Packing coloring of `S_i(K_n)`: 3 classes when `i ≡ 3 (mod 4)`, else 4.
pub fn color_si_complete(n: usize, i: usize) -> Result<(SubdividedGraph, SColoring)> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("K_{n}: need n >= 3")));
    }
    pattern_coloring(&complete(n)?, i)
}

/// Packing coloring of `S_i(g)` with at most 4 classes (3 when
/// `i ≡ 3 (mod 4)`): the `S_i(K_n)` coloring restricted to `g`.
pub fn color_si_graph(g: &Graph, i: usize) -> Result<(SubdividedGraph, SColoring)> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!("order {} < 3", g.n())));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    pattern_coloring(g, i)
}

fn bfs_depths(g: &Graph, root: usize) -> Vec<u32> {
    let mut depth = vec![u32::MAX; g.n()];
    depth[root] = 0;
    let mut q = VecDeque::from([root]);
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if depth[w] == u32::MAX {
                depth[w] = depth[v] + 1;
                q.push_back(w);
            }
        }
    }
    depth
}

/// `S_2(t)` by depth from a root: 1, 2 for depths `≡ 1, 2 (mod 3)`,
/// 3 and 4 alternating on depths `≡ 0 (mod 3)`.
fn tree_two(sg: &SubdividedGraph) -> Vec<usize> {
    bfs_depths(&sg.graph, 0)
        .into_iter()
        .map(|d| match (d % 3, d % 6) {
            (1, _) => 1,
            (2, _) => 2,
            (_, 0) => 3,
            _ => 4,
        })
        .collect()
}

/// `S_i(t)` for `i ≡ 1 (mod 4)`, `i >= 5`: each tree edge, endpoints
/// included, gets `2,1,3,1,...,2,1,3` (length `i+2`) read from the endpoint
/// nearer the root when that endpoint has even depth, reversed otherwise.
fn tree_one_mod_four(t: &Graph, sg: &SubdividedGraph, i: usize) -> Vec<usize> {
    let mut seq = Vec::with_capacity(i + 2);
    while seq.len() + 3 < i + 2 {
        seq.extend([2, 1, 3, 1]);
    }
    seq.extend([2, 1, 3]);
    debug_assert_eq!(seq.len(), i + 2);
    let depth = bfs_depths(t, 0);
    let mut class_of = vec![0; sg.graph.n()];
    for &(a, b) in t.edges() {
        let (x, y) = if depth[a] < depth[b] { (a, b) } else { (b, a) };
        let colors: Vec<usize> = if depth[x].is_multiple_of(2) {
            seq.clone()
        } else {
            seq.iter().rev().copied().collect()
        };
        let inner = sg.path_between(x, y).expect("tree edge");
        class_of[x] = colors[0];
        class_of[y] = colors[i + 1];
        for (k, v) in inner.into_iter().enumerate() {
            class_of[v] = colors[k + 1];
        }
    }
    class_of
}

/// Packing coloring of `S_i(t)` for a tree `t`: at most 3 classes for odd
/// `i` and at most 4 for even `i`.
pub fn color_si_tree(t: &Graph, i: usize) -> Result<(SubdividedGraph, SColoring)> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if i == 0 {
        return Err(Error::InvalidParameter(
            "subdivision count must be at least 1".into(),
        ));
    }
    if t.n() == 1 {
        let sg = subdivide(t, i)?;
        let c = finish(&sg.graph, vec![1])?;
        return Ok((sg, c));
    }
    if i >= 3 && (i % 4 == 3 || i.is_multiple_of(2)) {
        return pattern_coloring(t, i);
    }
    let sg = subdivide(t, i)?;
    let classes = match i {
        1 => bipartite_classes(t, &sg)?,
        2 => tree_two(&sg),
        _ => tree_one_mod_four(t, &sg, i),
    };
    let c = finish(&sg.graph, classes)?;
    Ok((sg, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, cycle, generalized_petersen, path, random_tree, star};

    #[test]
    fn bipartite_examples() {
        for g in [
            complete_bipartite(3, 3).unwrap(),
            cycle(6).unwrap(),
            path(5).unwrap(),
        ] {
            let (_, c) = color_bipartite_subdivision(&g).unwrap();
            assert_eq!(c.k(), 3);
        }
        assert!(matches!(
            color_bipartite_subdivision(&cycle(5).unwrap()),
            Err(Error::NotBipartite)
        ));
        assert!(color_bipartite_subdivision(&path(2).unwrap()).is_err());
    }

    #[test]
    fn patterns_have_the_right_length() {
        for i in 3..40 {
            for v in 0..2 {
                assert_eq!(path_pattern(i, v).1.len(), i);
            }
        }
        assert_eq!(path_pattern(3, 0), (3, vec![1, 2, 1]));
        assert_eq!(path_pattern(4, 0), (4, vec![1, 2, 3, 1]));
        assert_eq!(path_pattern(5, 0), (4, vec![1, 3, 1, 2, 1]));
        assert_eq!(path_pattern(7, 0).1, vec![1, 2, 1, 3, 1, 2, 1]);
    }

    #[test]
    fn complete_graph_class_counts() {
        for n in 3..=7 {
            for i in 3..=12 {
                let (_, c) = color_si_complete(n, i).unwrap();
                let expected = if i % 4 == 3 { 3 } else { 4 };
                assert_eq!(c.k(), expected, "n={n} i={i}");
            }
        }
        assert!(color_si_complete(4, 2).is_err());
    }

    #[test]
    fn general_graphs() {
        let (pet, _) = generalized_petersen(5, 2).unwrap();
        assert!(color_si_graph(&pet, 3).unwrap().1.k() <= 3);
        assert!(color_si_graph(&cycle(5).unwrap(), 4).unwrap().1.k() <= 4);
        assert!(color_si_graph(&path(2).unwrap(), 4).is_err());
    }

    #[test]
    fn trees() {
        let (_, c) = color_si_tree(&star(4).unwrap(), 2).unwrap();
        assert_eq!(c.k(), 4);
        let (_, c) = color_si_tree(&path(10).unwrap(), 5).unwrap();
        assert_eq!(c.k(), 3);
        for i in 1..=6 {
            let (_, c) = color_si_tree(&path(1).unwrap(), i).unwrap();
            assert_eq!(c.k(), 1);
        }
        for seed in 0..20 {
            let t = random_tree(1 + (seed as usize * 7) % 30, seed).unwrap();
            for i in 1..=10 {
                let (_, c) = color_si_tree(&t, i).unwrap();
                assert!(c.k() <= if i % 2 == 1 { 3 } else { 4 }, "seed {seed} i {i}");
            }
        }
        assert!(matches!(
            color_si_tree(&cycle(4).unwrap(), 3),
            Err(Error::NotATree)
        ));
    }
}
