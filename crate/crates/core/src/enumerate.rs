//! Exhaustive small-graph tools: isomorphism classes of small graphs, and brute-force S-colorability by enumerating every class
//! assignment. Both serve as independent oracles for the solver.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::coloring::PackingVector;
use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};

/// Largest order handled by [`canonical_code`] (the code packs the upper
/// triangle of the adjacency matrix into a `u64`).
pub const MAX_CANONICAL_ORDER: usize = 11;

struct Bits {
    n: usize,
    adj: Vec<u16>,
}

impl Bits {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | (1 << w)))
            .collect();
        Bits { n: g.n(), adj }
    }

    /// Splits cells by neighbor counts into every cell until stable. Cells
    /// are ordered by an isomorphism-invariant key, so equivalent inputs
    /// refine alike.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<u16> = cells
                .iter()
                .map(|c| c.iter().fold(0u16, |m, &v| m | (1 << v)))
                .collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let sig = masks.iter().map(|&m| (self.adj[v] & m).count_ones()).collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        next.push(keyed[start..k].iter().map(|x| x.1).collect());
                        start = k;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn code_of(&self, order: &[usize]) -> u64 {
        let mut code = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code <<= 1;
                if self.adj[order[i]] & (1 << order[j]) != 0 {
                    code |= 1;
                }
            }
        }
        code
    }

    fn search(&self, cells: Vec<Vec<usize>>, best: &mut u64) {
        let Some(split) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            *best = (*best).max(self.code_of(&order));
            return;
        };
        for &v in &cells[split] {
            let mut next = cells[..split].to_vec();
            next.push(vec![v]);
            next.push(cells[split].iter().copied().filter(|&w| w != v).collect());
            next.extend(cells[split + 1..].iter().cloned());
            self.search(self.refine(next), best);
        }
    }
}

/// Isomorphism invariant that is equal exactly for isomorphic graphs of the
/// same order: the largest adjacency code over all labelings reachable by
/// individualization and refinement.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    if g.n() > MAX_CANONICAL_ORDER {
        return Err(Error::InvalidParameter(format!(
            "canonical codes support at most {MAX_CANONICAL_ORDER} vertices"
        )));
    }
    if g.n() <= 1 {
        return Ok(0);
    }
    let bits = Bits::new(g);
    let start = bits.refine(vec![(0..g.n()).collect()]);
    let mut best = 0;
    bits.search(start, &mut best);
    Ok(best)
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = n * n.saturating_sub(1) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid code")
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, relabeled canonically and sorted by canonical code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 9 {
        return Err(Error::InvalidParameter(format!(
            "enumerating all graphs on {n} vertices is out of scope (max 9)"
        )));
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for k in 1..=n {
        let candidates: Vec<(u64, Graph)> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << (k - 1)).map(move |mask| {
                    let edges = g
                        .edges()
                        .iter()
                        .copied()
                        .chain((0..k - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k - 1)));
                    Graph::from_edges(k, edges).expect("valid extension")
                })
            })
            .map(|h| (canonical_code(&h).expect("small"), h))
            .collect();
        let mut codes: Vec<u64> = candidates
            .into_iter()
            .map(|(code, _)| code)
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        codes.sort_unstable();
        level = codes.into_iter().map(|c| from_code(k, c)).collect();
    }
    Ok(level)
}

/// Connected members of [`all_graphs`].
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(|g| g.is_connected()).collect())
}

/// Lexicographically first S-coloring (as a 1-based class vector) found by
/// walking through all `k^n` assignments, or `None` if there is none.
pub fn first_coloring_by_enumeration(g: &Graph, s: &PackingVector) -> Option<Vec<usize>> {
    let n = g.n();
    let k = s.k();
    if n == 0 {
        return Some(Vec::new());
    }
    let dm = g.all_pairs_distances();
    let conflict = |a: &[usize], u: usize, v: usize| {
        let d = dm.get(u, v);
        a[u] == a[v] && d != UNREACHABLE && d <= s.radius(a[u])
    };
    let mut a = vec![1usize; n];
    loop {
        if (0..n).all(|u| (u + 1..n).all(|v| !conflict(&a, u, v))) {
            return Some(a);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if a[i] < k {
                a[i] += 1;
                break;
            }
            a[i] = 1;
        }
    }
}
