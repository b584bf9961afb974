//! Simple undirected graphs over dense vertex ids and the distance queries
//! the rest of the crate is built on.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Distance sentinel for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// An immutable simple graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted, and neighbor lists
/// are sorted ascending so that every iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges (in either orientation) collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    /// `histogram[d]` is the number of vertices of degree `d`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.max_degree() + 1];
        for a in &self.adj {
            hist[a.len()] += 1;
        }
        hist
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Hop distances from `src`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let mut dist = Vec::with_capacity(self.n * self.n);
        for v in 0..self.n {
            dist.extend(self.bfs(v));
        }
        DistanceMatrix { n: self.n, dist }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// `G^d`: `u ~ v` iff `0 < dist(u, v) <= d`.
    pub fn power_graph(&self, d: u32) -> Result<Graph> {
        if d == 0 {
            return Err(Error::InvalidParameter("power must be at least 1".into()));
        }
        let dm = self.all_pairs_distances();
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if dm.get(u, v) <= d {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, edges)
    }

    /// Whether every two distinct members of `w` are more than `i` apart.
    pub fn is_i_packing(&self, w: &[usize], i: u32) -> Result<bool> {
        for &v in w {
            self.check_vertex(v)?;
        }
        if i == 0 {
            return Err(Error::InvalidParameter(
                "packing radius must be at least 1".into(),
            ));
        }
        for (a, &u) in w.iter().enumerate() {
            let dist = self.bfs(u);
            if w[a + 1..].iter().any(|&v| v != u && dist[v] <= i) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Two-colors every component with its smallest vertex on side A, or
    /// returns an odd cycle (as a closed vertex sequence, first vertex not
    /// repeated).
    pub fn two_coloring(&self) -> std::result::Result<(Vec<usize>, Vec<usize>), Vec<usize>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return Err(odd_cycle_from(&parent, u, w)),
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (v, &s) in side.iter().enumerate() {
            if s == Some(false) {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        Ok((a, b))
    }

    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        self.two_coloring().ok()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![UNREACHABLE; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = (dist[u] + dist[w] + 1) as usize;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Petersen graph test via the (3,5)-cage characterization: the unique
    /// cubic graph of order 10 and girth 5.
    pub fn is_petersen(&self) -> bool {
        self.n == 10 && self.is_regular(3) && self.girth() == Some(5)
    }

    /// Subgraph induced by `vertices` (relabelled `0..len` in the given
    /// order), plus the map from new ids to old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        Ok((Graph::from_edges(vertices.len(), edges)?, vertices.to_vec()))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("relabeling length mismatch".into()));
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

fn odd_cycle_from(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // strip the shared tail above the lowest common ancestor
    let (mut i, mut j) = (pu.len(), pw.len());
    while i > 1 && j > 1 && pu[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pu[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}

/// Dense all-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance, or [`UNREACHABLE`].
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance is not enough: `None` when some pair is
    /// unreachable (or the graph is empty).
    pub fn diameter(&self) -> Option<u32> {
        if self.n == 0 || self.dist.contains(&UNREACHABLE) {
            return None;
        }
        self.dist.iter().copied().max()
    }

    pub fn max_finite(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    /// Vertices at distance `1..=r` from `v`, ascending.
    pub fn ball(&self, v: usize, r: u32) -> Vec<usize> {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(u, &d)| u != v && d <= r)
            .map(|(u, _)| u)
            .collect()
    }
}
