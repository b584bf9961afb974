//! Edge subdivision `S_i(G)` with provenance tags.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Origin of a vertex in a subdivided graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexTag {
    /// Vertex `v` of the source graph.
    Original(usize),
    /// Internal vertex of the path replacing source edge `edge` (an index
    /// into the source's canonical edge list). Positions run `1..=i` starting
    /// next to the smaller endpoint.
    Subdiv { edge: usize, position: usize },
}

/// `S_i(G)` together with the tag of every vertex.
///
/// Ids: original vertices keep their ids `0..n`; the `i` internal vertices
/// of edge `e` get ids `n + e*i .. n + (e+1)*i` in path order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdividedGraph {
    pub graph: Graph,
    pub tags: Vec<VertexTag>,
    pub times: usize,
    pub source_order: usize,
    pub source_edges: Vec<(usize, usize)>,
}

impl SubdividedGraph {
    pub fn source_edge_count(&self) -> usize {
        self.source_edges.len()
    }

    /// Id of the internal vertex at `position` (1-based) on source edge
    /// `edge`, counted from the smaller endpoint.
    pub fn subdiv_vertex(&self, edge: usize, position: usize) -> usize {
        debug_assert!(position >= 1 && position <= self.times);
        self.source_order + edge * self.times + position - 1
    }

    /// Internal vertex on edge `{x, y}` at distance `k` from `x`
    /// (`k` in `1..=i`). For `i = 2`, `k = 1` is the vertex `e_xy` adjacent
    /// to `x`.
    pub fn vertex_from(&self, x: usize, y: usize, k: usize) -> Option<usize> {
        let e = self.source_edges.binary_search(&(x.min(y), x.max(y))).ok()?;
        let pos = if x < y { k } else { self.times + 1 - k };
        Some(self.subdiv_vertex(e, pos))
    }

    pub fn is_original(&self, v: usize) -> bool {
        matches!(self.tags[v], VertexTag::Original(_))
    }

    /// The vertices strictly between `x` and `y`, listed from `x`.
    pub fn path_between(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        (1..=self.times).map(|k| self.vertex_from(x, y, k)).collect()
    }
}

/// Replaces every edge of `g` by a path with `i` internal vertices.
pub fn subdivide(g: &Graph, i: usize) -> Result<SubdividedGraph> {
    if i == 0 {
        return Err(Error::InvalidParameter(
            "subdivision count must be at least 1".into(),
        ));
    }
    let n = g.n();
    let m = g.m();
    let total = n + i * m;
    let mut tags: Vec<VertexTag> = (0..n).map(VertexTag::Original).collect();
    let mut edges = Vec::with_capacity(m * (i + 1));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let base = n + e * i;
        let mut prev = u;
        for pos in 1..=i {
            let id = base + pos - 1;
            tags.push(VertexTag::Subdiv {
                edge: e,
                position: pos,
            });
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, v));
    }
    Ok(SubdividedGraph {
        graph: Graph::from_edges(total, edges)?,
        tags,
        times: i,
        source_order: n,
        source_edges: g.edges().to_vec(),
    })
}
