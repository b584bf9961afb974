//! S-colorings: the data model, the verifier that every other module answers
//! to, and the conversions between (1,1,2,2)-colorings, vertex partitions
//! and 5-packing colorings of the subdivision.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::transforms::{SubdividedGraph, VertexTag};

/// Non-decreasing sequence of packing radii `(s_1, ..., s_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct PackingVector(Vec<u32>);

impl PackingVector {
    pub fn new(s: Vec<u32>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidParameter("packing vector is empty".into()));
        }
        if s.contains(&0) {
            return Err(Error::InvalidParameter("packing radii must be positive".into()));
        }
        if s.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidParameter(format!(
                "packing vector {s:?} is not non-decreasing"
            )));
        }
        Ok(PackingVector(s))
    }

    /// `(1, 2, ..., k)`.
    pub fn packing(k: usize) -> Self {
        assert!(k >= 1);
        PackingVector((1..=k as u32).collect())
    }

    /// `(1, 1, 2, 2)`.
    pub fn one_one_two_two() -> Self {
        PackingVector(vec![1, 1, 2, 2])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Radius of class `class` (1-based).
    pub fn radius(&self, class: usize) -> u32 {
        self.0[class - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for PackingVector {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        PackingVector::new(v)
    }
}

impl From<PackingVector> for Vec<u32> {
    fn from(p: PackingVector) -> Vec<u32> {
        p.0
    }
}

impl std::fmt::Display for PackingVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Assignment of every vertex to a class `1..=k` of a packing vector.
/// Classes may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SColoring {
    packing: PackingVector,
    class_of: Vec<usize>,
}

impl SColoring {
    pub fn new(packing: PackingVector, class_of: Vec<usize>) -> Result<Self> {
        let k = packing.k();
        if let Some(&class) = class_of.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::ClassOutOfRange { class, k });
        }
        Ok(SColoring { packing, class_of })
    }

    /// Builds a coloring from explicit classes (`classes[i]` is class `i+1`).
    pub fn from_classes(packing: PackingVector, n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        if classes.len() > packing.k() {
            return Err(Error::ClassOutOfRange {
                class: classes.len(),
                k: packing.k(),
            });
        }
        let mut class_of = vec![0; n];
        let mut covered = 0;
        for (i, members) in classes.iter().enumerate() {
            for &v in members {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if class_of[v] != 0 {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {v} appears in two classes"
                    )));
                }
                class_of[v] = i + 1;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::CoverageMismatch {
                expected: n,
                got: covered,
            });
        }
        Ok(SColoring { packing, class_of })
    }

    pub fn packing(&self) -> &PackingVector {
        &self.packing
    }

    pub fn k(&self) -> usize {
        self.packing.k()
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    /// Class (1-based) of `v`.
    pub fn class(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.class_of
    }

    /// Members of every class; `classes()[i]` is class `i+1`, ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k()];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c - 1].push(v);
        }
        out
    }

    pub fn nonempty_class_count(&self) -> usize {
        self.classes().iter().filter(|c| !c.is_empty()).count()
    }

    /// Largest class index in use.
    pub fn max_class(&self) -> usize {
        self.class_of.iter().copied().max().unwrap_or(0)
    }

    /// Same classes viewed under another packing vector of at least the
    /// same length.
    pub fn with_packing(&self, packing: PackingVector) -> Result<Self> {
        SColoring::new(packing, self.class_of.clone())
    }
}

/// A pair `u < v` in class `class` closer than the class radius allows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub class: usize,
    pub u: usize,
    pub v: usize,
    pub distance: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Ok,
    Violations(Vec<Violation>),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Ok => &[],
            Verdict::Violations(v) => v,
        }
    }
}

/// Checks that class `i` is an `s_i`-packing for every `i`, reporting every
/// offending pair.
pub fn verify_s_coloring(g: &Graph, c: &SColoring) -> Result<Verdict> {
    if c.n() != g.n() {
        return Err(Error::CoverageMismatch {
            expected: g.n(),
            got: c.n(),
        });
    }
    Ok(verify_with_distances(&g.all_pairs_distances(), c))
}

/// Verifier over a precomputed distance matrix (same vertex count assumed).
pub fn verify_with_distances(dm: &DistanceMatrix, c: &SColoring) -> Verdict {
    let classes = c.classes();
    let mut violations: Vec<Violation> = classes
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, members)| {
            let class = i + 1;
            let radius = c.packing().radius(class);
            let mut found = Vec::new();
            for (a, &u) in members.iter().enumerate() {
                for &v in &members[a + 1..] {
                    let d = dm.get(u, v);
                    if d <= radius {
                        found.push(Violation {
                            class,
                            u,
                            v,
                            distance: d,
                        });
                    }
                }
            }
            found
        })
        .collect();
    if violations.is_empty() {
        Verdict::Ok
    } else {
        violations.sort_by_key(|x| (x.class, x.u, x.v));
        Verdict::Violations(violations)
    }
}

/// `{V1, V2, V3}` with `V2`, `V3` independent and `G²[V1]` bipartite
/// characterizes (1,1,2,2)-colorability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriPartition {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub v3: Vec<usize>,
}

impl TriPartition {
    pub fn new(n: usize, mut v1: Vec<usize>, mut v2: Vec<usize>, mut v3: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; n];
        for &v in v1.iter().chain(&v2).chain(&v3) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} appears in two parts"
                )));
            }
        }
        let covered = v1.len() + v2.len() + v3.len();
        if covered != n {
            return Err(Error::CoverageMismatch {
                expected: n,
                got: covered,
            });
        }
        v1.sort_unstable();
        v2.sort_unstable();
        v3.sort_unstable();
        Ok(TriPartition { v1, v2, v3 })
    }

    pub fn n(&self) -> usize {
        self.v1.len() + self.v2.len() + self.v3.len()
    }
}

fn first_dependent_pair(g: &Graph, part: &[usize]) -> Option<(usize, usize)> {
    let mut inside = vec![false; g.n()];
    for &v in part {
        inside[v] = true;
    }
    g.edges().iter().copied().find(|&(u, v)| inside[u] && inside[v])
}

/// Whether `V2`, `V3` are independent and `G²[V1]` is bipartite.
pub fn partition_predicate_holds(g: &Graph, p: &TriPartition) -> bool {
    partition_to_1122(g, p).is_ok()
}

/// Colors `V2` with 1, `V3` with 2 and the two sides of `G²[V1]` with 3 and 4
/// (the side holding the smallest id of `V1` gets 3).
pub fn partition_to_1122(g: &Graph, p: &TriPartition) -> Result<SColoring> {
    if p.n() != g.n() {
        return Err(Error::CoverageMismatch {
            expected: g.n(),
            got: p.n(),
        });
    }
    for part in [&p.v2, &p.v3] {
        if let Some((u, v)) = first_dependent_pair(g, part) {
            return Err(Error::DependentPair(u, v));
        }
    }
    let square = g.power_graph(2)?;
    let (sub, ids) = square.induced_subgraph(&p.v1)?;
    let (a, b) = sub
        .two_coloring()
        .map_err(|cycle| Error::OddCycle(cycle.into_iter().map(|i| ids[i]).collect()))?;
    let to_ids = |side: Vec<usize>| side.into_iter().map(|i| ids[i]).collect::<Vec<_>>();
    let classes = [p.v2.clone(), p.v3.clone(), to_ids(a), to_ids(b)];
    SColoring::from_classes(PackingVector::one_one_two_two(), g.n(), &classes)
}

fn require_accepted(g: &Graph, c: &SColoring) -> Result<()> {
    match verify_s_coloring(g, c)? {
        Verdict::Ok => Ok(()),
        Verdict::Violations(v) => Err(Error::InvalidColoring(v)),
    }
}

fn require_1122(c: &SColoring) -> Result<()> {
    if c.packing() != &PackingVector::one_one_two_two() {
        return Err(Error::InvalidParameter(format!(
            "expected a (1,1,2,2)-coloring, got packing vector {}",
            c.packing()
        )));
    }
    Ok(())
}

/// `V1` = classes 3 and 4, `V2` = class 2, `V3` = class 1.
pub fn coloring_to_partition(g: &Graph, c: &SColoring) -> Result<TriPartition> {
    require_1122(c)?;
    require_accepted(g, c)?;
    let mut classes = c.classes();
    let mut v1 = std::mem::take(&mut classes[2]);
    v1.append(&mut classes[3]);
    TriPartition::new(
        g.n(),
        v1,
        std::mem::take(&mut classes[1]),
        std::mem::take(&mut classes[0]),
    )
}

/// Lifts a (1,1,2,2)-coloring of `g` to a (1,2,3,4,5)-coloring of `S(g)`:
/// subdivision vertices get class 1 and original class `j` becomes `j+1`.
pub fn lift_to_subdivision(g: &Graph, c: &SColoring, sg: &SubdividedGraph) -> Result<SColoring> {
    require_1122(c)?;
    if sg.times != 1 || sg.source_order != g.n() || sg.source_edges != g.edges() {
        return Err(Error::InvalidParameter(
            "subdivided graph is not S(g) for the given graph".into(),
        ));
    }
    require_accepted(g, c)?;
    let class_of = sg
        .tags
        .iter()
        .map(|tag| match *tag {
            VertexTag::Original(v) => c.class(v) + 1,
            VertexTag::Subdiv { .. } => 1,
        })
        .collect();
    let lifted = SColoring::new(PackingVector::packing(5), class_of)?;
    require_accepted(&sg.graph, &lifted)
        .map_err(|e| Error::ConstructionFailed(format!("lifted coloring rejected by verifier: {e}")))?;
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, generalized_prism, PrismSpec};
    use crate::transforms::subdivide;

    fn pv(s: &[u32]) -> PackingVector {
        PackingVector::new(s.to_vec()).unwrap()
    }

    #[test]
    fn packing_vector_validation() {
        assert!(PackingVector::new(vec![]).is_err());
        assert!(PackingVector::new(vec![0, 1]).is_err());
        assert!(PackingVector::new(vec![2, 1]).is_err());
        assert_eq!(PackingVector::packing(3).as_slice(), &[1, 2, 3]);
        assert_eq!(pv(&[1, 1, 2, 2]).to_string(), "(1,1,2,2)");
    }

    #[test]
    fn adjacent_pair_in_class_one_is_reported() {
        let k2 = complete(2).unwrap();
        let c = SColoring::new(pv(&[1]), vec![1, 1]).unwrap();
        let verdict = verify_s_coloring(&k2, &c).unwrap();
        assert_eq!(
            verdict.violations(),
            &[Violation {
                class: 1,
                u: 0,
                v: 1,
                distance: 1
            }]
        );
    }

    #[test]
    fn every_violation_is_listed() {
        let k4 = complete(4).unwrap();
        let c = SColoring::new(pv(&[1, 2]), vec![1, 1, 2, 2]).unwrap();
        let verdict = verify_s_coloring(&k4, &c).unwrap();
        assert_eq!(verdict.violations().len(), 2);
    }

    #[test]
    fn coverage_mismatch() {
        let c = SColoring::new(pv(&[1]), vec![1, 1]).unwrap();
        assert!(matches!(
            verify_s_coloring(&cycle(3).unwrap(), &c),
            Err(Error::CoverageMismatch { expected: 3, got: 2 })
        ));
        assert!(SColoring::new(pv(&[1]), vec![1, 2]).is_err());
    }

    #[test]
    fn partition_of_bipartite_cycle() {
        let c6 = cycle(6).unwrap();
        let p = TriPartition::new(6, vec![], vec![0, 2, 4], vec![1, 3, 5]).unwrap();
        let c = partition_to_1122(&c6, &p).unwrap();
        assert!(verify_s_coloring(&c6, &c).unwrap().is_ok());
        assert_eq!(c.nonempty_class_count(), 2);
    }

    #[test]
    fn partition_of_k4_singletons() {
        let k4 = complete(4).unwrap();
        let p = TriPartition::new(4, vec![2, 3], vec![0], vec![1]).unwrap();
        let c = partition_to_1122(&k4, &p).unwrap();
        assert_eq!(c.classes(), vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn odd_cycle_in_square_is_reported() {
        let c5 = cycle(5).unwrap();
        let p = TriPartition::new(5, vec![0, 1, 2], vec![3], vec![4]).unwrap();
        match partition_to_1122(&c5, &p) {
            Err(Error::OddCycle(cyc)) => {
                assert_eq!(cyc.len() % 2, 1);
                assert!(cyc.iter().all(|v| [0, 1, 2].contains(v)));
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
        let p = TriPartition::new(5, vec![], vec![0, 1], vec![2, 3, 4]).unwrap();
        assert_eq!(partition_to_1122(&c5, &p), Err(Error::DependentPair(0, 1)));
    }

    #[test]
    fn round_trip_keeps_v1() {
        let g = generalized_prism(&PrismSpec::identity(4).unwrap()).unwrap();
        let p = TriPartition::new(8, vec![0, 6], vec![2, 5, 7], vec![1, 3, 4]).unwrap();
        let c = partition_to_1122(&g, &p).unwrap();
        let back = coloring_to_partition(&g, &c).unwrap();
        assert_eq!(back.v1, p.v1);
        assert!(partition_predicate_holds(&g, &back));
    }

    #[test]
    fn empty_upper_classes_give_empty_v1() {
        let c6 = cycle(6).unwrap();
        let c = SColoring::new(PackingVector::one_one_two_two(), vec![1, 2, 1, 2, 1, 2]).unwrap();
        let p = coloring_to_partition(&c6, &c).unwrap();
        assert!(p.v1.is_empty());
        assert_eq!(p.v3, vec![0, 2, 4]);
    }

    #[test]
    fn lift_of_triangle() {
        let k3 = complete(3).unwrap();
        let c = SColoring::new(PackingVector::one_one_two_two(), vec![1, 2, 3]).unwrap();
        let sg = subdivide(&k3, 1).unwrap();
        let lifted = lift_to_subdivision(&k3, &c, &sg).unwrap();
        // walk the hexagon 0 - e(0,1) - 1 - e(1,2) - 2 - e(0,2)
        let walk = [0, 3, 1, 5, 2, 4];
        let seq: Vec<usize> = walk.iter().map(|&v| lifted.class(v)).collect();
        assert_eq!(seq, vec![2, 1, 3, 1, 4, 1]);
    }

    #[test]
    fn lift_rejects_invalid_input() {
        let k3 = complete(3).unwrap();
        let c = SColoring::new(PackingVector::one_one_two_two(), vec![1, 1, 3]).unwrap();
        let sg = subdivide(&k3, 1).unwrap();
        assert!(matches!(
            lift_to_subdivision(&k3, &c, &sg),
            Err(Error::InvalidColoring(_))
        ));
        let sg2 = subdivide(&k3, 2).unwrap();
        let ok = SColoring::new(PackingVector::one_one_two_two(), vec![1, 2, 3]).unwrap();
        assert!(lift_to_subdivision(&k3, &ok, &sg2).is_err());
    }
}
