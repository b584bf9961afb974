//! Labeled graph families used throughout the crate.
//!
//! Cycle indices in the constructions are 1-based (`x_1 .. x_n`); they are
//! turned into dense 0-based ids only through [`one_based`].

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Maps a 1-based cycle index to a dense 0-based id.
#[inline]
pub const fn one_based(i: usize) -> usize {
    i - 1
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("both parts must be nonempty".into()));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `K_{n,n,n}` with parts `{0..n}`, `{n..2n}`, `{2n..3n}`.
pub fn complete_tripartite(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("parts must be nonempty".into()));
    }
    let part = |v: usize| v / n;
    let mut edges = Vec::new();
    for u in 0..3 * n {
        for v in u + 1..3 * n {
            if part(u) != part(v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(3 * n, edges)
}

/// `K_{1,n}`: center `0`, leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("star needs at least one leaf".into()));
    }
    Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))
}

/// Two `n`-cycles `x_1..x_n`, `y_1..y_n` joined by the matching
/// `x_i -- y_{sigma(i)}`. `sigma` holds 1-based values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrismSpec {
    pub n: usize,
    pub sigma: Vec<usize>,
}

impl PrismSpec {
    pub fn new(n: usize, sigma: Vec<usize>) -> Result<Self> {
        let spec = PrismSpec { n, sigma };
        spec.validate()?;
        Ok(spec)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, (1..=n).collect())
    }

    /// Uniformly random `sigma` from a seeded shuffle.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        let mut sigma: Vec<usize> = (1..=n).collect();
        sigma.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self::new(n, sigma)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidParameter(format!(
                "prism cycles need n >= 3, got {}",
                self.n
            )));
        }
        if !is_permutation(&self.sigma, self.n) {
            return Err(Error::InvalidPermutation {
                n: self.n,
                values: self.sigma.clone(),
            });
        }
        Ok(())
    }

    /// Id of `x_i`.
    pub fn x(&self, i: usize) -> usize {
        one_based(i)
    }

    /// Id of `y_j`.
    pub fn y(&self, j: usize) -> usize {
        self.n + one_based(j)
    }
}

fn is_permutation(values: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n + 1];
    values.len() == n
        && values.iter().all(|&v| {
            let fresh = (1..=n).contains(&v) && !seen[v];
            if fresh {
                seen[v] = true;
            }
            fresh
        })
}

/// Generalized prism: x-cycle on ids `0..n`, y-cycle on `n..2n`.
pub fn generalized_prism(spec: &PrismSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..=n {
        let next = i % n + 1;
        edges.push((spec.x(i), spec.x(next)));
        edges.push((spec.y(i), spec.y(next)));
        edges.push((spec.x(i), spec.y(spec.sigma[i - 1])));
    }
    Graph::from_edges(2 * n, edges)
}

/// `P(n, k)` with `u_i` at id `i-1` and `v_i` at id `n+i-1`, plus the inner
/// cycles as id lists `v_j, v_{j+k}, v_{j+2k}, ...` for `j = 1..gcd(n, k)`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<(Graph, Vec<Vec<usize>>)> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidParameter(format!(
            "generalized Petersen graph needs 1 <= k < n/2, got n={n}, k={k}"
        )));
    }
    let u = |i: usize| one_based(i);
    let v = |i: usize| n + one_based(i);
    let succ = |i: usize, step: usize| (i - 1 + step) % n + 1;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..=n {
        edges.push((u(i), u(succ(i, 1))));
        edges.push((u(i), v(i)));
        edges.push((v(i), v(succ(i, k))));
    }
    let g = Graph::from_edges(2 * n, edges)?;
    let cycles_count = gcd(n, k);
    let r = n / cycles_count;
    let inner = (1..=cycles_count)
        .map(|j| {
            let mut c = Vec::with_capacity(r);
            let mut i = j;
            for _ in 0..r {
                c.push(v(i));
                i = succ(i, k);
            }
            c
        })
        .collect();
    Ok((g, inner))
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A cubic graph given by its 2-factor: the distinguished cycle
/// `C = x_1..x_n` (ids `0..n`), the remaining cycles `Z_1, Z_2, ...` laid out
/// consecutively from id `n`, and the perfect matching between `C` and the
/// `Z` vertices. `matching[i-1]` is the global Z index (0-based, so the id is
/// `n + matching[i-1]`) matched to `x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoFactorSpec {
    pub n: usize,
    pub z_lengths: Vec<usize>,
    pub matching: Vec<usize>,
}

impl TwoFactorSpec {
    pub fn new(n: usize, z_lengths: Vec<usize>, matching: Vec<usize>) -> Result<Self> {
        let spec = TwoFactorSpec {
            n,
            z_lengths,
            matching,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::MalformedSpec(format!("cycle length {} < 3", self.n)));
        }
        if self.z_lengths.is_empty() || self.z_lengths.iter().any(|&l| l < 3) {
            return Err(Error::MalformedSpec(
                "every Z cycle must have length at least 3".into(),
            ));
        }
        if self.z_lengths.iter().sum::<usize>() != self.n {
            return Err(Error::MalformedSpec(format!(
                "Z cycle lengths {:?} do not sum to {}",
                self.z_lengths, self.n
            )));
        }
        if self.matching.len() != self.n {
            return Err(Error::MalformedSpec(format!(
                "matching has {} entries, expected {}",
                self.matching.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &t in &self.matching {
            if t >= self.n {
                return Err(Error::MalformedSpec(format!("matching target {t} out of range")));
            }
            if std::mem::replace(&mut seen[t], true) {
                return Err(Error::MalformedSpec(format!("matching target {t} repeated")));
            }
        }
        Ok(())
    }

    /// Uniformly random matching for the given Z cycle lengths; `n` is their
    /// sum.
    pub fn random(z_lengths: Vec<usize>, seed: u64) -> Result<Self> {
        let n = z_lengths.iter().sum();
        let mut matching: Vec<usize> = (0..n).collect();
        matching.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self::new(n, z_lengths, matching)
    }

    /// Vertex ids of every Z cycle, in cycle order.
    pub fn z_cycles(&self) -> Vec<Vec<usize>> {
        let mut start = self.n;
        self.z_lengths
            .iter()
            .map(|&len| {
                let c: Vec<usize> = (start..start + len).collect();
                start += len;
                c
            })
            .collect()
    }

    /// Id of the Z vertex matched to `x_i`.
    pub fn partner(&self, i: usize) -> usize {
        self.n + self.matching[one_based(i)]
    }

    /// The equivalent prism spec when there is a single Z cycle.
    pub fn as_prism(&self) -> Option<PrismSpec> {
        (self.z_lengths.len() == 1).then(|| PrismSpec {
            n: self.n,
            sigma: self.matching.iter().map(|&t| t + 1).collect(),
        })
    }
}

pub fn two_factor_graph(spec: &TwoFactorSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + spec.matching[i]));
    }
    for cyc in spec.z_cycles() {
        for (a, &v) in cyc.iter().enumerate() {
            edges.push((v, cyc[(a + 1) % cyc.len()]));
        }
    }
    let g = Graph::from_edges(2 * n, edges)?;
    debug_assert!(g.is_regular(3));
    Ok(g)
}

/// Uniform random labeled tree on `n` vertices from a seeded Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("tree needs at least one vertex".into()));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, prufer_decode(&code, n))
}

/// Edges of the tree with Prüfer code `code` on `n = code.len() + 2`
/// vertices.
pub fn prufer_decode(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("Prüfer code always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Connected random bipartite graph with parts `0..a` and `a..a+b`: a random
/// spanning tree respecting the parts plus `extra` random cross edges.
pub fn random_connected_bipartite(a: usize, b: usize, extra: usize, seed: u64) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("both parts must be nonempty".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = a + b;
    let mut order: Vec<usize> = (0..n).collect();
    // first vertex from A, second from B guarantees both sides are reachable
    order.swap(1, a);
    for i in (2..n).rev() {
        let j = rng.gen_range(2..=i);
        order.swap(i, j);
    }
    let side = |v: usize| v < a;
    let mut edges = vec![(order[0], order[1])];
    for idx in 2..n {
        let v = order[idx];
        let candidates: Vec<usize> = order[..idx]
            .iter()
            .copied()
            .filter(|&u| side(u) != side(v))
            .collect();
        let u = candidates[rng.gen_range(0..candidates.len())];
        edges.push((u, v));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..a);
        let v = a + rng.gen_range(0..b);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_specs_are_valid_and_repeatable() {
        for seed in 0..20 {
            let p = PrismSpec::random(9, seed).unwrap();
            assert_eq!(p, PrismSpec::random(9, seed).unwrap());
            assert!(generalized_prism(&p).unwrap().is_regular(3));
            let t = TwoFactorSpec::random(vec![3, 4, 5], seed).unwrap();
            assert_eq!(t.n, 12);
            assert!(two_factor_graph(&t).unwrap().is_regular(3));
        }
        assert!(TwoFactorSpec::random(vec![2, 3], 0).is_err());
    }

    #[test]
    fn basic_families() {
        let c4 = cycle(4).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        assert_eq!(complete(4).unwrap().m(), 6);
        let t = complete_tripartite(2).unwrap();
        assert_eq!((t.n(), t.m()), (6, 12));
        assert!(!t.has_edge(0, 1) && t.has_edge(1, 2));
        assert_eq!(star(3).unwrap().degree(0), 3);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn prisms_are_cubic() {
        let g = generalized_prism(&PrismSpec::identity(5).unwrap()).unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.is_regular(3));
        assert!(!g.is_petersen());
        let pet = generalized_prism(&PrismSpec::new(5, vec![1, 3, 5, 2, 4]).unwrap()).unwrap();
        assert!(pet.is_petersen());
        assert!(PrismSpec::new(4, vec![1, 1, 2, 3]).is_err());
        assert!(PrismSpec::new(4, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn petersen_family() {
        let (g, inner) = generalized_petersen(5, 2).unwrap();
        assert!(g.is_petersen());
        assert_eq!(g.m(), 15);
        assert_eq!(inner.len(), 1);

        let (_, inner) = generalized_petersen(6, 2).unwrap();
        assert_eq!(inner.len(), 2);
        assert!(inner.iter().all(|c| c.len() == 3));

        let (_, inner) = generalized_petersen(7, 3).unwrap();
        assert_eq!(inner, vec![vec![7, 10, 13, 9, 12, 8, 11]]);

        assert!(generalized_petersen(6, 3).is_err());
        assert!(generalized_petersen(6, 0).is_err());
    }

    #[test]
    fn inner_cycles_follow_the_step() {
        for n in 3usize..=20 {
            for k in 1..n.div_ceil(2) {
                if 2 * k >= n {
                    continue;
                }
                let (g, inner) = generalized_petersen(n, k).unwrap();
                let r = (1..=n).find(|r| (r * k) % n == 0).unwrap();
                assert_eq!(inner.iter().map(Vec::len).sum::<usize>(), n);
                for c in &inner {
                    assert_eq!(c.len(), r);
                    for a in 0..c.len() {
                        assert!(g.has_edge(c[a], c[(a + 1) % c.len()]));
                    }
                }
            }
        }
    }

    #[test]
    fn coprime_petersen_is_a_prism() {
        for (n, k) in [(7, 2), (7, 3), (8, 3), (9, 2), (11, 4)] {
            assert_eq!(gcd(n, k), 1);
            let (g, inner) = generalized_petersen(n, k).unwrap();
            let cyc = &inner[0];
            // y_j := cyc[j-1]; v_i sits at y_{sigma(i)}
            let mut sigma = vec![0; n];
            for (j, &id) in cyc.iter().enumerate() {
                sigma[id - n] = j + 1;
            }
            let prism = generalized_prism(&PrismSpec::new(n, sigma).unwrap()).unwrap();
            // prism id n + j - 1 is cyc[j-1]
            let mut to_gpg: Vec<usize> = (0..2 * n).collect();
            for (j, &id) in cyc.iter().enumerate() {
                to_gpg[n + j] = id;
            }
            assert_eq!(prism.relabel(&to_gpg).unwrap(), g);
        }
    }

    #[test]
    fn two_factor_specs() {
        let spec = TwoFactorSpec::new(6, vec![3, 3], vec![0, 3, 1, 4, 2, 5]).unwrap();
        let g = two_factor_graph(&spec).unwrap();
        assert_eq!(g.n(), 12);
        assert!(g.is_regular(3));
        assert!(g.is_connected());

        let single = TwoFactorSpec::new(5, vec![5], vec![0, 2, 4, 1, 3]).unwrap();
        let prism = single.as_prism().unwrap();
        assert_eq!(
            two_factor_graph(&single).unwrap(),
            generalized_prism(&prism).unwrap()
        );

        assert!(TwoFactorSpec::new(6, vec![3, 3], vec![0, 0, 1, 2, 3, 4]).is_err());
        assert!(TwoFactorSpec::new(6, vec![3, 2], vec![0, 1, 2, 3, 4, 5]).is_err());
        assert!(TwoFactorSpec::new(6, vec![3, 4], vec![0, 1, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn random_trees() {
        assert_eq!(random_tree(1, 7).unwrap().n(), 1);
        assert_eq!(random_tree(2, 7).unwrap().m(), 1);
        for n in 1..40 {
            let t = random_tree(n, n as u64).unwrap();
            assert!(t.is_tree());
            assert_eq!(t, random_tree(n, n as u64).unwrap());
        }
        assert_ne!(random_tree(30, 1).unwrap(), random_tree(30, 2).unwrap());
    }

    #[test]
    fn prufer_known_code() {
        // code (3,3,3,4) on 6 vertices: leaves 0,1,2 hang off 3, then 3-4, 4-5
        let mut e = prufer_decode(&[3, 3, 3, 4], 6);
        e.sort();
        assert_eq!(e, vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn random_bipartite_is_connected_bipartite() {
        for seed in 0..20 {
            let g = random_connected_bipartite(3 + seed as usize % 4, 4, 5, seed).unwrap();
            assert!(g.is_connected());
            assert!(g.bipartition().is_some());
        }
    }
}
