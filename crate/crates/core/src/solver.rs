//! Exact S-colorability by branch and bound, and the packing chromatic
//! number on top of it.
//!
//! The search assigns vertices in a static order. Each class keeps, per
//! vertex, a count of already-placed class members within the class radius;
//! a vertex whose every class is blocked ends the branch (forward checking).
//! Classes that behave identically (equal radius, or radius at least the
//! largest finite distance, which makes them singleton-per-component classes)
//! are opened in index order only.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{verify_with_distances, PackingVector, SColoring};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, UNREACHABLE};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub lower_bound: Option<usize>,
    pub upper_bound: Option<usize>,
    /// Sequential search in ascending vertex-id order; the witness is then
    /// the lexicographically least valid assignment.
    pub deterministic: bool,
    pub time_budget: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            lower_bound: None,
            upper_bound: None,
            deterministic: true,
            time_budget: None,
        }
    }
}

impl SearchConfig {
    pub fn deterministic() -> Self {
        Self::default()
    }

    pub fn parallel() -> Self {
        SearchConfig {
            deterministic: false,
            ..Self::default()
        }
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    fn validate(&self) -> Result<()> {
        if let (Some(lo), Some(hi)) = (self.lower_bound, self.upper_bound) {
            if lo > hi {
                return Err(Error::InvalidParameter(format!(
                    "lower bound {lo} exceeds upper bound {hi}"
                )));
            }
        }
        Ok(())
    }
}

/// Three-way answer: a budget-exhausted search never claims infeasibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Colorable(SColoring),
    NotColorable,
    Indeterminate,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&SColoring> {
        match self {
            SearchOutcome::Colorable(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_colorable(&self) -> bool {
        matches!(self, SearchOutcome::Colorable(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackingChromatic {
    Exact {
        k: usize,
        witness: SColoring,
    },
    /// Search ran out of budget; the value lies in `lower..=upper`.
    Bounds {
        lower: usize,
        upper: usize,
    },
}

impl PackingChromatic {
    pub fn exact(&self) -> Option<usize> {
        match self {
            PackingChromatic::Exact { k, .. } => Some(*k),
            PackingChromatic::Bounds { .. } => None,
        }
    }
}

struct Instance {
    n: usize,
    k: usize,
    /// `balls[b][v]`: vertices within the radius of ball group `b` of `v`.
    balls: Vec<Vec<Vec<u32>>>,
    ball_of_class: Vec<usize>,
    prev_in_group: Vec<Option<usize>>,
    order: Vec<usize>,
    /// `allowed[v * k + c]`
    allowed: Option<Vec<bool>>,
}

impl Instance {
    fn build(
        g: &Graph,
        dm: &DistanceMatrix,
        s: &PackingVector,
        deterministic: bool,
        allowed: Option<Vec<bool>>,
    ) -> Self {
        let n = g.n();
        let k = s.k();
        let cap = dm.max_finite().max(1);
        let effective: Vec<u32> = s.as_slice().iter().map(|&r| r.min(cap)).collect();
        let mut radii: Vec<u32> = effective.clone();
        radii.dedup();
        let balls = radii
            .iter()
            .map(|&r| {
                (0..n)
                    .map(|v| {
                        dm.row(v)
                            .iter()
                            .enumerate()
                            .filter(|&(u, &d)| u != v && d != UNREACHABLE && d <= r)
                            .map(|(u, _)| u as u32)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let ball_of_class = effective
            .iter()
            .map(|r| radii.iter().position(|x| x == r).unwrap())
            .collect();
        let prev_in_group = (0..k)
            .map(|c| (allowed.is_none() && c > 0 && effective[c - 1] == effective[c]).then(|| c - 1))
            .collect();
        let order = if deterministic {
            (0..n).collect()
        } else {
            let mut o: Vec<usize> = (0..n).collect();
            o.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
            o
        };
        Instance {
            n,
            k,
            balls,
            ball_of_class,
            prev_in_group,
            order,
            allowed,
        }
    }
}

struct Search<'a> {
    inst: &'a Instance,
    /// 0 = unassigned, otherwise class index + 1
    assign: Vec<usize>,
    blocked: Vec<u32>,
    avail: Vec<u32>,
    used: Vec<u32>,
    nodes: u64,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    timed_out: &'a AtomicBool,
}

impl<'a> Search<'a> {
    fn new(
        inst: &'a Instance,
        deadline: Option<Instant>,
        stop: &'a AtomicBool,
        timed_out: &'a AtomicBool,
    ) -> Self {
        let (n, k) = (inst.n, inst.k);
        let mut blocked = vec![0u32; k * n];
        let mut avail = vec![k as u32; n];
        if let Some(allowed) = &inst.allowed {
            for v in 0..n {
                for c in 0..k {
                    if !allowed[v * k + c] {
                        blocked[c * n + v] = 1;
                        avail[v] -= 1;
                    }
                }
            }
        }
        Search {
            inst,
            assign: vec![0; n],
            blocked,
            avail,
            used: vec![0; k],
            nodes: 0,
            deadline,
            stop,
            timed_out,
        }
    }

    fn hopeless(&self) -> bool {
        self.avail.contains(&0)
    }

    #[inline]
    fn can_open(&self, c: usize) -> bool {
        match self.inst.prev_in_group[c] {
            Some(p) => self.used[p] > 0,
            None => true,
        }
    }

    /// Places `v` in class `c`; returns false if some unassigned vertex lost
    /// its last class.
    fn place(&mut self, v: usize, c: usize) -> bool {
        let n = self.inst.n;
        self.assign[v] = c + 1;
        self.used[c] += 1;
        let mut alive = true;
        for &u in &self.inst.balls[self.inst.ball_of_class[c]][v] {
            let u = u as usize;
            let b = &mut self.blocked[c * n + u];
            if *b == 0 {
                self.avail[u] -= 1;
                if self.avail[u] == 0 && self.assign[u] == 0 {
                    alive = false;
                }
            }
            *b += 1;
        }
        alive
    }

    fn unplace(&mut self, v: usize, c: usize) {
        let n = self.inst.n;
        for &u in &self.inst.balls[self.inst.ball_of_class[c]][v] {
            let u = u as usize;
            let b = &mut self.blocked[c * n + u];
            *b -= 1;
            if *b == 0 {
                self.avail[u] += 1;
            }
        }
        self.used[c] -= 1;
        self.assign[v] = 0;
    }

    fn should_stop(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 {
            if self.stop.load(Ordering::Relaxed) {
                return true;
            }
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out.store(true, Ordering::Relaxed);
                    self.stop.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        false
    }

    fn candidates(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.inst.n;
        (0..self.inst.k).filter(move |&c| self.blocked[c * n + v] == 0 && self.can_open(c))
    }

    fn dfs(&mut self, pos: usize) -> bool {
        if pos == self.inst.n {
            return true;
        }
        if self.should_stop() {
            return false;
        }
        let v = self.inst.order[pos];
        let cands: Vec<usize> = self.candidates(v).collect();
        for c in cands {
            if self.place(v, c) && self.dfs(pos + 1) {
                return true;
            }
            self.unplace(v, c);
            if self.stop.load(Ordering::Relaxed) {
                return false;
            }
        }
        false
    }

    /// Collects every consistent assignment of the first `depth` vertices
    /// of the order. Returns a complete solution if one shows up early.
    fn frontier(&mut self, pos: usize, depth: usize, out: &mut Vec<Vec<usize>>) -> Option<Vec<usize>> {
        if pos == self.inst.n {
            return Some(self.assign.clone());
        }
        if pos == depth {
            out.push(
                self.inst.order[..pos]
                    .iter()
                    .map(|&v| self.assign[v] - 1)
                    .collect(),
            );
            return None;
        }
        let v = self.inst.order[pos];
        let cands: Vec<usize> = self.candidates(v).collect();
        for c in cands {
            if self.place(v, c) {
                if let Some(sol) = self.frontier(pos + 1, depth, out) {
                    return Some(sol);
                }
            }
            self.unplace(v, c);
        }
        None
    }
}

fn to_coloring(s: &PackingVector, assign: Vec<usize>) -> SColoring {
    SColoring::new(s.clone(), assign).expect("search assigns classes in 1..=k")
}

fn run_search(
    g: &Graph,
    dm: &DistanceMatrix,
    s: &PackingVector,
    deterministic: bool,
    deadline: Option<Instant>,
    allowed: Option<Vec<bool>>,
) -> SearchOutcome {
    if g.n() == 0 {
        return SearchOutcome::Colorable(to_coloring(s, Vec::new()));
    }
    let inst = Instance::build(g, dm, s, deterministic, allowed);
    let stop = AtomicBool::new(false);
    let timed_out = AtomicBool::new(false);
    let mut root = Search::new(&inst, deadline, &stop, &timed_out);
    if root.hopeless() {
        return SearchOutcome::NotColorable;
    }

    let found = if deterministic {
        root.dfs(0).then(|| root.assign.clone())
    } else {
        let target = 64 * rayon::current_num_threads();
        let mut depth = 1;
        let mut prefixes = Vec::new();
        let mut early = None;
        while depth <= inst.n {
            prefixes.clear();
            early = root.frontier(0, depth, &mut prefixes);
            if early.is_some() || prefixes.len() >= target || prefixes.is_empty() {
                break;
            }
            depth += 1;
        }
        early.or_else(|| {
            prefixes.par_iter().find_map_any(|prefix| {
                if stop.load(Ordering::Relaxed) {
                    return None;
                }
                let mut worker = Search::new(&inst, deadline, &stop, &timed_out);
                for (pos, &c) in prefix.iter().enumerate() {
                    worker.place(inst.order[pos], c);
                }
                if worker.dfs(prefix.len()) {
                    stop.store(true, Ordering::Relaxed);
                    Some(worker.assign.clone())
                } else {
                    None
                }
            })
        })
    };

    match found {
        Some(assign) => {
            let coloring = to_coloring(s, assign.into_iter().collect());
            debug_assert!(verify_with_distances(dm, &coloring).is_ok());
            SearchOutcome::Colorable(coloring)
        }
        None if timed_out.load(Ordering::Relaxed) => SearchOutcome::Indeterminate,
        None => SearchOutcome::NotColorable,
    }
}

fn deadline_of(cfg: &SearchConfig) -> Option<Instant> {
    cfg.time_budget.map(|b| Instant::now() + b)
}

/// Decides whether `g` has an S-coloring, returning a witness if so.
pub fn s_colorable(g: &Graph, s: &PackingVector, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let dm = g.all_pairs_distances();
    Ok(run_search(g, &dm, s, cfg.deterministic, deadline_of(cfg), None))
}

/// Like [`s_colorable`] with vertex `v` restricted to the classes `c`
/// (1-based) for which `allowed(v, c)` holds.
pub fn s_colorable_restricted(
    g: &Graph,
    s: &PackingVector,
    cfg: &SearchConfig,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<SearchOutcome> {
    cfg.validate()?;
    let k = s.k();
    let mask = (0..g.n())
        .flat_map(|v| (1..=k).map(move |c| (v, c)))
        .map(|(v, c)| allowed(v, c))
        .collect();
    let dm = g.all_pairs_distances();
    Ok(run_search(
        g,
        &dm,
        s,
        cfg.deterministic,
        deadline_of(cfg),
        Some(mask),
    ))
}

/// Exact packing chromatic number: the least `j` for which `g` is
/// `(1, 2, ..., j)`-colorable, scanning upward from the configured lower
/// bound.
pub fn packing_chromatic(g: &Graph, cfg: &SearchConfig) -> Result<PackingChromatic> {
    cfg.validate()?;
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    let dm = g.all_pairs_distances();
    let deadline = deadline_of(cfg);
    let start = cfg.lower_bound.unwrap_or(1).max(1);
    let end = cfg.upper_bound.unwrap_or(g.n()).min(g.n());
    for j in start..=end {
        let s = PackingVector::packing(j);
        match run_search(g, &dm, &s, cfg.deterministic, deadline, None) {
            SearchOutcome::Colorable(witness) => return Ok(PackingChromatic::Exact { k: j, witness }),
            SearchOutcome::NotColorable => {}
            SearchOutcome::Indeterminate => return Ok(PackingChromatic::Bounds { lower: j, upper: end }),
        }
    }
    Err(Error::InvalidParameter(format!(
        "no packing coloring with at most {end} classes; upper bound too small"
    )))
}

/// Whether `S(g)` has a 5-packing coloring that puts every subdivision
/// vertex in class 1. Such a coloring restricts to a (1,1,2,2)-coloring of
/// `g` (classes 2..5 shifted down) and every (1,1,2,2)-coloring lifts back,
/// so the question is decided on `g` itself.
pub fn all_subdiv_one_possible(g: &Graph) -> Result<bool> {
    let outcome = s_colorable(g, &PackingVector::one_one_two_two(), &SearchConfig::default())?;
    Ok(outcome.is_colorable())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterBound {
    /// `None` for disconnected graphs.
    pub diameter: Option<u32>,
    pub lower_bound: usize,
}

/// Lower bound on the packing chromatic number from class capacities.
///
/// A class with radius at least the diameter holds one vertex. Below that,
/// class 1 holds at most `n - ν` vertices for a maximal matching of size `ν`
/// and class `i >= 2` at most `n / b` where `b` is the smallest ball of
/// radius `⌊i/2⌋` (such balls around members are pairwise disjoint).
pub fn diameter_bound(g: &Graph) -> DiameterBound {
    let n = g.n();
    if n == 0 {
        return DiameterBound {
            diameter: Some(0),
            lower_bound: 0,
        };
    }
    let dm = g.all_pairs_distances();
    let diameter = dm.diameter();
    let singleton_from = diameter.map(|d| d.max(1) as usize);
    let capacity = |i: usize| -> usize {
        if singleton_from.is_some_and(|d| i >= d) {
            return 1;
        }
        if i == 1 {
            return n - greedy_matching_size(g);
        }
        let r = (i / 2) as u32;
        let smallest = (0..n)
            .map(|v| dm.row(v).iter().filter(|&&d| d <= r).count())
            .min()
            .unwrap_or(1);
        n / smallest
    };
    let mut covered = 0;
    let mut k = 0;
    while covered < n {
        k += 1;
        covered += capacity(k);
    }
    DiameterBound {
        diameter,
        lower_bound: k,
    }
}

fn greedy_matching_size(g: &Graph) -> usize {
    let mut matched = vec![false; g.n()];
    let mut size = 0;
    for &(u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            size += 1;
        }
    }
    size
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_s_coloring;
    use crate::enumerate::first_coloring_by_enumeration;
    use crate::generators::{complete, complete_tripartite, cycle, generalized_petersen, path};
    use crate::transforms::subdivide;

    fn pv(s: &[u32]) -> PackingVector {
        PackingVector::new(s.to_vec()).unwrap()
    }

    #[test]
    fn petersen_is_not_1122_colorable() {
        let (pet, _) = generalized_petersen(5, 2).unwrap();
        for cfg in [SearchConfig::deterministic(), SearchConfig::parallel()] {
            let out = s_colorable(&pet, &PackingVector::one_one_two_two(), &cfg).unwrap();
            assert_eq!(out, SearchOutcome::NotColorable);
        }
    }

    #[test]
    fn small_decisions() {
        let c4 = cycle(4).unwrap();
        let out = s_colorable(&c4, &pv(&[1, 2, 3]), &SearchConfig::default()).unwrap();
        let w = out.witness().unwrap();
        assert!(verify_s_coloring(&c4, w).unwrap().is_ok());

        let k3 = complete(3).unwrap();
        let out = s_colorable(&k3, &pv(&[1, 2]), &SearchConfig::default()).unwrap();
        assert_eq!(out, SearchOutcome::NotColorable);
    }

    #[test]
    fn deterministic_witness_is_lexicographically_least() {
        let graphs = [
            cycle(5).unwrap(),
            cycle(6).unwrap(),
            path(6).unwrap(),
            complete(4).unwrap(),
            generalized_petersen(5, 1).unwrap().0,
        ];
        for g in &graphs {
            for s in [
                pv(&[1, 2, 3]),
                pv(&[1, 1, 2]),
                pv(&[1, 1, 2, 2]),
                pv(&[1, 2, 3, 4]),
            ] {
                if g.n() > 8 && s.k() > 3 {
                    continue;
                }
                let expected = first_coloring_by_enumeration(g, &s);
                let got = s_colorable(g, &s, &SearchConfig::default()).unwrap();
                assert_eq!(
                    got.witness().map(|c| c.assignment().to_vec()),
                    expected,
                    "graph {:?} S={s}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn repeated_runs_agree() {
        let g = subdivide(&complete(4).unwrap(), 1).unwrap().graph;
        let s = PackingVector::packing(5);
        let a = s_colorable(&g, &s, &SearchConfig::default()).unwrap();
        let b = s_colorable(&g, &s, &SearchConfig::default()).unwrap();
        assert_eq!(a, b);
        let p = s_colorable(&g, &s, &SearchConfig::parallel()).unwrap();
        assert!(p.is_colorable());
    }

    #[test]
    fn exact_values() {
        let s1k4 = subdivide(&complete(4).unwrap(), 1).unwrap().graph;
        assert_eq!(
            packing_chromatic(&s1k4, &SearchConfig::default())
                .unwrap()
                .exact(),
            Some(5)
        );
        assert_eq!(
            packing_chromatic(&cycle(7).unwrap(), &SearchConfig::default())
                .unwrap()
                .exact(),
            Some(4)
        );
        assert_eq!(
            packing_chromatic(&cycle(8).unwrap(), &SearchConfig::parallel())
                .unwrap()
                .exact(),
            Some(3)
        );
        assert_eq!(
            packing_chromatic(&path(1).unwrap(), &SearchConfig::default())
                .unwrap()
                .exact(),
            Some(1)
        );
        assert!(packing_chromatic(&Graph::empty(0), &SearchConfig::default()).is_err());
    }

    #[test]
    fn bounds_are_checked() {
        let cfg = SearchConfig {
            lower_bound: Some(4),
            upper_bound: Some(2),
            ..SearchConfig::default()
        };
        assert!(packing_chromatic(&cycle(5).unwrap(), &cfg).is_err());
        let cfg = SearchConfig {
            upper_bound: Some(3),
            ..SearchConfig::default()
        };
        assert!(packing_chromatic(&cycle(5).unwrap(), &cfg).is_err());
    }

    #[test]
    fn exhausted_budget_is_indeterminate() {
        let g = subdivide(&complete_tripartite(3).unwrap(), 1).unwrap().graph;
        let cfg = SearchConfig::default().with_time_budget(Duration::from_millis(1));
        // far below the packing chromatic number, but the search cannot
        // finish refuting it in a millisecond
        let out = s_colorable(&g, &PackingVector::packing(6), &cfg).unwrap();
        assert_ne!(out, SearchOutcome::NotColorable);
        let pc = packing_chromatic(&g, &cfg).unwrap();
        assert!(matches!(
            pc,
            PackingChromatic::Bounds { .. } | PackingChromatic::Exact { .. }
        ));
    }

    #[test]
    fn restricted_domains() {
        let c4 = cycle(4).unwrap();
        let s = pv(&[1, 2, 3]);
        let out = s_colorable_restricted(&c4, &s, &SearchConfig::default(), |v, c| v != 0 || c == 3).unwrap();
        assert_eq!(out.witness().unwrap().class(0), 3);
        let out = s_colorable_restricted(&c4, &s, &SearchConfig::default(), |_, c| c == 1).unwrap();
        assert_eq!(out, SearchOutcome::NotColorable);
    }

    #[test]
    fn subdivision_class_one_equivalence() {
        let (pet, _) = generalized_petersen(5, 2).unwrap();
        assert!(!all_subdiv_one_possible(&pet).unwrap());
        assert!(all_subdiv_one_possible(&complete(4).unwrap()).unwrap());
        assert!(all_subdiv_one_possible(&cycle(4).unwrap()).unwrap());
        // the same question asked directly on S(g)
        for g in [complete(4).unwrap(), cycle(5).unwrap(), pet] {
            let sg = subdivide(&g, 1).unwrap();
            let direct = s_colorable_restricted(
                &sg.graph,
                &PackingVector::packing(5),
                &SearchConfig::parallel(),
                |v, c| sg.is_original(v) || c == 1,
            )
            .unwrap();
            assert_eq!(direct.is_colorable(), all_subdiv_one_possible(&g).unwrap());
        }
    }

    #[test]
    fn diameter_bounds() {
        let b = diameter_bound(&complete(5).unwrap());
        assert_eq!(b.lower_bound, 5);
        assert_eq!(diameter_bound(&path(2).unwrap()).lower_bound, 2);
        for n in 2..=3 {
            let g = subdivide(&complete_tripartite(n).unwrap(), 1).unwrap().graph;
            assert_eq!(diameter_bound(&g).diameter, Some(4));
        }
        let b = diameter_bound(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(b.diameter, None);
        assert!(b.lower_bound >= 1);
    }
}
