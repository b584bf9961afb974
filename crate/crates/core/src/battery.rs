//! The acceptance battery: one suite per checked claim, each producing a
//! pass/fail line with its own pinned tolerances and wall-clock limit.

use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{
    coloring_to_partition, lift_to_subdivision, partition_predicate_holds, verify_s_coloring, PackingVector,
    SColoring,
};
use crate::constructive::{
    color_bipartite_subdivision, color_gpg_1122, color_prism_1122, color_si_complete, color_si_tree,
    petersen_subdivision_witness, CaseTrace,
};
use crate::enumerate::{connected_graphs, first_coloring_by_enumeration};
use crate::error::{Error, Result};
use crate::generators::{
    complete, complete_bipartite, complete_tripartite, cycle, generalized_petersen, generalized_prism, path,
    random_connected_bipartite, random_tree, PrismSpec,
};
use crate::graph::Graph;
use crate::solver::{packing_chromatic, s_colorable, SearchConfig, SearchOutcome};
use crate::transforms::subdivide;

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub id: String,
    pub criterion: Option<u8>,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u64,
    pub limit_ms: u64,
}

impl SuiteReport {
    /// `PASS <id> (<ms> ms, limit <ms> ms): <detail>`, or the same with `FAIL`.
    pub fn line(&self) -> String {
        format!(
            "{} {}{} ({} ms, limit {} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion.map_or(String::new(), |c| format!("[{c}] ")),
            self.id,
            self.elapsed_ms,
            self.limit_ms,
            self.detail
        )
    }
}

/// A named, runnable check.
pub struct Suite {
    pub id: &'static str,
    /// Acceptance criterion this suite checks, if it is the canonical one.
    pub criterion: Option<u8>,
    pub title: &'static str,
    pub limit: Duration,
    run: fn() -> Result<(bool, String)>,
}

impl Suite {
    /// Runs the check. Errors count as failures; so does exceeding the
    /// time limit.
    pub fn run(&self) -> SuiteReport {
        let start = Instant::now();
        let outcome = (self.run)();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match outcome {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if elapsed > self.limit {
            passed = false;
            detail.push_str("; time limit exceeded");
        }
        SuiteReport {
            id: self.id.to_string(),
            criterion: self.criterion,
            title: self.title.to_string(),
            passed,
            detail,
            elapsed_ms: elapsed.as_millis() as u64,
            limit_ms: self.limit.as_millis() as u64,
        }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// All suites, in criterion order. `prism-sweep-n6` is a quicker subset of
/// `prism-sweep`; `tripartite-growth` checks the finite prefix of an
/// asymptotic claim.
pub fn suites() -> Vec<Suite> {
    vec![
        Suite {
            id: "petersen-witness",
            criterion: Some(1),
            title: "stored S(Petersen) witness is a packing 5-coloring using a subdivision vertex outside class 1",
            limit: secs(1),
            run: petersen_witness,
        },
        Suite {
            id: "petersen-impossible",
            criterion: Some(2),
            title: "Petersen graph has no (1,1,2,2)-coloring",
            limit: secs(5),
            run: petersen_impossible,
        },
        Suite {
            id: "exact-values",
            criterion: Some(3),
            title: "packing chromatic numbers of S(K4) and small cycles",
            limit: secs(30),
            run: exact_values,
        },
        Suite {
            id: "prism-sweep",
            criterion: Some(4),
            title: "every generalized prism with n <= 8 is (1,1,2,2)-colored except the Petersen graph",
            limit: secs(600),
            run: || prism_sweep(8),
        },
        Suite {
            id: "prism-sweep-n6",
            criterion: None,
            title: "generalized prism sweep restricted to n <= 6",
            limit: secs(120),
            run: || prism_sweep(6),
        },
        Suite {
            id: "si-kn-table",
            criterion: Some(5),
            title: "packing chromatic numbers of S_i(K4), i = 3..8, and S_i(K_n) constructions",
            limit: secs(600),
            run: si_kn_table,
        },
        Suite {
            id: "s2kn-growth",
            criterion: Some(6),
            title: "packing chromatic number of S_2(K_n) exceeds ceil((n-1)/2) for n = 4, 5, 6",
            limit: secs(300),
            run: s2kn_growth,
        },
        Suite {
            id: "trees",
            criterion: Some(7),
            title: "subdivided random trees use at most 3 (odd i) or 4 (even i) classes",
            limit: secs(600),
            run: trees,
        },
        Suite {
            id: "bipartite-sub",
            criterion: Some(8),
            title: "S(G) has a packing 3-coloring for connected bipartite G",
            limit: secs(120),
            run: bipartite_sub,
        },
        Suite {
            id: "gpg",
            criterion: Some(9),
            title: "generalized Petersen graphs P(n,k) with 5 not dividing n are (1,1,2,2)-colorable",
            limit: secs(300),
            run: gpg,
        },
        Suite {
            id: "pipeline",
            criterion: Some(10),
            title: "(1,1,2,2)-colorings round-trip through partitions and lift to S(G)",
            limit: secs(600),
            run: pipeline,
        },
        Suite {
            id: "oracle-equivalence",
            criterion: Some(11),
            title: "solver agrees with exhaustive enumeration on connected graphs up to 8 vertices",
            limit: secs(900),
            run: oracle_equivalence,
        },
        Suite {
            id: "tripartite-growth",
            criterion: None,
            title: "packing chromatic number of S(K_{n,n,n}) increases over n = 1, 2, 3",
            limit: secs(300),
            run: tripartite_growth,
        },
    ]
}

/// Looks a suite up by id.
pub fn suite(id: &str) -> Option<Suite> {
    suites().into_iter().find(|s| s.id == id)
}

fn accepted(g: &Graph, c: &SColoring) -> Result<bool> {
    Ok(verify_s_coloring(g, c)?.is_ok())
}

fn chi(g: &Graph) -> Result<Option<usize>> {
    Ok(packing_chromatic(g, &SearchConfig::parallel())?.exact())
}

fn petersen_witness() -> Result<(bool, String)> {
    let (sg, c) = petersen_subdivision_witness()?;
    let ok = sg.graph.n() == 25 && c.packing() == &PackingVector::packing(5) && accepted(&sg.graph, &c)?;
    let lifted: Vec<usize> = (0..25)
        .filter(|&v| !sg.is_original(v) && c.class(v) > 1)
        .collect();
    Ok((
        ok && !lifted.is_empty(),
        format!(
            "verified={ok}, subdivision vertices outside class 1: {}",
            lifted.len()
        ),
    ))
}

fn petersen_impossible() -> Result<(bool, String)> {
    let (pet, _) = generalized_petersen(5, 2)?;
    let s = PackingVector::one_one_two_two();
    let det = s_colorable(&pet, &s, &SearchConfig::deterministic())?;
    let par = s_colorable(&pet, &s, &SearchConfig::parallel())?;
    let raw = first_coloring_by_enumeration(&pet, &s);
    let ok = matches!(det, SearchOutcome::NotColorable)
        && matches!(par, SearchOutcome::NotColorable)
        && raw.is_none();
    Ok((
        ok,
        format!(
            "solver (sequential/parallel): {}/{}; 4^10 enumeration found {}",
            outcome_word(&det),
            outcome_word(&par),
            if raw.is_some() { "a coloring" } else { "none" }
        ),
    ))
}

fn outcome_word(o: &SearchOutcome) -> &'static str {
    match o {
        SearchOutcome::Colorable(_) => "colorable",
        SearchOutcome::NotColorable => "none",
        SearchOutcome::Indeterminate => "indeterminate",
    }
}

fn exact_values() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let sk4 = subdivide(&complete(4)?, 1)?;
    let v = chi(&sk4.graph)?;
    if v != Some(5) {
        bad.push(format!("S(K4): {v:?}"));
    }
    for n in [4, 5, 6, 7, 8, 9, 10, 11, 12] {
        let want = if n % 4 == 0 { 3 } else { 4 };
        let v = chi(&cycle(n)?)?;
        if v != Some(want) {
            bad.push(format!("C{n}: {v:?}, expected {want}"));
        }
    }
    Ok(summary(
        bad,
        "S(K4)=5, C_n = 3 or 4 as expected for n=4..12".into(),
    ))
}

fn summary(bad: Vec<String>, good: String) -> (bool, String) {
    if bad.is_empty() {
        (true, good)
    } else {
        (false, bad.join("; "))
    }
}

fn prism_specs(n: usize) -> Vec<PrismSpec> {
    (1..=n)
        .permutations(n)
        .map(|sigma| PrismSpec::new(n, sigma).expect("permutation"))
        .collect()
}

#[derive(Default)]
struct SweepTally {
    specs: usize,
    colored: usize,
    petersen: usize,
    wrong: Vec<String>,
    fallback_specified: usize,
    fallback_open: usize,
    rejected: usize,
    solver_confirmed: usize,
}

impl SweepTally {
    fn merge(mut self, o: SweepTally) -> SweepTally {
        self.specs += o.specs;
        self.colored += o.colored;
        self.petersen += o.petersen;
        self.wrong.extend(o.wrong);
        self.fallback_specified += o.fallback_specified;
        self.fallback_open += o.fallback_open;
        self.rejected += o.rejected;
        self.solver_confirmed += o.solver_confirmed;
        self
    }

    fn record_trace(&mut self, t: &CaseTrace) {
        if t.fallback_used {
            if t.is_fully_specified() {
                self.fallback_specified += 1;
            } else {
                self.fallback_open += 1;
            }
        }
        self.rejected += t.formula_rejected as usize;
    }
}

fn sweep_one(spec: &PrismSpec, confirm: bool) -> Result<SweepTally> {
    let mut t = SweepTally {
        specs: 1,
        ..Default::default()
    };
    let g = generalized_prism(spec)?;
    let is_pet = g.is_petersen();
    let (res, trace) = color_prism_1122(spec)?;
    t.record_trace(&trace);
    match res.coloring() {
        Some(c) => {
            t.colored += 1;
            if is_pet || !accepted(&g, c)? {
                t.wrong.push(format!("sigma {:?}: bad coloring", spec.sigma));
            }
            if confirm {
                let o = s_colorable(
                    &g,
                    &PackingVector::one_one_two_two(),
                    &SearchConfig::deterministic(),
                )?;
                if o.is_colorable() {
                    t.solver_confirmed += 1;
                } else {
                    t.wrong.push(format!(
                        "sigma {:?}: solver says {}",
                        spec.sigma,
                        outcome_word(&o)
                    ));
                }
            }
        }
        None => {
            t.petersen += 1;
            if !is_pet {
                t.wrong
                    .push(format!("sigma {:?}: Petersen reported wrongly", spec.sigma));
            }
            if confirm {
                let o = s_colorable(
                    &g,
                    &PackingVector::one_one_two_two(),
                    &SearchConfig::deterministic(),
                )?;
                if matches!(o, SearchOutcome::NotColorable) {
                    t.solver_confirmed += 1;
                } else {
                    t.wrong.push(format!(
                        "sigma {:?}: solver says {}",
                        spec.sigma,
                        outcome_word(&o)
                    ));
                }
            }
        }
    }
    Ok(t)
}

fn prism_sweep(max_n: usize) -> Result<(bool, String)> {
    let mut total = SweepTally::default();
    let mut per_n = Vec::new();
    for n in 3..=max_n {
        let tally = prism_specs(n)
            .par_iter()
            .map(|spec| sweep_one(spec, n <= 6))
            .try_reduce(SweepTally::default, |a, b| Ok(a.merge(b)))?;
        per_n.push(format!(
            "n={n}: {}/{} colored, {} Petersen",
            tally.colored, tally.specs, tally.petersen
        ));
        if n != 5 && tally.petersen > 0 {
            total.wrong.push(format!("n={n}: Petersen reported"));
        }
        total = total.merge(tally);
    }
    if max_n >= 5 && total.petersen == 0 {
        total.wrong.push("no Petersen spec detected at n=5".into());
    }
    let ok = total.wrong.is_empty() && total.fallback_specified == 0;
    let mut detail = format!(
        "{}; solver-confirmed {}; fallbacks on fully specified branches {}, on open branches {} (reported only); formula rejections {}",
        per_n.join(", "),
        total.solver_confirmed,
        total.fallback_specified,
        total.fallback_open,
        total.rejected
    );
    if !total.wrong.is_empty() {
        detail.push_str(&format!("; problems: {}", total.wrong.iter().take(5).join(", ")));
    }
    Ok((ok, detail))
}

fn si_kn_table() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut values = Vec::new();
    for i in 3..=8 {
        let want = if i % 4 == 3 { 3 } else { 4 };
        let sg = subdivide(&complete(4)?, i)?;
        let v = chi(&sg.graph)?;
        values.push(format!("i={i}:{}", v.map_or("?".into(), |x| x.to_string())));
        if v != Some(want) {
            bad.push(format!("S_{i}(K4): {v:?}, expected {want}"));
        }
    }
    let combos: Vec<(usize, usize)> = (3..=8).cartesian_product(3..=12).collect();
    let construct_bad: Vec<String> = combos
        .par_iter()
        .filter_map(|&(n, i)| {
            let want = if i % 4 == 3 { 3 } else { 4 };
            match color_si_complete(n, i) {
                Ok((sg, c)) if c.k() == want && accepted(&sg.graph, &c).unwrap_or(false) => None,
                Ok((_, c)) => Some(format!("S_{i}(K{n}): {} classes", c.k())),
                Err(e) => Some(format!("S_{i}(K{n}): {e}")),
            }
        })
        .collect();
    bad.extend(construct_bad);
    Ok(summary(
        bad,
        format!(
            "S_i(K4) values {}; constructions verified for n=3..8, i=3..12",
            values.join(" ")
        ),
    ))
}

fn s2kn_growth() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut notes = Vec::new();
    for n in [4usize, 5, 6] {
        let bound = (n - 1).div_ceil(2);
        let sg = subdivide(&complete(n)?, 2)?;
        // exceeding the bound means no packing coloring with `bound` classes
        let o = s_colorable(
            &sg.graph,
            &PackingVector::packing(bound),
            &SearchConfig::parallel(),
        )?;
        if !matches!(o, SearchOutcome::NotColorable) {
            bad.push(format!("S_2(K{n}) with {bound} classes: {}", outcome_word(&o)));
        }
        let mut note = format!("n={n}: > {bound}");
        if n <= 5 {
            let v = chi(&sg.graph)?;
            note.push_str(&format!(" (exact {})", v.map_or("?".into(), |x| x.to_string())));
            if v.is_none_or(|x| x <= bound) {
                bad.push(format!("S_2(K{n}): exact value {v:?}"));
            }
        }
        notes.push(note);
    }
    Ok(summary(bad, notes.join(", ")))
}

fn trees() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7265_6573);
    let sizes: Vec<(usize, u64)> = (0..100).map(|seed| (rng.gen_range(1..=40), seed)).collect();
    let bad: Vec<String> = sizes
        .par_iter()
        .flat_map_iter(|&(n, seed)| {
            let t = random_tree(n, seed).expect("valid tree size");
            [3usize, 5, 7, 9, 2, 4, 6].into_iter().filter_map(move |i| {
                let cap = if i % 2 == 1 { 3 } else { 4 };
                match color_si_tree(&t, i) {
                    Ok((sg, c)) if c.k() <= cap && accepted(&sg.graph, &c).unwrap_or(false) => None,
                    Ok((_, c)) => Some(format!("tree n={n} seed={seed} i={i}: {} classes", c.k())),
                    Err(e) => Some(format!("tree n={n} seed={seed} i={i}: {e}")),
                }
            })
        })
        .collect();
    let mut bad = bad;
    let random_ok = bad.is_empty();
    let random_failures = bad.iter().take(3).join(", ");
    // degree-3 vertex 0 with a pendant path 0-1-4 of length 2
    let t_star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4)])?;
    let s2 = subdivide(&t_star, 2)?;
    let v = chi(&s2.graph)?;
    let mut detail = format!(
        "100 random trees (n<=40) within bounds for i in {{2..7, 9}}: {random_ok}; S_2(T*) = {}",
        v.map_or("?".into(), |x| x.to_string())
    );
    if v != Some(4) {
        if let Some(c) = s_colorable(
            &s2.graph,
            &PackingVector::packing(3),
            &SearchConfig::deterministic(),
        )?
        .witness()
        {
            detail.push_str(&format!(
                ", expected 4; 3-coloring by vertex id {:?}",
                c.assignment()
            ));
        }
        bad.push("S_2(T*) is not 4".into());
    }
    // two adjacent degree-3 vertices: every packing coloring of S_2 needs 4
    let double_star = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])?;
    let v2 = chi(&subdivide(&double_star, 2)?.graph)?;
    detail.push_str(&format!(
        "; S_2(double star) = {}",
        v2.map_or("?".into(), |x| x.to_string())
    ));
    if v2 != Some(4) {
        bad.push("S_2(double star) is not 4".into());
    }
    if !random_ok {
        detail.push_str(&format!("; failures: {random_failures}"));
    }
    Ok((bad.is_empty(), detail))
}

fn bipartite_sub() -> Result<(bool, String)> {
    let mut graphs = vec![
        ("K3,3".to_string(), complete_bipartite(3, 3)?),
        ("C6".to_string(), cycle(6)?),
        ("P5".to_string(), path(5)?),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x6269_7061);
    for seed in 0..20u64 {
        let a = rng.gen_range(1..=6);
        let b = rng.gen_range(2..=6);
        let extra = rng.gen_range(0..=a * b - (a + b - 1));
        graphs.push((
            format!("random({a},{b},+{extra})#{seed}"),
            random_connected_bipartite(a, b, extra, seed)?,
        ));
    }
    let mut bad = Vec::new();
    let mut confirmed = 0;
    for (name, g) in &graphs {
        let (sg, c) = match color_bipartite_subdivision(g) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("{name}: {e}"));
                continue;
            }
        };
        if c.k() != 3 || !accepted(&sg.graph, &c)? {
            bad.push(format!("{name}: {} classes", c.k()));
        }
        if sg.graph.n() <= 40 {
            let v = chi(&sg.graph)?;
            if v == Some(3) {
                confirmed += 1;
            } else {
                bad.push(format!("{name}: solver gives {v:?}"));
            }
        }
    }
    Ok(summary(
        bad,
        format!(
            "{} graphs 3-colored; solver confirmed 3 on {confirmed} with |S(G)| <= 40",
            graphs.len()
        ),
    ))
}

fn gpg_params() -> Vec<(usize, usize)> {
    (3..=30usize)
        .filter(|n| n % 5 != 0)
        .flat_map(|n| (1..n.div_ceil(2)).map(move |k| (n, k)))
        .collect()
}

fn gpg() -> Result<(bool, String)> {
    let params = gpg_params();
    let results: Vec<_> = params
        .par_iter()
        .map(|&(n, k)| (n, k, color_gpg_1122(n, k)))
        .collect();
    let mut bad = Vec::new();
    let (mut fallbacks, mut rejected) = (0, 0);
    for (n, k, r) in results {
        match r {
            Ok((c, trace)) => {
                let (g, _) = generalized_petersen(n, k)?;
                if !accepted(&g, &c)? {
                    bad.push(format!("P({n},{k}) rejected by verifier"));
                }
                fallbacks += trace.fallback_used as usize;
                rejected += trace.formula_rejected as usize;
            }
            Err(e) => bad.push(format!("P({n},{k}): {e}")),
        }
    }
    let p10 = color_gpg_1122(10, 2);
    if !matches!(p10, Err(Error::HypothesisViolated(_))) {
        bad.push("P(10,2) not rejected".into());
    }
    Ok(summary(
        bad,
        format!(
            "{} graphs colored and verified (solver fallbacks {fallbacks}, formula rejections {rejected}); P(10,2) rejected",
            params.len()
        ),
    ))
}

/// Partition round trip and subdivision lift for one accepted coloring.
pub fn pipeline_check(g: &Graph, c: &SColoring) -> Result<()> {
    let p = coloring_to_partition(g, c)?;
    if !partition_predicate_holds(g, &p) {
        return Err(Error::ConstructionFailed("partition predicate fails".into()));
    }
    let sg = subdivide(g, 1)?;
    let lifted = lift_to_subdivision(g, c, &sg)?;
    if lifted.packing() != &PackingVector::packing(5) || !accepted(&sg.graph, &lifted)? {
        return Err(Error::ConstructionFailed("lift rejected".into()));
    }
    Ok(())
}

fn pipeline() -> Result<(bool, String)> {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for n in 3..=8 {
        let results: Vec<std::result::Result<(), String>> = prism_specs(n)
            .par_iter()
            .filter_map(|spec| {
                let g = generalized_prism(spec).ok()?;
                let (res, _) = color_prism_1122(spec).ok()?;
                let c = res.coloring()?;
                Some(pipeline_check(&g, c).map_err(|e| format!("prism {:?}: {e}", spec.sigma)))
            })
            .collect();
        checked += results.len();
        bad.extend(results.into_iter().filter_map(|r| r.err()));
    }
    for (n, k) in gpg_params() {
        let (g, _) = generalized_petersen(n, k)?;
        let (c, _) = color_gpg_1122(n, k)?;
        if let Err(e) = pipeline_check(&g, &c) {
            bad.push(format!("P({n},{k}): {e}"));
        }
        checked += 1;
    }
    Ok(summary(
        bad,
        format!("{checked} colorings from the prism sweep and P(n,k) passed"),
    ))
}

/// Packing vectors compared against exhaustive enumeration.
pub fn oracle_vectors() -> Vec<PackingVector> {
    [&[1, 1][..], &[1, 2], &[1, 1, 2], &[1, 2, 3], &[1, 1, 2, 2]]
        .into_iter()
        .map(|s| PackingVector::new(s.to_vec()).expect("valid"))
        .collect()
}

/// Disagreements between solver and enumeration on `g`: the sequential
/// solver must return exactly the lexicographically first coloring, and
/// the parallel solver must reach the same decision with a valid witness.
pub fn oracle_disagreements(g: &Graph, s: &PackingVector) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let raw = first_coloring_by_enumeration(g, s);
    let det = s_colorable(g, s, &SearchConfig::deterministic())?;
    if det.witness().map(|c| c.assignment()) != raw.as_deref() {
        out.push(format!(
            "{s} sequential: {} vs enumeration {raw:?}",
            outcome_word(&det)
        ));
    }
    let par = s_colorable(g, s, &SearchConfig::parallel())?;
    let par_ok = match &par {
        SearchOutcome::Colorable(c) => raw.is_some() && accepted(g, c)?,
        SearchOutcome::NotColorable => raw.is_none(),
        SearchOutcome::Indeterminate => false,
    };
    if !par_ok {
        out.push(format!("{s} parallel: {}", outcome_word(&par)));
    }
    Ok(out)
}

fn oracle_equivalence() -> Result<(bool, String)> {
    let vectors = oracle_vectors();
    let mut graphs = 0;
    let mut bad = Vec::new();
    for n in 1..=8 {
        let gs = connected_graphs(n)?;
        graphs += gs.len();
        let errs: Vec<String> = gs
            .par_iter()
            .map(|g| {
                let mut e = Vec::new();
                for s in &vectors {
                    for d in oracle_disagreements(g, s)? {
                        e.push(format!("{:?}: {d}", g.edges()));
                    }
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        bad.extend(errs);
    }
    let n_bad = bad.len();
    let (ok, mut detail) = summary(
        bad.into_iter().take(5).collect(),
        format!(
            "{graphs} connected graphs x {} vectors: 0 disagreements",
            vectors.len()
        ),
    );
    if !ok {
        detail = format!("{n_bad} disagreements, e.g. {detail}");
    }
    Ok((ok, detail))
}

fn tripartite_growth() -> Result<(bool, String)> {
    let mut values = Vec::new();
    for n in 1..=3 {
        values.push(chi(&subdivide(&complete_tripartite(n)?, 1)?.graph)?);
    }
    let ok = values.iter().all(Option::is_some) && values.windows(2).all(|w| w[0] < w[1]);
    let shown: Vec<String> = values
        .iter()
        .map(|v| v.map_or_else(|| "undecided".to_string(), |k| k.to_string()))
        .collect();
    Ok((ok, format!("values for n=1,2,3: {}", shown.join(", "))))
}
