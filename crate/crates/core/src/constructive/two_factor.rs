//! (1,1,2,2)-colorings of cubic graphs given as a distinguished `n`-cycle
//! `C = x_1..x_n`, further cycles `Z_1, Z_2, ...` and a perfect matching
//! between `C` and the `Z` vertices, with at most one `Z` of length 5.
//!
//! As for prisms the coloring is a partition: `X1 = {x_n}` (empty when every
//! `Z` is even), `X2`/`X3` the odd/even `x_i` below `n`; each `Z_i`
//! contributes a set `T_i` to `V1` and the rest of `Z_i` joins `V2` or `V3`
//! according to its matched `x` — except `f(x_n)`, which takes the side
//! opposite to its neighbor outside `T_1`.
//!
//! Different `Z` cycles meet in `G²[V1]` only through `x_n`, so each `T_i` is
//! chosen independently (a union of bipartite graphs glued at one vertex is
//! bipartite); the relabelings tried are those the construction is free to
//! pick: where `x_n` sits on `C`, and the rotation/reflection of each `Z_i`.

use crate::coloring::{partition_to_1122, verify_s_coloring, SColoring, TriPartition};
use crate::error::{Error, Result};
use crate::generators::{generalized_petersen, two_factor_graph, TwoFactorSpec};
use crate::graph::{DistanceMatrix, Graph};

use super::lemma::{avoiding_set, cover_set, independent_complement_set};
use super::prism::{color_prism_1122, solver_fallback, CaseTrace, PrismColorResult};

pub const CASE_FIVE_IN: &str = "two-factor/five-cycle/f(x1)-in-Z1";
pub const CASE_FIVE_OUT: &str = "two-factor/five-cycle/f(x1)-not-in-Z1";
pub const CASE_ODD: &str = "two-factor/odd";
pub const CASE_EVEN: &str = "two-factor/even";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    /// Matched to `x_n`.
    Special,
    /// Joins `V2` (matched `x` lies in `X3`).
    Two,
    /// Joins `V3` (matched `x` lies in `X2`).
    Three,
}

impl Side {
    fn opposite(self) -> Side {
        match self {
            Side::Two => Side::Three,
            Side::Three => Side::Two,
            Side::Special => Side::Special,
        }
    }
}

struct Ctx<'a> {
    n: usize,
    g: &'a Graph,
    dm: DistanceMatrix,
    cycles: Vec<Vec<usize>>,
    /// original `x` id matched to each `Z` vertex, indexed by `id - n`
    pre: Vec<usize>,
    partner: Vec<usize>,
}

/// A placement of `C`: `xs[i-1]` is the id playing `x_i`.
struct XFrame {
    xs: Vec<usize>,
    pos: Vec<usize>,
    /// `x_n` forms `X1` on its own (false only for the all-even branch).
    odd: bool,
}

impl XFrame {
    fn new(xs: Vec<usize>, odd: bool) -> Self {
        let mut pos = vec![0; xs.len()];
        for (i, &x) in xs.iter().enumerate() {
            pos[x] = i + 1;
        }
        XFrame { xs, pos, odd }
    }

    fn all(n: usize, odd: bool) -> impl Iterator<Item = XFrame> {
        (0..n).flat_map(move |t| {
            [false, true].into_iter().map(move |rev| {
                let xs = (1..=n)
                    .map(|i| {
                        let k = if rev { n - i } else { i };
                        (k + t) % n
                    })
                    .collect();
                XFrame::new(xs, odd)
            })
        })
    }

    fn x(&self, i: usize) -> usize {
        self.xs[i - 1]
    }
}

/// Vertices of one Z cycle that go to V1, and the sides of the rest.
type CyclePart = (Vec<usize>, Vec<(usize, Side)>);

impl Ctx<'_> {
    fn f(&self, fr: &XFrame, i: usize) -> usize {
        self.partner[fr.x(i)]
    }

    fn side(&self, fr: &XFrame, z: usize) -> Side {
        let p = fr.pos[self.pre[z - self.n]];
        if fr.odd && p == self.n {
            Side::Special
        } else if p.is_multiple_of(2) {
            Side::Two
        } else {
            Side::Three
        }
    }

    /// Sides for the complement of `t` in `cycle`, or `None` if two adjacent
    /// complement vertices would share a side or `G²[t ∪ X1]` has an odd
    /// cycle.
    fn try_cycle(&self, fr: &XFrame, cycle: &[usize], t: &[usize]) -> Option<Vec<(usize, Side)>> {
        let p = cycle.len();
        let in_t = |v: usize| t.contains(&v);
        let mut sides: Vec<Option<Side>> = cycle
            .iter()
            .map(|&v| (!in_t(v)).then(|| self.side(fr, v)))
            .collect();
        for a in 0..p {
            if sides[a] != Some(Side::Special) {
                continue;
            }
            let mut forced = None;
            for b in [(a + 1) % p, (a + p - 1) % p] {
                if let Some(s @ (Side::Two | Side::Three)) = sides[b] {
                    match forced {
                        None => forced = Some(s.opposite()),
                        Some(f) if f != s.opposite() => return None,
                        _ => {}
                    }
                }
            }
            sides[a] = Some(forced.unwrap_or(Side::Two));
        }
        for a in 0..p {
            let b = (a + 1) % p;
            if let (Some(x), Some(y)) = (sides[a], sides[b]) {
                if x == y {
                    return None;
                }
            }
        }
        let mut part: Vec<usize> = t.to_vec();
        if fr.odd {
            part.push(fr.x(self.n));
        }
        if !self.square_bipartite(&part) {
            return None;
        }
        Some(
            cycle
                .iter()
                .zip(sides)
                .filter_map(|(&v, s)| s.map(|s| (v, s)))
                .collect(),
        )
    }

    fn square_bipartite(&self, part: &[usize]) -> bool {
        let k = part.len();
        let mut color = vec![u8::MAX; k];
        for start in 0..k {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                for b in 0..k {
                    if a == b || self.dm.get(part[a], part[b]) > 2 {
                        continue;
                    }
                    if color[b] == u8::MAX {
                        color[b] = 1 - color[a];
                        stack.push(b);
                    } else if color[b] == color[a] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// First labeling of `cycle` under which the cover set works. For
    /// `|cycle| ≡ 3 (mod 4)` the cover set leaves an adjacent pair outside
    /// `T`, which fails whenever both are matched into the same `X` part;
    /// the independent-complement set is tried next.
    fn cover_cycle(&self, fr: &XFrame, cycle: &[usize]) -> Result<Option<CyclePart>> {
        let p = cycle.len();
        let mut shapes = vec![cover_set(p)?.members];
        if p % 4 == 3 {
            shapes.push(independent_complement_set(p)?);
        }
        for members in &shapes {
            for lab in labelings(cycle) {
                let t: Vec<usize> = members.iter().map(|&k| lab[k - 1]).collect();
                if let Some(sides) = self.try_cycle(fr, cycle, &t) {
                    return Ok(Some((t, sides)));
                }
            }
        }
        Ok(None)
    }

    fn assemble(&self, fr: &XFrame, parts: Vec<CyclePart>) -> Result<TriPartition> {
        let n = self.n;
        let (mut v1, mut v2, mut v3) = (Vec::new(), Vec::new(), Vec::new());
        let last = if fr.odd {
            v1.push(fr.x(n));
            n - 1
        } else {
            n
        };
        for i in 1..=last {
            if i % 2 == 1 {
                v2.push(fr.x(i));
            } else {
                v3.push(fr.x(i));
            }
        }
        for (t, sides) in parts {
            v1.extend(t);
            for (v, s) in sides {
                match s {
                    Side::Two => v2.push(v),
                    Side::Three => v3.push(v),
                    Side::Special => unreachable!("resolved in try_cycle"),
                }
            }
        }
        TriPartition::new(2 * n, v1, v2, v3)
    }

    /// Colors every cycle other than `z1` with cover sets and checks the
    /// assembled partition.
    fn complete(&self, fr: &XFrame, z1: usize, first: CyclePart) -> Result<Option<SColoring>> {
        let mut parts = vec![first];
        for (idx, cyc) in self.cycles.iter().enumerate() {
            if idx == z1 {
                continue;
            }
            match self.cover_cycle(fr, cyc)? {
                Some(p) => parts.push(p),
                None => return Ok(None),
            }
        }
        let p = self.assemble(fr, parts)?;
        Ok(accepted(self.g, &p))
    }
}

fn accepted(g: &Graph, p: &TriPartition) -> Option<SColoring> {
    let c = partition_to_1122(g, p).ok()?;
    verify_s_coloring(g, &c).ok()?.is_ok().then_some(c)
}

/// All `2p` rotations/reflections of a cycle; `lab[k-1]` plays `v_k`.
fn labelings(cycle: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let p = cycle.len();
    (0..p).flat_map(move |a| {
        [false, true].into_iter().map(move |rev| {
            (0..p)
                .map(|k| cycle[if rev { (a + p - k) % p } else { (a + k) % p }])
                .collect()
        })
    })
}

/// Labeling of `cycle` with `v_1 = first` running in direction `rev`.
fn labeled_from(cycle: &[usize], first: usize, rev: bool) -> Vec<usize> {
    let p = cycle.len();
    let a = cycle.iter().position(|&v| v == first).expect("vertex on cycle");
    (0..p)
        .map(|k| cycle[if rev { (a + p - k) % p } else { (a + k) % p }])
        .collect()
}

fn five_cycle_attempt(ctx: &Ctx, fr: &XFrame, z1: usize) -> Result<Option<(SColoring, &'static str)>> {
    let cyc = &ctx.cycles[z1];
    let (fx1, fxn) = (ctx.f(fr, 1), ctx.f(fr, ctx.n));
    let y = |lab: &[usize], k: usize| lab[k - 1];
    if cyc.contains(&fx1) {
        // y_1 = f(x_1); direction chosen so that f(x_n) = y_s with s in {4, 5}
        for rev in [false, true] {
            let lab = labeled_from(cyc, fx1, rev);
            let s = lab.iter().position(|&v| v == fxn).unwrap() + 1;
            let t = match s {
                4 => vec![y(&lab, 2), y(&lab, 5)],
                5 => vec![y(&lab, 2), y(&lab, 4)],
                _ => continue,
            };
            let Some(sides) = ctx.try_cycle(fr, cyc, &t) else {
                continue;
            };
            if let Some(c) = ctx.complete(fr, z1, (t, sides))? {
                return Ok(Some((c, CASE_FIVE_IN)));
            }
        }
    } else {
        // y_1 = f(x_n), T_1 = {y_2, y_4}
        for rev in [false, true] {
            let lab = labeled_from(cyc, fxn, rev);
            let t = vec![y(&lab, 2), y(&lab, 4)];
            let Some(sides) = ctx.try_cycle(fr, cyc, &t) else {
                continue;
            };
            if let Some(c) = ctx.complete(fr, z1, (t, sides))? {
                return Ok(Some((c, CASE_FIVE_OUT)));
            }
        }
    }
    Ok(None)
}

fn odd_cycle_attempt(ctx: &Ctx, fr: &XFrame, z1: usize) -> Result<Option<SColoring>> {
    let cyc = &ctx.cycles[z1];
    let p = cyc.len();
    let (fx1, fxn) = (ctx.f(fr, 1), ctx.f(fr, ctx.n));
    let candidates: Vec<Vec<usize>> = if p == 3 {
        cyc.iter().filter(|&&v| v != fxn).map(|&v| vec![v]).collect()
    } else {
        let mut out = Vec::new();
        for lab in labelings(cyc) {
            let i = lab.iter().position(|&v| v == fxn).unwrap() + 1;
            if !(3..p).contains(&i) {
                continue;
            }
            let set = avoiding_set(p, i)?;
            out.push(set.members.iter().map(|&k| lab[k - 1]).collect());
        }
        out
    };
    for t in candidates {
        if t.contains(&fx1) {
            continue;
        }
        let Some(sides) = ctx.try_cycle(fr, cyc, &t) else {
            continue;
        };
        if let Some(c) = ctx.complete(fr, z1, (t, sides))? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// (1,1,2,2)-coloring of a cubic graph with the given 2-factor structure.
pub fn color_two_factor_1122(spec: &TwoFactorSpec) -> Result<(SColoring, CaseTrace)> {
    spec.validate()?;
    if let Some(prism) = spec.as_prism() {
        return match color_prism_1122(&prism)? {
            (PrismColorResult::Colored(c), trace) => Ok((c, trace)),
            (PrismColorResult::PetersenDetected, _) => Err(Error::HypothesisViolated(
                "the Petersen graph has no (1,1,2,2)-coloring".into(),
            )),
        };
    }
    let fives = spec.z_lengths.iter().filter(|&&l| l == 5).count();
    if fives > 1 {
        return Err(Error::HypothesisViolated(format!(
            "{fives} cycles of length 5 in the 2-factor; at most one is allowed"
        )));
    }
    let n = spec.n;
    let g = two_factor_graph(spec)?;
    let ctx = Ctx {
        n,
        g: &g,
        dm: g.all_pairs_distances(),
        cycles: spec.z_cycles(),
        pre: {
            let mut pre = vec![0; n];
            for (x, &z) in spec.matching.iter().enumerate() {
                pre[z] = x;
            }
            pre
        },
        partner: (0..n).map(|x| n + spec.matching[x]).collect(),
    };
    let z1 = spec.z_lengths.iter().position(|&l| l == 5).or_else(|| {
        (0..spec.z_lengths.len())
            .filter(|&i| spec.z_lengths[i] % 2 == 1)
            .min_by_key(|&i| spec.z_lengths[i])
    });

    let Some(z1) = z1 else {
        let fr = XFrame::new((0..n).collect(), false);
        let mut parts = Vec::new();
        for cyc in &ctx.cycles {
            match ctx.cover_cycle(&fr, cyc)? {
                Some(p) => parts.push(p),
                None => return fallback(&g, CASE_EVEN, true),
            }
        }
        let p = ctx.assemble(&fr, parts)?;
        return match accepted(&g, &p) {
            Some(c) => Ok((c, CaseTrace::from_case(CASE_EVEN))),
            None => fallback(&g, CASE_EVEN, true),
        };
    };

    let in_z1 = |v: usize| ctx.cycles[z1].contains(&v);
    let five = spec.z_lengths[z1] == 5;
    let mut entry: Option<&'static str> = None;
    let mut rejected = false;
    for fr in XFrame::all(n, true) {
        if !in_z1(ctx.f(&fr, n)) || (five && in_z1(ctx.f(&fr, n - 1))) {
            continue;
        }
        let expected = match (five, in_z1(ctx.f(&fr, 1))) {
            (true, true) => CASE_FIVE_IN,
            (true, false) => CASE_FIVE_OUT,
            (false, _) => CASE_ODD,
        };
        let first = *entry.get_or_insert(expected);
        let found = if five {
            five_cycle_attempt(&ctx, &fr, z1)?
        } else {
            odd_cycle_attempt(&ctx, &fr, z1)?.map(|c| (c, CASE_ODD))
        };
        match found {
            Some((c, used)) => {
                let case_id = if used == first {
                    used.to_string()
                } else {
                    format!("{first} -> {used}")
                };
                let mut trace = CaseTrace::from_case(case_id);
                trace.formula_rejected = rejected;
                return Ok((c, trace));
            }
            None => rejected = true,
        }
    }
    fallback(&g, entry.unwrap_or(CASE_ODD), rejected)
}

fn fallback(g: &Graph, case: &str, rejected: bool) -> Result<(SColoring, CaseTrace)> {
    let (c, mut trace) = solver_fallback(g, case)?;
    trace.formula_rejected = rejected;
    Ok((c, trace))
}

/// `P(n, k)` as a 2-factor spec: outer cycle `u_1..u_n` is `C`, the inner
/// cycles are the `Z`s, spokes are the matching. Also returns, for each
/// spec vertex id, the corresponding id in `P(n, k)`.
pub fn gpg_two_factor_spec(n: usize, k: usize) -> Result<(TwoFactorSpec, Vec<usize>)> {
    let (_, inner) = generalized_petersen(n, k)?;
    let flat: Vec<usize> = inner.iter().flatten().copied().collect();
    let mut zpos = vec![0; 2 * n];
    for (gidx, &v) in flat.iter().enumerate() {
        zpos[v] = gidx;
    }
    let spec = TwoFactorSpec::new(
        n,
        inner.iter().map(Vec::len).collect(),
        (0..n).map(|i| zpos[n + i]).collect(),
    )?;
    let to_gpg = (0..n).chain(flat).collect();
    Ok((spec, to_gpg))
}

/// (1,1,2,2)-coloring of the generalized Petersen graph `P(n, k)` for
/// `n` not a multiple of 5.
pub fn color_gpg_1122(n: usize, k: usize) -> Result<(SColoring, CaseTrace)> {
    if n.is_multiple_of(5) {
        return Err(Error::HypothesisViolated(format!(
            "P({n},{k}): n is a multiple of 5, so the inner cycles may be 5-cycles"
        )));
    }
    let (gpg, _) = generalized_petersen(n, k)?;
    let (spec, to_gpg) = gpg_two_factor_spec(n, k)?;
    let (c, trace) = color_two_factor_1122(&spec)?;
    let mut class_of = vec![0; 2 * n];
    for (v, &w) in to_gpg.iter().enumerate() {
        class_of[w] = c.class(v);
    }
    let mapped = SColoring::new(c.packing().clone(), class_of)?;
    match verify_s_coloring(&gpg, &mapped)? {
        crate::coloring::Verdict::Ok => Ok((mapped, trace)),
        crate::coloring::Verdict::Violations(v) => Err(Error::InvalidColoring(v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_spec(n: usize, z: Vec<usize>, seed: u64) -> TwoFactorSpec {
        let mut m: Vec<usize> = (0..n).collect();
        m.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        TwoFactorSpec::new(n, z, m).unwrap()
    }

    #[test]
    fn single_cycle_matches_prism() {
        let spec = TwoFactorSpec::new(7, vec![7], vec![0, 3, 5, 1, 6, 2, 4]).unwrap();
        let (c, t) = color_two_factor_1122(&spec).unwrap();
        let (p, pt) = color_prism_1122(&spec.as_prism().unwrap()).unwrap();
        assert_eq!(Some(&c), p.coloring());
        assert_eq!(t, pt);
    }

    #[test]
    fn random_specs_need_no_solver() {
        for (n, z) in [
            (6, vec![3, 3]),
            (8, vec![4, 4]),
            (8, vec![5, 3]),
            (9, vec![3, 3, 3]),
            (11, vec![5, 6]),
            (12, vec![4, 3, 5]),
            (12, vec![3, 3, 3, 3]),
            (14, vec![7, 7]),
            (16, vec![5, 11]),
            (12, vec![4, 8]),
        ] {
            for seed in 0..40 {
                let spec = random_spec(n, z.clone(), seed);
                let (c, trace) = color_two_factor_1122(&spec).unwrap();
                assert!(!trace.fallback_used, "{spec:?} {trace:?}");
                let g = two_factor_graph(&spec).unwrap();
                assert!(verify_s_coloring(&g, &c).unwrap().is_ok());
            }
        }
    }

    #[test]
    fn triangles_matched_to_one_parity() {
        // each triangle is matched to x's of a single parity: a one-vertex
        // T_i leaves two same-side vertices adjacent, a two-vertex T_i works
        let spec = TwoFactorSpec::new(6, vec![3, 3], vec![3, 0, 5, 2, 4, 1]).unwrap();
        let (_, trace) = color_two_factor_1122(&spec).unwrap();
        assert!(!trace.fallback_used, "{trace:?}");
    }

    #[test]
    fn equal_parity_inner_cycles() {
        // k even: every inner cycle of P(n, k) is matched to one parity class
        for (n, k) in [(14, 2), (14, 4), (22, 2), (28, 4), (11, 2), (19, 2)] {
            let (_, trace) = color_gpg_1122(n, k).unwrap();
            assert!(!trace.fallback_used, "P({n},{k}) {trace:?}");
        }
    }

    #[test]
    fn two_five_cycles_rejected() {
        let spec = random_spec(10, vec![5, 5], 1);
        assert!(matches!(
            color_two_factor_1122(&spec),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn generalized_petersen_examples() {
        for (n, k) in [(7, 2), (9, 3), (8, 2), (12, 4), (6, 2)] {
            let (c, _) = color_gpg_1122(n, k).unwrap();
            let (g, _) = generalized_petersen(n, k).unwrap();
            assert!(verify_s_coloring(&g, &c).unwrap().is_ok());
        }
        assert!(matches!(color_gpg_1122(10, 2), Err(Error::HypothesisViolated(_))));
    }
}
