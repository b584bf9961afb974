//! Vertex sets `A` of a cycle `C_n = v_1..v_n` whose square `C_n²[A]` is a
//! path or an even cycle while the complement contains few adjacent pairs.
//! These are the building blocks for the class-3/4 part of (1,1,2,2)-colorings
//! of prisms and 2-factor graphs.
//!
//! Indices are 1-based cycle positions throughout this module.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HelpVariant {
    /// `n` even: complement has no adjacent pair, square is an even cycle
    /// (a single edge for `n = 4`).
    A1,
    /// `n` odd: at most one adjacent pair in the complement.
    A2,
    /// `n` odd, `i` even, `i <= n-3`: avoids `v_1, v_i, v_{i+1}`.
    A3,
    /// `n` odd, `i = n-1`: avoids `v_1, v_{n-2}, v_{n-1}`.
    A4,
    /// `n` odd, `i` odd: avoids `v_1, v_i, v_{i+1}`.
    A5,
}

impl HelpVariant {
    /// Variant matching an index `i` for the avoiding sets.
    pub fn for_index(n: usize, i: usize) -> HelpVariant {
        if i % 2 == 1 {
            HelpVariant::A5
        } else if i == n - 1 {
            HelpVariant::A4
        } else {
            HelpVariant::A3
        }
    }

    fn avoids_index(self) -> bool {
        matches!(self, HelpVariant::A3 | HelpVariant::A4 | HelpVariant::A5)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HelpSet {
    pub n: usize,
    pub variant: HelpVariant,
    pub i: Option<usize>,
    /// For the avoiding variants: the neighbor `v_j` of `v_i` outside the set.
    pub j: Option<usize>,
    /// Sorted 1-based positions.
    pub members: Vec<usize>,
}

impl HelpSet {
    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

fn odd_in(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).filter(|j| j % 2 == 1)
}

fn even_in(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).filter(|j| j % 2 == 0)
}

fn raw_members(n: usize, variant: HelpVariant, i: usize) -> Vec<usize> {
    let mut a: Vec<usize> = match variant {
        HelpVariant::A1 => match n {
            4 => vec![1, 3],
            _ if n.is_multiple_of(4) => odd_in(1, n).collect(),
            _ => [1, 2, 4, 5].into_iter().chain(odd_in(7, n)).collect(),
        },
        HelpVariant::A2 => match n {
            3 => vec![1],
            5 => vec![2, 4],
            _ if n % 4 == 1 => [1, 2, 4, 5, 7, 8].into_iter().chain(even_in(10, n)).collect(),
            _ => std::iter::once(1).chain(even_in(4, n - 1)).collect(),
        },
        HelpVariant::A3 => [2, i + 2]
            .into_iter()
            .chain(odd_in(3, i - 1))
            .chain(odd_in(i + 3, n))
            .collect(),
        HelpVariant::A4 if n % 4 == 1 => [2, n - 3, n]
            .into_iter()
            .chain(odd_in(3, n.saturating_sub(4)))
            .collect(),
        HelpVariant::A4 => std::iter::once(n).chain(even_in(2, n - 3)).collect(),
        HelpVariant::A5 => even_in(2, i - 1).chain(odd_in(i + 2, n)).collect(),
    };
    a.sort_unstable();
    a.dedup();
    a
}

fn check_preconditions(n: usize, variant: HelpVariant, i: Option<usize>) -> Result<usize> {
    let bad = |msg: String| Err(Error::InvalidParameter(msg));
    if n < 3 {
        return bad(format!("cycle length {n} < 3"));
    }
    match variant {
        HelpVariant::A1 if n % 2 == 1 => return bad(format!("A1 needs an even cycle, got n={n}")),
        HelpVariant::A2 if n.is_multiple_of(2) => return bad(format!("A2 needs an odd cycle, got n={n}")),
        HelpVariant::A1 | HelpVariant::A2 => return Ok(0),
        _ => {}
    }
    if n.is_multiple_of(2) {
        return bad(format!("{variant:?} needs an odd cycle, got n={n}"));
    }
    let Some(i) = i else {
        return bad(format!("{variant:?} needs an index i"));
    };
    if !(3..n).contains(&i) {
        return bad(format!("index {i} outside 3..={}", n - 1));
    }
    if HelpVariant::for_index(n, i) != variant {
        return bad(format!("index {i} does not fit {variant:?} for n={n}"));
    }
    Ok(i)
}

fn cyc_dist(n: usize, a: usize, b: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

/// Shape of `C_n²[A]`: `Some(true)` for an even cycle, `Some(false)` for a
/// path (including a single vertex), `None` otherwise.
fn square_shape(n: usize, a: &[usize]) -> Option<bool> {
    let k = a.len();
    if k == 0 {
        return None;
    }
    let mut adj = vec![Vec::new(); k];
    let mut m = 0;
    for x in 0..k {
        for y in x + 1..k {
            if cyc_dist(n, a[x], a[y]) <= 2 {
                adj[x].push(y);
                adj[y].push(x);
                m += 1;
            }
        }
    }
    if adj.iter().any(|l| l.len() > 2) {
        return None;
    }
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    if count != k {
        return None;
    }
    match m {
        _ if m + 1 == k => Some(false),
        _ if m == k && k.is_multiple_of(2) && k >= 4 => Some(true),
        _ => None,
    }
}

fn complement_adjacent_pairs(n: usize, a: &[usize]) -> Vec<(usize, usize)> {
    let mut inside = vec![false; n + 1];
    for &v in a {
        inside[v] = true;
    }
    (1..=n)
        .map(|v| (v, v % n + 1))
        .filter(|&(u, v)| !inside[u] && !inside[v])
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect()
}

/// Checks the defining properties of a help set and returns the avoided
/// neighbor `j` for the avoiding variants.
pub fn check_help_set(
    n: usize,
    variant: HelpVariant,
    i: Option<usize>,
    members: &[usize],
) -> Result<Option<usize>> {
    let fail = |what: &str| {
        Err(Error::ConstructionFailed(format!(
            "{variant:?} on C_{n} (i={i:?}) {what}: {members:?}"
        )))
    };
    if members.iter().any(|&v| v == 0 || v > n) {
        return fail("has positions out of range");
    }
    let pairs = complement_adjacent_pairs(n, members);
    let shape = square_shape(n, members);
    if !variant.avoids_index() {
        if pairs.len() > 1 {
            return fail("leaves several adjacent pairs outside");
        }
        if shape.is_none() {
            return fail("does not induce a path or an even cycle in the square");
        }
        return Ok(None);
    }
    let i = i.expect("checked by preconditions");
    if shape != Some(false) {
        return fail("does not induce a path in the square");
    }
    if members.contains(&1) || members.contains(&i) {
        return fail("contains v_1 or v_i");
    }
    let j = match pairs.as_slice() {
        [(a, b)] if (*a == i || *b == i) && b - a == 1 => {
            if *a == i {
                *b
            } else {
                *a
            }
        }
        _ => return fail("does not leave exactly the pair v_i v_j outside"),
    };
    Ok(Some(j))
}

/// The help set of the requested variant, with every defining property
/// checked before returning.
pub fn lemma_help_set(n: usize, variant: HelpVariant, i: Option<usize>) -> Result<HelpSet> {
    let idx = check_preconditions(n, variant, i)?;
    let members = raw_members(n, variant, idx);
    let j = check_help_set(n, variant, i, &members)?;
    Ok(HelpSet {
        n,
        variant,
        i: variant.avoids_index().then_some(idx),
        j,
        members,
    })
}

/// Part-(i) set for any `n >= 3`: A1 for even and A2 for odd cycles.
pub fn cover_set(n: usize) -> Result<HelpSet> {
    let variant = if n.is_multiple_of(2) {
        HelpVariant::A1
    } else {
        HelpVariant::A2
    };
    lemma_help_set(n, variant, None)
}

/// For odd `n ≡ 3 (mod 4)`: the even positions and `v_n`. Unlike
/// [`cover_set`] the complement (the odd positions below `n`) has no
/// adjacent pair; the square is an even cycle (an edge for `n = 3`).
pub fn independent_complement_set(n: usize) -> Result<Vec<usize>> {
    if n % 4 != 3 {
        return Err(Error::InvalidParameter(format!(
            "independent-complement sets need n ≡ 3 (mod 4), got n={n}"
        )));
    }
    Ok(even_in(2, n - 1).chain([n]).collect())
}

/// Avoiding set for odd `n` and `i` in `3..n`.
pub fn avoiding_set(n: usize, i: usize) -> Result<HelpSet> {
    if n.is_multiple_of(2) || !(3..n).contains(&i) {
        return Err(Error::InvalidParameter(format!(
            "avoiding sets need odd n and 3 <= i < n, got n={n}, i={i}"
        )));
    }
    lemma_help_set(n, HelpVariant::for_index(n, i), Some(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independent_complement_sets() {
        for n in (3..=63).filter(|n| n % 4 == 3) {
            let a = independent_complement_set(n).unwrap();
            let outside: Vec<usize> = (1..=n).filter(|v| !a.contains(v)).collect();
            for (x, &u) in outside.iter().enumerate() {
                for &v in &outside[x + 1..] {
                    assert!(cyc_dist(n, u, v) > 1, "n={n}: {u} {v}");
                }
            }
            let want = if n == 3 { Some(false) } else { Some(true) };
            assert_eq!(square_shape(n, &a), want, "n={n}");
        }
        assert!(independent_complement_set(5).is_err());
    }

    #[test]
    fn documented_examples() {
        let a = lemma_help_set(8, HelpVariant::A1, None).unwrap();
        assert_eq!(a.members, vec![1, 3, 5, 7]);
        assert_eq!(square_shape(8, &a.members), Some(true));
        let a = lemma_help_set(6, HelpVariant::A1, None).unwrap();
        assert_eq!(a.members, vec![1, 2, 4, 5]);
        let a = lemma_help_set(9, HelpVariant::A5, Some(5)).unwrap();
        assert_eq!(a.members, vec![2, 4, 7, 9]);
        assert_eq!(a.j, Some(6));
    }

    #[test]
    fn every_admissible_set_up_to_60() {
        for n in 3..=60 {
            cover_set(n).unwrap();
            if n % 2 == 1 {
                for i in 3..n {
                    let a = avoiding_set(n, i).unwrap();
                    let j = a.j.unwrap();
                    assert!(j == i - 1 || j == i + 1);
                    assert!(!a.contains(1) && !a.contains(i) && !a.contains(j));
                }
            }
        }
    }

    #[test]
    fn brute_force_agrees_with_checker() {
        // independent recount of the complement pairs and square edges for
        // a few sets by direct enumeration over positions
        for (n, i) in [(9, 5), (11, 4), (13, 12), (7, 6)] {
            let a = avoiding_set(n, i).unwrap();
            let outside: Vec<usize> = (1..=n).filter(|v| !a.contains(*v)).collect();
            let mut pairs = 0;
            for &u in &outside {
                for &v in &outside {
                    if u < v && (v - u == 1 || (u == 1 && v == n)) {
                        pairs += 1;
                    }
                }
            }
            assert_eq!(pairs, 1);
            let m = a.members.len();
            let mut edges = 0;
            for x in 0..m {
                for y in x + 1..m {
                    let d = a.members[y] - a.members[x];
                    if d.min(n - d) <= 2 {
                        edges += 1;
                    }
                }
            }
            assert_eq!(edges, m - 1);
        }
    }

    #[test]
    fn mismatched_requests_rejected() {
        assert!(lemma_help_set(7, HelpVariant::A1, None).is_err());
        assert!(lemma_help_set(8, HelpVariant::A2, None).is_err());
        assert!(lemma_help_set(9, HelpVariant::A3, Some(5)).is_err());
        assert!(lemma_help_set(9, HelpVariant::A4, Some(6)).is_err());
        assert!(lemma_help_set(9, HelpVariant::A5, None).is_err());
        assert!(lemma_help_set(8, HelpVariant::A5, Some(3)).is_err());
        assert!(avoiding_set(9, 9).is_err());
    }

    #[test]
    fn checker_rejects_bad_sets() {
        assert!(check_help_set(8, HelpVariant::A1, None, &[1, 2, 3]).is_err());
        assert!(check_help_set(9, HelpVariant::A5, Some(5), &[1, 4, 7]).is_err());
    }
}
