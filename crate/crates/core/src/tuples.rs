//! Difference-constrained tuple families and the inequality system they solve.
//!
//! Positions are 1-based as in `(x₁, …, x_{n−1})`; vectors store position
//! `i` at index `i − 1`.

use std::collections::BTreeSet;

use crate::affine::{classical_apply, CartanData, XTuple};
use crate::arith::ceil_div;
use crate::{Error, Execution, Result};

/// Reading direction of a difference-constrained set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `I(p, i_max : q, i_min)`: increments in `[i_min, i_max]`, weakly
    /// decreasing left to right.
    Forward,
    /// `I*(p, i_min : q, i_max)`: the reversed tuple lies in `I`.
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ISpec {
    pub p: usize,
    pub q: usize,
    pub i_min: i64,
    pub i_max: i64,
    pub direction: Direction,
}

impl ISpec {
    pub fn forward(p: usize, i_max: i64, q: usize, i_min: i64) -> Self {
        ISpec { p, q, i_min, i_max, direction: Direction::Forward }
    }

    pub fn reversed(p: usize, i_min: i64, q: usize, i_max: i64) -> Self {
        ISpec { p, q, i_min, i_max, direction: Direction::Reversed }
    }

    pub fn len(&self) -> usize {
        self.q + 1 - self.p
    }

    pub fn is_empty(&self) -> bool {
        self.q < self.p
    }
}

/// Membership in `I` or `I*`. Tuples of the wrong length are rejected.
pub fn is_in_i(tuple: &[u64], spec: &ISpec) -> bool {
    if spec.q < spec.p || tuple.len() != spec.len() {
        return false;
    }
    let values: Vec<i64> = match spec.direction {
        Direction::Forward => tuple.iter().map(|&v| v as i64).collect(),
        Direction::Reversed => tuple.iter().rev().map(|&v| v as i64).collect(),
    };
    let diffs: Vec<i64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    diffs.iter().all(|&d| spec.i_min <= d && d <= spec.i_max) && diffs.windows(2).all(|w| w[0] >= w[1])
}

/// Largest `ℓ ≥ 0` with `⌈ℓ/c⌉ + ⌈(ℓ−e)/d⌉ ≤ f`.
///
/// Closed form: with `df + e ≡ m (mod c+d)`, the answer is
/// `max{c(df+e−m)/(c+d), c(df+e−m)/(c+d) + m − d}`.
pub fn max_ell(c: u64, d: u64, e: u64, f: u64) -> Result<u64> {
    if c == 0 || d == 0 {
        return Err(Error::domain("max_ell needs c, d > 0"));
    }
    let (c, d, e, f) = (c as i64, d as i64, e as i64, f as i64);
    if ceil_div(-e, d) > f {
        return Err(Error::domain(format!("no nonnegative ℓ satisfies the bound (e = {e}, f = {f})")));
    }
    let total = d * f + e;
    let m = total.rem_euclid(c + d);
    let base = c * (total - m) / (c + d);
    let ell = base.max(base + m - d);
    debug_assert!(satisfies_ceiling_bound(ell, c, d, e, f));
    debug_assert!(!satisfies_ceiling_bound(ell + 1, c, d, e, f));
    Ok(ell as u64)
}

fn satisfies_ceiling_bound(ell: i64, c: i64, d: i64, e: i64, f: i64) -> bool {
    ceil_div(ell, c) + ceil_div(ell - e, d) <= f
}

/// The five tuple families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    M1,
    M2,
    M3,
    M4,
    M5,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::M1, Family::M2, Family::M3, Family::M4, Family::M5];

    pub fn from_index(i: usize) -> Result<Self> {
        Family::ALL
            .get(i.wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::domain(format!("family index must be 1..=5, got {i}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MFamilyParams {
    pub family: Family,
    pub s: usize,
    pub n: usize,
    pub x1: u64,
    pub xn1: u64,
}

/// All sequences of `len` entries from `start` to `end` whose increments lie in
/// `[dmin, dmax]` and weakly decrease. `len = 1` needs `start == end`.
fn concave_runs(start: i64, end: i64, len: usize, dmin: i64, dmax: i64) -> Vec<Vec<i64>> {
    fn rec(cur: i64, end: i64, steps: usize, cap: i64, dmin: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if steps == 0 {
            if cur == end {
                out.push(acc.clone());
            }
            return;
        }
        let s = steps as i64;
        if cap < dmin || cur + s * dmin > end || cur + s * cap < end {
            return;
        }
        for d in dmin..=cap {
            acc.push(cur + d);
            rec(cur + d, end, steps - 1, d, dmin, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let mut acc = vec![start];
    rec(start, end, len - 1, dmax, dmin, &mut acc, &mut out);
    out
}

/// Decreasing version of [`concave_runs`]: from `start` down to `end` with
/// decrements in `[dmin, dmax]` weakly increasing left to right.
fn concave_descents(start: i64, end: i64, len: usize, dmin: i64, dmax: i64) -> Vec<Vec<i64>> {
    concave_runs(end, start, len, dmin, dmax)
        .into_iter()
        .map(|mut v| {
            v.reverse();
            v
        })
        .collect()
}

fn as_u64(v: &[i64]) -> Vec<u64> {
    v.iter().map(|&x| x as u64).collect()
}

/// Tuples of one family for fixed boundary values `x₁`, `x_{n−1}`.
pub fn enumerate_m(params: &MFamilyParams) -> Result<BTreeSet<XTuple>> {
    let MFamilyParams { family, s, n, x1, xn1 } = *params;
    if n < 2 {
        return Err(Error::domain(format!("n must be at least 2, got {n}")));
    }
    if s >= n {
        return Err(Error::domain(format!("s must lie in 0..{n}, got {s}")));
    }
    let raw = match family {
        Family::M1 => family_one(s, n, x1, xn1),
        Family::M2 => family_two(s, n, x1, xn1),
        Family::M3 | Family::M4 => {
            if s == 0 {
                Vec::new()
            } else {
                let mirrored =
                    if family == Family::M3 { family_one(n - s, n, xn1, x1) } else { family_two(n - s, n, xn1, x1) };
                mirrored
                    .into_iter()
                    .map(|mut v| {
                        v.reverse();
                        v
                    })
                    .collect()
            }
        }
        Family::M5 => family_five(s, n, x1, xn1)?,
    };
    raw.into_iter().map(|v| XTuple::new(as_u64(&v))).collect()
}

/// `⋃ M_j` for fixed boundary values.
pub fn enumerate_union(n: usize, s: usize, x1: u64, xn1: u64) -> Result<BTreeSet<XTuple>> {
    let mut out = BTreeSet::new();
    for family in Family::ALL {
        out.extend(enumerate_m(&MFamilyParams { family, s, n, x1, xn1 })?);
    }
    Ok(out)
}

/// M₁: maximum left of `s`, `x_s` not repeated, first decrement after `s` is `t`.
fn family_one(s: usize, n: usize, x1: u64, xn1: u64) -> Vec<Vec<i64>> {
    let m = n - 1;
    let mut out = Vec::new();
    if s == 0 {
        return out;
    }
    let (x1, xn1) = (x1 as i64, xn1 as i64);
    let (si, ni) = (s as i64, n as i64);
    let xs_hi_left = x1 * (si - 1) - 1;
    // (x_s, t) candidates; when s = n−1 the tail is just x_{n−1} and t = x_{n−1}.
    let mut heads: Vec<(i64, i64)> = Vec::new();
    if s == m {
        if xn1 <= xs_hi_left {
            heads.push((xn1, xn1));
        }
    } else {
        let tail = ni - si - 1;
        let xs_lo = xn1 + tail;
        let xs_hi = xs_hi_left.min(xn1 * (ni - si));
        for xs in xs_lo..=xs_hi {
            let t_lo = 1.max(xs - xn1 * tail);
            let t_hi = (xs - xn1).div_euclid(tail);
            for t in t_lo..=t_hi {
                heads.push((xs, t));
            }
        }
    }
    for (xs, t) in heads {
        let tails: Vec<Vec<i64>> = if s == m {
            vec![vec![xs]]
        } else {
            concave_descents(xs, xn1, n - s, t, xn1)
                .into_iter()
                .filter(|v| v[0] - v[1] == t)
                .filter(|v| is_in_i(&as_u64(v), &ISpec::reversed(s, t, m, xn1)))
                .collect()
        };
        if tails.is_empty() {
            continue;
        }
        // x1 ≥ 1 here because x_s ≥ 0 forces x1(s−1) ≥ 1.
        let ell_hi = match max_ell(x1 as u64, (t + 1) as u64, xs as u64, s as u64) {
            Ok(v) => v as i64,
            Err(_) => continue,
        };
        for ell in x1.max(xs + 1)..=ell_hi {
            for p in 1..s {
                let prefixes: Vec<Vec<i64>> = concave_runs(x1, ell, p, 1, x1)
                    .into_iter()
                    .filter(|v| is_in_i(&as_u64(v), &ISpec::forward(1, x1, p, 1)))
                    .collect();
                if prefixes.is_empty() {
                    continue;
                }
                for q in p..s {
                    let mids: Vec<Vec<i64>> = concave_descents(ell, xs, s - q + 1, 1, t + 1)
                        .into_iter()
                        .filter(|v| is_in_i(&as_u64(v), &ISpec::reversed(q, 1, s, t + 1)))
                        .collect();
                    for pre in &prefixes {
                        for mid in &mids {
                            for tail in &tails {
                                let mut v = pre.clone();
                                v.extend(std::iter::repeat_n(ell, q - p));
                                v.extend_from_slice(&mid[1..]);
                                v.extend_from_slice(&tail[1..]);
                                debug_assert_eq!(v.len(), m);
                                out.push(v);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// M₂: maximum left of `s`, `x_s` repeated to the right.
fn family_two(s: usize, n: usize, x1: u64, xn1: u64) -> Vec<Vec<i64>> {
    let m = n - 1;
    let mut out = Vec::new();
    if s == 0 || s >= m {
        return out;
    }
    let (x1, xn1) = (x1 as i64, xn1 as i64);
    let (si, ni) = (s as i64, n as i64);
    let xs_lo = xn1.max(x1 - si + 1);
    let xs_hi = (xn1 * (ni - si - 1)).min(x1 * (si - 1) - 1);
    for xs in xs_lo..=xs_hi {
        let ell_hi = (x1 * (si + xs)).div_euclid(x1 + 1);
        for ell in x1.max(xs + 1)..=ell_hi {
            for p in 1..s {
                let prefixes = concave_runs(x1, ell, p, 1, x1);
                if prefixes.is_empty() {
                    continue;
                }
                for q in p..s {
                    let mids: Vec<Vec<i64>> = concave_descents(ell, xs, s - q + 1, 1, 1)
                        .into_iter()
                        .filter(|v| is_in_i(&as_u64(v), &ISpec::reversed(q, 1, s, 1)))
                        .collect();
                    if mids.is_empty() {
                        continue;
                    }
                    for r in s + 1..=m {
                        let tails: Vec<Vec<i64>> = concave_descents(xs, xn1, m - r + 1, 1, xn1)
                            .into_iter()
                            .filter(|v| is_in_i(&as_u64(v), &ISpec::reversed(r, 1, m, xn1)))
                            .collect();
                        for pre in &prefixes {
                            if !is_in_i(&as_u64(pre), &ISpec::forward(1, x1, p, 1)) {
                                continue;
                            }
                            for mid in &mids {
                                for tail in &tails {
                                    let mut v = pre.clone();
                                    v.extend(std::iter::repeat_n(ell, q - p));
                                    v.extend_from_slice(&mid[1..]);
                                    v.extend(std::iter::repeat_n(xs, r - s));
                                    v.extend_from_slice(&tail[1..]);
                                    debug_assert_eq!(v.len(), m);
                                    out.push(v);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// M₅: a plateau at the maximum (containing position `s` when `s > 0`).
fn family_five(s: usize, n: usize, x1: u64, xn1: u64) -> Result<Vec<Vec<i64>>> {
    let m = n - 1;
    let lo = x1.max(xn1);
    let hi = if s > 0 {
        (s as u64 * x1).min((n - s) as u64 * xn1)
    } else if x1 == 0 || xn1 == 0 {
        0
    } else {
        max_ell(x1, xn1, 0, n as u64)?
    };
    let (x1, xn1) = (x1 as i64, xn1 as i64);
    let mut out = Vec::new();
    for ell in lo as i64..=hi as i64 {
        for q in 1..=m {
            if s > 0 && q > s {
                break;
            }
            let prefixes: Vec<Vec<i64>> = concave_runs(x1, ell, q, 1, x1)
                .into_iter()
                .filter(|v| is_in_i(&as_u64(v), &ISpec::forward(1, x1, q, 1)))
                .collect();
            if prefixes.is_empty() {
                continue;
            }
            for r in q..=m {
                if s > 0 && r < s {
                    continue;
                }
                let tails: Vec<Vec<i64>> = concave_descents(ell, xn1, m - r + 1, 1, xn1)
                    .into_iter()
                    .filter(|v| is_in_i(&as_u64(v), &ISpec::reversed(r, 1, m, xn1)))
                    .collect();
                for pre in &prefixes {
                    for tail in &tails {
                        let mut v = pre.clone();
                        v.extend(std::iter::repeat_n(ell, r - q));
                        v.extend_from_slice(&tail[1..]);
                        debug_assert_eq!(v.len(), m);
                        out.push(v);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Per-entry search bound for [`enumerate_s_bruteforce`].
pub fn bruteforce_bound(n: usize, x1: u64, xn1: u64) -> u64 {
    (n as u64 + 1) * (x1 + xn1 + 1)
}

/// `S = {x ≥ 0 : (Åx)_i ≥ 0 for i ≠ s, (Åx)_s ≥ −1}` with fixed first and last
/// entries, by exhaustive search over `[0, B]^{n−1}`.
pub fn enumerate_s_bruteforce(n: usize, s: usize, x1: u64, xn1: u64) -> Result<BTreeSet<XTuple>> {
    enumerate_s_bruteforce_with(n, s, x1, xn1, Execution::default())
}

pub fn enumerate_s_bruteforce_with(n: usize, s: usize, x1: u64, xn1: u64, exec: Execution) -> Result<BTreeSet<XTuple>> {
    let cd = CartanData::new(n)?;
    if s >= n {
        return Err(Error::domain(format!("s must lie in 0..{n}, got {s}")));
    }
    let m = n - 1;
    let bound = bruteforce_bound(n, x1, xn1);
    let slack = |i: usize| -> i64 { i64::from(i == s) };
    let accepts = |x: &[u64]| -> bool {
        let tuple = XTuple::new(x.to_vec()).expect("nonempty");
        let ax = classical_apply(&cd, &tuple).expect("dimension matches");
        ax.iter().enumerate().all(|(i, &v)| v >= -slack(i + 1))
    };
    if m == 1 {
        let mut out = BTreeSet::new();
        if x1 == xn1 && accepts(&[x1]) {
            out.insert(XTuple::new(vec![x1])?);
        }
        return Ok(out);
    }
    if x1 > bound || xn1 > bound {
        return Ok(BTreeSet::new());
    }

    // Depth-first fill of positions 2..=m. Row i−1 of the system involves only
    // x_{i−2}, x_{i−1}, x_i, so it is checked as soon as x_i is placed.
    fn fill(
        x: &mut Vec<u64>,
        m: usize,
        bound: u64,
        xn1: u64,
        slack: &dyn Fn(usize) -> i64,
        accepts: &dyn Fn(&[u64]) -> bool,
        out: &mut Vec<XTuple>,
    ) {
        let i = x.len() + 1;
        if i > m {
            if x[m - 1] == xn1 && accepts(x) {
                out.push(XTuple::new(x.clone()).expect("nonempty"));
            }
            return;
        }
        let prev = x[i - 2] as i64;
        let before = if i >= 3 { x[i - 3] as i64 } else { 0 };
        let cap = 2 * prev - before + slack(i - 1);
        if cap < 0 {
            return;
        }
        let hi = (cap as u64).min(bound);
        let range = if i == m { xn1..=xn1.min(hi) } else { 0..=hi };
        for v in range {
            x.push(v);
            fill(x, m, bound, xn1, slack, accepts, out);
            x.pop();
        }
    }

    // Partition the search by the second entry.
    let cap2 = (2 * x1 as i64 + slack(1)).max(-1);
    let seconds: Vec<u64> = if cap2 < 0 {
        Vec::new()
    } else if m == 2 {
        vec![xn1]
    } else {
        (0..=(cap2 as u64).min(bound)).collect()
    };
    let parts = exec.map(&seconds, |&second| {
        let mut out = Vec::new();
        if second as i64 > cap2 {
            return out;
        }
        let mut x = vec![x1, second];
        fill(&mut x, m, bound, xn1, &slack, &accepts, &mut out);
        out
    });
    Ok(parts.into_iter().flatten().collect())
}

/// Admissible boundary pairs `(x₁, x_{n−1})` at level `k`:
/// `x₁, x_{n−1} ≥ δ_{s,0}` and `x₁ + x_{n−1} ≤ k − 1 + δ_{s,0}`.
/// For `n = 2` the two values are the same entry, so only `x₁ = x_{n−1}` occurs.
pub fn boundary_pairs(n: usize, k: usize, s: usize) -> Vec<(u64, u64)> {
    let delta = u64::from(s == 0);
    let budget = (k as u64 + delta).saturating_sub(1);
    let mut out = Vec::new();
    for x1 in delta..=budget {
        for xn1 in delta..=budget - x1 {
            if n == 2 && x1 != xn1 {
                continue;
            }
            out.push((x1, xn1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(items: &[&str]) -> BTreeSet<XTuple> {
        items.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn m(family: Family, s: usize, n: usize, x1: u64, xn1: u64) -> BTreeSet<XTuple> {
        enumerate_m(&MFamilyParams { family, s, n, x1, xn1 }).unwrap()
    }

    #[test]
    fn is_in_i_examples() {
        assert!(is_in_i(&[1, 2, 3], &ISpec::forward(1, 1, 3, 1)));
        assert!(is_in_i(&[1, 3, 4], &ISpec::forward(1, 2, 3, 1)));
        assert!(!is_in_i(&[1, 2, 4], &ISpec::forward(1, 2, 3, 1)));
        assert!(is_in_i(&[4, 3, 1], &ISpec::reversed(1, 1, 3, 2)));
        assert!(!is_in_i(&[4, 2, 1], &ISpec::reversed(1, 1, 3, 2)));
        assert!(!is_in_i(&[1, 2], &ISpec::forward(1, 1, 3, 1)));
        assert!(is_in_i(&[7], &ISpec::forward(2, 0, 2, 1)));
    }

    #[test]
    fn max_ell_examples() {
        assert_eq!(max_ell(1, 1, 0, 6).unwrap(), 3);
        assert_eq!(max_ell(1, 2, 0, 6).unwrap(), 4);
        assert_eq!(max_ell(1, 1, 0, 2).unwrap(), 1);
        assert!(max_ell(0, 1, 0, 2).is_err());
    }

    #[test]
    fn max_ell_matches_linear_scan() {
        for c in 1..=6 {
            for d in 1..=6 {
                for e in 0..=8 {
                    for f in 0..=20 {
                        let (ci, di, ei, fi) = (c as i64, d as i64, e as i64, f as i64);
                        let got = max_ell(c, d, e, f).unwrap() as i64;
                        let mut scan = 0;
                        while satisfies_ceiling_bound(scan + 1, ci, di, ei, fi) {
                            scan += 1;
                        }
                        assert_eq!(got, scan, "c={c} d={d} e={e} f={f}");
                        assert!(satisfies_ceiling_bound(got, ci, di, ei, fi));
                        assert!(!satisfies_ceiling_bound(got + 1, ci, di, ei, fi));
                    }
                }
            }
        }
    }

    #[test]
    fn m5_examples() {
        assert_eq!(m(Family::M5, 0, 6, 1, 1), set(&["(1,1,1,1,1)", "(1,2,2,2,1)", "(1,2,3,2,1)"]));
        assert_eq!(m(Family::M5, 0, 5, 1, 2), set(&["(1,2,2,2)", "(1,2,3,2)"]));
        assert_eq!(m(Family::M5, 0, 6, 1, 2), set(&["(1,2,2,2,2)", "(1,2,3,3,2)", "(1,2,3,4,2)"]));
        assert_eq!(m(Family::M5, 0, 2, 1, 1), set(&["(1)"]));
        assert!(m(Family::M5, 0, 2, 1, 2).is_empty());
    }

    #[test]
    fn s_zero_leaves_only_m5() {
        for n in 2..=7 {
            for (x1, xn1) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                for f in [Family::M1, Family::M2, Family::M3, Family::M4] {
                    assert!(m(f, 0, n, x1, xn1).is_empty());
                }
            }
        }
    }

    #[test]
    fn level_two_families() {
        // x₁ = 1, x_{n−1} = 0 puts the maximum left of s with a zero tail.
        assert_eq!(m(Family::M2, 5, 8, 1, 0), set(&["(1,1,1,1,0,0,0)", "(1,2,2,1,0,0,0)"]));
        assert_eq!(m(Family::M4, 3, 8, 0, 1), set(&["(0,0,0,1,1,1,1)", "(0,0,0,1,2,2,1)"]));
        assert!(m(Family::M1, 5, 8, 1, 0).is_empty());
    }

    #[test]
    fn s_at_last_position_uses_t_equal_to_last_entry() {
        assert!(m(Family::M1, 4, 5, 1, 0).contains(&"(1,1,1,0)".parse().unwrap()));
        assert_eq!(enumerate_union(5, 4, 1, 0).unwrap(), enumerate_s_bruteforce(5, 4, 1, 0).unwrap());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(enumerate_s_bruteforce(4, 0, 1, 1).unwrap(), set(&["(1,1,1)", "(1,2,1)"]));
        assert_eq!(enumerate_s_bruteforce(3, 0, 0, 0).unwrap(), set(&["(0,0)"]));
        assert_eq!(enumerate_s_bruteforce(5, 2, 1, 0).unwrap(), enumerate_union(5, 2, 1, 0).unwrap());
        assert_eq!(enumerate_s_bruteforce(2, 1, 3, 3).unwrap(), set(&["(3)"]));
        assert!(enumerate_s_bruteforce(2, 1, 3, 2).unwrap().is_empty());
    }

    #[test]
    fn sequential_and_parallel_bruteforce_agree() {
        for n in 3..=7 {
            for s in 0..n {
                let a = enumerate_s_bruteforce_with(n, s, 2, 1, Execution::Sequential).unwrap();
                let b = enumerate_s_bruteforce_with(n, s, 2, 1, Execution::Parallel).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn bruteforce_satisfies_difference_pattern() {
        for n in 2..=8 {
            for s in 0..n {
                for (x1, xn1) in [(1, 1), (2, 1), (1, 2), (0, 1), (1, 0), (2, 2)] {
                    for x in enumerate_s_bruteforce(n, s, x1, xn1).unwrap() {
                        for j in 1..n {
                            let up = x.get(j + 1) as i64 - x.get(j) as i64;
                            let down = x.get(j) as i64 - x.get(j - 1) as i64;
                            let allowance = i64::from(j == s);
                            assert!(up <= down + allowance, "{x} s={s} j={j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn union_of_families_equals_bruteforce() {
        for n in 2..=9 {
            for s in 0..n {
                for k in 1..=4 {
                    for (x1, xn1) in boundary_pairs(n, k, s) {
                        let union = enumerate_union(n, s, x1, xn1).unwrap();
                        let brute = enumerate_s_bruteforce(n, s, x1, xn1).unwrap();
                        assert_eq!(union, brute, "n={n} s={s} x1={x1} xn1={xn1}");
                    }
                }
            }
        }
    }

    #[test]
    fn families_are_disjoint_for_positive_s() {
        for n in 3..=8 {
            for s in 1..n {
                for (x1, xn1) in boundary_pairs(n, 4, s) {
                    let mut total = 0;
                    for f in Family::ALL {
                        total += m(f, s, n, x1, xn1).len();
                    }
                    assert_eq!(total, enumerate_union(n, s, x1, xn1).unwrap().len());
                }
            }
        }
    }

    #[test]
    fn boundary_pairs_examples() {
        assert_eq!(boundary_pairs(5, 3, 0), vec![(1, 1), (1, 2), (2, 1)]);
        assert_eq!(boundary_pairs(5, 2, 2), vec![(0, 0), (0, 1), (1, 0)]);
        assert_eq!(boundary_pairs(2, 3, 0), vec![(1, 1)]);
        assert_eq!(boundary_pairs(5, 1, 0), vec![]);
        assert_eq!(boundary_pairs(5, 1, 3), vec![(0, 0)]);
    }

    proptest! {
        #[test]
        fn forward_members_are_concave(
            start in 0u64..5,
            diffs in proptest::collection::vec(1u64..4, 1..6),
        ) {
            let mut sorted = diffs.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let mut v = vec![start];
            for d in &sorted {
                v.push(v.last().unwrap() + d);
            }
            let spec = ISpec::forward(1, 3, v.len(), 1);
            prop_assert!(is_in_i(&v, &spec));
            for w in v.windows(3) {
                prop_assert!(-(w[0] as i64) + 2 * w[1] as i64 - w[2] as i64 >= 0);
            }
            let rev: Vec<u64> = v.iter().rev().copied().collect();
            prop_assert!(is_in_i(&rev, &ISpec::reversed(1, 1, v.len(), 3)));
        }
    }
}
