//! Permutations avoiding a long decreasing pattern, and the BJS bijection.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::factorial;
use crate::paths::{LatticePath, Step};
use crate::{Count, Error, Execution, Result};

/// Largest `ℓ` accepted by the exhaustive counter.
pub const MAX_BRUTEFORCE_ELL: usize = 12;

/// One-line notation `w₁ w₂ ⋯ w_ℓ` on `{1, …, ℓ}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(w: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; w.len()];
        for &v in &w {
            if v == 0 || v > w.len() || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::contract(format!("{w:?} is not a permutation of 1..={}", w.len())));
            }
        }
        if w.is_empty() {
            return Err(Error::contract("empty permutation"));
        }
        Ok(Permutation(w))
    }

    pub fn identity(ell: usize) -> Self {
        Permutation((1..=ell).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(format!("cannot read permutation {s:?}"));
        let w = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<Vec<_>>>()?
        };
        Self::new(w)
    }
}

/// Patience-sorting update for strictly decreasing subsequences:
/// `tails[j]` is the largest possible last value of one of length `j + 1`.
fn push_tail(tails: &mut Vec<usize>, x: usize) {
    let pos = tails.partition_point(|&t| t > x);
    if pos == tails.len() {
        tails.push(x);
    } else {
        tails[pos] = x;
    }
}

pub fn longest_decreasing(w: &Permutation) -> usize {
    let mut tails = Vec::new();
    for &x in &w.0 {
        push_tail(&mut tails, x);
    }
    tails.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AvoidBackend {
    /// Exhaustive search over permutations.
    #[default]
    Bruteforce,
    /// `Σ f_λ²` over partitions `λ ⊢ ℓ` with at most `k` rows.
    HookLength,
}

/// Number of permutations of `[ℓ]` with no decreasing subsequence of length `k + 1`.
pub fn count_avoiding(ell: usize, k: usize) -> Result<Count> {
    count_avoiding_with(ell, k, AvoidBackend::default(), Execution::default())
}

pub fn count_avoiding_with(ell: usize, k: usize, backend: AvoidBackend, exec: Execution) -> Result<Count> {
    if ell < 1 || k < 1 {
        return Err(Error::domain(format!("need ℓ ≥ 1 and k ≥ 1, got ℓ = {ell}, k = {k}")));
    }
    match backend {
        AvoidBackend::Bruteforce => bruteforce(ell, k, exec).map(BigUint::from),
        AvoidBackend::HookLength => Ok(hook_length_sum(ell, k)),
    }
}

fn bruteforce(ell: usize, k: usize, exec: Execution) -> Result<u128> {
    if ell > MAX_BRUTEFORCE_ELL {
        return Err(Error::ResourceLimit {
            budget: MAX_BRUTEFORCE_ELL as u64,
            hint: "use the hook-length backend".into(),
        });
    }
    fn rec(free: &mut Vec<bool>, tails: &[usize], left: usize, k: usize) -> u128 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for v in 0..free.len() {
            if !free[v] {
                continue;
            }
            let mut next = tails.to_vec();
            push_tail(&mut next, v + 1);
            if next.len() > k {
                continue;
            }
            free[v] = false;
            total += rec(free, &next, left - 1, k);
            free[v] = true;
        }
        total
    }
    let firsts: Vec<usize> = (1..=ell).collect();
    Ok(exec.sum(&firsts, |&first| {
        let mut free = vec![true; ell];
        free[first - 1] = false;
        rec(&mut free, &[first], ell - 1, k)
    }))
}

fn partitions(total: usize, max_part: usize, max_len: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    if max_len == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(total)).rev() {
        for mut rest in partitions(total - first, first, max_len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Standard Young tableaux of shape `rows`, by the hook-length formula.
pub fn standard_tableaux(rows: &[usize]) -> BigUint {
    let size: usize = rows.iter().sum();
    let mut hooks = BigUint::from(1u32);
    for (r, &len) in rows.iter().enumerate() {
        for c in 0..len {
            let below = rows[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= (len - c - 1) + below + 1;
        }
    }
    factorial(size as u64) / hooks
}

fn hook_length_sum(ell: usize, k: usize) -> BigUint {
    let mut total = BigUint::zero();
    for lambda in partitions(ell, ell, k) {
        let f = standard_tableaux(&lambda);
        total += &f * &f;
    }
    total
}

/// All permutations of `[ℓ]` with longest decreasing subsequence at most `k`,
/// in lexicographic order.
pub fn avoiding_permutations(ell: usize, k: usize) -> Vec<Permutation> {
    fn rec(w: &mut Vec<usize>, free: &mut Vec<bool>, tails: &[usize], k: usize, out: &mut Vec<Permutation>) {
        if w.len() == free.len() {
            out.push(Permutation(w.clone()));
            return;
        }
        for v in 0..free.len() {
            if !free[v] {
                continue;
            }
            let mut next = tails.to_vec();
            push_tail(&mut next, v + 1);
            if next.len() > k {
                continue;
            }
            free[v] = false;
            w.push(v + 1);
            rec(w, free, &next, k, out);
            w.pop();
            free[v] = true;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![true; ell], &[], k, &mut out);
    out
}

/// Walks horizontally to `x = c_j + j − 1` and then up to `y = j` for each
/// `j` with `c_j = |{i > j : w_i < w_j}| > 0`, then to `(ℓ, ℓ)`.
pub fn bjs_perm_to_path(w: &Permutation) -> Result<LatticePath> {
    if longest_decreasing(w) >= 3 {
        return Err(Error::domain(format!("{w} contains the pattern 321")));
    }
    let ell = w.len();
    let v = &w.0;
    let mut moves = Vec::with_capacity(2 * ell);
    let (mut x, mut y) = (0usize, 0usize);
    let mut go = |tx: usize, ty: usize, moves: &mut Vec<Step>| -> Result<()> {
        if tx < x || ty < y {
            return Err(Error::Internal(format!("path for {w} would move backwards")));
        }
        moves.extend(std::iter::repeat_n(Step::R, tx - x));
        moves.extend(std::iter::repeat_n(Step::U, ty - y));
        x = tx;
        y = ty;
        Ok(())
    };
    for j in 1..=ell {
        let c = v[j..].iter().filter(|&&later| later < v[j - 1]).count();
        if c > 0 {
            go(c + j - 1, j, &mut moves)?;
        }
    }
    go(ell, ell, &mut moves)?;
    LatticePath::new(moves)
}

/// The top `(v, j)` of each maximal vertical run, other than `(ℓ, ℓ)`, sets
/// `w_j = v + 1`; the other positions take the unused values in increasing order.
pub fn bjs_path_to_perm(p: &LatticePath) -> Result<Permutation> {
    if !p.is_weakly_below_diagonal() {
        return Err(Error::domain(format!("path {p} crosses above the diagonal")));
    }
    let ell = p.ell();
    let mut w = vec![0usize; ell];
    let mut used = vec![false; ell];
    let (mut x, mut y) = (0usize, 0usize);
    let moves = p.moves();
    for (i, m) in moves.iter().enumerate() {
        match m {
            Step::R => x += 1,
            Step::U => y += 1,
        }
        let run_ends = *m == Step::U && moves.get(i + 1) != Some(&Step::U);
        if run_ends && (x, y) != (ell, ell) {
            w[y - 1] = x + 1;
            used[x] = true;
        }
    }
    let mut spare = (1..=ell).filter(|v| !used[v - 1]);
    for slot in w.iter_mut().filter(|s| **s == 0) {
        *slot = spare.next().expect("one spare value per open position");
    }
    Permutation::new(w)
}
