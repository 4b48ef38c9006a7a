//! Charge-0 extended Young diagrams, their colouring, and the level-`k`
//! crystal `B(kΛ₀)` realised as chains of diagrams.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::affine::{gamma_coefficients, AlphaExpansion};
use crate::shape;
use crate::{Error, Execution, Result};

/// Default cap on search nodes visited by [`enumerate_weight_space`].
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// A weakly increasing sequence `y₀ ≤ y₁ ≤ ⋯ ≤ 0` stabilising at charge 0.
/// Trailing zeros are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ExtendedYoungDiagram {
    columns: Vec<i64>,
}

impl ExtendedYoungDiagram {
    pub fn new(mut columns: Vec<i64>) -> Result<Self> {
        if columns.iter().any(|&y| y > 0) {
            return Err(Error::contract("charge-0 diagram entries must be ≤ 0"));
        }
        if columns.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::contract("diagram entries must be weakly increasing"));
        }
        while columns.last() == Some(&0) {
            columns.pop();
        }
        Ok(ExtendedYoungDiagram { columns })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// From column lengths, which must weakly decrease.
    pub fn from_column_lengths(lengths: &[usize]) -> Result<Self> {
        Self::new(lengths.iter().map(|&l| -(l as i64)).collect())
    }

    pub fn columns(&self) -> &[i64] {
        &self.columns
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        self.columns.iter().map(|&y| (-y) as usize).collect()
    }

    /// `y_i`, which is 0 past the stored columns.
    pub fn get(&self, i: usize) -> i64 {
        self.columns.get(i).copied().unwrap_or(0)
    }

    pub fn box_count(&self) -> u64 {
        self.columns.iter().map(|&y| (-y) as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn contains(&self, other: &Self) -> bool {
        shape::contains(&self.column_lengths(), &other.column_lengths())
    }

    /// `Y[n] = (y_i + n)_{i ≥ 0}`.
    pub fn shift(&self, n: usize) -> ShiftedDiagram {
        ShiftedDiagram { prefix: self.columns.iter().map(|&y| y + n as i64).collect(), charge: n as i64 }
    }
}

impl TryFrom<Vec<i64>> for ExtendedYoungDiagram {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ExtendedYoungDiagram> for Vec<i64> {
    fn from(y: ExtendedYoungDiagram) -> Self {
        y.columns
    }
}

impl fmt::Display for ExtendedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.columns.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for ExtendedYoungDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s.trim()).map_err(|e| Error::parse(format!("diagram {s:?}: {e}")))
    }
}

/// A diagram of charge `n`, used only for comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedDiagram {
    pub prefix: Vec<i64>,
    pub charge: i64,
}

impl ShiftedDiagram {
    pub fn get(&self, i: usize) -> i64 {
        self.prefix.get(i).copied().unwrap_or(self.charge)
    }
}

/// A `k`-tuple `(Y₁, …, Y_k)` in rank-`n` context. The chain condition is not
/// enforced here; see [`is_crystal_element`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct YTuple {
    pub n: usize,
    pub diagrams: Vec<ExtendedYoungDiagram>,
}

impl YTuple {
    pub fn new(n: usize, diagrams: Vec<ExtendedYoungDiagram>) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("n must be at least 2, got {n}")));
        }
        if diagrams.is_empty() {
            return Err(Error::contract("a Y-tuple needs at least one diagram"));
        }
        Ok(YTuple { n, diagrams })
    }

    pub fn k(&self) -> usize {
        self.diagrams.len()
    }

    /// Parses `"[[-2,-1],[-1]]"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let diagrams: Vec<ExtendedYoungDiagram> =
            serde_json::from_str(text.trim()).map_err(|e| Error::parse(format!("Y-tuple {text:?}: {e}")))?;
        Self::new(n, diagrams)
    }
}

impl fmt::Display for YTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.diagrams.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Colour representative in `(−n/2, n/2]`.
pub fn color_rep(c: i64, n: usize) -> i64 {
    let n = n as i64;
    let r = c.rem_euclid(n);
    if 2 * r > n {
        r - n
    } else {
        r
    }
}

/// Box counts per colour; the box in column `i`, row `r` (1-based) has colour `i − r + 1`.
pub fn color_counts(y: &ExtendedYoungDiagram, n: usize) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for c in shape::contents(&y.column_lengths()) {
        *out.entry(color_rep(c, n)).or_insert(0) += 1;
    }
    out
}

fn residue_counts(cols: &[usize], n: usize) -> Vec<u64> {
    let mut m = vec![0u64; n];
    for c in shape::contents(cols) {
        m[c.rem_euclid(n as i64) as usize] += 1;
    }
    m
}

/// `wt(Y) = Λ₀ − Σ c_j α_j`.
pub fn diagram_weight(y: &ExtendedYoungDiagram, n: usize) -> Result<AlphaExpansion> {
    if n < 2 {
        return Err(Error::domain(format!("n must be at least 2, got {n}")));
    }
    AlphaExpansion::new(n, 1, 0, residue_counts(&y.column_lengths(), n))
}

/// `Σ wt(Y_i)`, a weight of level `k`.
pub fn ytuple_weight(t: &YTuple) -> Result<AlphaExpansion> {
    let mut m = vec![0u64; t.n];
    for y in &t.diagrams {
        for (acc, v) in m.iter_mut().zip(residue_counts(&y.column_lengths(), t.n)) {
            *acc += v;
        }
    }
    AlphaExpansion::new(t.n, t.k(), 0, m)
}

/// Membership in `B(kΛ₀)`: `Y₁ ⊇ ⋯ ⊇ Y_k ⊇ Y₁[n]`, and for every `i ≥ 0`
/// some `1 ≤ j ≤ k` has `(Y_{j+1})_i > (Y_j)_{i+1}`, with `Y_{k+1} = Y₁[n]`.
pub fn is_crystal_element(t: &YTuple, n: usize) -> Result<bool> {
    if t.n != n {
        return Err(Error::contract(format!("Y-tuple built for n = {}, queried with n = {n}", t.n)));
    }
    let k = t.k();
    let shifted = t.diagrams[0].shift(n);
    let entry = |j: usize, i: usize| -> i64 {
        if j == k {
            shifted.get(i)
        } else {
            t.diagrams[j].get(i)
        }
    };
    let width = t.diagrams.iter().map(|y| y.columns().len()).max().unwrap_or(0);
    // Past `width` every Y_j is 0 and Y₁[n] is n, so both conditions hold there.
    for i in 0..=width {
        for j in 0..k {
            if entry(j, i) > entry(j + 1, i) {
                return Ok(false);
            }
        }
        if !(0..k).any(|j| entry(j + 1, i) > entry(j, i + 1)) {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Search<'a> {
    n: usize,
    k: usize,
    target: &'a [u64],
    visited: &'a AtomicU64,
    node_budget: u64,
}

impl Search<'_> {
    fn tick(&self) -> Result<()> {
        let v = self.visited.fetch_add(1, Ordering::Relaxed) + 1;
        if v > self.node_budget {
            return Err(Error::ResourceLimit {
                budget: self.node_budget,
                hint: "use the paths backend for larger ℓ and k".into(),
            });
        }
        Ok(())
    }

    /// Every partition inside `bound` (unbounded when `None`) whose residue
    /// counts added to `used` stay within the target.
    fn sub_diagrams(&self, bound: Option<&[usize]>, used: &[u64]) -> Result<Vec<(Vec<usize>, Vec<u64>)>> {
        let mut out = Vec::new();
        let mut cols = Vec::new();
        let mut used = used.to_vec();
        self.fill_columns(bound, &mut cols, &mut used, &mut out)?;
        Ok(out)
    }

    fn fill_columns(
        &self,
        bound: Option<&[usize]>,
        cols: &mut Vec<usize>,
        used: &mut Vec<u64>,
        out: &mut Vec<(Vec<usize>, Vec<u64>)>,
    ) -> Result<()> {
        self.tick()?;
        out.push((cols.clone(), used.clone()));
        let i = cols.len();
        let mut cap = cols.last().copied().unwrap_or(usize::MAX);
        if let Some(b) = bound {
            cap = cap.min(b.get(i).copied().unwrap_or(0));
        }
        let mut added = Vec::new();
        for len in 1..=cap {
            let colour = (i as i64 - (len as i64 - 1)).rem_euclid(self.n as i64) as usize;
            if used[colour] == self.target[colour] {
                break;
            }
            used[colour] += 1;
            added.push(colour);
            cols.push(len);
            self.fill_columns(bound, cols, used, out)?;
            cols.pop();
        }
        for colour in added {
            used[colour] -= 1;
        }
        Ok(())
    }

    fn chains(&self, prefix: &mut Vec<Vec<usize>>, used: &[u64], out: &mut Vec<YTuple>) -> Result<()> {
        if prefix.len() == self.k {
            if used == self.target {
                let diagrams =
                    prefix.iter().map(|c| ExtendedYoungDiagram::from_column_lengths(c)).collect::<Result<Vec<_>>>()?;
                let t = YTuple::new(self.n, diagrams)?;
                if is_crystal_element(&t, self.n)? {
                    out.push(t);
                }
            }
            return Ok(());
        }
        let parent = prefix.last().expect("Y₁ placed first").clone();
        for (cols, next_used) in self.sub_diagrams(Some(&parent), used)? {
            prefix.push(cols);
            self.chains(prefix, &next_used, out)?;
            prefix.pop();
        }
        Ok(())
    }
}

/// `B(kΛ₀)_{kΛ₀ − γ_ℓ}` by exhaustive search.
pub fn enumerate_weight_space(n: usize, k: usize, ell: usize) -> Result<BTreeSet<YTuple>> {
    enumerate_weight_space_with(n, k, ell, DEFAULT_NODE_BUDGET, Execution::default())
}

pub fn enumerate_weight_space_with(
    n: usize,
    k: usize,
    ell: usize,
    node_budget: u64,
    exec: Execution,
) -> Result<BTreeSet<YTuple>> {
    if k < 1 {
        return Err(Error::domain("level k must be at least 1"));
    }
    let target = gamma_coefficients(n, ell)?;
    let visited = AtomicU64::new(0);
    let search = Search { n, k, target: &target, visited: &visited, node_budget };
    let firsts = search.sub_diagrams(None, &vec![0; n])?;
    let parts = exec.try_map(&firsts, |(cols, used)| {
        let mut out = Vec::new();
        search.chains(&mut vec![cols.clone()], used, &mut out)?;
        Ok(out)
    })?;
    Ok(parts.into_iter().flatten().collect())
}
