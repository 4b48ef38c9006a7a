//! Admissible sequences of lattice paths in the coloured `ℓ × ℓ` square.
//!
//! The square has its lower-left corner at the origin. The unit box whose
//! lower-right corner is `(a, b)` (`1 ≤ a ≤ ℓ`, `0 ≤ b < ℓ`) has colour
//! `a + b − ℓ`, so the top-left box is colour 0. The boxes above a path form
//! a partition (aligned at the top-left corner) whose contents are exactly
//! these colours.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::affine::gamma;
use crate::crystal::{is_crystal_element, ytuple_weight, ExtendedYoungDiagram, YTuple};
use crate::shape;
use crate::{Count, Error, Execution, Result};

/// Largest square handled by [`count_t`].
pub const MAX_COUNT_ELL: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    R,
    U,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    moves: Vec<Step>,
}

impl LatticePath {
    pub fn new(moves: Vec<Step>) -> Result<Self> {
        let rights = moves.iter().filter(|&&m| m == Step::R).count();
        if moves.is_empty() || 2 * rights != moves.len() {
            return Err(Error::contract("a path needs equally many R and U moves, at least one each"));
        }
        Ok(LatticePath { moves })
    }

    pub fn ell(&self) -> usize {
        self.moves.len() / 2
    }

    pub fn moves(&self) -> &[Step] {
        &self.moves
    }

    /// `h_a`: the number of U moves before the `a`-th R move, `a = 1..=ℓ`.
    pub fn heights(&self) -> Vec<usize> {
        let mut ups = 0;
        let mut out = Vec::with_capacity(self.ell());
        for m in &self.moves {
            match m {
                Step::U => ups += 1,
                Step::R => out.push(ups),
            }
        }
        out
    }

    /// Inverse of [`LatticePath::heights`].
    pub fn from_heights(ell: usize, heights: &[usize]) -> Result<Self> {
        if heights.len() != ell || heights.windows(2).any(|w| w[0] > w[1]) || heights.iter().any(|&h| h > ell) {
            return Err(Error::contract("heights must be weakly increasing values in 0..=ℓ"));
        }
        let mut moves = Vec::with_capacity(2 * ell);
        let mut ups = 0;
        for &h in heights {
            moves.extend(std::iter::repeat_n(Step::U, h - ups));
            moves.push(Step::R);
            ups = h;
        }
        moves.extend(std::iter::repeat_n(Step::U, ell - ups));
        Self::new(moves)
    }

    /// Column lengths of the partition above the path.
    pub fn region_above(&self) -> Vec<usize> {
        let ell = self.ell();
        let mut cols: Vec<usize> = self.heights().iter().map(|&h| ell - h).collect();
        while cols.last() == Some(&0) {
            cols.pop();
        }
        cols
    }

    /// The path whose upper region is the partition with these column lengths.
    pub fn from_region_above(ell: usize, cols: &[usize]) -> Result<Self> {
        if cols.len() > ell || cols.iter().any(|&c| c > ell) || !shape::is_partition(cols) {
            return Err(Error::contract(format!("region {cols:?} is not a partition inside the {ell}×{ell} square")));
        }
        let heights: Vec<usize> = (0..ell).map(|i| ell - cols.get(i).copied().unwrap_or(0)).collect();
        Self::from_heights(ell, &heights)
    }

    /// Every prefix has at least as many R moves as U moves.
    pub fn is_weakly_below_diagonal(&self) -> bool {
        let mut balance = 0i64;
        self.moves.iter().all(|m| {
            balance += if *m == Step::R { 1 } else { -1 };
            balance >= 0
        })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            f.write_str(if *m == Step::R { "R" } else { "U" })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let moves = s
            .trim()
            .chars()
            .map(|c| match c {
                'R' | 'r' => Ok(Step::R),
                'U' | 'u' => Ok(Step::U),
                other => Err(Error::parse(format!("unexpected move {other:?} in path {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(moves)
    }
}

/// Box counts per colour `j ∈ (−ℓ, ℓ)`; zero counts are omitted.
pub type ColorCount = BTreeMap<i64, u64>;

/// Paths `p₁, …, p_{k−1}` with the region below each path contained in the
/// region below the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathSequence {
    ell: usize,
    k: usize,
    paths: Vec<LatticePath>,
}

impl PathSequence {
    pub fn new(paths: Vec<LatticePath>) -> Result<Self> {
        let first = paths.first().ok_or_else(|| Error::contract("a path sequence needs at least one path"))?;
        let ell = first.ell();
        if paths.iter().any(|p| p.ell() != ell) {
            return Err(Error::contract("all paths must live in the same square"));
        }
        let belows: Vec<Vec<i64>> = paths.iter().map(below_profile).collect();
        for (i, w) in belows.windows(2).enumerate() {
            if w[0].iter().zip(&w[1]).any(|(a, b)| a > b) {
                return Err(Error::contract(format!(
                    "path {} has fewer boxes of some colour below it than path {}",
                    i + 2,
                    i + 1
                )));
            }
        }
        Ok(PathSequence { ell, k: paths.len() + 1, paths })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }
}

impl fmt::Display for PathSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.paths.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for PathSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.split(';').map(str::parse).collect::<Result<Vec<LatticePath>>>()?)
    }
}

fn idx(ell: usize, c: i64) -> usize {
    (c + ell as i64 - 1) as usize
}

/// Colour counts below `p` as a dense vector indexed by `j + ℓ − 1`.
fn below_profile(p: &LatticePath) -> Vec<i64> {
    let ell = p.ell();
    let mut out = vec![0i64; 2 * ell - 1];
    for (a0, &h) in p.heights().iter().enumerate() {
        let a = a0 + 1;
        for b in 0..h {
            out[idx(ell, (a + b) as i64 - ell as i64)] += 1;
        }
    }
    out
}

fn square_profile(ell: usize) -> Vec<i64> {
    (0..2 * ell - 1).map(|i| ell as i64 - (i as i64 - (ell as i64 - 1)).abs()).collect()
}

fn profile_to_map(ell: usize, profile: &[i64]) -> BTreeMap<i64, u64> {
    profile.iter().enumerate().filter(|(_, &v)| v > 0).map(|(i, &v)| (i as i64 - (ell as i64 - 1), v as u64)).collect()
}

fn check_colours(ell: usize, n: usize) -> Result<()> {
    if n < 2 * ell {
        return Err(Error::domain(format!("colours wrap inside the square unless n ≥ 2ℓ (n = {n}, ℓ = {ell})")));
    }
    Ok(())
}

pub fn color_counts_below(p: &LatticePath, ell: usize, n: usize) -> Result<ColorCount> {
    if p.ell() != ell {
        return Err(Error::contract(format!("path {p} does not live in the {ell}×{ell} square")));
    }
    check_colours(ell, n)?;
    Ok(profile_to_map(ell, &below_profile(p)))
}

/// Regions `t₂, …, t_k` (index 0 holds `t₂`) from the below-profiles.
fn regions(belows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![belows[0].clone()];
    for w in belows.windows(2) {
        out.push(w[1].iter().zip(&w[0]).map(|(a, b)| a - b).collect());
    }
    out
}

/// Conditions 2a and 2b for region `t_i`, given `t₂, …, t_{i−1}` in `earlier`.
fn region_ok(ell: usize, earlier: &[Vec<i64>], t: &[i64]) -> bool {
    let sq = square_profile(ell);
    let t2 = &earlier[0];
    let prev = earlier.last().expect("t₂ present");
    for x in 0..t.len() {
        let used: i64 = earlier.iter().map(|r| r[x]).sum();
        if t[x] > prev[x] || t[x] > sq[x] - t2[x] - used {
            return false;
        }
    }
    let centre = ell - 1;
    (centre + 1..t.len()).all(|x| t[x] <= t[x - 1]) && (0..centre).all(|x| t[x] <= t[x + 1])
}

/// `p₁` stays weakly below `y = x`, and conditions 2a, 2b hold for `3 ≤ i ≤ k`.
pub fn is_admissible(seq: &PathSequence, n: usize) -> Result<bool> {
    check_colours(seq.ell, n)?;
    if !seq.paths[0].is_weakly_below_diagonal() {
        return Ok(false);
    }
    let belows: Vec<Vec<i64>> = seq.paths.iter().map(below_profile).collect();
    let ts = regions(&belows);
    Ok((1..ts.len()).all(|i| region_ok(seq.ell, &ts[..i], &ts[i])))
}

fn check_tk(ell: usize, k: usize) -> Result<()> {
    if ell < 1 {
        return Err(Error::domain("ℓ must be at least 1"));
    }
    if k < 2 {
        return Err(Error::domain(format!("path sequences need k ≥ 2, got {k}")));
    }
    Ok(())
}

/// Weakly increasing height vectors in `0..=ℓ`, optionally bounded below
/// pointwise and by the diagonal.
fn height_vectors(ell: usize, floor: Option<&[usize]>, diagonal: bool) -> Vec<Vec<usize>> {
    fn rec(ell: usize, floor: Option<&[usize]>, diagonal: bool, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let a = acc.len();
        if a == ell {
            out.push(acc.clone());
            return;
        }
        let lo = acc.last().copied().unwrap_or(0).max(floor.map_or(0, |f| f[a]));
        let hi = if diagonal { a } else { ell };
        for h in lo..=hi {
            acc.push(h);
            rec(ell, floor, diagonal, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(ell, floor, diagonal, &mut Vec::new(), &mut out);
    out
}

/// `T_ℓ^k`, materialised.
pub fn enumerate_t(ell: usize, k: usize) -> Result<BTreeSet<PathSequence>> {
    check_tk(ell, k)?;
    fn extend(
        ell: usize,
        k: usize,
        heights: &mut Vec<Vec<usize>>,
        belows: &mut Vec<Vec<i64>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if heights.len() == k - 1 {
            out.push(heights.clone());
            return;
        }
        let floor = heights.last().expect("p₁ placed").clone();
        for h in height_vectors(ell, Some(&floor), false) {
            let below = below_profile(&LatticePath::from_heights(ell, &h).expect("valid heights"));
            belows.push(below);
            let ts = regions(belows);
            if region_ok(ell, &ts[..ts.len() - 1], ts.last().expect("nonempty")) {
                heights.push(h);
                extend(ell, k, heights, belows, out);
                heights.pop();
            }
            belows.pop();
        }
    }
    let mut raw = Vec::new();
    for h in height_vectors(ell, None, true) {
        let below = below_profile(&LatticePath::from_heights(ell, &h)?);
        extend(ell, k, &mut vec![h], &mut vec![below], &mut raw);
    }
    let mut out = BTreeSet::new();
    for hs in raw {
        let paths = hs.iter().map(|h| LatticePath::from_heights(ell, h)).collect::<Result<Vec<_>>>()?;
        let seq = PathSequence::new(paths)?;
        debug_assert!(is_admissible(&seq, 2 * ell)?);
        out.insert(seq);
    }
    Ok(out)
}

/// `|T_ℓ^k|`, the multiplicity of `kΛ₀ − γ_ℓ` in `V(kΛ₀)`.
pub fn count_t(ell: usize, k: usize) -> Result<Count> {
    count_t_with(ell, k, Execution::default())
}

const W: usize = 2 * MAX_COUNT_ELL - 1;
type Profile = [u8; W];
type Cols = [u8; MAX_COUNT_ELL];

/// Chain counter for one fixed `p₁`.
///
/// Every region is a partition, so `t_i ≤ t_{i−1}` is containment and the
/// 2a bound reads `A_{i−1} ≥ t₂`, where `A_i` is the region above `p_i`.
/// The state `(i, A_{i−2}, t_{i−1})` determines the number of completions.
struct ChainCounter {
    ell: usize,
    k: usize,
    t2: Profile,
    memo: HashMap<(u8, Profile, Cols), u128>,
}

impl ChainCounter {
    fn count(&mut self, i: usize, above: &Profile, prev: &Cols) -> u128 {
        if i > self.k || prev[0] == 0 {
            // Only empty regions remain.
            return 1;
        }
        let key = (i as u8, *above, *prev);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0u128;
        let mut cols = [0u8; MAX_COUNT_ELL];
        let mut rest = *above;
        self.fill(i, 0, prev, &mut cols, &mut rest, &mut total);
        self.memo.insert(key, total);
        total
    }

    /// Chooses column `col` of `t_i ⊆ prev`, keeping `A − t_i ≥ t₂`.
    fn fill(&mut self, i: usize, col: usize, prev: &Cols, cols: &mut Cols, rest: &mut Profile, total: &mut u128) {
        if is_partition_profile(self.ell, rest) {
            *total += self.count(i + 1, &rest.clone(), &cols.clone());
        }
        if col >= self.ell {
            return;
        }
        let cap = prev[col].min(if col == 0 { u8::MAX } else { cols[col - 1] });
        let mut placed = 0u8;
        for len in 1..=cap {
            let x = col as i64 - (len as i64 - 1) + MAX_COUNT_ELL as i64 - 1;
            let x = x as usize;
            if rest[x] == 0 || rest[x] - 1 < self.t2[x] {
                break;
            }
            rest[x] -= 1;
            placed = len;
            cols[col] = len;
            self.fill(i, col + 1, prev, cols, rest, total);
        }
        for len in (1..=placed).rev() {
            let x = (col as i64 - (len as i64 - 1) + MAX_COUNT_ELL as i64 - 1) as usize;
            rest[x] += 1;
        }
        cols[col] = 0;
    }
}

/// Diagonal counts of a partition step by at most one, moving outward from content 0.
fn is_partition_profile(ell: usize, p: &Profile) -> bool {
    let c0 = MAX_COUNT_ELL - 1;
    for x in c0..c0 + ell {
        let next = p[x + 1];
        if p[x] < next || p[x] - next > 1 {
            return false;
        }
    }
    for x in (c0 + 1 - ell..=c0).rev() {
        let next = p[x - 1];
        if p[x] < next || p[x] - next > 1 {
            return false;
        }
    }
    true
}

fn to_profile(ell: usize, cols: &[usize]) -> Profile {
    let mut p = [0u8; W];
    for c in shape::contents(cols) {
        debug_assert!(c.unsigned_abs() < ell as u64);
        p[(c + MAX_COUNT_ELL as i64 - 1) as usize] += 1;
    }
    p
}

fn to_cols(cols: &[usize]) -> Cols {
    let mut out = [0u8; MAX_COUNT_ELL];
    for (o, &c) in out.iter_mut().zip(cols) {
        *o = c as u8;
    }
    out
}

pub fn count_t_with(ell: usize, k: usize, exec: Execution) -> Result<Count> {
    check_tk(ell, k)?;
    if ell > MAX_COUNT_ELL {
        return Err(Error::domain(format!("count_t supports ℓ ≤ {MAX_COUNT_ELL}, got {ell}")));
    }
    let firsts = height_vectors(ell, None, true);
    if k == 2 {
        return Ok(BigUint::from(firsts.len()));
    }
    let square: Vec<usize> = vec![ell; ell];
    let sq = to_profile(ell, &square);
    let total = exec.sum(&firsts, |h| {
        let a1_cols = LatticePath::from_heights(ell, h).expect("valid heights").region_above();
        let a1 = to_profile(ell, &a1_cols);
        let mut t2 = [0u8; W];
        for x in 0..W {
            t2[x] = sq[x] - a1[x];
        }
        let t2_cols = shape::from_content_counts(&profile_map(&t2)).expect("complement of a partition in the square");
        let mut counter = ChainCounter { ell, k, t2, memo: HashMap::new() };
        counter.count(3, &a1, &to_cols(&t2_cols))
    });
    Ok(BigUint::from(total))
}

fn profile_map(p: &Profile) -> BTreeMap<i64, u64> {
    p.iter()
        .enumerate()
        .filter(|(_, &v)| v > 0)
        .map(|(x, &v)| (x as i64 - (MAX_COUNT_ELL as i64 - 1), v as u64))
        .collect()
}

/// Region below `p₁` becomes `Y₂`, the region between `p_{i−2}` and `p_{i−1}`
/// becomes `Y_i`, and the region above `p_{k−1}` becomes `Y₁`.
pub fn paths_to_ytuple(seq: &PathSequence, n: usize) -> Result<YTuple> {
    if !is_admissible(seq, n)? {
        return Err(Error::contract(format!("path sequence {seq} is not admissible")));
    }
    let ell = seq.ell;
    let belows: Vec<Vec<i64>> = seq.paths.iter().map(below_profile).collect();
    let to_diagram = |profile: &[i64]| -> Result<ExtendedYoungDiagram> {
        let cols = shape::from_content_counts(&profile_to_map(ell, profile))
            .ok_or_else(|| Error::Internal(format!("region colours of {seq} do not form a diagram")))?;
        ExtendedYoungDiagram::from_column_lengths(&cols)
    };
    let top: Vec<i64> = square_profile(ell).iter().zip(belows.last().expect("nonempty")).map(|(s, b)| s - b).collect();
    let mut diagrams = vec![to_diagram(&top)?];
    for t in regions(&belows) {
        diagrams.push(to_diagram(&t)?);
    }
    YTuple::new(n, diagrams)
}

/// Inverse of [`paths_to_ytuple`]: `Y₁` is placed at the top-left corner and
/// `Y_k, …, Y₃` are added in turn, each boundary giving the next lower path.
pub fn ytuple_to_paths(t: &YTuple, ell: usize, n: usize) -> Result<PathSequence> {
    check_colours(ell, n)?;
    let k = t.k();
    if k < 2 {
        return Err(Error::contract("a single diagram has no path sequence"));
    }
    if !is_crystal_element(t, n)? || ytuple_weight(t)? != gamma(n, k, ell)? {
        return Err(Error::contract(format!("{t} is not in the weight space of kΛ₀ − γ_ℓ")));
    }
    let mut above: BTreeMap<i64, u64> = shape::content_counts(&t.diagrams[0].column_lengths());
    let mut paths = Vec::with_capacity(k - 1);
    for i in (2..k).rev() {
        let cols = shape::from_content_counts(&above)
            .ok_or_else(|| Error::contract(format!("{t} does not stack into the square")))?;
        paths.push(LatticePath::from_region_above(ell, &cols)?);
        for (c, v) in shape::content_counts(&t.diagrams[i].column_lengths()) {
            *above.entry(c).or_insert(0) += v;
        }
    }
    let cols = shape::from_content_counts(&above)
        .ok_or_else(|| Error::contract(format!("{t} does not stack into the square")))?;
    paths.push(LatticePath::from_region_above(ell, &cols)?);
    paths.reverse();
    PathSequence::new(paths)
}
