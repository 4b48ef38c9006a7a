//! Affine type-A Cartan data and weights written in the simple-root basis.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Cartan data of sl(n)^, `n ≥ 2`.
///
/// Stores the classical `(n−1)×(n−1)` Cartan matrix; affine entries are
/// computed on demand. For `n = 2` the affine matrix is the `A₁⁽¹⁾` matrix
/// with off-diagonal entries `−2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    n: usize,
    classical: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("rank parameter n must be at least 2, got {n}")));
        }
        let dim = n - 1;
        let classical = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Ok(CartanData { n, classical })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The classical matrix `Å`, rows indexed `1..n` stored at `0..n-1`.
    pub fn classical_matrix(&self) -> &[Vec<i64>] {
        &self.classical
    }

    /// Entry `a_ij` of the affine Cartan matrix, `0 ≤ i, j < n`.
    pub fn affine_entry(&self, i: usize, j: usize) -> i64 {
        let n = self.n;
        if i == j {
            return 2;
        }
        if n == 2 {
            return -2;
        }
        let d = i.abs_diff(j);
        if d == 1 || d == n - 1 {
            -1
        } else {
            0
        }
    }
}

/// The weight `(k−1)Λ₀ + Λ_s − Σ m_i α_i` of level `k`.
///
/// `δ` shifts are the all-ones vector added to `m`; there is no separate
/// `δ` coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlphaExpansion {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub m: Vec<u64>,
}

impl AlphaExpansion {
    pub fn new(n: usize, k: usize, s: usize, m: Vec<u64>) -> Result<Self> {
        check_params(n, k, s)?;
        if m.len() != n {
            return Err(Error::contract(format!("coefficient vector has length {}, expected {n}", m.len())));
        }
        Ok(AlphaExpansion { n, k, s, m })
    }

    /// The highest weight `Λ = (k−1)Λ₀ + Λ_s` itself.
    pub fn highest(n: usize, k: usize, s: usize) -> Result<Self> {
        Self::new(n, k, s, vec![0; n])
    }

    pub fn level(&self) -> usize {
        self.k
    }

    pub fn is_highest(&self) -> bool {
        self.m.iter().all(|&v| v == 0)
    }

    /// Total depth `Σ m_i` below the highest weight.
    pub fn depth(&self) -> u64 {
        self.m.iter().sum()
    }

    /// `⟨Λ, h_i⟩` for the highest weight.
    fn highest_pairing(&self, i: usize) -> i64 {
        let mut v = 0;
        if i == 0 {
            v += self.k as i64 - 1;
        }
        if i == self.s {
            v += 1;
        }
        v
    }

    /// Validates the weight JSON form `{"n":..,"k":..,"s":..,"m":[..]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: AlphaExpansion = serde_json::from_str(text).map_err(|e| Error::parse(format!("weight JSON: {e}")))?;
        Self::new(raw.n, raw.k, raw.s, raw.m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("weights always serialize")
    }
}

impl fmt::Display for AlphaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut head = Vec::new();
        let k0 = if self.s == 0 { self.k } else { self.k - 1 };
        match k0 {
            0 => {}
            1 => head.push("Λ0".to_string()),
            c => head.push(format!("{c}Λ0")),
        }
        if self.s != 0 {
            head.push(format!("Λ{}", self.s));
        }
        write!(f, "{}", head.join("+"))?;
        for (i, &c) in self.m.iter().enumerate() {
            match c {
                0 => {}
                1 => write!(f, "-α{i}")?,
                c => write!(f, "-{c}α{i}")?,
            }
        }
        Ok(())
    }
}

fn check_params(n: usize, k: usize, s: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("n must be at least 2, got {n}")));
    }
    if k < 1 {
        return Err(Error::domain("level k must be at least 1"));
    }
    if s >= n {
        return Err(Error::domain(format!("fundamental index s must lie in 0..{n}, got {s}")));
    }
    Ok(())
}

/// Tuple `(x₁, …, x_{n−1})` of nonnegative integers with `x₀ = x_n = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XTuple(Vec<u64>);

impl XTuple {
    pub fn new(x: Vec<u64>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::domain("an XTuple needs at least one entry (n ≥ 2)"));
        }
        Ok(XTuple(x))
    }

    pub fn zero(n: usize) -> Self {
        XTuple(vec![0; n.saturating_sub(1).max(1)])
    }

    /// The rank parameter `n` (tuple length plus one).
    pub fn n(&self) -> usize {
        self.0.len() + 1
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `x_i` with the boundary convention `x₀ = x_n = 0`; `i` is 1-based.
    pub fn get(&self, i: usize) -> u64 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn max_entry(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn reversed(&self) -> Self {
        XTuple(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for XTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for XTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("tuple must be parenthesised: {s:?}")))?;
        let x = inner
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|e| Error::parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        XTuple::new(x)
    }
}

/// `(Åx)_i = −x_{i−1} + 2x_i − x_{i+1}` for `i = 1..n−1`.
pub fn classical_apply(cd: &CartanData, x: &XTuple) -> Result<Vec<i64>> {
    if x.n() != cd.n() {
        return Err(Error::contract(format!("tuple of length {} does not match n = {}", x.entries().len(), cd.n())));
    }
    let dim = cd.n() - 1;
    Ok((1..=dim).map(|i| (1..=dim).map(|j| cd.classical[i - 1][j - 1] * x.get(j) as i64).sum()).collect())
}

/// The weight `Λ − ℓα₀ − Σ (ℓ − x_i) α_i` with `ℓ = max x_i`.
pub fn weight_from_x(n: usize, k: usize, s: usize, x: &XTuple) -> Result<AlphaExpansion> {
    check_params(n, k, s)?;
    if x.n() != n {
        return Err(Error::contract(format!("tuple {x} has length {}, expected {}", x.entries().len(), n - 1)));
    }
    let ell = x.max_entry();
    let mut m = Vec::with_capacity(n);
    m.push(ell);
    m.extend(x.entries().iter().map(|&xi| ell - xi));
    AlphaExpansion::new(n, k, s, m)
}

/// Coefficients of `γ_ℓ = ℓα₀ + (ℓ−1)α₁ + ⋯ + α_{ℓ−1} + α_{n−ℓ+1} + ⋯ + (ℓ−1)α_{n−1}`.
pub fn gamma_coefficients(n: usize, ell: usize) -> Result<Vec<u64>> {
    if n < 2 || ell < 1 || ell > n / 2 {
        return Err(Error::domain(format!("γ_ℓ needs 1 ≤ ℓ ≤ ⌊n/2⌋, got n = {n}, ℓ = {ell}")));
    }
    let mut m = vec![0u64; n];
    m[0] = ell as u64;
    for (i, c) in m.iter_mut().enumerate().skip(1) {
        let left = ell.saturating_sub(i);
        let right = ell.saturating_sub(n - i);
        *c = left.max(right) as u64;
    }
    Ok(m)
}

/// The weight `kΛ₀ − γ_ℓ`.
pub fn gamma(n: usize, k: usize, ell: usize) -> Result<AlphaExpansion> {
    AlphaExpansion::new(n, k, 0, gamma_coefficients(n, ell)?)
}

/// `⟨λ, h_i⟩` for every `i ∈ {0, …, n−1}`.
pub fn pairings(cd: &CartanData, w: &AlphaExpansion) -> Result<Vec<i64>> {
    if cd.n() != w.n {
        return Err(Error::contract(format!("weight for n = {} paired with Cartan data for n = {}", w.n, cd.n())));
    }
    Ok((0..w.n)
        .map(|i| {
            let lowered: i64 = (0..w.n).map(|j| w.m[j] as i64 * cd.affine_entry(i, j)).sum();
            w.highest_pairing(i) - lowered
        })
        .collect())
}

pub fn is_dominant(cd: &CartanData, w: &AlphaExpansion) -> Result<bool> {
    Ok(pairings(cd, w)?.iter().all(|&v| v >= 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xt(v: &[u64]) -> XTuple {
        XTuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cartan_matrix_shape() {
        let cd = CartanData::new(5).unwrap();
        let a = cd.classical_matrix();
        for (i, row) in a.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, a[j][i]);
            }
            assert_eq!(row[i], 2);
        }
        assert_eq!(a[0][1], -1);
        assert_eq!(a[0][2], 0);
        assert_eq!(cd.affine_entry(0, 4), -1);
        assert_eq!(CartanData::new(2).unwrap().affine_entry(0, 1), -2);
        assert!(CartanData::new(1).is_err());
    }

    #[test]
    fn classical_apply_examples() {
        let cd3 = CartanData::new(3).unwrap();
        assert_eq!(classical_apply(&cd3, &xt(&[1, 1])).unwrap(), vec![1, 1]);
        let cd5 = CartanData::new(5).unwrap();
        assert_eq!(classical_apply(&cd5, &xt(&[1, 2, 2, 1])).unwrap(), vec![0, 1, 1, 0]);
        let cd2 = CartanData::new(2).unwrap();
        assert_eq!(classical_apply(&cd2, &xt(&[1])).unwrap(), vec![2]);
        assert!(matches!(classical_apply(&cd5, &xt(&[1, 2])), Err(Error::Contract(_))));
    }

    #[test]
    fn weight_from_x_examples() {
        let w = weight_from_x(4, 2, 0, &xt(&[1, 2, 1])).unwrap();
        assert_eq!(w.m, vec![2, 1, 0, 1]);
        let w = weight_from_x(5, 3, 0, &xt(&[0, 0, 0, 0])).unwrap();
        assert_eq!(w.m, vec![0; 5]);
        assert!(w.is_highest());
        let w = weight_from_x(6, 3, 0, &xt(&[2, 4, 3, 2, 1])).unwrap();
        assert_eq!(w.m, vec![4, 2, 0, 1, 2, 3]);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_coefficients(5, 2).unwrap(), vec![2, 1, 0, 0, 1]);
        assert_eq!(gamma_coefficients(4, 1).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(gamma_coefficients(8, 4).unwrap(), vec![4, 3, 2, 1, 0, 1, 2, 3]);
        assert!(matches!(gamma_coefficients(5, 3), Err(Error::Domain(_))));
        assert!(matches!(gamma_coefficients(5, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn gamma_matches_plateau_tuple() {
        for n in 2..=16usize {
            for ell in 1..=n / 2 {
                let x: Vec<u64> = (1..n).map(|i| i.min(n - i).min(ell) as u64).collect();
                let w = weight_from_x(n, 3, 0, &XTuple::new(x).unwrap()).unwrap();
                assert_eq!(w, gamma(n, 3, ell).unwrap(), "n={n} ell={ell}");
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let cd4 = CartanData::new(4).unwrap();
        let top = AlphaExpansion::highest(4, 3, 0).unwrap();
        assert!(is_dominant(&cd4, &top).unwrap());
        let w = AlphaExpansion::new(4, 2, 0, vec![2, 1, 0, 1]).unwrap();
        assert!(is_dominant(&cd4, &w).unwrap());
        // 2Λ₀ − α₀ pairs to (0, 1, 0, 1): dominant, though not maximal.
        let w = AlphaExpansion::new(4, 2, 0, vec![1, 0, 0, 0]).unwrap();
        assert_eq!(pairings(&cd4, &w).unwrap(), vec![0, 1, 0, 1]);
        assert!(is_dominant(&cd4, &w).unwrap());
        let w = AlphaExpansion::new(4, 2, 0, vec![0, 1, 0, 0]).unwrap();
        assert_eq!(pairings(&cd4, &w).unwrap()[1], -2);
        assert!(!is_dominant(&cd4, &w).unwrap());
        let cd5 = CartanData::new(5).unwrap();
        assert!(is_dominant(&cd5, &w).is_err());
    }

    #[test]
    fn rank_two_dominance_uses_affine_a1() {
        let cd = CartanData::new(2).unwrap();
        // 3Λ₀ − α₀: ⟨·,h₀⟩ = 3 − 2 = 1, ⟨·,h₁⟩ = 2.
        let w = AlphaExpansion::new(2, 3, 0, vec![1, 0]).unwrap();
        assert_eq!(pairings(&cd, &w).unwrap(), vec![1, 2]);
        let w = AlphaExpansion::new(2, 1, 0, vec![1, 0]).unwrap();
        assert!(!is_dominant(&cd, &w).unwrap());
    }

    #[test]
    fn text_formats() {
        let x: XTuple = "(1,2,3,2,1)".parse().unwrap();
        assert_eq!(x.entries(), &[1, 2, 3, 2, 1]);
        assert_eq!(x.to_string(), "(1,2,3,2,1)");
        assert!("1,2".parse::<XTuple>().is_err());
        assert!("(1,-2)".parse::<XTuple>().is_err());
        let w = AlphaExpansion::new(4, 2, 0, vec![2, 1, 0, 1]).unwrap();
        let json = w.to_json();
        assert_eq!(json, r#"{"n":4,"k":2,"s":0,"m":[2,1,0,1]}"#);
        assert_eq!(AlphaExpansion::from_json(&json).unwrap(), w);
        assert!(AlphaExpansion::from_json(r#"{"n":4,"k":2,"s":0,"m":[1]}"#).is_err());
        assert_eq!(w.to_string(), "2Λ0-2α0-α1-α3");
    }

    proptest! {
        #[test]
        fn classical_apply_is_linear(
            a in proptest::collection::vec(0u64..50, 1..10),
            b_seed in proptest::collection::vec(0u64..50, 10),
        ) {
            let b: Vec<u64> = b_seed[..a.len()].to_vec();
            let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let cd = CartanData::new(a.len() + 1).unwrap();
            let fa = classical_apply(&cd, &XTuple::new(a).unwrap()).unwrap();
            let fb = classical_apply(&cd, &XTuple::new(b).unwrap()).unwrap();
            let fs = classical_apply(&cd, &XTuple::new(sum).unwrap()).unwrap();
            let added: Vec<i64> = fa.iter().zip(&fb).map(|(x, y)| x + y).collect();
            prop_assert_eq!(fs, added);
        }
    }
}
