//! Maximal dominant weights of `V((k−1)Λ₀ + Λ_s)` and their counts.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::affine::{weight_from_x, AlphaExpansion};
use crate::arith::{binomial, divisors, euler_phi, gcd};
use crate::tuples::{boundary_pairs, enumerate_s_bruteforce, enumerate_union};
use crate::{Error, Execution, Result};

/// Where the candidate tuples come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TupleSource {
    /// The explicit M₁–M₅ families.
    #[default]
    Families,
    /// Exhaustive search of the inequality system.
    Bruteforce,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxWeightReport {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub weights: BTreeSet<AlphaExpansion>,
    pub count: usize,
    pub formula_count: Option<u64>,
    pub agree: Option<bool>,
}

impl MaxWeightReport {
    /// Weights ordered by depth, then coefficient vector.
    pub fn sorted_weights(&self) -> Vec<&AlphaExpansion> {
        let mut out: Vec<&AlphaExpansion> = self.weights.iter().collect();
        out.sort_by(|a, b| a.depth().cmp(&b.depth()).then_with(|| a.m.cmp(&b.m)));
        out
    }
}

pub fn maximal_dominant_weights(n: usize, k: usize, s: usize) -> Result<MaxWeightReport> {
    maximal_dominant_weights_with(n, k, s, TupleSource::Families)
}

pub fn maximal_dominant_weights_with(n: usize, k: usize, s: usize, source: TupleSource) -> Result<MaxWeightReport> {
    let mut weights = BTreeSet::new();
    weights.insert(AlphaExpansion::highest(n, k, s)?);
    if k >= 2 {
        for (x1, xn1) in boundary_pairs(n, k, s) {
            let tuples = match source {
                TupleSource::Families => enumerate_union(n, s, x1, xn1)?,
                TupleSource::Bruteforce => enumerate_s_bruteforce(n, s, x1, xn1)?,
            };
            for x in &tuples {
                weights.insert(weight_from_x(n, k, s, x)?);
            }
        }
    }
    let formula_count = if s == 0 { Some(count_formula_u64(n, k)?) } else { None };
    let count = weights.len();
    Ok(MaxWeightReport { n, k, s, weights, count, formula_count, agree: formula_count.map(|f| f == count as u64) })
}

/// `1/(n+k) Σ_{d | gcd(n,k)} φ(d) C((n+k)/d, k/d)`.
pub fn count_formula(n: usize, k: usize) -> Result<BigUint> {
    if n < 2 || k < 1 {
        return Err(Error::domain(format!("count formula needs n ≥ 2, k ≥ 1, got n = {n}, k = {k}")));
    }
    let (n, k) = (n as u64, k as u64);
    let mut total = BigUint::zero();
    for d in divisors(gcd(n, k)) {
        total += binomial((n + k) / d, k / d) * euler_phi(d);
    }
    let (q, r) = total.div_rem(&BigUint::from(n + k));
    if !r.is_zero() {
        return Err(Error::Internal(format!("count formula sum not divisible by n + k = {}", n + k)));
    }
    Ok(q)
}

fn count_formula_u64(n: usize, k: usize) -> Result<u64> {
    count_formula(n, k)?
        .to_u64()
        .ok_or_else(|| Error::domain(format!("count formula overflows u64 at n = {n}, k = {k}")))
}

/// Level-3 count from the closed form.
pub fn u_closed_form(n: usize) -> Result<u64> {
    count_formula_u64(n, 3)
}

/// Level-3 count from `u_n = 2u_{n−1} − u_{n−2} ± 1`, with `+1` when
/// `n ≡ 0, 2 (mod 3)` and `−1` when `n ≡ 1 (mod 3)`.
pub fn u_recursive(n: usize) -> Result<u64> {
    const SEED: [i64; 5] = [2, 4, 5, 7, 10];
    if n < 2 {
        return Err(Error::domain(format!("u_n needs n ≥ 2, got {n}")));
    }
    if n <= 6 {
        return Ok(SEED[n - 2] as u64);
    }
    let (mut prev, mut cur) = (SEED[3], SEED[4]);
    for i in 7..=n {
        let step = if i % 3 == 1 { -1 } else { 1 };
        let next = 2 * cur - prev + step;
        prev = cur;
        cur = next;
    }
    Ok(cur as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub n: usize,
    pub k: usize,
    pub enumerated: usize,
    pub formula: u64,
    pub agree: bool,
}

/// Compares enumeration with [`count_formula`] for `2 ≤ n ≤ n_max`, `1 ≤ k ≤ k_max`, `s = 0`.
pub fn verify_count_conjecture(n_max: usize, k_max: usize) -> Result<Vec<CountCheck>> {
    verify_count_conjecture_with(n_max, k_max, Execution::default())
}

pub fn verify_count_conjecture_with(n_max: usize, k_max: usize, exec: Execution) -> Result<Vec<CountCheck>> {
    let grid: Vec<(usize, usize)> = (2..=n_max).flat_map(|n| (1..=k_max).map(move |k| (n, k))).collect();
    exec.try_map(&grid, |&(n, k)| {
        let report = maximal_dominant_weights(n, k, 0)?;
        let formula = report.formula_count.expect("s = 0");
        Ok(CountCheck { n, k, enumerated: report.count, formula, agree: report.agree == Some(true) })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{gamma, is_dominant, CartanData};

    fn explicit(n: usize, s: usize, ell: u64, x: impl Fn(usize) -> u64) -> AlphaExpansion {
        let mut m = vec![ell];
        m.extend((1..n).map(|i| ell - x(i)));
        AlphaExpansion::new(n, 2, s, m).unwrap()
    }

    fn level_two_expected(n: usize, s: usize) -> BTreeSet<AlphaExpansion> {
        let mut out = BTreeSet::new();
        out.insert(AlphaExpansion::highest(n, 2, s).unwrap());
        if s == 0 {
            for ell in 1..=(n / 2) as u64 {
                out.insert(explicit(n, 0, ell, |i| (i as u64).min(ell).min((n - i) as u64)));
            }
            return out;
        }
        for ell in 1..=(s / 2) as u64 {
            out.insert(explicit(n, s, ell, |i| if i >= s { 0 } else { (i as u64).min(ell).min((s - i) as u64) }));
        }
        for ell in 1..=((n - s) / 2) as u64 {
            out.insert(explicit(n, s, ell, |i| if i <= s { 0 } else { ((i - s) as u64).min(ell).min((n - i) as u64) }));
        }
        out
    }

    #[test]
    fn report_examples() {
        let r = maximal_dominant_weights(4, 2, 0).unwrap();
        assert_eq!(r.count, 3);
        let expected: BTreeSet<_> =
            [AlphaExpansion::highest(4, 2, 0).unwrap(), gamma(4, 2, 1).unwrap(), gamma(4, 2, 2).unwrap()]
                .into_iter()
                .collect();
        assert_eq!(r.weights, expected);
        assert_eq!(maximal_dominant_weights(6, 3, 0).unwrap().count, 10);
        let r = maximal_dominant_weights(2, 1, 0).unwrap();
        assert_eq!(r.count, 1);
        assert!(r.weights.iter().next().unwrap().is_highest());
    }

    #[test]
    fn level_two_explicit_sets() {
        for n in 2..=12 {
            for s in 0..n {
                let r = maximal_dominant_weights(n, 2, s).unwrap();
                assert_eq!(r.weights, level_two_expected(n, s), "n={n} s={s}");
            }
        }
    }

    #[test]
    fn level_two_count_is_half_n_plus_one() {
        for n in 2..=20 {
            assert_eq!(maximal_dominant_weights(n, 2, 0).unwrap().count, n / 2 + 1);
        }
    }

    #[test]
    fn weights_are_dominant_and_contain_highest() {
        for n in 2..=7 {
            let cd = CartanData::new(n).unwrap();
            for k in 1..=4 {
                for s in 0..n {
                    let r = maximal_dominant_weights(n, k, s).unwrap();
                    assert_eq!(r.count, r.weights.len());
                    assert!(r.weights.contains(&AlphaExpansion::highest(n, k, s).unwrap()));
                    for w in &r.weights {
                        assert!(is_dominant(&cd, w).unwrap(), "{w}");
                    }
                }
            }
        }
    }

    #[test]
    fn families_and_bruteforce_give_same_weights() {
        for n in 2..=7 {
            for k in 1..=4 {
                for s in 0..n {
                    let a = maximal_dominant_weights_with(n, k, s, TupleSource::Families).unwrap();
                    let b = maximal_dominant_weights_with(n, k, s, TupleSource::Bruteforce).unwrap();
                    assert_eq!(a.weights, b.weights, "n={n} k={k} s={s}");
                }
            }
        }
    }

    #[test]
    fn count_formula_examples() {
        assert_eq!(count_formula(4, 3).unwrap(), BigUint::from(5u32));
        assert_eq!(count_formula(3, 3).unwrap(), BigUint::from(4u32));
        assert_eq!(count_formula(6, 2).unwrap(), BigUint::from(4u32));
        assert_eq!(count_formula(7, 1).unwrap(), BigUint::from(1u32));
        assert!(count_formula(1, 3).is_err());
    }

    #[test]
    fn u_examples() {
        assert_eq!(u_recursive(5).unwrap(), 7);
        assert_eq!(u_recursive(6).unwrap(), 10);
        assert_eq!(u_recursive(7).unwrap(), 12);
        assert_eq!(u_closed_form(7).unwrap(), 12);
        assert!(u_recursive(1).is_err());
    }

    #[test]
    fn u_forms_agree_with_enumeration() {
        for n in 2..=14 {
            let e = maximal_dominant_weights(n, 3, 0).unwrap().count as u64;
            assert_eq!(u_closed_form(n).unwrap(), e, "n={n}");
            assert_eq!(u_recursive(n).unwrap(), e, "n={n}");
        }
    }

    #[test]
    fn verify_small_grids() {
        let rows = verify_count_conjecture(6, 3).unwrap();
        assert_eq!(rows.len(), 15);
        assert!(rows.iter().all(|r| r.agree));
        let rows = verify_count_conjecture(2, 2).unwrap();
        assert_eq!(rows.last().unwrap().enumerated, 2);
        let seq = verify_count_conjecture_with(8, 4, Execution::Sequential).unwrap();
        let par = verify_count_conjecture_with(8, 4, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}
