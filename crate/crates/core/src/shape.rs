//! Partitions stored as column lengths, and their content profiles.
//!
//! The box in column `i`, row `r` (both 0-based) has content `i − r`.

use std::collections::BTreeMap;

pub(crate) fn is_partition(cols: &[usize]) -> bool {
    cols.windows(2).all(|w| w[0] >= w[1]) && cols.last().is_none_or(|&c| c > 0)
}

pub(crate) fn contents(cols: &[usize]) -> impl Iterator<Item = i64> + '_ {
    cols.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |r| i as i64 - r as i64))
}

pub(crate) fn content_counts(cols: &[usize]) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for c in contents(cols) {
        *out.entry(c).or_insert(0) += 1;
    }
    out
}

/// The unique partition with the given content counts, if any.
///
/// A box `(r, i)` lies on diagonal `i − r` at index `min(r, i)`, so it is
/// present iff that diagonal holds more than `min(r, i)` boxes.
pub(crate) fn from_content_counts(counts: &BTreeMap<i64, u64>) -> Option<Vec<usize>> {
    let d = |c: i64| counts.get(&c).copied().unwrap_or(0);
    if counts.values().any(|&v| v == 0) {
        let trimmed: BTreeMap<i64, u64> = counts.iter().filter(|(_, &v)| v > 0).map(|(&c, &v)| (c, v)).collect();
        return from_content_counts(&trimmed);
    }
    let total: u64 = counts.values().sum();
    let mut cols = Vec::new();
    let mut i = 0usize;
    while d(i as i64) > 0 {
        let mut len = 0usize;
        while (len as u64) < total && d(i as i64 - len as i64) > len.min(i) as u64 {
            len += 1;
        }
        cols.push(len);
        i += 1;
    }
    (is_partition(&cols) && content_counts(&cols) == *counts).then_some(cols)
}

/// Column-wise containment `small ⊆ big`.
pub(crate) fn contains(big: &[usize], small: &[usize]) -> bool {
    small.len() <= big.len() && small.iter().zip(big).all(|(s, b)| s <= b)
}
