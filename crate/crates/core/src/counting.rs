//! Oracles that share nothing with the series engine: exhaustive enumeration
//! of part multisets, and in-place dynamic-programming tables.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::qseries::Count;

/// Largest `n` accepted by [`enum_count`].
pub const ENUM_LIMIT: usize = 40;

/// How a family may use part value `k`: `None` if not allowed, otherwise the
/// largest multiplicity.
fn part_rule(spec: &FamilySpec, k: u64) -> Option<u64> {
    let unbounded = u64::MAX;
    match *spec {
        FamilySpec::P | FamilySpec::OverP => Some(unbounded),
        FamilySpec::Pd => Some(1),
        FamilySpec::OverPd => Some(2),
        FamilySpec::Po => (k % 2 == 1).then_some(unbounded),
        FamilySpec::QQ => (k % 2 == 1).then_some(1),
        FamilySpec::Bl { ell } => (k % ell != 0).then_some(unbounded),
        FamilySpec::Pcm { m, c } => (k % m == c || k % m == m - c).then_some(unbounded),
    }
}

/// Weight a family gives to a part value used `mult ≥ 1` times.
fn part_weight(spec: &FamilySpec, mult: u64) -> u128 {
    match spec {
        // the first occurrence may be overlined
        FamilySpec::OverP => 2,
        FamilySpec::OverPd if mult == 1 => 2,
        _ => 1,
    }
}

/// Counts the family at `n` by walking every admissible multiset of parts.
pub fn enum_count(spec: &FamilySpec, n: usize) -> Result<Count> {
    if n > ENUM_LIMIT {
        return Err(Error::Guard(format!("enumeration limited to n ≤ {ENUM_LIMIT}, got {n}")));
    }
    Ok(BigInt::from(enumerate(spec, n as u64, n as u64)))
}

/// Weighted number of multisets summing to `remaining` with parts ≤ `max_part`.
fn enumerate(spec: &FamilySpec, remaining: u64, max_part: u64) -> u128 {
    if remaining == 0 {
        return 1;
    }
    let mut total = 0;
    for k in (1..=max_part.min(remaining)).rev() {
        let Some(cap) = part_rule(spec, k) else { continue };
        let mut mult = 1;
        while mult <= cap && mult * k <= remaining {
            total += part_weight(spec, mult) * enumerate(spec, remaining - mult * k, k - 1);
            mult += 1;
        }
    }
    total
}

/// Enumeration table for `0..=n_max`.
pub fn enum_table(spec: &FamilySpec, n_max: usize) -> Result<Vec<Count>> {
    (0..=n_max).map(|n| enum_count(spec, n)).collect()
}

/// Family counts `0..=n_max` by in-place knapsack updates.
pub fn dp_table(spec: &FamilySpec, n_max: usize) -> Vec<Count> {
    let mut table = vec![BigInt::zero(); n_max + 1];
    table[0] = BigInt::one();
    for k in 1..=n_max {
        let Some(cap) = part_rule(spec, k as u64) else { continue };
        match spec {
            FamilySpec::OverP => {
                use_at_most_once(&mut table, k);
                use_unbounded(&mut table, k);
            }
            _ if cap == u64::MAX => use_unbounded(&mut table, k),
            _ => (0..cap).for_each(|_| use_at_most_once(&mut table, k)),
        }
    }
    table
}

// t[n] += t[n−k], ascending: part k may repeat.
fn use_unbounded(table: &mut [BigInt], k: usize) {
    for n in k..table.len() {
        let prev = table[n - k].clone();
        table[n] += prev;
    }
}

// t[n] += t[n−k], descending: part k used at most once per pass.
fn use_at_most_once(table: &mut [BigInt], k: usize) {
    for n in (k..table.len()).rev() {
        let prev = table[n - k].clone();
        table[n] += prev;
    }
}
