//! Counting nonnegative solutions of `Σ c_i n_i = N` (coin change).

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

fn check_parts(parts: &[u64]) -> Result<()> {
    if parts.is_empty() {
        return Err(Error::Invalid("part list is empty".to_string()));
    }
    if parts.contains(&0) {
        return Err(Error::Invalid("parts must be positive".to_string()));
    }
    let distinct: BTreeSet<u64> = parts.iter().copied().collect();
    if distinct.len() != parts.len() {
        return Err(Error::Invalid("parts must be distinct".to_string()));
    }
    Ok(())
}

/// Targets up to this size use the table method; larger ones recurse over
/// the big parts and count the last two in closed form.
const TABLE_LIMIT: u64 = 1 << 20;

/// Number of vectors `n ≥ 0` with `Σ parts[i]·n_i = target`.
pub fn count_partitions(target: u64, parts: &[u64]) -> Result<BigUint> {
    check_parts(parts)?;
    if target <= TABLE_LIMIT {
        return Ok(count_by_table(target as usize, parts));
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(count_by_recursion(target, &sorted))
}

fn count_by_table(t: usize, parts: &[u64]) -> BigUint {
    let mut ways = vec![BigUint::zero(); t + 1];
    ways[0] = BigUint::one();
    for &p in parts {
        let Ok(p) = usize::try_from(p) else { continue };
        for s in p..=t {
            let add = ways[s - p].clone();
            ways[s] += add;
        }
    }
    ways.swap_remove(t)
}

fn count_by_recursion(target: u64, parts: &[u64]) -> BigUint {
    match parts {
        [] => BigUint::from((target == 0) as u8),
        [p] => BigUint::from((target % p == 0) as u8),
        [a, b] => BigUint::from(count_two(target, *a, *b)),
        [p, rest @ ..] => {
            let mut total = BigUint::zero();
            for k in 0..=target / p {
                total += count_by_recursion(target - k * p, rest);
            }
            total
        }
    }
}

/// Solutions of `a·x + b·y = r` with `x, y ≥ 0`.
fn count_two(r: u64, a: u64, b: u64) -> u64 {
    let g = a.gcd(&b);
    if r % g != 0 {
        return 0;
    }
    let (a, b, r) = ((a / g) as i128, (b / g) as i128, (r / g) as i128);
    // smallest x ≥ 0 with a·x ≡ r (mod b)
    let inv = a.extended_gcd(&b).x.rem_euclid(b);
    let x0 = (r % b * inv).rem_euclid(b);
    if a * x0 > r {
        0
    } else {
        ((r - a * x0) / (a * b) + 1) as u64
    }
}

/// Lists the solutions as multiplicity vectors aligned with `parts`, stopping
/// after `limit` of them.
pub fn enumerate_partitions(target: u64, parts: &[u64], limit: usize) -> Result<Vec<Vec<u64>>> {
    check_parts(parts)?;
    let mut out = Vec::new();
    let mut current = vec![0u64; parts.len()];
    fn go(i: usize, rest: u64, parts: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if i == parts.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=rest / parts[i] {
            cur[i] = k;
            go(i + 1, rest - k * parts[i], parts, cur, out, limit);
        }
        cur[i] = 0;
    }
    go(0, target, parts, &mut current, &mut out, limit);
    Ok(out)
}
