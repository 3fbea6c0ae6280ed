//! Exhaustive ground truth for small `n`.
//!
//! Edge subsets of `K_n` are encoded as bitmasks over the `binom(n,2)`
//! vertex pairs. With `n <= 8` there are at most 28 pairs, so masks fit in a
//! `u32` and degree-square sums fit comfortably in a `u64`.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::check_params;
use crate::graph::DegreeSequence;

/// Largest `n` enumerated without an explicit override.
pub const DEFAULT_CAP: u64 = 7;
/// Largest `n` enumerated at all (`2^28` masks for a full sweep).
pub const LARGE_CAP: u64 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub n: u64,
    pub m: u64,
    pub max_value: BigInt,
    pub witness: DegreeSequence,
}

fn cap(allow_large: bool) -> u64 {
    if allow_large {
        LARGE_CAP
    } else {
        DEFAULT_CAP
    }
}

fn check_cap(n: u64, allow_large: bool) -> Result<()> {
    let cap = cap(allow_large);
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    Ok(())
}

/// Vertex pairs of `K_n`, indexed by bit position.
fn pairs(n: usize) -> Vec<(u8, u8)> {
    (0..n as u8)
        .flat_map(|u| (u + 1..n as u8).map(move |v| (u, v)))
        .collect()
}

fn degrees(pairs: &[(u8, u8)], mut mask: u32) -> [u8; LARGE_CAP as usize] {
    let mut d = [0u8; LARGE_CAP as usize];
    while mask != 0 {
        let (u, v) = pairs[mask.trailing_zeros() as usize];
        d[u as usize] += 1;
        d[v as usize] += 1;
        mask &= mask - 1;
    }
    d
}

fn sum_sq(pairs: &[(u8, u8)], mask: u32) -> u64 {
    degrees(pairs, mask).iter().map(|&x| x as u64 * x as u64).sum()
}

/// Next mask with the same popcount (Gosper's hack).
fn next_same_weight(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn witness(n: u64, pairs: &[(u8, u8)], mask: u32) -> DegreeSequence {
    let d = degrees(pairs, mask);
    DegreeSequence(d[..n as usize].iter().map(|&x| x as u64).collect())
}

/// Maximum of the degree-square sum over all graphs on `n` labeled vertices
/// with exactly `m` edges.
pub fn brute_force_max(n: u64, m: u64, allow_large: bool) -> Result<OracleResult> {
    check_params(n, m)?;
    check_cap(n, allow_large)?;
    let pairs = pairs(n as usize);
    let width = pairs.len() as u32;
    let end = 1u64 << width;
    let mut mask: u64 = if m == 0 { 0 } else { (1u64 << m) - 1 };
    let mut best = (0u64, mask as u32);
    let mut first = true;
    while mask < end {
        let v = sum_sq(&pairs, mask as u32);
        if first || v > best.0 {
            best = (v, mask as u32);
            first = false;
        }
        if mask == 0 {
            break;
        }
        mask = next_same_weight(mask);
    }
    Ok(OracleResult {
        n,
        m,
        max_value: BigInt::from(best.0),
        witness: witness(n, &pairs, best.1),
    })
}

/// Per-`m` maxima for `m = 0..=binom(n,2)` from one pass over all masks.
pub fn brute_force_sweep(n: u64, allow_large: bool) -> Result<Vec<OracleResult>> {
    check_params(n, 0)?;
    check_cap(n, allow_large)?;
    let pairs = pairs(n as usize);
    let width = pairs.len();
    const CHUNK: u64 = 1 << 14;
    let total = 1u64 << width;
    let empty = || vec![(0u64, u32::MAX); width + 1];
    // (value, mask) per popcount; u32::MAX marks an empty bucket. Ties keep
    // the smaller mask so the witness does not depend on scheduling.
    let merge = |mut a: Vec<(u64, u32)>, b: Vec<(u64, u32)>| {
        for (x, y) in a.iter_mut().zip(b) {
            if y.1 != u32::MAX && (x.1 == u32::MAX || y.0 > x.0 || (y.0 == x.0 && y.1 < x.1)) {
                *x = y;
            }
        }
        a
    };
    let best = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|chunk| {
            let mut local = empty();
            for mask in chunk * CHUNK..((chunk + 1) * CHUNK).min(total) {
                let mask = mask as u32;
                let v = sum_sq(&pairs, mask);
                let slot = &mut local[mask.count_ones() as usize];
                if slot.1 == u32::MAX || v > slot.0 {
                    *slot = (v, mask);
                }
            }
            local
        })
        .reduce(empty, merge);
    Ok(best
        .into_iter()
        .enumerate()
        .map(|(m, (v, mask))| OracleResult {
            n,
            m: m as u64,
            max_value: BigInt::from(v),
            witness: witness(n, &pairs, mask),
        })
        .collect())
}
