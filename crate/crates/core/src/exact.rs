//! Integer closed forms for `f(n, m)`.
//!
//! Every edge count splits uniquely as `m = r(r-1)/2 + q` with `0 <= q < r`,
//! and the complementary count `binom(n,2) - m` splits the same way into
//! `(s, t)`. The quasi-complete value `C(n, m)` is built on `(r, q)`, the
//! quasi-star value `S(n, m)` on `(s, t)`, and `f(n, m)` is the larger one.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};

/// `m = r(r-1)/2 + q` with `0 <= q < r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriDecomp {
    pub r: BigInt,
    pub q: BigInt,
}

/// `binom(n,2) - m = s(s-1)/2 + t` with `0 <= t < s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoDecomp {
    pub s: BigInt,
    pub t: BigInt,
}

/// Which closed form attains the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    C,
    S,
    Tie,
}

impl Winner {
    pub fn as_str(self) -> &'static str {
        match self {
            Winner::C => "C",
            Winner::S => "S",
            Winner::Tie => "tie",
        }
    }
}

/// `floor(sqrt(x))`, exact for any size of `x`.
pub fn isqrt(x: &BigInt) -> Result<BigInt> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand(x.clone()));
    }
    let v = x.sqrt();
    debug_assert!(&v * &v <= *x && (&v + 1u32) * (&v + 1u32) > *x);
    Ok(v)
}

/// `x(x-1)/2`.
pub fn binom2(x: &BigInt) -> BigInt {
    (x * (x - 1u32)) >> 1
}

/// Number of edges of the complete graph on `n` vertices.
pub fn max_edges(n: u64) -> u128 {
    let n = n as u128;
    n * n.saturating_sub(1) / 2
}

/// Rejects `n = 0` and `m > binom(n,2)`.
pub fn check_params(n: u64, m: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if m as u128 > max_edges(n) {
        return Err(Error::EdgeCountOutOfRange { n, m });
    }
    Ok(())
}

pub fn triangular_decompose(m: &BigInt) -> Result<TriDecomp> {
    if m.is_negative() {
        return Err(Error::NegativeEdgeCount(m.clone()));
    }
    let root = isqrt(&((m << 3u32) + 1u32))?;
    let mut r: BigInt = (root + 1u32) >> 1u32;
    // +-1 correction of the closed-form guess.
    while binom2(&r) > *m {
        r -= 1u32;
    }
    while binom2(&(&r + 1u32)) <= *m {
        r += 1u32;
    }
    let q = m - binom2(&r);
    assert!(!q.is_negative() && q < r, "triangular decomposition out of range");
    Ok(TriDecomp { r, q })
}

pub fn co_decompose(n: u64, m: u64) -> Result<CoDecomp> {
    check_params(n, m)?;
    let rest = BigInt::from(max_edges(n) - m as u128);
    let TriDecomp { r, q } = triangular_decompose(&rest)?;
    Ok(CoDecomp { s: r, t: q })
}

fn c_from(m: &BigInt, tri: &TriDecomp) -> BigInt {
    ((m * (&tri.r - 1u32)) << 1u32) + &tri.q * (&tri.q + 1u32)
}

fn s_from(n: &BigInt, m: &BigInt, co: &CoDecomp) -> BigInt {
    let n1: BigInt = n - 1u32;
    (n * &n1 - (m << 1u32)) * (&co.s - 1u32)
        + &co.t * (&co.t + 1u32)
        + ((m * &n1) << 2u32)
        - &n1 * &n1 * n
}

pub fn value_c(n: u64, m: u64) -> Result<BigInt> {
    check_params(n, m)?;
    let m = BigInt::from(m);
    Ok(c_from(&m, &triangular_decompose(&m)?))
}

pub fn value_s(n: u64, m: u64) -> Result<BigInt> {
    let co = co_decompose(n, m)?;
    Ok(s_from(&n.into(), &m.into(), &co))
}

pub fn f_exact(n: u64, m: u64) -> Result<BigInt> {
    Ok(ClosedForms::new(n, m)?.f().clone())
}

/// Maps `f(n, m)` to `f(n, binom(n,2) - m)`:
/// `f(n, binom(n,2) - m) = f(n, m) - 4(n-1)m + n(n-1)^2`.
pub fn complement_transfer(n: u64, m: u64, f_of_m: &BigInt) -> Result<BigInt> {
    check_params(n, m)?;
    let nb = BigInt::from(n);
    let n1: BigInt = &nb - 1u32;
    Ok(f_of_m - ((BigInt::from(m) * &n1) << 2u32) + &nb * &n1 * &n1)
}

/// Both closed forms and their decompositions for one `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForms {
    pub n: u64,
    pub m: u64,
    pub tri: TriDecomp,
    pub co: CoDecomp,
    pub c: BigInt,
    pub s: BigInt,
}

impl ClosedForms {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        check_params(n, m)?;
        let mb = BigInt::from(m);
        let tri = triangular_decompose(&mb)?;
        let co = co_decompose(n, m)?;
        let c = c_from(&mb, &tri);
        let s = s_from(&n.into(), &mb, &co);
        Ok(ClosedForms { n, m, tri, co, c, s })
    }

    pub fn f(&self) -> &BigInt {
        if self.c >= self.s {
            &self.c
        } else {
            &self.s
        }
    }

    pub fn winner(&self) -> Winner {
        match self.c.cmp(&self.s) {
            std::cmp::Ordering::Greater => Winner::C,
            std::cmp::Ordering::Less => Winner::S,
            std::cmp::Ordering::Equal => Winner::Tie,
        }
    }

    /// Inside the band `|m - n(n-1)/4| < n/2`, where the winner is hard to
    /// predict.
    pub fn is_subtle(&self) -> bool {
        let lhs = 4 * self.m as i128 - 2 * max_edges(self.n) as i128;
        lhs.unsigned_abs() < 2 * self.n as u128
    }
}

/// `n(n-1)^2`, the value of `f` at the complete graph.
pub fn complete_value(n: u64) -> BigInt {
    let n = BigInt::from(n);
    let n1: BigInt = &n - 1u32;
    &n * &n1 * &n1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn tri(m: i64) -> (i64, i64) {
        let d = triangular_decompose(&b(m)).unwrap();
        (d.r.try_into().unwrap(), d.q.try_into().unwrap())
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&b(0)).unwrap(), b(0));
        assert_eq!(isqrt(&b(49)).unwrap(), b(7));
        assert_eq!(isqrt(&b(48)).unwrap(), b(6));
        assert_eq!(isqrt(&b(-1)), Err(Error::NegativeRadicand(b(-1))));
        let big: BigInt = BigInt::from(10u32).pow(40) - 1u32;
        assert_eq!(isqrt(&big).unwrap(), BigInt::from(10u32).pow(20) - 1u32);
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(tri(0), (1, 0));
        assert_eq!(tri(10), (5, 0));
        assert_eq!(tri(7), (4, 1));
        assert!(triangular_decompose(&b(-3)).is_err());
    }

    #[test]
    fn triangular_unique_by_search() {
        // Every pair (r, q) with r <= 10 and 0 <= q < r hits a distinct m.
        for m in 0..45i64 {
            let hits: Vec<(i64, i64)> = (1..=10)
                .flat_map(|r| (0..r).map(move |q| (r, q)))
                .filter(|&(r, q)| r * (r - 1) / 2 + q == m)
                .collect();
            assert_eq!(hits, vec![tri(m)], "m={m}");
        }
    }

    #[test]
    fn co_decompose_examples() {
        let d = co_decompose(5, 4).unwrap();
        assert_eq!((d.s, d.t), (b(4), b(0)));
        let d = co_decompose(5, 10).unwrap();
        assert_eq!((d.s, d.t), (b(1), b(0)));
        let d = co_decompose(5, 6).unwrap();
        assert_eq!((d.s, d.t), (b(3), b(1)));
        assert_eq!(
            co_decompose(5, 11),
            Err(Error::EdgeCountOutOfRange { n: 5, m: 11 })
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(value_c(3, 3).unwrap(), b(12));
        assert_eq!(value_c(6, 7).unwrap(), b(44));
        assert_eq!(value_c(5, 0).unwrap(), b(0));
        assert_eq!(value_s(5, 4).unwrap(), b(20));
        assert_eq!(value_s(5, 6).unwrap(), b(34));
        assert_eq!(value_s(4, 6).unwrap(), b(36));
        assert_eq!(f_exact(5, 4).unwrap(), b(20));
        assert_eq!(f_exact(4, 6).unwrap(), b(36));
        assert_eq!(f_exact(5, 6).unwrap(), b(36));
        assert!(value_c(5, 11).is_err());
        assert!(value_s(5, 11).is_err());
        assert!(f_exact(0, 0).is_err());
    }

    #[test]
    fn degenerate_vertex_counts() {
        assert_eq!(f_exact(1, 0).unwrap(), b(0));
        assert_eq!(f_exact(2, 0).unwrap(), b(0));
        assert_eq!(f_exact(2, 1).unwrap(), b(2));
        assert!(f_exact(1, 1).is_err());
    }

    #[test]
    fn complement_transfer_examples() {
        let f55 = f_exact(5, 5).unwrap();
        assert_eq!(complement_transfer(5, 5, &f55).unwrap(), f55);
        assert_eq!(complement_transfer(4, 0, &b(0)).unwrap(), b(36));
        assert_eq!(complement_transfer(5, 0, &b(0)).unwrap(), b(80));
        assert_eq!(complement_transfer(5, 10, &b(80)).unwrap(), b(0));
    }

    #[test]
    fn binom2_examples() {
        assert_eq!(binom2(&b(0)), b(0));
        assert_eq!(binom2(&b(5)), b(10));
        assert_eq!(binom2(&b(1000)), b(499500));
    }

    #[test]
    fn winner_and_subtle() {
        assert_eq!(ClosedForms::new(5, 4).unwrap().winner(), Winner::S);
        assert_eq!(ClosedForms::new(5, 6).unwrap().winner(), Winner::C);
        assert_eq!(ClosedForms::new(4, 6).unwrap().winner(), Winner::Tie);
        // n = 5: n(n-1)/4 = 5, band is 2.5 < m < 7.5.
        let subtle: Vec<u64> = (0..=10)
            .filter(|&m| ClosedForms::new(5, m).unwrap().is_subtle())
            .collect();
        assert_eq!(subtle, vec![3, 4, 5, 6, 7]);
    }
}
