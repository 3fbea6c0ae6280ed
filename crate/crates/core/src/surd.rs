//! Exact numbers of the form `p + c·√k`.
//!
//! Comparisons never leave the integers: the radical term is isolated and
//! both sides are squared only after their signs are known. Two surds with
//! different radicands are compared by the same trick applied twice, so the
//! ordering is total over all well-formed values.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::display;
use crate::error::{Error, Result};
use crate::exact::isqrt;

#[derive(Debug, Clone)]
pub struct Surd {
    p: BigInt,
    c: BigInt,
    k: BigInt,
}

impl Surd {
    /// Builds `p + c·√k`. Perfect-square radicands are folded into `p`, and
    /// a vanishing radical term is stored as `(p, 0, 0)`.
    pub fn new(p: BigInt, c: BigInt, k: BigInt) -> Result<Self> {
        if k.is_negative() {
            return Err(Error::NegativeRadicand(k));
        }
        if c.is_zero() || k.is_zero() {
            return Ok(Surd::integer(p));
        }
        let root = isqrt(&k)?;
        if &root * &root == k {
            return Ok(Surd::integer(p + c * root));
        }
        Ok(Surd { p, c, k })
    }

    pub fn integer(p: BigInt) -> Self {
        Surd {
            p,
            c: BigInt::zero(),
            k: BigInt::zero(),
        }
    }

    /// `c·√k`.
    pub fn radical(c: BigInt, k: BigInt) -> Result<Self> {
        Surd::new(BigInt::zero(), c, k)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn is_integer(&self) -> bool {
        self.c.is_zero()
    }

    pub fn add_int(&self, x: &BigInt) -> Surd {
        Surd {
            p: &self.p + x,
            c: self.c.clone(),
            k: self.k.clone(),
        }
    }

    pub fn scale(&self, x: &BigInt) -> Surd {
        if x.is_zero() {
            return Surd::integer(BigInt::zero());
        }
        Surd {
            p: &self.p * x,
            c: &self.c * x,
            k: self.k.clone(),
        }
    }

    /// Sign of the value, as an ordering against zero.
    pub fn signum(&self) -> Ordering {
        sign_one(&self.p, &self.c, &self.k)
    }

    pub fn cmp_int(&self, x: &BigInt) -> Ordering {
        sign_one(&(&self.p - x), &self.c, &self.k)
    }

    pub fn cmp_rational(&self, x: &BigRational) -> Ordering {
        // den > 0, so scaling by it keeps the ordering.
        let den = x.denom();
        sign_one(&(&self.p * den - x.numer()), &(&self.c * den), &self.k)
    }

    /// `floor(self · 10^digits)`.
    pub fn floor_scaled(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10u32).pow(digits);
        let radical = if self.c.is_zero() {
            BigInt::zero()
        } else {
            let sq = &self.c * &self.c * &self.k * &scale * &scale;
            let root = isqrt(&sq).expect("square is nonnegative");
            if self.c.is_negative() {
                if &root * &root == sq {
                    -root
                } else {
                    -(root + 1u32)
                }
            } else {
                root
            }
        };
        &self.p * scale + radical
    }

    /// Decimal rendering with `sig` significant digits. Display only.
    pub fn to_display(&self, sig: usize) -> String {
        display::format_exact(|d| self.floor_scaled(d), self.is_integer(), &self.p, sig)
    }
}

/// Sign of `p + c·√k` for `k >= 0`.
pub(crate) fn sign_one(p: &BigInt, c: &BigInt, k: &BigInt) -> Ordering {
    let sp = sign(p);
    let sc = if k.is_zero() { Ordering::Equal } else { sign(c) };
    if sc == Ordering::Equal {
        return sp;
    }
    if sp == Ordering::Equal || sp == sc {
        return sc;
    }
    // Opposite signs: the larger magnitude wins.
    match (p * p).cmp(&(c * c * k)) {
        Ordering::Greater => sp,
        Ordering::Less => sc,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `g + a·√x + b·√y` for `x, y >= 0`.
pub(crate) fn sign_two(g: &BigInt, a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Ordering {
    let radicals = sign_one(&BigInt::zero(), a, x);
    let radicals = match (radicals, sign_one(&BigInt::zero(), b, y)) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (sa, sb) if sa == sb => sa,
        (sa, sb) => match (a * a * x).cmp(&(b * b * y)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        },
    };
    let sg = sign(g);
    if radicals == Ordering::Equal {
        return sg;
    }
    if sg == Ordering::Equal || sg == radicals {
        return radicals;
    }
    // (a√x + b√y)^2 - g^2 = (a²x + b²y - g²) + 2ab·√(xy)
    let rest = a * a * x + b * b * y - g * g;
    let cross: BigInt = (a * b) << 1u32;
    match sign_one(&rest, &cross, &(x * y)) {
        Ordering::Greater => radicals,
        Ordering::Less => sg,
        Ordering::Equal => Ordering::Equal,
    }
}

fn sign(x: &BigInt) -> Ordering {
    x.cmp(&BigInt::zero())
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Surd {}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        let dp = &self.p - &other.p;
        if self.k == other.k || other.c.is_zero() || self.c.is_zero() {
            let (c, k) = if other.c.is_zero() {
                (self.c.clone(), &self.k)
            } else if self.c.is_zero() {
                (-&other.c, &other.k)
            } else {
                (&self.c - &other.c, &self.k)
            };
            return sign_one(&dp, &c, k);
        }
        sign_two(&dp, &self.c, &self.k, &(-&other.c), &other.k)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_zero() {
            return write!(f, "{}", self.p);
        }
        if !self.p.is_zero() {
            write!(f, "{} ", self.p)?;
            f.write_str(if self.c.is_negative() { "- " } else { "+ " })?;
            write!(f, "{}*sqrt({})", self.c.abs(), self.k)
        } else {
            write!(f, "{}*sqrt({})", self.c, self.k)
        }
    }
}
