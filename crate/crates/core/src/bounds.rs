//! Upper and lower bounds on `f(n, m)` and exact checkers for the
//! inequalities between them.
//!
//! * de Caen: `D(n, m) = m(2m/(n-1) + n - 2)`, a rational.
//! * The sharp two-branch bound `F(n, m)`: `(2m)^{3/2}` when `4m >= n^2`,
//!   otherwise `(n^2 - 2m)^{3/2} + 4mn - n^3`.
//! * The dense-range pair `m√(8m+1) - 3m <= f <= m√(8m+1) - m`, valid once
//!   `4m >= n(n-1)`.
//!
//! Every checker returns a [`Verdict`]. A [`Verdict::Violated`] carries both
//! sides of the failed relation in exact form.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::display::{self, DISPLAY_DIGITS};
use crate::error::{Error, Result};
use crate::exact::{self, check_params, max_edges, ClosedForms};
use crate::surd::Surd;

/// Reduced fraction with positive denominator.
pub type ExactRational = BigRational;

/// One side of an inequality, kept exact.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Integer(BigInt),
    Rational(BigRational),
    Surd(Surd),
}

impl Quantity {
    pub fn display(&self) -> String {
        match self {
            Quantity::Integer(x) => x.to_string(),
            Quantity::Rational(x) => display::rational(x, DISPLAY_DIGITS),
            Quantity::Surd(x) => x.to_display(DISPLAY_DIGITS),
        }
    }

    /// Exact form: an integer, `num/den`, or `p + c*sqrt(k)`.
    pub fn exact(&self) -> String {
        match self {
            Quantity::Integer(x) => x.to_string(),
            Quantity::Rational(x) => format!("{}/{}", x.numer(), x.denom()),
            Quantity::Surd(x) => x.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// The relation that should hold, e.g. `"lhs <= rhs"`.
    pub relation: &'static str,
    pub lhs: Quantity,
    pub rhs: Quantity,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Holds,
    NotApplicable,
    Violated(Box<Violation>),
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "pass",
            Verdict::NotApplicable => "na",
            Verdict::Violated(_) => "FAIL",
        }
    }

    fn from_relation(
        ok: bool,
        relation: &'static str,
        lhs: impl FnOnce() -> Quantity,
        rhs: impl FnOnce() -> Quantity,
    ) -> Verdict {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Violated(Box::new(Violation {
                relation,
                lhs: lhs(),
                rhs: rhs(),
            }))
        }
    }

    /// First violation wins.
    fn and(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Holds => next(),
            other => other,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which formula `F(n, m)` uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FBranch {
    /// `4m >= n^2`: `(2m)^{3/2}`.
    Dense,
    /// `4m < n^2`: `(n^2 - 2m)^{3/2} + 4mn - n^3`.
    Sparse,
}

impl FBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            FBranch::Dense => "dense",
            FBranch::Sparse => "sparse",
        }
    }
}

pub fn de_caen_d(n: u64, m: u64) -> Result<BigRational> {
    check_params(n, m)?;
    if n <= 1 {
        return Err(Error::DeCaenUndefined(n));
    }
    let (nb, mb) = (BigInt::from(n), BigInt::from(m));
    let n1: BigInt = &nb - 1u32;
    let num = &mb * ((&mb << 1u32) + (&nb - 2u32) * &n1);
    Ok(BigRational::new(num, n1))
}

/// `(2m)^{3/2} = √(8m³)`.
fn dense_branch(m: &BigInt) -> Surd {
    Surd::radical(BigInt::from(1u32), (m * m * m) << 3u32).expect("nonnegative radicand")
}

/// `(n² - 2m)^{3/2} + 4mn - n³`; requires `2m <= n²`.
fn sparse_branch(n: &BigInt, m: &BigInt) -> Surd {
    let base = n * n - (m << 1u32);
    let p = ((m * n) << 2u32) - n * n * n;
    Surd::new(p, BigInt::from(1u32), &base * &base * &base).expect("2m <= n^2")
}

pub fn f_branch(n: u64, m: u64) -> FBranch {
    if 4 * m as u128 >= n as u128 * n as u128 {
        FBranch::Dense
    } else {
        FBranch::Sparse
    }
}

pub fn nikiforov_f(n: u64, m: u64) -> Result<Surd> {
    check_params(n, m)?;
    let (nb, mb) = (BigInt::from(n), BigInt::from(m));
    Ok(match f_branch(n, m) {
        FBranch::Dense => dense_branch(&mb),
        FBranch::Sparse => sparse_branch(&nb, &mb),
    })
}

/// The dense-range pair `m√(8m+1) - 3m` and `m√(8m+1) - m`.
#[derive(Debug, Clone, PartialEq)]
pub struct Theorem1 {
    pub lower: Surd,
    pub upper: Surd,
    /// `4m >= n(n-1)`.
    pub applies: bool,
}

pub fn theorem1_bounds(n: u64, m: u64) -> Result<Theorem1> {
    check_params(n, m)?;
    let mb = BigInt::from(m);
    let root = Surd::radical(mb.clone(), (&mb << 3u32) + 1u32)?;
    Ok(Theorem1 {
        lower: root.add_int(&(-(&mb * 3u32))),
        upper: root.add_int(&(-&mb)),
        applies: 4 * m as u128 >= 2 * max_edges(n),
    })
}

/// All exact values for one `(n, m)`, plus the range flags of each bound.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub forms: ClosedForms,
    /// `None` when `n <= 1`.
    pub d: Option<BigRational>,
    pub f_bound: Surd,
    pub f_branch: FBranch,
    pub th1: Theorem1,
    /// `2m < (n-1)(n-2)`.
    pub bo2_range: bool,
    /// `m^2 > n^3` and `(binom(n,2) - m)^2 > n^3`.
    pub bo4_range: bool,
}

impl BoundReport {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        let forms = ClosedForms::new(n, m)?;
        let d = if n >= 2 { Some(de_caen_d(n, m)?) } else { None };
        let (nn, mm) = (n as u128, m as u128);
        let rest = max_edges(n) - mm;
        let cube = BigInt::from(nn) * nn * nn;
        Ok(BoundReport {
            d,
            f_bound: nikiforov_f(n, m)?,
            f_branch: f_branch(n, m),
            th1: theorem1_bounds(n, m)?,
            bo2_range: n >= 2 && 2 * mm < (nn - 1) * nn.saturating_sub(2),
            bo4_range: n >= 2
                && BigInt::from(mm) * mm > cube
                && BigInt::from(rest) * rest > cube,
            forms,
        })
    }

    pub fn n(&self) -> u64 {
        self.forms.n
    }

    pub fn m(&self) -> u64 {
        self.forms.m
    }

    pub fn f(&self) -> &BigInt {
        self.forms.f()
    }

    fn mb(&self) -> BigInt {
        BigInt::from(self.m())
    }

    /// `m√(8m+1) - 3m <= f <= m√(8m+1) - m` when `4m >= n(n-1)`.
    pub fn bo1(&self) -> Verdict {
        if !self.th1.applies {
            return Verdict::NotApplicable;
        }
        let f = self.f();
        Verdict::from_relation(
            self.th1.lower.cmp_int(f) != Ordering::Greater,
            "lhs <= rhs",
            || Quantity::Surd(self.th1.lower.clone()),
            || Quantity::Integer(f.clone()),
        )
        .and(|| {
            Verdict::from_relation(
                self.th1.upper.cmp_int(f) != Ordering::Less,
                "lhs <= rhs",
                || Quantity::Integer(f.clone()),
                || Quantity::Surd(self.th1.upper.clone()),
            )
        })
    }

    /// `m√(8m+1) - m < D` when `0 < 2m < (n-1)(n-2)`. At `m = 0` both
    /// sides vanish.
    pub fn bo2(&self) -> Verdict {
        let Some(d) = self.d.as_ref().filter(|_| self.bo2_range && self.m() > 0) else {
            return Verdict::NotApplicable;
        };
        Verdict::from_relation(
            self.th1.upper.cmp_rational(d) == Ordering::Less,
            "lhs < rhs",
            || Quantity::Surd(self.th1.upper.clone()),
            || Quantity::Rational(d.clone()),
        )
    }

    /// `F - 4m <= f <= F` for every `(n, m)`.
    pub fn bo3(&self) -> Verdict {
        let f = self.f();
        let lower = self.f_bound.add_int(&(-(self.mb() << 2u32)));
        Verdict::from_relation(
            lower.cmp_int(f) != Ordering::Greater,
            "lhs <= rhs",
            || Quantity::Surd(lower),
            || Quantity::Integer(f.clone()),
        )
        .and(|| {
            Verdict::from_relation(
                self.f_bound.cmp_int(f) != Ordering::Less,
                "lhs <= rhs",
                || Quantity::Integer(f.clone()),
                || Quantity::Surd(self.f_bound.clone()),
            )
        })
    }

    /// `F < D` strictly when `n^{3/2} < m < binom(n,2) - n^{3/2}`.
    pub fn bo4(&self) -> Verdict {
        let Some(d) = self.d.as_ref().filter(|_| self.bo4_range) else {
            return Verdict::NotApplicable;
        };
        Verdict::from_relation(
            self.f_bound.cmp_rational(d) == Ordering::Less,
            "lhs < rhs",
            || Quantity::Surd(self.f_bound.clone()),
            || Quantity::Rational(d.clone()),
        )
    }

    /// `(2m)^{3/2} - 3m < m√(8m+1) - 3m <= C` for `m > 0`.
    pub fn prop2(&self) -> Verdict {
        if self.m() == 0 {
            return Verdict::NotApplicable;
        }
        let mb = self.mb();
        let left = dense_branch(&mb).add_int(&(-(&mb * 3u32)));
        Verdict::from_relation(
            left < self.th1.lower,
            "lhs < rhs",
            || Quantity::Surd(left),
            || Quantity::Surd(self.th1.lower.clone()),
        )
        .and(|| {
            Verdict::from_relation(
                self.th1.lower.cmp_int(&self.forms.c) != Ordering::Greater,
                "lhs <= rhs",
                || Quantity::Surd(self.th1.lower.clone()),
                || Quantity::Integer(self.forms.c.clone()),
            )
        })
    }

    /// `C <= m√(8m+1) - m` everywhere.
    pub fn lemma_pro1(&self) -> Verdict {
        Verdict::from_relation(
            self.th1.upper.cmp_int(&self.forms.c) != Ordering::Less,
            "lhs <= rhs",
            || Quantity::Integer(self.forms.c.clone()),
            || Quantity::Surd(self.th1.upper.clone()),
        )
    }

    /// `S <= (n^2 - 2m)^{3/2} + 4mn - n^3` when `4m <= n^2`.
    pub fn lemma_pro3(&self) -> Verdict {
        let (n, m) = (self.n(), self.m());
        if 4 * m as u128 > n as u128 * n as u128 {
            return Verdict::NotApplicable;
        }
        let bound = sparse_branch(&BigInt::from(n), &self.mb());
        Verdict::from_relation(
            bound.cmp_int(&self.forms.s) != Ordering::Less,
            "lhs <= rhs",
            || Quantity::Integer(self.forms.s.clone()),
            || Quantity::Surd(bound),
        )
    }

    /// `S(n, m) = C(n, binom(n,2) - m) + 4m(n-1) - n(n-1)^2`.
    pub fn identity_sc(&self) -> Verdict {
        let (n, m) = (self.n(), self.m());
        let co_m = (max_edges(n) - m as u128) as u64;
        let c_co = exact::value_c(n, co_m).expect("complementary count is in range");
        let rhs = c_co + ((self.mb() * (n - 1)) << 2u32) - exact::complete_value(n);
        Verdict::from_relation(
            self.forms.s == rhs,
            "lhs == rhs",
            || Quantity::Integer(self.forms.s.clone()),
            || Quantity::Integer(rhs),
        )
    }

    /// `f(n, binom(n,2) - m) = f(n, m) - 4(n-1)m + n(n-1)^2`.
    pub fn identity_complement(&self) -> Verdict {
        let (n, m) = (self.n(), self.m());
        let co_m = (max_edges(n) - m as u128) as u64;
        let lhs = exact::f_exact(n, co_m).expect("complementary count is in range");
        let rhs = exact::complement_transfer(n, m, self.f()).expect("params already checked");
        Verdict::from_relation(
            lhs == rhs,
            "lhs == rhs",
            || Quantity::Integer(lhs),
            || Quantity::Integer(rhs),
        )
    }

    /// `D > (num/den)·f`, not applicable when `n <= 1` or `f = 0`.
    pub fn ratio_exceeds(&self, num: u64, den: u64) -> Verdict {
        let Some(d) = &self.d else {
            return Verdict::NotApplicable;
        };
        if self.f().is_zero() || den == 0 {
            return Verdict::NotApplicable;
        }
        let scaled_f = BigRational::new(self.f() * num, BigInt::from(den));
        Verdict::from_relation(
            *d > scaled_f,
            "lhs > rhs",
            || Quantity::Rational(d.clone()),
            || Quantity::Rational(scaled_f),
        )
    }

    /// `100·D/f` for display, `None` when undefined.
    pub fn ratio_display(&self) -> Option<String> {
        let d = self.d.as_ref()?;
        if self.f().is_zero() {
            return None;
        }
        let r = d * BigInt::from(100u32) / BigRational::from(self.f().clone());
        Some(display::rational(&r, DISPLAY_DIGITS))
    }
}

pub fn check_bo1(n: u64, m: u64) -> Result<Verdict> {
    Ok(BoundReport::new(n, m)?.bo1())
}

pub fn check_bo2(n: u64, m: u64) -> Result<Verdict> {
    Ok(BoundReport::new(n, m)?.bo2())
}

pub fn check_bo3(n: u64, m: u64) -> Result<Verdict> {
    Ok(BoundReport::new(n, m)?.bo3())
}

pub fn check_bo4(n: u64, m: u64) -> Result<Verdict> {
    Ok(BoundReport::new(n, m)?.bo4())
}

pub fn check_prop2(n: u64, m: u64) -> Result<Verdict> {
    Ok(BoundReport::new(n, m)?.prop2())
}

pub fn check_lemma_pro1(n: u64, m: u64) -> Result<Verdict> {
    Ok(BoundReport::new(n, m)?.lemma_pro1())
}

pub fn check_lemma_pro3(n: u64, m: u64) -> Result<Verdict> {
    Ok(BoundReport::new(n, m)?.lemma_pro3())
}

/// `√((2r-1)^2 + 8(r-1)) > (2r^2 + 5r - 2)/(r + 2)` for `r >= 3`.
pub fn check_prop_pr0(r: u64) -> Verdict {
    if r < 3 {
        return Verdict::NotApplicable;
    }
    let rb = BigInt::from(r);
    let two_r1: BigInt = (&rb << 1u32) - 1u32;
    let radicand = &two_r1 * &two_r1 + ((&rb - 1u32) << 3u32);
    let lhs = Surd::radical(BigInt::from(1u32), radicand).expect("positive radicand");
    let rhs = BigRational::new((&rb * &rb * 2u32) + &rb * 5u32 - 2u32, &rb + 2u32);
    Verdict::from_relation(
        lhs.cmp_rational(&rhs) == Ordering::Greater,
        "lhs > rhs",
        || Quantity::Surd(lhs),
        || Quantity::Rational(rhs),
    )
}

/// Whether `D(n, m) > (threshold_num / threshold_den) · f(n, m)`.
pub fn ratio_d_over_f_exceeds(n: u64, m: u64, threshold_num: u64, threshold_den: u64) -> Result<bool> {
    if threshold_den == 0 {
        return Err(Error::BadThreshold);
    }
    let report = BoundReport::new(n, m)?;
    let Some(d) = &report.d else {
        return Err(Error::DeCaenUndefined(n));
    };
    let f = report.f();
    if f.is_zero() {
        return Err(Error::RatioUndefined);
    }
    // D = a/b with b > 0: a·den > f·num·b
    Ok(d.numer() * threshold_den > f * threshold_num * d.denom())
}

/// Used by the sweep for the final link `m√(8m+1) - m <= (2m)^{3/2}`.
pub fn th1_upper_below_dense(m: u64) -> bool {
    let mb = BigInt::from(m);
    let upper = Surd::radical(mb.clone(), (&mb << 3u32) + 1u32)
        .expect("nonnegative")
        .add_int(&(-&mb));
    upper <= dense_branch(&mb)
}
