//! Decimal strings for irrational and rational values. Display only: the
//! verification path never reads these back.
//!
//! Each rendering takes an exact floor of the value scaled by a power of ten
//! with at least `sig + 1` digits in hand, so the result is off by at most
//! one unit in the last significant digit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

/// Significant digits used by reports.
pub const DISPLAY_DIGITS: usize = 6;

const MAX_SCALE: u32 = 400;

/// Renders a value given a closure producing `floor(value · 10^d)`.
/// Integers (`exact_integer`) are printed in full.
pub(crate) fn format_exact<F>(floor_scaled: F, exact_integer: bool, integer: &BigInt, sig: usize) -> String
where
    F: Fn(u32) -> BigInt,
{
    if exact_integer {
        return integer.to_string();
    }
    let threshold = BigInt::from(10u32).pow(sig as u32 + 1);
    let mut d = sig as u32 + 2;
    loop {
        let scaled = floor_scaled(d);
        if scaled.abs() >= threshold {
            return format_scaled(&scaled, d, sig);
        }
        if d >= MAX_SCALE {
            return "0".to_string();
        }
        d += 16;
    }
}

pub fn rational(x: &BigRational, sig: usize) -> String {
    let scaled = |d: u32| (x.numer() * BigInt::from(10u32).pow(d)).div_floor(x.denom());
    format_exact(scaled, x.is_integer(), x.numer(), sig)
}

/// Rounds `scaled · 10^-d` to `sig` significant digits.
fn format_scaled(scaled: &BigInt, d: u32, sig: usize) -> String {
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    debug_assert!(digits.len() > sig);
    let mut mantissa: u64 = digits[..sig].parse().expect("decimal digits");
    let mut exp = digits.len() as i64 - sig as i64 - d as i64;
    if digits.as_bytes()[sig] >= b'5' {
        mantissa += 1;
        if mantissa == 10u64.pow(sig as u32) {
            mantissa /= 10;
            exp += 1;
        }
    }
    let body = render(mantissa, exp, sig);
    if negative && body != "0" {
        format!("-{body}")
    } else {
        body
    }
}

/// `mantissa · 10^exp` where `mantissa` has exactly `sig` digits.
fn render(mantissa: u64, exp: i64, sig: usize) -> String {
    let m = mantissa.to_string();
    let point = sig as i64 + exp;
    if !(-4..=15).contains(&point) {
        let (head, tail) = m.split_at(1);
        let tail = tail.trim_end_matches('0');
        let sep = if tail.is_empty() { "" } else { "." };
        return format!("{head}{sep}{tail}e{}", point - 1);
    }
    if exp >= 0 {
        return format!("{m}{}", "0".repeat(exp as usize));
    }
    let s = if point <= 0 {
        format!("0.{}{m}", "0".repeat((-point) as usize))
    } else {
        let (int, frac) = m.split_at(point as usize);
        format!("{int}.{frac}")
    };
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s.chars().all(|c| c == '0' || c == '.') {
        "0".to_string()
    } else {
        s.to_string()
    }
}
