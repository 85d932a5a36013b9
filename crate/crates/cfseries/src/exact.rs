//! Exact rational values and certified decimal rendering.
//!
//! `Rat` is the universal value type of the crate: an arbitrary-precision
//! rational kept in canonical form (positive denominator, coprime parts)
//! by construction, so equality of values is syntactic equality.
//! `render_decimal` turns a value plus an exact error bound into a digit
//! string in which every emitted digit is guaranteed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::Error;
use crate::Result;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rat = BigRational;

/// Canonical rational from a numerator/denominator pair.
pub fn rat_normalize(num: BigInt, den: BigInt) -> Result<Rat> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rat::new(num, den))
}

/// Small-literal shorthand for fixtures and tests. Panics on a zero
/// denominator; use [`rat_normalize`] for untrusted input.
pub fn ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0, "ratio() needs a nonzero denominator");
    Rat::new(num.into(), den.into())
}

pub fn rat_int(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

pub fn checked_div(x: &Rat, y: &Rat) -> Result<Rat> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x / y)
}

/// ⌊x⌋ as an integer.
pub fn floor_int(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// A decimal rendering together with the exact error bound that justifies
/// it. Every emitted digit is stable: the decimal expansions of
/// `value - error_bound` and `value + error_bound` agree on all of them.
#[derive(Clone, Debug)]
pub struct CertifiedDecimal {
    pub sign: Sign,
    pub integer_part: String,
    pub fraction_digits: String,
    pub error_bound: Rat,
    /// Rendered from a zero error bound (the digits are the value's own
    /// expansion, possibly cut off at `max_digits`).
    pub exact: bool,
    /// More digits exist beyond the emitted ones.
    pub truncated: bool,
}

impl CertifiedDecimal {
    /// "0.7294270"-style digit string; empty when nothing was certified.
    pub fn digits(&self) -> String {
        if self.integer_part.is_empty() {
            return String::new();
        }
        let mut out = String::new();
        if self.sign == Sign::Negative {
            out.push('-');
        }
        out.push_str(&self.integer_part);
        if !self.fraction_digits.is_empty() {
            out.push('.');
            out.push_str(&self.fraction_digits);
        }
        out
    }
}

impl fmt::Display for CertifiedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digits())
    }
}

/// ⌊x · 10^d⌋ for x ≥ 0, as (integer part, d fraction digits zero-padded).
fn split_scaled(x: &Rat, pow10: &BigInt, d: usize) -> (BigInt, String) {
    let scaled = (x.numer() * pow10).div_floor(x.denom());
    let int = (&scaled).div_floor(pow10);
    if d == 0 {
        return (int, String::new());
    }
    let frac = scaled - &int * pow10;
    let mut s = frac.to_string();
    while s.len() < d {
        s.insert(0, '0');
    }
    (int, s)
}

/// Longest common decimal prefix of `value ± error_bound`, up to
/// `max_digits` fraction digits. A zero bound renders the exact expansion
/// truncated at `max_digits`, with the truncation flagged.
pub fn render_decimal(value: &Rat, error_bound: &Rat, max_digits: usize) -> Result<CertifiedDecimal> {
    if error_bound.is_negative() {
        return Err(Error::NegativeErrorBound);
    }

    if error_bound.is_zero() {
        let sign = if value.is_negative() { Sign::Negative } else { Sign::Positive };
        let v = value.abs();
        let int = v.numer().div_floor(v.denom());
        let mut rem = v.numer() - &int * v.denom();
        let ten = BigInt::from(10);
        let mut frac = String::new();
        while !rem.is_zero() && frac.len() < max_digits {
            rem *= &ten;
            let digit = (&rem).div_floor(v.denom());
            frac.push(char::from(b'0' + digit.to_u8().unwrap_or(0)));
            rem -= digit * v.denom();
        }
        return Ok(CertifiedDecimal {
            sign,
            integer_part: int.to_string(),
            fraction_digits: frac,
            error_bound: Rat::zero(),
            exact: true,
            truncated: !rem.is_zero(),
        });
    }

    let lo = value - error_bound;
    let hi = value + error_bound;

    // When the interval straddles zero not even the sign is certain.
    if lo.is_negative() && !hi.is_negative() {
        return Ok(CertifiedDecimal {
            sign: Sign::Positive,
            integer_part: String::new(),
            fraction_digits: String::new(),
            error_bound: error_bound.clone(),
            exact: false,
            truncated: true,
        });
    }

    let (sign, lo, hi) = if hi.is_negative() || (hi.is_zero() && lo.is_negative()) {
        (Sign::Negative, -hi, -lo)
    } else {
        (Sign::Positive, lo, hi)
    };

    let pow10 = BigInt::from(10).pow(max_digits as u32);
    let (int_lo, frac_lo) = split_scaled(&lo, &pow10, max_digits);
    let (int_hi, frac_hi) = split_scaled(&hi, &pow10, max_digits);

    if int_lo != int_hi {
        return Ok(CertifiedDecimal {
            sign,
            integer_part: String::new(),
            fraction_digits: String::new(),
            error_bound: error_bound.clone(),
            exact: false,
            truncated: true,
        });
    }

    let common: String = frac_lo
        .chars()
        .zip(frac_hi.chars())
        .take_while(|(a, b)| a == b)
        .map(|(a, _)| a)
        .collect();

    Ok(CertifiedDecimal {
        sign,
        integer_part: int_lo.to_string(),
        fraction_digits: common,
        error_bound: error_bound.clone(),
        exact: false,
        truncated: true,
    })
}
