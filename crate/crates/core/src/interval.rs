//! Certified real enclosures over exact rationals.
//!
//! A [`RealInterval`] is a pair `lo <= hi` of arbitrary-precision rationals
//! enclosing a real value. All arithmetic here is exact and outward: every
//! operation returns an interval guaranteed to contain the true result, so a
//! resolved comparison between intervals is a proof about the enclosed reals.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal: {0}")]
    Invalid(String),
    #[error("zero denominator in rational literal: {0}")]
    ZeroDenominator(String),
}

/// Parses `p/q`, plain integers, decimals, and scientific notation
/// (`1e-8`, `2.5E3`) into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| RationalParseError::Invalid(s.into()))?;
        let d: BigInt = den.trim().parse().map_err(|_| RationalParseError::Invalid(s.into()))?;
        if d.is_zero() {
            return Err(RationalParseError::ZeroDenominator(s.into()));
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e.parse().map_err(|_| RationalParseError::Invalid(s.into()))?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(RationalParseError::Invalid(s.into()));
    }
    let value: BigInt = digits.parse().map_err(|_| RationalParseError::Invalid(s.into()))?;
    let ten = BigInt::from(10);
    let scale = exp - frac_part.len() as i64;
    let r = if scale >= 0 {
        BigRational::from_integer(value * ten.pow(scale as u32))
    } else {
        BigRational::new(value, ten.pow((-scale) as u32))
    };
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Toward minus infinity.
    Down,
    /// Toward plus infinity.
    Up,
}

/// Renders `x` with exactly `digits` decimal places, rounded in the given
/// direction, so that printed interval endpoints still enclose the value.
pub fn decimal_string(x: &BigRational, digits: usize, rounding: Rounding) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = x * BigRational::from_integer(scale.clone());
    let k = match rounding {
        Rounding::Down => scaled.numer().div_floor(scaled.denom()),
        Rounding::Up => scaled.numer().div_ceil(scaled.denom()),
    };
    let sign = if k.is_negative() { "-" } else { "" };
    let (int, frac) = k.abs().div_rem(&scale);
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0>width$}", width = digits)
    }
}

/// A certified enclosure `[lo, hi]` of a real value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RealInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> RealInterval {
        assert!(lo <= hi, "interval endpoints out of order");
        RealInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> RealInterval {
        RealInterval { lo: x.clone(), hi: x }
    }

    pub fn from_integer(x: &BigUint) -> RealInterval {
        RealInterval::point(BigRational::from_integer(BigInt::from(x.clone())))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn add(&self, other: &RealInterval) -> RealInterval {
        RealInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &RealInterval) -> RealInterval {
        RealInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn shift(&self, k: &BigRational) -> RealInterval {
        RealInterval::new(&self.lo + k, &self.hi + k)
    }

    /// Multiplies by a nonnegative scalar.
    pub fn scale(&self, k: &BigRational) -> RealInterval {
        assert!(!k.is_negative(), "scale expects a nonnegative factor");
        RealInterval::new(&self.lo * k, &self.hi * k)
    }

    /// `[lo^e, hi^e]`; requires a nonnegative lower endpoint so that powering
    /// is monotone.
    pub fn pow(&self, e: u32) -> RealInterval {
        assert!(!self.lo.is_negative(), "pow expects a nonnegative interval");
        if e == 0 {
            return RealInterval::point(BigRational::one());
        }
        RealInterval::new(pow_rational(&self.lo, e), pow_rational(&self.hi, e))
    }

    /// Certified comparison: `Some(true)` proves every value of `self` is at
    /// most every value of `other`; `Some(false)` proves the opposite strict
    /// inequality; `None` means the enclosures overlap and nothing is proved.
    pub fn certified_le(&self, other: &RealInterval) -> Option<bool> {
        if self.hi <= other.lo {
            Some(true)
        } else if self.lo > other.hi {
            Some(false)
        } else {
            None
        }
    }

    /// Outward-rounded decimal endpoints (lo down, hi up).
    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        (
            decimal_string(&self.lo, digits, Rounding::Down),
            decimal_string(&self.hi, digits, Rounding::Up),
        )
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal(12);
        write!(f, "[{lo}, {hi}]")
    }
}

fn pow_rational(x: &BigRational, e: u32) -> BigRational {
    BigRational::new(x.numer().pow(e), x.denom().pow(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parses_common_forms() {
        assert_eq!(rat("3/4"), BigRational::new(3.into(), 4.into()));
        assert_eq!(rat("-7"), BigRational::from_integer((-7).into()));
        assert_eq!(rat("0.25"), BigRational::new(1.into(), 4.into()));
        assert_eq!(rat("1e-8"), BigRational::new(1.into(), 100_000_000.into()));
        assert_eq!(rat("2.5e3"), BigRational::from_integer(2500.into()));
        assert_eq!(rat("2.5E-1"), BigRational::new(1.into(), 4.into()));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational(".e5").is_err());
    }

    #[test]
    fn decimal_rounding_direction() {
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(decimal_string(&third, 4, Rounding::Down), "0.3333");
        assert_eq!(decimal_string(&third, 4, Rounding::Up), "0.3334");
        let neg = BigRational::new((-1).into(), 3.into());
        assert_eq!(decimal_string(&neg, 4, Rounding::Down), "-0.3334");
        assert_eq!(decimal_string(&neg, 4, Rounding::Up), "-0.3333");
        assert_eq!(decimal_string(&rat("2"), 0, Rounding::Up), "2");
        assert_eq!(decimal_string(&rat("1/2"), 2, Rounding::Down), "0.50");
    }

    #[test]
    fn interval_arithmetic_is_outward() {
        let a = RealInterval::new(rat("1"), rat("2"));
        let b = RealInterval::new(rat("1/2"), rat("3/4"));
        assert_eq!(a.sub(&b), RealInterval::new(rat("1/4"), rat("3/2")));
        assert_eq!(a.add(&b), RealInterval::new(rat("3/2"), rat("11/4")));
        assert_eq!(a.pow(2), RealInterval::new(rat("1"), rat("4")));
        assert_eq!(a.pow(0), RealInterval::point(rat("1")));
        assert_eq!(a.scale(&rat("3")), RealInterval::new(rat("3"), rat("6")));
        assert!(a.sub(&a).contains_zero());
    }

    #[test]
    fn certified_comparisons() {
        let a = RealInterval::new(rat("1"), rat("2"));
        let b = RealInterval::new(rat("2"), rat("3"));
        let c = RealInterval::new(rat("5/2"), rat("4"));
        assert_eq!(a.certified_le(&b), Some(true));
        assert_eq!(c.certified_le(&a), Some(false));
        assert_eq!(b.certified_le(&c), None);
    }

    #[test]
    fn display_uses_outward_digits() {
        let iv = RealInterval::new(rat("1/3"), rat("1/3"));
        let (lo, hi) = iv.to_decimal(3);
        assert_eq!(lo, "0.333");
        assert_eq!(hi, "0.334");
    }
}
