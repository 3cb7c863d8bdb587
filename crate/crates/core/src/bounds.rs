//! Closed-form extremal bounds on the number of maximal independent sets,
//! the algebraic growth constant for the triangle-free/induced-matching
//! case, and exact certified checks of the arithmetic inequalities the
//! inductive arguments lean on.
//!
//! Conventions:
//! - `g_bound(t, n)` is the maximum over `n`-vertex graphs with no induced
//!   triangle matching of size `t + 1`. When `n < 3t` the evaluation clamps
//!   `t` to `floor(n/3)`; every clamped evaluation is flagged.
//! - `h_bound(t, n)` is `2^t * c^(n-2t)` where `c` is the largest real root
//!   of `x^6 - 2x^2 - 2x - 1`, enclosed by exact bisection. When `n < 2t`
//!   the evaluation clamps `t` to `floor(n/2)`.
//! - Integer comparisons are exact cross-multiplications; real comparisons
//!   are certified interval comparisons. No floating point anywhere.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::interval::RealInterval;
use crate::report::{Report, ReportItem};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("the closed form needs n >= {min}, got n = {n}")]
    NTooSmall { n: usize, min: usize },
    #[error("bound undefined for t = 0 and odd n = {n} < 5: there is no odd case below the pentagon")]
    UndefinedOddCase { n: usize },
    #[error("precision must be a positive rational")]
    NonPositivePrecision,
    #[error("fact check needs {what} >= {min}, got {got}")]
    CheckRange { what: &'static str, min: usize, got: usize },
}

fn pow(base: u32, exp: usize) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// Maximum number of maximal independent sets in any `n`-vertex graph,
/// `n >= 3`: powers of 3 with a residue correction.
pub fn mis_max(n: usize) -> Result<BigUint, BoundsError> {
    if n < 3 {
        return Err(BoundsError::NTooSmall { n, min: 3 });
    }
    Ok(match n % 3 {
        0 => pow(3, n / 3),
        1 => BigUint::from(4u32) * pow(3, (n - 4) / 3),
        _ => BigUint::from(2u32) * pow(3, (n - 2) / 3),
    })
}

/// Maximum over triangle-free `n`-vertex graphs, `n >= 4`: powers of 2 with
/// a pentagon correction for odd `n`.
pub fn mis_triangle_free_max(n: usize) -> Result<BigUint, BoundsError> {
    if n < 4 {
        return Err(BoundsError::NTooSmall { n, min: 4 });
    }
    Ok(if n.is_multiple_of(2) {
        pow(2, n / 2)
    } else {
        BigUint::from(5u32) * pow(2, (n - 5) / 2)
    })
}

/// A fully traced evaluation of `g_bound`, recording whether the clamping
/// convention fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBoundEval {
    pub t_requested: usize,
    pub t_effective: usize,
    pub n: usize,
    /// Residue `n - 3 * t_effective`.
    pub m: usize,
    pub clamped: bool,
    pub value: BigUint,
}

pub fn g_bound_eval(t: usize, n: usize) -> Result<GBoundEval, BoundsError> {
    let (t_effective, clamped) = if n < 3 * t { (n / 3, true) } else { (t, false) };
    let m = n - 3 * t_effective;
    let value = if m.is_multiple_of(2) {
        pow(3, t_effective) * pow(2, m / 2)
    } else if t_effective > 0 {
        pow(3, t_effective - 1) * pow(2, (m + 3) / 2)
    } else if n >= 5 {
        BigUint::from(5u32) * pow(2, (n - 5) / 2)
    } else {
        return Err(BoundsError::UndefinedOddCase { n });
    };
    Ok(GBoundEval { t_requested: t, t_effective, n, m, clamped, value })
}

/// Maximum number of maximal independent sets in an `n`-vertex graph with no
/// induced triangle matching of size `t + 1` (clamped when `n < 3t`).
pub fn g_bound(t: usize, n: usize) -> Result<BigUint, BoundsError> {
    g_bound_eval(t, n).map(|e| e.value)
}

/// `x^6 - 2x^2 - 2x - 1`, evaluated exactly.
pub fn defining_polynomial(x: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let x2 = x * x;
    &x2 * &x2 * &x2 - &two * &x2 - &two * x - BigRational::one()
}

/// Encloses the largest real root of `x^6 - 2x^2 - 2x - 1` within `width`
/// by exact bisection on `[7/5, 3/2]`. The returned endpoints are
/// sign-certified: the polynomial is negative at `lo` and positive at `hi`,
/// and after the first few halvings the interval lies strictly inside
/// `(1.4, 1.5)`.
pub fn root_c(width: &BigRational) -> Result<RealInterval, BoundsError> {
    if !width.is_positive() {
        return Err(BoundsError::NonPositivePrecision);
    }
    let mut lo = BigRational::new(7.into(), 5.into());
    let mut hi = BigRational::new(3.into(), 2.into());
    debug_assert!(defining_polynomial(&lo).is_negative());
    debug_assert!(defining_polynomial(&hi).is_positive());
    let mut steps = 0;
    while &hi - &lo > *width || steps < 4 {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        let sign = defining_polynomial(&mid);
        if sign.is_negative() {
            lo = mid;
        } else if sign.is_positive() {
            hi = mid;
        } else {
            // No rational root exists in (1.4, 1.5); unreachable, but an
            // exact hit would be the tightest possible answer.
            return Ok(RealInterval::point(mid));
        }
        steps += 1;
    }
    Ok(RealInterval::new(lo, hi))
}

/// A traced evaluation of `h_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HBoundEval {
    pub t_requested: usize,
    pub t_effective: usize,
    pub n: usize,
    /// Exponent `n - 2 * t_effective` applied to the root constant.
    pub exponent: usize,
    pub clamped: bool,
    pub interval: RealInterval,
}

pub fn h_bound_eval(t: usize, n: usize, precision: &BigRational) -> Result<HBoundEval, BoundsError> {
    if !precision.is_positive() {
        return Err(BoundsError::NonPositivePrecision);
    }
    let (t_effective, clamped) = if n < 2 * t { (n / 2, true) } else { (t, false) };
    let exponent = n - 2 * t_effective;
    let factor = BigRational::from_integer(BigInt::from(2u32).pow(t_effective as u32));
    if exponent == 0 {
        return Ok(HBoundEval {
            t_requested: t,
            t_effective,
            n,
            exponent,
            clamped,
            interval: RealInterval::point(factor),
        });
    }
    // Width budget: d(x^e) <= e * (3/2)^(e-1) dx on [1.4, 1.5], so a root
    // enclosure of width `precision / (2^t * e * (3/2)^(e-1))` suffices.
    let e_big = BigRational::from_integer(BigInt::from(exponent));
    let slope = BigRational::new(BigInt::from(3).pow(exponent as u32 - 1), BigInt::from(2).pow(exponent as u32 - 1));
    let mut width = precision / (&factor * &e_big * slope);
    loop {
        let c = root_c(&width)?;
        let interval = c.pow(exponent as u32).scale(&factor);
        if interval.width() <= *precision {
            return Ok(HBoundEval { t_requested: t, t_effective, n, exponent, clamped, interval });
        }
        width /= BigRational::from_integer(16.into());
    }
}

/// Certified enclosure of `2^t * c^(n-2t)` of width at most `precision`
/// (clamped when `n < 2t`).
pub fn h_bound(t: usize, n: usize, precision: &BigRational) -> Result<RealInterval, BoundsError> {
    h_bound_eval(t, n, precision).map(|e| e.interval)
}

/// Verifies the three ratio inequalities relating `g_bound(t, n - k)` to
/// `g_bound(t, n)` for `k = 3, 2, 4`, by exact cross-multiplication:
///
/// - `8 * g(t, n-3) <= 3 * g(t, n)`
/// - `2 * g(t, n-2) <= g(t, n)`, with equality whenever unclamped
/// - `4 * g(t, n-4) <= g(t, n)`, with equality whenever unclamped
///
/// over `1 <= t <= t_max` and `3t <= n <= 3t + span`. Instances where
/// `n - k` is negative or lands outside the bound's domain are recorded as
/// skipped rather than guessed.
pub fn check_fact1(t_max: usize, span: usize) -> Result<Report, BoundsError> {
    if t_max < 1 {
        return Err(BoundsError::CheckRange { what: "t_max", min: 1, got: t_max });
    }
    if span < 4 {
        return Err(BoundsError::CheckRange { what: "span", min: 4, got: span });
    }
    let mut report = Report::new("g-bound ratio inequalities");
    let mut checked: u64 = 0;
    let mut equalities: u64 = 0;
    for t in 1..=t_max {
        for n in 3 * t..=3 * t + span {
            let gn = g_bound_eval(t, n).expect("in-domain: n >= 3t and t >= 1");
            for (k, mul_small, mul_big) in [(3usize, 8u32, 3u32), (2, 2, 1), (4, 4, 1)] {
                if n < k {
                    report.push(ReportItem::skipped(format!(
                        "t={t} n={n} k={k}: n-k negative, out of domain"
                    )));
                    continue;
                }
                let gk = match g_bound_eval(t, n - k) {
                    Ok(e) => e,
                    Err(BoundsError::UndefinedOddCase { .. }) => {
                        report.push(ReportItem::skipped(format!(
                            "t={t} n={n} k={k}: g({t}, {}) undefined, out of domain",
                            n - k
                        )));
                        continue;
                    }
                    Err(other) => return Err(other),
                };
                let lhs = BigUint::from(mul_small) * &gk.value;
                let rhs = BigUint::from(mul_big) * &gn.value;
                checked += 1;
                if lhs > rhs {
                    report.push(ReportItem::violation(format!(
                        "t={t} n={n} k={k}: {mul_small}*g({t},{}) = {lhs} > {mul_big}*g({t},{n}) = {rhs}",
                        n - k
                    )));
                    continue;
                }
                // The 1/2 and 1/4 ratios are exact whenever no clamping fired.
                if (k == 2 || k == 4) && !gk.clamped {
                    if lhs == rhs {
                        equalities += 1;
                    } else {
                        report.push(ReportItem::violation(format!(
                            "t={t} n={n} k={k}: expected exact ratio, got {mul_small}*g({t},{}) = {lhs} != g({t},{n}) = {rhs}",
                            n - k
                        )));
                    }
                }
            }
        }
    }
    report.push(ReportItem::ok(format!(
        "{checked} cross-multiplied comparisons over t <= {t_max}, span {span}; \
         {equalities} exact-ratio instances confirmed in all unclamped cases"
    )));
    Ok(report)
}

/// Certifies the inequalities about the root constant `c` that drive the
/// induction, using interval arithmetic at the given precision:
///
/// 1. `2 + c <= 2c^2`
/// 2. `d + 1 <= c^(d+1)` for `4 <= d <= 64`, with the geometric tail argued
///    once past the crossover
/// 3. `3c + 1 <= c^5`
/// 4. `2c + 1 <= c^4`
///
/// plus the defining identity: the enclosure of `c^6 - 2c^2 - 2c - 1`
/// contains zero. Comparisons that fail to resolve at this precision are
/// reported inconclusive, not failed.
pub fn check_fact2(precision: &BigRational) -> Result<Report, BoundsError> {
    let mut report = Report::new("root-constant inequalities");
    let c = root_c(precision)?;
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());

    let certify = |report: &mut Report, label: String, lhs: &RealInterval, rhs: &RealInterval| {
        match lhs.certified_le(rhs) {
            Some(true) => report.push(ReportItem::ok(format!("{label}: certified"))),
            Some(false) => report.push(ReportItem::violation(format!("{label}: refuted"))),
            None => report.push(ReportItem::inconclusive(format!(
                "{label}: enclosures overlap at this precision, rerun tighter"
            ))),
        }
    };

    // (1) 2 + c <= 2c^2
    certify(&mut report, format!("2+c <= 2c^2 with c in {c}"), &c.shift(&two), &c.pow(2).scale(&two));
    // (3) 3c + 1 <= c^5
    certify(
        &mut report,
        format!("3c+1 <= c^5 with c in {c}"),
        &c.scale(&three).shift(&BigRational::one()),
        &c.pow(5),
    );
    // (4) 2c + 1 <= c^4
    certify(
        &mut report,
        format!("2c+1 <= c^4 with c in {c}"),
        &c.scale(&two).shift(&BigRational::one()),
        &c.pow(4),
    );

    // (2) d + 1 <= c^(d+1) for the degree range the engine meets directly.
    let mut all_d_ok = true;
    for d in 4..=64u32 {
        let lhs = RealInterval::point(BigRational::from_integer(BigInt::from(d + 1)));
        let rhs = c.pow(d + 1);
        match lhs.certified_le(&rhs) {
            Some(true) => {}
            Some(false) => {
                all_d_ok = false;
                report.push(ReportItem::violation(format!("d+1 <= c^(d+1) refuted at d={d}")));
            }
            None => {
                all_d_ok = false;
                report.push(ReportItem::inconclusive(format!(
                    "d+1 <= c^(d+1) unresolved at d={d}, rerun tighter"
                )));
            }
        }
    }
    if all_d_ok {
        report.push(ReportItem::ok("d+1 <= c^(d+1): certified for d = 4..=64".to_string()));
    }
    // Tail: past d = 64 the right side grows by a factor c per step while the
    // left grows by (d+2)/(d+1) <= 66/65, so certifying c >= 66/65 extends
    // the range to all larger d by induction.
    let ratio = BigRational::new(66.into(), 65.into());
    if *c.lo() >= ratio {
        report.push(ReportItem::note(
            "tail d > 64: c >= 66/65 >= (d+2)/(d+1), so the inequality propagates to all larger d"
                .to_string(),
        ));
    } else {
        report.push(ReportItem::inconclusive(
            "tail d > 64: could not certify c >= 66/65 at this precision".to_string(),
        ));
    }

    // Defining identity: the enclosure of c^6 - 2c^2 - 2c - 1 straddles zero.
    let identity = c
        .pow(6)
        .sub(&c.pow(2).scale(&two))
        .sub(&c.scale(&two))
        .shift(&-BigRational::one());
    if identity.contains_zero() {
        let (lo, hi) = identity.to_decimal(12);
        report.push(ReportItem::ok(format!(
            "defining identity c^6-2c^2-2c-1 encloses 0: [{lo}, {hi}]"
        )));
    } else {
        report.push(ReportItem::violation(
            "defining identity enclosure does not contain 0".to_string(),
        ));
    }

    Ok(report)
}
