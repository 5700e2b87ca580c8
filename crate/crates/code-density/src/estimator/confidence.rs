//! Exact binomial (Clopper-Pearson) confidence intervals.
//!
//! The endpoints solve regularized-incomplete-beta equations; they are found
//! by bisection and then rounded outward to rationals with denominator
//! 10^12, so the reported interval always contains the true Clopper-Pearson
//! interval and the arithmetic downstream stays exact.

use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use statrs::function::beta::beta_reg;

use crate::error::{Error, Result};

const SCALE: u64 = 1_000_000_000_000; // 10^12

fn rational_floor(x: f64) -> BigRational {
    let scaled = (x * SCALE as f64).floor().max(0.0) as u64;
    BigRational::new(BigInt::from(scaled.min(SCALE)), BigInt::from(SCALE))
}

fn rational_ceil(x: f64) -> BigRational {
    let scaled = (x * SCALE as f64).ceil().max(0.0) as u64;
    BigRational::new(BigInt::from(scaled.min(SCALE)), BigInt::from(SCALE))
}

/// Bisect the increasing function `f` on [0, 1] for `f(p) = target`.
fn bisect(f: impl Fn(f64) -> f64, target: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Two-sided Clopper-Pearson interval for `successes` out of `trials` at
/// the given confidence level (e.g. 99/100).
pub fn clopper_pearson(
    successes: u64,
    trials: u64,
    confidence: &BigRational,
) -> Result<(BigRational, BigRational)> {
    if trials == 0 {
        return Err(Error::invalid("trials", "must be positive"));
    }
    if successes > trials {
        return Err(Error::invalid("successes", "cannot exceed trials"));
    }
    if confidence <= &BigRational::zero() || confidence >= &BigRational::one() {
        return Err(Error::invalid(
            "confidence",
            "level must be strictly between 0 and 1",
        ));
    }
    let alpha = 1.0 - confidence.to_f64().expect("confidence fits f64");
    let n = trials as f64;
    let s = successes as f64;

    // P(X >= s | p) = I_p(s, n-s+1) is increasing in p; the lower endpoint
    // makes it alpha/2.
    let low = if successes == 0 {
        BigRational::zero()
    } else {
        let p = bisect(|p| beta_reg(s, n - s + 1.0, p), alpha / 2.0);
        rational_floor(p)
    };
    // P(X <= s | p) = 1 - I_p(s+1, n-s) is decreasing in p; the upper
    // endpoint makes it alpha/2.
    let high = if successes == trials {
        BigRational::one()
    } else {
        let p = bisect(|p| beta_reg(s + 1.0, n - s, p), 1.0 - alpha / 2.0);
        rational_ceil(p)
    };

    // The point estimate always lies inside the reported interval.
    let point = BigRational::new(BigInt::from(successes), BigInt::from(trials));
    Ok((low.min(point.clone()), high.max(point)))
}
