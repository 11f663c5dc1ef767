//! Identities that do not go through the differential equations: the
//! square-root expansion, two convergent sums with irrational values, the
//! two convolution recurrences, and the asymptotic growth rate.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{require_positive, IdentityId, Mode, VerificationReport, Witness};
use crate::arith::{binomial, binomial_general, int, ipow, rat, to_decimal_string, Rational};
use crate::catalan::{catalan_asymptotic_ratio, catalan_prefix};
use crate::error::{Error, Result};
use crate::numeric::{constant_epsilon, decimal, sqrt_floor, LN_2, SQRT_2};
use crate::series::sqrt_one_plus;

/// Half-width of the band around 1 accepted for the asymptotic ratio.
pub const ASYMPTOTIC_BAND: (i64, i64) = (1, 100);

/// Digits shown for irrational targets and partial sums in witnesses.
const SHOWN_DIGITS: usize = 30;

/// Compares the `sqrt(1 + y)` coefficients with `binom(1/2, n)` for
/// `n <= order`.
pub fn verify_sqrt_expansion(order: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let series = sqrt_one_plus(order);
    let half = rat(1, 2);
    let witness = (0..=order).find_map(|n| {
        let expected = binomial_general(&half, n);
        let got = &series.coeffs()[n];
        (got != &expected).then(|| Witness {
            index: n as i64,
            lhs: got.to_string(),
            rhs: expected.to_string(),
        })
    });
    Ok(VerificationReport::build(
        IdentityId::Eq58,
        &[("K", order as i64)],
        Mode::Series,
        witness,
        start.elapsed(),
    ))
}

/// Exact partial sum of a convergent series with a rigorous bound on its
/// distance to the limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentSum {
    pub partial_sum: Rational,
    pub bound: Rational,
    /// `|partial_sum - target|`, with the target taken from a 40-digit
    /// decimal constant.
    pub error: Rational,
    pub passed: bool,
}

impl ConvergentSum {
    fn new(partial_sum: Rational, bound: Rational, target: &Rational) -> Self {
        let error = (&partial_sum - target).abs();
        let passed = error < &bound + constant_epsilon();
        ConvergentSum {
            partial_sum,
            bound,
            error,
            passed,
        }
    }
}

/// `(4 sqrt(2) - 2) / 3` to 40 digits.
pub fn eq59_target() -> Rational {
    (int(4) * decimal(SQRT_2) - int(2)) / int(3)
}

/// `1 - ln 2` to 40 digits.
pub fn eq62_target() -> Rational {
    int(1) - decimal(LN_2)
}

fn eq59_term(n: usize, catalan: &BigInt) -> Rational {
    let sign = if n % 2 == 1 { 1 } else { -1 };
    Rational::new(catalan * sign, ipow(4, n) * (2 * n as i64 - 1))
}

/// `sum_{n < terms} C_n (-1)^(n-1) / (4^n (2n - 1))` against
/// `(4 sqrt(2) - 2)/3`.
///
/// From `n = 1` on the terms alternate in sign and shrink in magnitude
/// (ratio `(2n-1)/(2(n+2))`), so the first omitted term bounds the error.
pub fn sum_eq59(terms: usize) -> Result<ConvergentSum> {
    if terms < 2 {
        return Err(Error::InvalidBound("eq59 needs at least 2 terms".into()));
    }
    let catalan = catalan_prefix(terms);
    let partial: Rational = (0..terms).map(|n| eq59_term(n, &catalan[n])).sum();
    let bound = eq59_term(terms, &catalan[terms]).abs();
    Ok(ConvergentSum::new(partial, bound, &eq59_target()))
}

/// `sum_{n < terms} binom(2n, n) / ((n+1)^2 4^(n+1))` against `1 - ln 2`.
///
/// The ratio of consecutive terms tends to 1, so no geometric majorant
/// exists. Instead, `binom(2n, n) <= 4^n / sqrt(pi n)` gives
/// `term_n <= n^(-5/2) / (4 sqrt(pi))`, and comparing the tail with
/// `int_{T-1}^inf x^(-5/2) dx` bounds it by `(T-1)^(-3/2) / (6 sqrt(pi))`.
/// All constants are rounded upward so the bound stays rigorous.
pub fn sum_eq62(terms: usize) -> Result<ConvergentSum> {
    require_positive("eq62 terms", terms)?;
    let mut partial = Rational::zero();
    for n in 0..terms {
        let n1 = BigInt::from(n + 1);
        partial += Rational::new(binomial(2 * n as u64, n as u64), &n1 * &n1 * ipow(4, n + 1));
    }
    // 1/sqrt(pi) < 0.5642
    let inv_sqrt_pi_upper = rat(5642, 10_000);
    let bound = if terms == 1 {
        // zeta(5/2) / (4 sqrt(pi)) < 0.19
        rat(1, 5)
    } else {
        let t = int(terms - 1);
        inv_sqrt_pi_upper / (int(6) * &t * sqrt_floor(&t, 12))
    };
    Ok(ConvergentSum::new(partial, bound, &eq62_target()))
}

fn convergent_report(
    id: IdentityId,
    terms: usize,
    sum: &ConvergentSum,
    target: &Rational,
    elapsed: std::time::Duration,
) -> VerificationReport {
    let witness = (!sum.passed).then(|| Witness {
        index: terms as i64,
        lhs: to_decimal_string(&sum.partial_sum, SHOWN_DIGITS),
        rhs: to_decimal_string(target, SHOWN_DIGITS),
    });
    VerificationReport::build(
        id,
        &[("terms", terms as i64)],
        Mode::Numeric,
        witness,
        elapsed,
    )
}

pub fn verify_eq59(terms: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let sum = sum_eq59(terms)?;
    Ok(convergent_report(
        IdentityId::Eq59,
        terms,
        &sum,
        &eq59_target(),
        start.elapsed(),
    ))
}

pub fn verify_eq62(terms: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let sum = sum_eq62(terms)?;
    Ok(convergent_report(
        IdentityId::Eq62,
        terms,
        &sum,
        &eq62_target(),
        start.elapsed(),
    ))
}

/// `(m + 1) / (2m - 1)`, equal to -1 at `m = 0`.
fn weight(m: usize) -> Rational {
    rat(m as i64 + 1, 2 * m as i64 - 1)
}

/// Checks `C_n - sum_{m=0}^{n} C_m C_{n-m} (m+1)/(2m-1)` is 2 at `n = 0`
/// and 0 for `1 <= n <= nmax`.
pub fn verify_eq64(nmax: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let c = catalan_prefix(nmax);
    let witness = (0..=nmax).find_map(|n| {
        let conv: Rational = (0..=n).map(|m| int(&c[m] * &c[n - m]) * weight(m)).sum();
        let lhs = int(c[n].clone()) - conv;
        let rhs = if n == 0 { int(2) } else { Rational::zero() };
        (lhs != rhs).then(|| Witness {
            index: n as i64,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    });
    Ok(VerificationReport::build(
        IdentityId::Eq64,
        &[("nmax", nmax as i64)],
        Mode::Series,
        witness,
        start.elapsed(),
    ))
}

/// Checks `C_n = (2n-1)/(3(n-1)) sum_{m=1}^{n-1} C_m C_{n-m} (m+1)/(2m-1)`
/// for `2 <= n <= nmax`.
pub fn verify_eq66(nmax: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let c = catalan_prefix(nmax);
    let witness = (2..=nmax).find_map(|n| {
        let conv: Rational = (1..n).map(|m| int(&c[m] * &c[n - m]) * weight(m)).sum();
        let rhs = rat(2 * n as i64 - 1, 3 * (n as i64 - 1)) * conv;
        let lhs = int(c[n].clone());
        (lhs != rhs).then(|| Witness {
            index: n as i64,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    });
    Ok(VerificationReport::build(
        IdentityId::Eq66,
        &[("nmax", nmax as i64)],
        Mode::Series,
        witness,
        start.elapsed(),
    ))
}

/// Both convolution recurrences; reports are returned in the order
/// `[eq64, eq66]`.
pub fn verify_convolution_recurrences(nmax: usize) -> Result<[VerificationReport; 2]> {
    if nmax < 2 {
        return Err(Error::InvalidBound(
            "convolution recurrences need nmax >= 2".into(),
        ));
    }
    Ok([verify_eq64(nmax)?, verify_eq66(nmax)?])
}

/// Checks that `C_n n^(3/2) sqrt(pi) / 4^n` lies within
/// [`ASYMPTOTIC_BAND`] of 1.
pub fn verify_asymptotic(n: u64) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::InvalidBound("asymptotic ratio needs n >= 1".into()));
    }
    let start = Instant::now();
    let ratio = catalan_asymptotic_ratio(n);
    let band = rat(ASYMPTOTIC_BAND.0, ASYMPTOTIC_BAND.1);
    let within = (&ratio - int(1)).abs() < band;
    let witness = (!within).then(|| Witness {
        index: n as i64,
        lhs: to_decimal_string(&ratio, SHOWN_DIGITS),
        rhs: "1".to_string(),
    });
    Ok(VerificationReport::build(
        IdentityId::Asymptotic,
        &[("n", n as i64)],
        Mode::Numeric,
        witness,
        start.elapsed(),
    ))
}
