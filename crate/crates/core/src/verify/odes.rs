//! The two differential-equation families, each checked either on
//! truncated series or exactly in the algebraic function field.

use std::time::Instant;

use num_bigint::BigInt;

use super::{
    a_row, b_row, require_positive, IdentityId, Mode, VerificationReport, VerifyOptions, Witness,
};
use crate::arith::{factorial, int, Rational};
use crate::error::{Error, Result};
use crate::field::AlgebraicElement;
use crate::series::{self, Series};

/// Minimum surplus of series order over `N` for a series-mode check.
const SERIES_MARGIN: usize = 8;

/// Taylor order used to localise a symbolic mismatch.
const WITNESS_ORDER: usize = 24;

fn check_series_order(n: usize, order: usize) -> Result<()> {
    if order < n + SERIES_MARGIN {
        return Err(Error::InvalidBound(format!(
            "series order {order} must be at least N + {SERIES_MARGIN} = {}",
            n + SERIES_MARGIN
        )));
    }
    Ok(())
}

/// Checks `C^(N) = sum_{i=1}^{N} a_i(N) (1-4t)^(-(2N-i)/2) C^(i+1)`.
pub fn verify_thm1(n: usize, mode: Mode, order: usize) -> Result<VerificationReport> {
    verify_thm1_with(n, mode, order, &VerifyOptions::default())
}

pub fn verify_thm1_with(
    n: usize,
    mode: Mode,
    order: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    require_positive("N", n)?;
    let start = Instant::now();
    let a = a_row(n, opts.a_source)?;
    let witness = match mode {
        Mode::Series => {
            check_series_order(n, order)?;
            thm1_series(n, &a, order)?
        }
        Mode::Symbolic => thm1_symbolic(n, &a, opts.degree_cap)?,
        Mode::Numeric => return Err(Error::InvalidBound("thm1 has no numeric mode".into())),
    };
    Ok(VerificationReport::build(
        IdentityId::Thm1,
        &[("N", n as i64)],
        mode,
        witness,
        start.elapsed(),
    ))
}

fn thm1_series(n: usize, a: &[BigInt], order: usize) -> Result<Option<Witness>> {
    let c = series::catalan(order);
    let lhs = c.nth_derivative(n)?;
    let mut rhs = Series::zero(order);
    let mut c_pow = c.clone();
    for (idx, a_i) in a.iter().enumerate() {
        let i = idx + 1;
        c_pow = &c_pow * &c; // C^(i+1)
        let half = series::binomial_power(
            &Rational::new(-BigInt::from(2 * n - i), BigInt::from(2)),
            order,
        );
        rhs = &rhs + &(&half * &c_pow).scale(&int(a_i.clone()));
    }
    Ok(series_witness(&lhs, &rhs))
}

fn thm1_symbolic(n: usize, a: &[BigInt], cap: usize) -> Result<Option<Witness>> {
    let c = AlgebraicElement::catalan();
    let mut lhs = c.clone();
    for _ in 0..n {
        lhs = lhs.derivative();
        lhs.check_degree(cap, "thm1 derivative")?;
    }
    let mut rhs = AlgebraicElement::zero();
    let mut c_pow = c.clone();
    for (idx, a_i) in a.iter().enumerate() {
        let i = idx + 1;
        c_pow = &c_pow * &c;
        let term = &AlgebraicElement::half_power(-((2 * n - i) as i64)) * &c_pow;
        rhs = &rhs + &term.scale(&int(a_i.clone()));
        rhs.check_degree(cap, "thm1 right-hand side")?;
    }
    Ok(symbolic_witness(&lhs, &rhs))
}

/// Checks `N! C^(N+1) = sum_{i=0}^{N/2} b_i(N) (1-4t)^(N/2-i) C^(N-i)`.
pub fn verify_thm3(n: usize, mode: Mode, order: usize) -> Result<VerificationReport> {
    verify_thm3_with(n, mode, order, &VerifyOptions::default())
}

pub fn verify_thm3_with(
    n: usize,
    mode: Mode,
    order: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    require_positive("N", n)?;
    let start = Instant::now();
    let b = b_row(n)?;
    let witness = match mode {
        Mode::Series => {
            check_series_order(n, order)?;
            thm3_series(n, &b, order)?
        }
        Mode::Symbolic => thm3_symbolic(n, &b, opts.degree_cap)?,
        Mode::Numeric => return Err(Error::InvalidBound("thm3 has no numeric mode".into())),
    };
    Ok(VerificationReport::build(
        IdentityId::Thm3,
        &[("N", n as i64)],
        mode,
        witness,
        start.elapsed(),
    ))
}

fn thm3_series(n: usize, b: &[BigInt], order: usize) -> Result<Option<Witness>> {
    let c = series::catalan(order);
    let lhs = c.pow(n + 1).scale(&int(factorial(n as u64)));
    let mut rhs: Option<Series> = None;
    for (i, b_i) in b.iter().enumerate() {
        let deriv = c.nth_derivative(n - i)?;
        let half = series::binomial_power(
            &Rational::new(BigInt::from(n as i64 - 2 * i as i64), BigInt::from(2)),
            order,
        );
        let term = (&half * &deriv).scale(&int(b_i.clone()));
        rhs = Some(match rhs {
            None => term,
            Some(acc) => &acc + &term,
        });
    }
    let rhs = rhs.expect("b_0(N) is always present");
    Ok(series_witness(&lhs, &rhs))
}

fn thm3_symbolic(n: usize, b: &[BigInt], cap: usize) -> Result<Option<Witness>> {
    let c = AlgebraicElement::catalan();
    let lhs = c.pow(n + 1).scale(&int(factorial(n as u64)));
    lhs.check_degree(cap, "thm3 left-hand side")?;
    let mut derivs = vec![c];
    for _ in 0..n {
        let next = derivs.last().expect("nonempty").derivative();
        next.check_degree(cap, "thm3 derivative")?;
        derivs.push(next);
    }
    let mut rhs = AlgebraicElement::zero();
    for (i, b_i) in b.iter().enumerate() {
        let term = &AlgebraicElement::half_power(n as i64 - 2 * i as i64) * &derivs[n - i];
        rhs = &rhs + &term.scale(&int(b_i.clone()));
        rhs.check_degree(cap, "thm3 right-hand side")?;
    }
    Ok(symbolic_witness(&lhs, &rhs))
}

/// Compares over the common truncation order.
fn series_witness(lhs: &Series, rhs: &Series) -> Option<Witness> {
    lhs.first_mismatch(rhs).map(|m| Witness {
        index: m as i64,
        lhs: lhs.coeffs()[m].to_string(),
        rhs: rhs.coeffs()[m].to_string(),
    })
}

fn symbolic_witness(lhs: &AlgebraicElement, rhs: &AlgebraicElement) -> Option<Witness> {
    if (lhs - rhs).is_zero() {
        return None;
    }
    // localise the disagreement to a Taylor coefficient when both sides are
    // regular at the origin; otherwise report the normal forms
    if let (Ok(ls), Ok(rs)) = (lhs.to_series(WITNESS_ORDER), rhs.to_series(WITNESS_ORDER)) {
        if let Some(w) = series_witness(&ls, &rs) {
            return Some(w);
        }
    }
    Some(Witness {
        index: -1,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}
