//! Exact integer and rational kernel plus the combinatorial primitives used
//! throughout: factorials, odd double factorials, falling and shifted
//! factorials, and binomial coefficients with rational upper argument.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator after each operation, so structural equality
//! is numeric equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Builds the canonical rational `num/den`.
pub fn rat_make(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num.into(), den))
}

/// Shorthand for small literals where the denominator is known to be nonzero.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rat: zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Returns the integer value of `r`, or `None` if it is not integral.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Ordinary binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // running product stays integral: C(n-k+j, j) at each step
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc = acc * (n - k + j) / j;
    }
    acc
}

/// `(x)_n = x(x-1)...(x-n+1)`, with `(x)_0 = 1`.
pub fn falling_factorial(x: &Rational, n: usize) -> Rational {
    shifted_factorial(x, &Rational::one(), n)
}

/// `(x; alpha)_n = x(x-alpha)...(x-(n-1)alpha)`, with `(x; alpha)_0 = 1`.
pub fn shifted_factorial(x: &Rational, alpha: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..n {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor -= alpha;
    }
    acc
}

/// Odd double factorial `k!! = k(k-2)...1`, extended by `(-1)!! = 1`.
///
/// Even arguments and arguments below -1 are rejected rather than mapped
/// to 1.
pub fn double_factorial_odd(k: i64) -> Result<BigInt> {
    if k < -1 || k.is_even() {
        return Err(Error::DoubleFactorialDomain(k));
    }
    let mut acc = BigInt::one();
    let mut j = k;
    while j > 1 {
        acc *= j;
        j -= 2;
    }
    Ok(acc)
}

/// `binom(alpha, m) = (alpha)_m / m!` for any rational `alpha`.
pub fn binomial_general(alpha: &Rational, m: usize) -> Rational {
    falling_factorial(alpha, m) / int(factorial(m as u64))
}

/// `base^exp` for a small signed base.
pub fn ipow(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// Formats a rational as a decimal fraction with `digits` digits after the
/// point, truncated toward zero.
pub fn to_decimal_string(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (r.numer().abs() * &scale) / r.denom();
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let sign = if r.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!(
        "{sign}{int_part}.{:0>width$}",
        frac_part.to_string(),
        width = digits
    )
}
