//! Decimal constants and fixed-point helpers for the few places where an
//! exact rational has to be compared against an irrational target.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::Rational;

/// sqrt(2), 40 digits after the point, truncated.
pub const SQRT_2: &str = "1.4142135623730950488016887242096980785696";
/// ln(2), 40 digits after the point, truncated.
pub const LN_2: &str = "0.6931471805599453094172321214581765680755";
/// sqrt(pi), 40 digits after the point, truncated.
pub const SQRT_PI: &str = "1.7724538509055160272981674833411451827975";

/// Slack allowed for the rounding of the constants above.
pub fn constant_epsilon() -> Rational {
    Rational::new(BigInt::from(1), num_traits::pow(BigInt::from(10), 25))
}

/// Parses a plain decimal literal such as `-12.0345` into an exact rational.
pub fn decimal(s: &str) -> Rational {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .expect("decimal literal");
    let r = Rational::new(digits, num_traits::pow(BigInt::from(10), frac_part.len()));
    if neg {
        -r
    } else {
        r
    }
}

/// `floor(sqrt(x) * 10^digits) / 10^digits` for non-negative `x`.
pub fn sqrt_floor(x: &Rational, digits: usize) -> Rational {
    assert!(!x.is_negative(), "sqrt of a negative rational");
    if x.is_zero() {
        return Rational::zero();
    }
    let scale = num_traits::pow(BigInt::from(10), digits);
    // floor(sqrt(floor(x * 10^(2 digits))))
    let scaled = (x.numer() * &scale * &scale) / x.denom();
    Rational::new(scaled.sqrt(), scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, to_decimal_string};

    #[test]
    fn decimal_parsing() {
        assert_eq!(decimal("1.25"), rat(5, 4));
        assert_eq!(decimal("-0.5"), rat(-1, 2));
        assert_eq!(decimal("7"), int(7));
    }

    #[test]
    fn sqrt_two_constant_matches_integer_sqrt() {
        assert_eq!(to_decimal_string(&sqrt_floor(&int(2), 40), 40), SQRT_2);
        let s = decimal(SQRT_2);
        assert!(&s * &s < int(2));
        let ulp = Rational::new(BigInt::from(1), num_traits::pow(BigInt::from(10), 40));
        let above = &s + &ulp;
        assert!(&above * &above > int(2));
    }

    #[test]
    fn ln_two_constant_brackets_series() {
        // ln 2 = sum_{k>=1} 1 / (k 2^k); tail after K terms < 1 / 2^K
        let mut sum = Rational::zero();
        for k in 1..=160u32 {
            sum += Rational::new(
                BigInt::from(1),
                BigInt::from(k) * num_traits::pow(BigInt::from(2), k as usize),
            );
        }
        let diff = (decimal(LN_2) - sum).abs();
        assert!(diff < Rational::new(BigInt::from(1), num_traits::pow(BigInt::from(10), 39)));
    }

    #[test]
    fn sqrt_pi_squared_is_pi() {
        // pi to 40 digits
        let pi = decimal("3.1415926535897932384626433832795028841971");
        let s = decimal(SQRT_PI);
        let diff = (&s * &s - pi).abs();
        assert!(diff < Rational::new(BigInt::from(1), num_traits::pow(BigInt::from(10), 38)));
    }
}
