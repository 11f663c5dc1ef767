//! Truncated formal power series over exact rationals.
//!
//! A [`Series`] of order `K` carries the coefficients of `t^0..=t^K`; every
//! coefficient past `K` is unknown, not zero. Binary operations therefore
//! work to the smaller of the two orders, and differentiation lowers the
//! order by one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{int, Rational};
use crate::catalan::catalan_closed;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series whose order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient vector: an order-K series always
    /// holds K + 1 coefficients.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series holds at least its constant term"
        );
        Series { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::constant(Rational::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    /// Highest retained power of `t`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^n`, or `None` past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`. Raising the order is not
    /// possible; the call is then a no-op.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self^r`; `r = 0` gives the constant series 1 at the same order.
    pub fn pow(&self, r: usize) -> Series {
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        let mut r = r;
        while r > 0 {
            if r & 1 == 1 {
                result = &result * &base;
            }
            r >>= 1;
            if r > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Termwise derivative; the result has order `K - 1`.
    pub fn derivative(&self) -> Result<Series> {
        if self.order() == 0 {
            return Err(Error::OrderZeroDerivative);
        }
        Ok(Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * int(n))
                .collect(),
        ))
    }

    pub fn nth_derivative(&self, n: usize) -> Result<Series> {
        let mut s = self.clone();
        for _ in 0..n {
            s = s.derivative()?;
        }
        Ok(s)
    }

    /// First index (over the common order) where the two series differ.
    pub fn first_mismatch(&self, other: &Series) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Removes the first `v` coefficients, i.e. divides by `t^v`, assuming
    /// they are zero. The order drops by `v`.
    pub(crate) fn shift_down(&self, v: usize) -> Series {
        assert!(v <= self.order());
        Series::new(self.coeffs[v..].to_vec())
    }

    /// Divides by a polynomial with nonzero constant term (lowest degree
    /// first). Internal to the field bridge; not part of the ring surface.
    pub(crate) fn div_by_polynomial(&self, poly: &[Rational]) -> Series {
        let lead = &poly[0];
        assert!(!lead.is_zero(), "divisor must be a unit in the series ring");
        let inv_lead = lead.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for n in 0..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for j in 1..poly.len().min(n + 1) {
                acc -= &poly[j] * &out[n - j];
            }
            out.push(acc * &inv_lead);
        }
        Series::new(out)
    }
}

/// Expansion of `(1 - 4t)^alpha` to order `order`:
/// coefficient of `t^m` is `binom(alpha, m) (-4)^m`.
pub fn binomial_power(alpha: &Rational, order: usize) -> Series {
    // term ratio: binom(alpha, m+1) (-4) / binom(alpha, m) = -4 (alpha - m) / (m + 1)
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    for m in 0..=order {
        coeffs.push(term.clone());
        term = term * (alpha - int(m)) * Rational::new((-4).into(), (m as i64 + 1).into());
    }
    Series::new(coeffs)
}

/// `C_0..=C_K` from the closed binomial form, one coefficient at a time.
pub fn catalan(order: usize) -> Series {
    Series::new((0..=order).map(|n| int(catalan_closed(n as u64))).collect())
}

/// Expansion of `sqrt(1 + y)`: coefficient of `y^n` is
/// `binom(2n, n) (-1)^(n-1) / (4^n (2n - 1))`.
pub fn sqrt_one_plus(order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let central = crate::arith::binomial(2 * n as u64, n as u64);
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let denom = crate::arith::ipow(4, n) * (2 * n as i64 - 1);
        coeffs.push(Rational::new(central * sign, denom));
    }
    Series::new(coeffs)
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(t^{})]", self.coeffs.len())
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;

    fn add(self, rhs: &'a Series) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;

    fn sub(self, rhs: &'a Series) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;

    /// Cauchy product truncated to the common order.
    fn mul(self, rhs: &'a Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Series::new(out)
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &'a Series) -> Series {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial_general, rat};
    use proptest::prelude::*;

    #[test]
    fn add_examples() {
        let a = Series::from_integers(&[1, 1]);
        let b = Series::from_integers(&[1, -1]);
        assert_eq!(&a + &b, Series::from_integers(&[2, 0]));
        assert_eq!(&a + &Series::zero(1), a);
        let c = catalan(10);
        assert!((&c + &(-&c)).is_zero());
    }

    #[test]
    fn add_uses_smaller_order() {
        let a = Series::from_integers(&[1, 2, 3, 4]);
        let b = Series::from_integers(&[1, 1]);
        let sum = &a + &b;
        assert_eq!(sum.order(), 1);
        assert_eq!(sum, Series::from_integers(&[2, 3]));
    }

    #[test]
    fn mul_examples() {
        let a = Series::from_integers(&[1, 1, 0]);
        assert_eq!(&a * &a, Series::from_integers(&[1, 2, 1]));

        // C (1 + sqrt(1 - 4t)) = 2
        let k = 32;
        let one_plus_s = &Series::one(k) + &binomial_power(&rat(1, 2), k);
        assert_eq!(&catalan(k) * &one_plus_s, Series::constant(int(2), k));

        let c5 = catalan(5);
        assert_eq!(&c5 * &c5, Series::from_integers(&[1, 2, 5, 14, 42, 132]));
    }

    #[test]
    fn pow_examples() {
        let a = Series::from_integers(&[3, 1, 4]);
        assert_eq!(a.pow(0), Series::one(2));
        assert_eq!(catalan(4).pow(1), Series::from_integers(&[1, 1, 2, 5, 14]));
        assert_eq!(catalan(2).pow(3).coeff(2), Some(&int(9)));
    }

    #[test]
    fn derivative_examples() {
        let p = Series::from_integers(&[1, 3, 1]);
        assert_eq!(p.derivative().unwrap(), Series::from_integers(&[3, 2]));
        assert_eq!(
            catalan(3).derivative().unwrap(),
            Series::from_integers(&[1, 4, 15])
        );
        assert_eq!(Series::one(0).derivative(), Err(Error::OrderZeroDerivative));
        assert_eq!(
            Error::OrderZeroDerivative.to_string(),
            "cannot differentiate order-0 series"
        );
    }

    #[test]
    fn nth_derivative_of_catalan_series() {
        let k = 30;
        let c = catalan(k);
        for big_n in 1..6usize {
            let d = c.nth_derivative(big_n).unwrap();
            assert_eq!(d.order(), k - big_n);
            for n in 0..=d.order() {
                let expected = int(catalan_closed((n + big_n) as u64))
                    * crate::arith::falling_factorial(&int(n + big_n), big_n);
                assert_eq!(d.coeff(n), Some(&expected));
            }
        }
    }

    #[test]
    fn binomial_power_examples() {
        assert_eq!(
            binomial_power(&int(1), 2),
            Series::from_integers(&[1, -4, 0])
        );
        assert_eq!(
            binomial_power(&int(-1), 3),
            Series::from_integers(&[1, 4, 16, 64])
        );
        let half = binomial_power(&rat(1, 2), 4);
        assert_eq!(half, Series::from_integers(&[1, -2, -2, -4, -10]));
        assert_eq!(&half * &half, Series::from_integers(&[1, -4, 0, 0, 0]));
    }

    #[test]
    fn binomial_power_matches_general_binomial() {
        for alpha in [rat(1, 2), rat(-3, 2), rat(5, 3), int(4)] {
            let series = binomial_power(&alpha, 20);
            for m in 0..=20 {
                let expected = binomial_general(&alpha, m) * int(crate::arith::ipow(-4, m));
                assert_eq!(series.coeff(m), Some(&expected), "alpha = {alpha}, m = {m}");
            }
        }
    }

    #[test]
    fn binomial_powers_are_mutually_inverse() {
        let k = 24;
        for alpha in [rat(1, 2), rat(-1, 2), rat(3, 2), rat(-5, 2)] {
            let prod = &binomial_power(&alpha, k) * &binomial_power(&-alpha.clone(), k);
            assert_eq!(prod, Series::one(k), "alpha = {alpha}");
        }
    }

    #[test]
    fn catalan_series_examples() {
        assert_eq!(catalan(4), Series::from_integers(&[1, 1, 2, 5, 14]));

        // C = 1 + t C^2, checked against the convolution recurrence
        let k = 40;
        let c = catalan(k);
        let sq = &c * &c;
        for n in 1..=k {
            assert_eq!(c.coeff(n), sq.coeff(n - 1));
        }

        // sqrt(1-4t) C = 2 - C
        let s = binomial_power(&rat(1, 2), k);
        assert_eq!(&s * &c, &Series::constant(int(2), k) - &c);
    }

    #[test]
    fn sqrt_one_plus_examples() {
        let s = sqrt_one_plus(16);
        assert_eq!(s.coeff(0), Some(&int(1)));
        assert_eq!(s.coeff(2), Some(&rat(-1, 8)));
        assert_eq!(s.coeff(2), Some(&binomial_general(&rat(1, 2), 2)));
        // (1 + y)^(1/2) is the (1 - 4t)^(1/2) expansion with y = -4t
        let via_t = binomial_power(&rat(1, 2), 16);
        for n in 0..=16 {
            let rescaled = via_t.coeff(n).unwrap() / int(crate::arith::ipow(-4, n));
            assert_eq!(s.coeff(n), Some(&rescaled));
        }
    }

    #[test]
    fn division_by_unit_polynomial() {
        // 1 / (1 - 4t) = sum 4^n t^n
        let q = Series::one(5).div_by_polynomial(&[int(1), int(-4)]);
        assert_eq!(q, Series::from_integers(&[1, 4, 16, 64, 256, 1024]));
    }

    fn small_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec((-50i64..50, 1i64..6), order + 1)
            .prop_map(|v| Series::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_axioms(a in small_series(16), b in small_series(16), c in small_series(16)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn leibniz_rule(a in small_series(16), b in small_series(16)) {
            let lhs = (&a * &b).derivative().unwrap();
            let rhs = &(&a.derivative().unwrap() * &b) + &(&a * &b.derivative().unwrap());
            prop_assert_eq!(lhs.order(), 15);
            // rhs mixes order-15 and order-16 operands, so compare on 0..=15
            prop_assert_eq!(lhs, rhs.truncate(15));
        }
    }
}
