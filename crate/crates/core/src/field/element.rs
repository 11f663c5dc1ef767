use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Polynomial, RationalFunction};
use crate::arith::{rat, Rational};
use crate::error::{Error, Result};
use crate::series::{self, Series};

/// `1 - 4t`, the square of the adjoined element `s`.
pub fn one_minus_4t() -> Polynomial {
    Polynomial::from_integers(&[1, -4])
}

/// Element `a(t) + b(t) s` of `Q(t)[s]/(s^2 - (1 - 4t))`, where `s` stands
/// for `sqrt(1 - 4t)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicElement {
    even: RationalFunction,
    odd: RationalFunction,
}

impl AlgebraicElement {
    pub fn new(even: RationalFunction, odd: RationalFunction) -> Self {
        AlgebraicElement { even, odd }
    }

    pub fn zero() -> Self {
        Self::from_rational_function(RationalFunction::zero())
    }

    pub fn one() -> Self {
        Self::from_rational_function(RationalFunction::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_rational_function(RationalFunction::constant(c))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self::from_rational_function(RationalFunction::from_poly(p))
    }

    pub fn from_rational_function(f: RationalFunction) -> Self {
        AlgebraicElement {
            even: f,
            odd: RationalFunction::zero(),
        }
    }

    /// The adjoined square root `s`.
    pub fn s() -> Self {
        AlgebraicElement {
            even: RationalFunction::zero(),
            odd: RationalFunction::one(),
        }
    }

    /// The Catalan generating function `2/(1 + s)`, in normal form
    /// `(1 - s)/(2t)`.
    pub fn catalan() -> Self {
        let inv_2t = RationalFunction::new(Polynomial::one(), Polynomial::from_integers(&[0, 2]))
            .expect("2t is nonzero");
        AlgebraicElement {
            odd: -&inv_2t,
            even: inv_2t,
        }
    }

    /// `s^e = (1 - 4t)^(e/2)` for any integer `e`.
    pub fn half_power(e: i64) -> Self {
        let base = if e >= 0 {
            AlgebraicElement::s()
        } else {
            AlgebraicElement::s().inverse().expect("s is nonzero")
        };
        let k = e.unsigned_abs() as usize;
        // s^(2j) = (1 - 4t)^j lies in Q(t); multiply in the odd factor last
        let squared = &base * &base;
        let mut result = squared.pow(k / 2);
        if k % 2 == 1 {
            result = &result * &base;
        }
        result
    }

    pub fn even_part(&self) -> &RationalFunction {
        &self.even
    }

    pub fn odd_part(&self) -> &RationalFunction {
        &self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Largest polynomial degree among the four numerators/denominators.
    pub fn degree(&self) -> usize {
        self.even.degree().max(self.odd.degree())
    }

    /// Fails with a diagnostic if `degree()` exceeds `cap`.
    pub fn check_degree(&self, cap: usize, context: &str) -> Result<()> {
        let degree = self.degree();
        if degree > cap {
            return Err(Error::DegreeCapExceeded {
                context: context.to_string(),
                degree,
                cap,
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AlgebraicElement {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }

    pub fn pow(&self, mut r: usize) -> Self {
        let mut result = AlgebraicElement::one();
        let mut base = self.clone();
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

    /// The conjugate `a - b s`.
    pub fn conjugate(&self) -> Self {
        AlgebraicElement {
            even: self.even.clone(),
            odd: -&self.odd,
        }
    }

    /// `(a + bs)^-1 = (a - bs) / (a^2 - b^2 (1 - 4t))`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InversionOfZero);
        }
        let norm = &(&self.even * &self.even)
            - &(&(&self.odd * &self.odd) * &RationalFunction::from_poly(one_minus_4t()));
        // the norm vanishes only at zero because 1 - 4t is not a square in Q(t)
        let inv_norm = norm.inverse()?;
        Ok(AlgebraicElement {
            even: &self.even * &inv_norm,
            odd: -&(&self.odd * &inv_norm),
        })
    }

    /// `d/dt (a + bs) = a' + (b' - 2b/(1 - 4t)) s`, using `s' = -2s/(1 - 4t)`.
    pub fn derivative(&self) -> Self {
        let two_over = RationalFunction::new(Polynomial::from_integers(&[2]), one_minus_4t())
            .expect("1 - 4t is nonzero");
        AlgebraicElement {
            even: self.even.derivative(),
            odd: &self.odd.derivative() - &(&self.odd * &two_over),
        }
    }

    /// Taylor coefficients `0..=order` of `a(t) + b(t) sqrt(1 - 4t)` at the
    /// origin. Poles of `a` and `b` individually are allowed as long as
    /// they cancel in the sum.
    pub fn to_series(&self, order: usize) -> Result<Series> {
        let (qa, qb) = (self.even.denom(), self.odd.denom());
        let g = qa.gcd(qb);
        let cof_a = qb.div_exact(&g);
        let cof_b = qa.div_exact(&g);
        let common = qa * &cof_a;
        let pa = self.even.numer() * &cof_a;
        let pb = self.odd.numer() * &cof_b;

        let v = common.valuation().expect("denominator is nonzero");
        let work = order + v;
        let num = &poly_series(&pa, work)
            + &(&poly_series(&pb, work) * &series::binomial_power(&rat(1, 2), work));
        if num.coeffs()[..v]
            .iter()
            .any(|c| !num_traits::Zero::is_zero(c))
        {
            return Err(Error::NotRegularAtOrigin);
        }
        let unit_part = &common.coeffs()[v..];
        Ok(num.shift_down(v).div_by_polynomial(unit_part))
    }
}

fn poly_series(p: &Polynomial, order: usize) -> Series {
    let mut coeffs = p.coeffs().to_vec();
    coeffs.resize(order + 1, Rational::from_integer(0.into()));
    Series::new(coeffs)
}

impl fmt::Display for AlgebraicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + [{}]*s", self.even, self.odd)
    }
}

impl fmt::Debug for AlgebraicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicElement({self})")
    }
}

impl<'a> Add<&'a AlgebraicElement> for &'a AlgebraicElement {
    type Output = AlgebraicElement;

    fn add(self, rhs: &'a AlgebraicElement) -> AlgebraicElement {
        AlgebraicElement {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
        }
    }
}

impl<'a> Sub<&'a AlgebraicElement> for &'a AlgebraicElement {
    type Output = AlgebraicElement;

    fn sub(self, rhs: &'a AlgebraicElement) -> AlgebraicElement {
        AlgebraicElement {
            even: &self.even - &rhs.even,
            odd: &self.odd - &rhs.odd,
        }
    }
}

impl<'a> Mul<&'a AlgebraicElement> for &'a AlgebraicElement {
    type Output = AlgebraicElement;

    /// `(a + bs)(c + ds) = (ac + bd(1 - 4t)) + (ad + bc)s`.
    fn mul(self, rhs: &'a AlgebraicElement) -> AlgebraicElement {
        let (a, b, c, d) = (&self.even, &self.odd, &rhs.even, &rhs.odd);
        let bd = b * d;
        let even = if bd.is_zero() {
            a * c
        } else {
            &(a * c) + &(&bd * &RationalFunction::from_poly(one_minus_4t()))
        };
        AlgebraicElement {
            even,
            odd: &(a * d) + &(b * c),
        }
    }
}

impl Neg for &AlgebraicElement {
    type Output = AlgebraicElement;

    fn neg(self) -> AlgebraicElement {
        AlgebraicElement {
            even: -&self.even,
            odd: -&self.odd,
        }
    }
}

super::forward_owned_ops!(AlgebraicElement);
