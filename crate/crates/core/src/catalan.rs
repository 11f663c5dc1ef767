//! Catalan numbers by three independent routes, higher-order Catalan
//! numbers as coefficients of powers of the generating series, and the
//! asymptotic ratio `C_n n^(3/2) sqrt(pi) / 4^n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, int, to_integer, Rational};
use crate::numeric::{decimal, sqrt_floor, SQRT_PI};
use crate::series::{self, Series};

/// A Catalan number together with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalanValue {
    pub index: u64,
    pub value: BigInt,
}

impl CatalanValue {
    pub fn new(index: u64) -> Self {
        CatalanValue {
            index,
            value: catalan_closed(index),
        }
    }
}

/// `binom(2n, n) / (n + 1)`; the division is exact.
pub fn catalan_closed(n: u64) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `prod_{k=2}^{n} (n + k) / k`: numerator and denominator products are
/// formed separately and reduced once.
///
/// Panics if the product is not an integer.
pub fn catalan_product(n: u64) -> BigInt {
    let num: BigInt = (2..=n).map(|k| BigInt::from(n + k)).product();
    let den: BigInt = (2..=n).map(BigInt::from).product();
    to_integer(&Rational::new(num, den)).expect("Catalan product formula must be integral")
}

/// `C_0..=C_nmax` from `C_0 = 1`, `C_n = sum_{m<n} C_m C_{n-1-m}`.
pub fn catalan_recurrence(nmax: usize) -> Vec<BigInt> {
    let mut values: Vec<BigInt> = Vec::with_capacity(nmax + 1);
    values.push(BigInt::one());
    for n in 1..=nmax {
        let next = (0..n).fold(BigInt::zero(), |acc, m| {
            acc + &values[m] * &values[n - 1 - m]
        });
        values.push(next);
    }
    values
}

/// `C_0..=C_nmax` via `C_{n+1} = C_n 2(2n+1)/(n+2)`. Fast path used to
/// populate lookup tables.
pub fn catalan_prefix(nmax: usize) -> Vec<BigInt> {
    let mut values = Vec::with_capacity(nmax + 1);
    let mut c = BigInt::one();
    values.push(c.clone());
    for n in 0..nmax as u64 {
        c = c * (2 * (2 * n + 1)) / (n + 2);
        values.push(c.clone());
    }
    values
}

/// `C_n^(r)`: coefficient of `t^n` in `C(t)^r`.
pub fn higher_catalan(r: usize, n: usize) -> BigInt {
    assert!(r >= 1, "higher-order Catalan numbers need r >= 1");
    let power = series::catalan(n).pow(r);
    to_integer(&power.coeffs()[n]).expect("higher-order Catalan numbers are integers")
}

/// Memoized `C_n^(r)` for `1 <= r <= rmax`, `0 <= n <= nmax`, built by
/// repeated multiplication of the Catalan series. Read-only once built.
#[derive(Debug, Clone)]
pub struct HigherCatalanTable {
    rows: Vec<Vec<BigInt>>,
}

impl HigherCatalanTable {
    pub fn new(rmax: usize, nmax: usize) -> Self {
        let base = series::catalan(nmax);
        let mut rows = Vec::with_capacity(rmax);
        let mut power: Series = Series::one(nmax);
        for _ in 0..rmax {
            power = &power * &base;
            rows.push(
                power
                    .coeffs()
                    .iter()
                    .map(|c| to_integer(c).expect("integral coefficient"))
                    .collect(),
            );
        }
        HigherCatalanTable { rows }
    }

    pub fn rmax(&self) -> usize {
        self.rows.len()
    }

    pub fn nmax(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len() - 1)
    }

    /// `C_n^(r)`, or `None` outside the table.
    pub fn get(&self, r: usize, n: usize) -> Option<&BigInt> {
        self.rows.get(r.checked_sub(1)?)?.get(n)
    }
}

/// `C_n n^(3/2) sqrt(pi) / 4^n` to roughly 40 significant digits.
pub fn catalan_asymptotic_ratio(n: u64) -> Rational {
    assert!(n >= 1, "asymptotic ratio needs n >= 1");
    let exact = Rational::new(
        catalan_closed(n) * n,
        num_traits::pow(BigInt::from(4), n as usize),
    );
    let digits = 45;
    exact * sqrt_floor(&int(n), digits) * decimal(SQRT_PI)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    const PRINTED: [u64; 13] = [
        1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
    ];

    #[test]
    fn closed_form_examples() {
        assert_eq!(catalan_closed(0), BigInt::from(1));
        assert_eq!(catalan_closed(12), BigInt::from(208012));
        assert_eq!(catalan_closed(5), BigInt::from(42));
        assert_eq!(CatalanValue::new(7).value, BigInt::from(429));
    }

    #[test]
    fn recurrence_examples() {
        let v = catalan_recurrence(4);
        let expected: Vec<BigInt> = PRINTED[..5].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(v, expected);
        // C_3 = C_0 C_2 + C_1 C_1 + C_2 C_0
        let c: [i64; 3] =
            [v[0].clone(), v[1].clone(), v[2].clone()].map(|x| i64::try_from(x).unwrap());
        assert_eq!(v[3], BigInt::from(c[0] * c[2] + c[1] * c[1] + c[2] * c[0]));
    }

    #[test]
    fn printed_sequence_by_every_route() {
        let rec = catalan_recurrence(12);
        let ser = series::catalan(12);
        for (n, &expected) in PRINTED.iter().enumerate() {
            let e = BigInt::from(expected);
            assert_eq!(catalan_closed(n as u64), e);
            assert_eq!(catalan_product(n as u64), e);
            assert_eq!(rec[n], e);
            assert_eq!(ser.coeffs()[n], int(e.clone()));
            assert_eq!(catalan_prefix(12)[n], e);
        }
    }

    #[test]
    fn routes_agree_to_five_hundred() {
        let rec = catalan_recurrence(500);
        let ser = series::catalan(500);
        let pre = catalan_prefix(500);
        for n in 0..=500usize {
            let c = catalan_closed(n as u64);
            assert_eq!(rec[n], c);
            assert_eq!(pre[n], c);
            assert_eq!(ser.coeffs()[n], int(c.clone()));
        }
    }

    #[test]
    fn product_formula_to_two_hundred() {
        for n in 0..=200u64 {
            assert_eq!(catalan_product(n), catalan_closed(n), "n = {n}");
        }
    }

    #[test]
    fn higher_catalan_examples() {
        for n in 0..10 {
            assert_eq!(higher_catalan(1, n), catalan_closed(n as u64));
        }
        assert_eq!(higher_catalan(2, 3), BigInt::from(14));
        // C^3 at t^2: triple convolution by brute force
        let c = [1, 1, 2];
        let mut brute = 0;
        for a in 0..3 {
            for b in 0..3 {
                for d in 0..3 {
                    if a + b + d == 2 {
                        brute += c[a] * c[b] * c[d];
                    }
                }
            }
        }
        assert_eq!(brute, 9);
        assert_eq!(higher_catalan(3, 2), BigInt::from(brute));
        for r in 1..=10 {
            assert_eq!(higher_catalan(r, 0), BigInt::one());
        }
    }

    #[test]
    fn order_two_is_shifted_sequence() {
        let table = HigherCatalanTable::new(2, 100);
        for n in 0..=100 {
            assert_eq!(table.get(2, n), Some(&catalan_closed(n as u64 + 1)));
        }
        assert_eq!(higher_catalan(2, 100), catalan_closed(101));
    }

    #[test]
    fn table_matches_single_evaluation() {
        let table = HigherCatalanTable::new(5, 12);
        assert_eq!(table.rmax(), 5);
        assert_eq!(table.nmax(), 12);
        for r in 1..=5 {
            for n in 0..=12 {
                assert_eq!(table.get(r, n), Some(&higher_catalan(r, n)));
            }
        }
        assert_eq!(table.get(0, 0), None);
        assert_eq!(table.get(6, 0), None);
    }

    #[test]
    fn asymptotic_ratio_bands() {
        let r1000 = catalan_asymptotic_ratio(1000);
        assert!(r1000 > rat(99, 100) && r1000 < rat(101, 100));
        let r10 = catalan_asymptotic_ratio(10);
        assert!(r10 > rat(8, 10) && r10 < int(1));
        // approaches 1 from below, error ~ 9/(8n)
        assert!(catalan_asymptotic_ratio(100) < r1000);
    }
}
