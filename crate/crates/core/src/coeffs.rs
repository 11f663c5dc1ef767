//! Coefficient families of the two differential-equation families for the
//! Catalan generating function `C`:
//!
//! * forward: `C^(N) = sum_{i=1}^{N} a_i(N) (1-4t)^(-(2N-i)/2) C^(i+1)`
//! * inverse: `N! C^(N+1) = sum_{i=0}^{N/2} b_i(N) (1-4t)^(N/2-i) C^(N-i)`
//!
//! Each family is produced by its row recurrence and, independently, by a
//! closed form. The recurrences are the ground truth the closed forms are
//! tested against.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{
    double_factorial_odd, factorial, int, ipow, shifted_factorial, to_integer, Rational,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "a",
            Family::B => "b",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Family::A),
            "b" => Ok(Family::B),
            other => Err(Error::InvalidBound(format!(
                "unknown coefficient family {other:?}"
            ))),
        }
    }
}

/// Triangular table of exact integer coefficients, rows `N = 1..=max_n`.
///
/// Row `N` of family a holds `a_1(N)..=a_N(N)`; row `N` of family b holds
/// `b_0(N)..=b_{N/2}(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    family: Family,
    rows: Vec<Vec<BigInt>>,
}

impl CoeffTable {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n.checked_sub(1)?).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigInt])> {
        self.rows
            .iter()
            .enumerate()
            .map(|(k, r)| (k + 1, r.as_slice()))
    }

    /// Entry `a_i(N)` or `b_i(N)`, with the family's own index base.
    pub fn get(&self, i: usize, n: usize) -> Option<&BigInt> {
        let row = self.row(n)?;
        match self.family {
            Family::A => row.get(i.checked_sub(1)?),
            Family::B => row.get(i),
        }
    }

    /// `{ "family": "a"|"b", "rows": [{ "N": int, "entries": [string] }] }`
    /// with every entry as a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows()
            .map(|(n, row)| {
                serde_json::json!({
                    "N": n,
                    "entries": row.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "family": self.family.to_string(), "rows": rows })
    }
}

fn check_max_n(max_n: usize) -> Result<()> {
    if max_n == 0 {
        return Err(Error::InvalidBound(
            "table needs at least one row (N >= 1)".into(),
        ));
    }
    Ok(())
}

/// `a_i(N)` rows from `a_1(1) = 1` and
/// `a_1(N+1) = 2(2N-1) a_1(N)`, `a_{N+1}(N+1) = (N+1) a_N(N)`,
/// `a_i(N+1) = i a_{i-1}(N) + 2(2N-i) a_i(N)` for `2 <= i <= N`.
pub fn a_table_recurrence(max_n: usize) -> Result<CoeffTable> {
    check_max_n(max_n)?;
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..max_n {
        let prev = &rows[n - 1];
        let mut next = Vec::with_capacity(n + 1);
        next.push(&prev[0] * (2 * (2 * n - 1)));
        for i in 2..=n {
            next.push(&prev[i - 2] * i + &prev[i - 1] * (2 * (2 * n - i)));
        }
        next.push(&prev[n - 1] * (n + 1));
        rows.push(next);
    }
    Ok(CoeffTable {
        family: Family::A,
        rows,
    })
}

/// Closed form of `a_i(N)`:
///
/// `2^(N-i) i! sum_{k_{i-1}} ... sum_{k_1} prod_{l=1}^{i-1} (x_l; 2)_{k_l} (y)!!`
///
/// with `x_l = 2N - 2(k_{l+1} + ... + k_{i-1}) - 2i - 1 + l`,
/// `y = 2N - 2(k_1 + ... + k_{i-1}) - 2i - 1` and the indices ranging over
/// `k_1 + ... + k_{i-1} <= N - i`. For `i = 1` the sum is the single empty
/// term and the value is `2^(N-1) (2N-3)!!`.
pub fn a_closed_form(i: usize, n: usize) -> Result<BigInt> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!(
            "a_{i}({n}) needs 1 <= i <= N"
        )));
    }
    let (ni, ii) = (n as i64, i as i64);
    let sum = nested_sum(ni, ii, i - 1, n - i, 0)?;
    let value = sum * int(ipow(2, n - i)) * int(factorial(i as u64));
    Ok(to_integer(&value).expect("a_i(N) closed form must be integral"))
}

/// Sum over `k_level, k_{level-1}, ..., k_1` given that the indices above
/// `level` sum to `above` and at most `budget` remains.
fn nested_sum(n: i64, i: i64, level: usize, budget: usize, above: i64) -> Result<Rational> {
    if level == 0 {
        let arg = 2 * n - 2 * above - 2 * i - 1;
        return Ok(int(double_factorial_odd(arg)?));
    }
    let x = int(2 * n - 2 * above - 2 * i - 1 + level as i64);
    let two = int(2);
    let mut total = Rational::zero();
    for k in 0..=budget {
        let factor = shifted_factorial(&x, &two, k);
        if factor.is_zero() {
            // (x; 2)_k stays zero for every larger k
            break;
        }
        total += factor * nested_sum(n, i, level - 1, budget - k, above + k as i64)?;
    }
    Ok(total)
}

/// Family-a table filled cell by cell from [`a_closed_form`].
pub fn a_table_closed_form(max_n: usize) -> Result<CoeffTable> {
    check_max_n(max_n)?;
    let rows = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            (1..=n)
                .map(|i| a_closed_form(i, n))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoeffTable {
        family: Family::A,
        rows,
    })
}

/// A value of the nested weighted sums `S_{N,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SNumber {
    pub n: usize,
    pub j: usize,
    pub value: BigInt,
}

impl SNumber {
    pub fn new(n: usize, j: usize) -> Result<Self> {
        Ok(SNumber {
            n,
            j,
            value: s_number(n, j)?,
        })
    }
}

/// `S_{N,1} = N + (N-1) + ... + 1` and
/// `S_{N,j} = N S_{N+1,j-1} + (N-1) S_{N,j-1} + ... + 1 S_{2,j-1}`.
pub fn s_number(n: usize, j: usize) -> Result<BigInt> {
    if n == 0 || j == 0 {
        return Err(Error::IndexOutOfRange(format!(
            "S_({n},{j}) needs N >= 1 and j >= 1"
        )));
    }
    // level[m] = S_{m,current j} for m in 1..=width; level 1 needs the
    // widest range because each step reads one index further
    let width = n + j - 1;
    let mut level: Vec<BigInt> = (0..=width).map(|m| BigInt::from(m * (m + 1) / 2)).collect();
    for step in 2..=j {
        let width = n + j - step;
        let mut next = vec![BigInt::zero(); width + 1];
        let mut acc = BigInt::zero();
        for m in 1..=width {
            acc += &level[m + 1] * m;
            next[m] = acc.clone();
        }
        level = next;
    }
    Ok(level[n].clone())
}

/// `b_i(N)` rows from `b_0(1) = 1`, `b_0(N+1) = b_0(N)` and
/// `b_i(N+1) = -2(N+2-2i) b_{i-1}(N) + b_i(N)`; entries past the end of a
/// row count as zero.
pub fn b_table_recurrence(max_n: usize) -> Result<CoeffTable> {
    check_max_n(max_n)?;
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..max_n {
        let prev = &rows[n - 1];
        let zero = BigInt::zero();
        let at = |i: usize| prev.get(i).unwrap_or(&zero);
        let width = n.div_ceil(2);
        let mut next = Vec::with_capacity(width + 1);
        next.push(prev[0].clone());
        for i in 1..=width {
            let factor = -2 * (n as i64 + 2 - 2 * i as i64);
            next.push(at(i - 1) * factor + at(i));
        }
        rows.push(next);
    }
    Ok(CoeffTable {
        family: Family::B,
        rows,
    })
}

/// `b_0(N) = 1`, `b_i(N) = (-2)^i S_{N+1-2i, i}` for `1 <= i <= N/2`.
pub fn b_closed_form(i: usize, n: usize) -> Result<BigInt> {
    if n == 0 || i > n / 2 {
        return Err(Error::IndexOutOfRange(format!(
            "b_{i}({n}) needs N >= 1 and 0 <= i <= N/2"
        )));
    }
    if i == 0 {
        return Ok(BigInt::one());
    }
    Ok(ipow(-2, i) * s_number(n + 1 - 2 * i, i)?)
}

/// Family-b table filled cell by cell from [`b_closed_form`].
pub fn b_table_closed_form(max_n: usize) -> Result<CoeffTable> {
    check_max_n(max_n)?;
    let rows = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            (0..=n / 2)
                .map(|i| b_closed_form(i, n))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoeffTable {
        family: Family::B,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn a_recurrence_rows() {
        let t = a_table_recurrence(4).unwrap();
        assert_eq!(t.row(1).unwrap(), big(&[1]).as_slice());
        assert_eq!(t.row(2).unwrap(), big(&[2, 2]).as_slice());
        assert_eq!(t.row(3).unwrap(), big(&[12, 12, 6]).as_slice());
        assert_eq!(t.get(3, 3), Some(&BigInt::from(6)));
        assert_eq!(t.get(0, 3), None);
        assert_eq!(t.get(4, 3), None);
        assert!(a_table_recurrence(0).is_err());
    }

    #[test]
    fn a_closed_form_examples() {
        assert_eq!(a_closed_form(1, 1).unwrap(), BigInt::one());
        assert_eq!(a_closed_form(2, 3).unwrap(), BigInt::from(12));
        for n in 1..=10 {
            assert_eq!(a_closed_form(n, n).unwrap(), factorial(n as u64), "N = {n}");
        }
        assert!(matches!(
            a_closed_form(0, 3),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            a_closed_form(4, 3),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn a_routes_agree_to_twelve() {
        let rec = a_table_recurrence(12).unwrap();
        assert_eq!(a_table_closed_form(12).unwrap(), rec);
    }

    #[test]
    fn a_boundary_columns() {
        let t = a_table_recurrence(15).unwrap();
        for (n, row) in t.rows() {
            let df = double_factorial_odd(2 * n as i64 - 3).unwrap();
            assert_eq!(row[0], ipow(2, n - 1) * df, "a_1({n})");
            assert_eq!(row[n - 1], factorial(n as u64), "a_{n}({n})");
            assert!(row.iter().all(Signed::is_positive));
        }
    }

    #[test]
    fn a_single_sum_recursion() {
        // a_i(N+1) = i sum_{k=0}^{N-i+1} 2^k (2N-i; 2)_k a_{i-1}(N-k), 2 <= i <= N
        let t = a_table_recurrence(12).unwrap();
        for n in 2..12usize {
            for i in 2..=n {
                let mut sum = Rational::zero();
                for k in 0..=(n + 1 - i) {
                    let sf = shifted_factorial(&int(2 * n as i64 - i as i64), &int(2), k);
                    sum += int(ipow(2, k)) * sf * int(t.get(i - 1, n - k).unwrap().clone());
                }
                assert_eq!(
                    sum * int(i),
                    int(t.get(i, n + 1).unwrap().clone()),
                    "a_{i}({})",
                    n + 1
                );
            }
        }
    }

    #[test]
    fn s_number_examples() {
        assert_eq!(s_number(4, 1).unwrap(), BigInt::from(10));
        assert_eq!(s_number(1, 2).unwrap(), BigInt::from(3));
        assert_eq!(s_number(2, 2).unwrap(), BigInt::from(15));
        assert_eq!(SNumber::new(2, 2).unwrap().value, BigInt::from(15));
        assert!(s_number(0, 1).is_err());
        assert!(s_number(1, 0).is_err());
    }

    #[test]
    fn s_number_matches_naive_definition() {
        fn naive(n: usize, j: usize) -> BigInt {
            if j == 1 {
                return BigInt::from(n * (n + 1) / 2);
            }
            (1..=n).map(|k| naive(k + 1, j - 1) * k).sum()
        }
        for n in 1..=8 {
            for j in 1..=4 {
                assert_eq!(s_number(n, j).unwrap(), naive(n, j), "S_({n},{j})");
                assert!(s_number(n, j).unwrap().is_positive());
            }
        }
    }

    #[test]
    fn b_recurrence_rows() {
        let t = b_table_recurrence(4).unwrap();
        assert_eq!(t.row(1).unwrap(), big(&[1]).as_slice());
        assert_eq!(t.row(2).unwrap(), big(&[1, -2]).as_slice());
        assert_eq!(t.row(3).unwrap(), big(&[1, -6]).as_slice());
        assert_eq!(t.row(4).unwrap(), big(&[1, -12, 12]).as_slice());
        assert_eq!(t.get(2, 4), Some(&BigInt::from(12)));
    }

    #[test]
    fn b_closed_form_examples() {
        for n in 1..10 {
            assert_eq!(b_closed_form(0, n).unwrap(), BigInt::one());
        }
        assert_eq!(b_closed_form(1, 3).unwrap(), BigInt::from(-6));
        assert_eq!(b_closed_form(2, 4).unwrap(), BigInt::from(12));
        assert!(matches!(
            b_closed_form(3, 5),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            b_closed_form(0, 0),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn b_routes_agree_to_sixteen() {
        let rec = b_table_recurrence(16).unwrap();
        assert_eq!(b_table_closed_form(16).unwrap(), rec);
        for (_, row) in rec.rows() {
            assert!(row[0].is_one());
            for (i, b) in row.iter().enumerate().skip(1) {
                let expected_negative = i % 2 == 1;
                assert_eq!(b.is_negative(), expected_negative);
                assert!(!b.is_zero());
            }
        }
    }

    #[test]
    fn json_export() {
        let t = b_table_recurrence(3).unwrap();
        let json = t.to_json().to_string();
        assert_eq!(
            json,
            r#"{"family":"b","rows":[{"N":1,"entries":["1"]},{"N":2,"entries":["1","-2"]},{"N":3,"entries":["1","-6"]}]}"#
        );
        assert_eq!("a".parse::<Family>().unwrap(), Family::A);
        assert!("c".parse::<Family>().is_err());
    }
}
