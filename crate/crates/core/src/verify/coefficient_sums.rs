//! Coefficient-level consequences of the differential equations: the
//! expressions for `C_{n+N}` and `C_k^(N+1)`, and the Kronecker-delta
//! relation between the two coefficient families.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{
    a_row, b_row, require_positive, CoeffSource, IdentityId, Mode, VerificationReport, Witness,
};
use crate::arith::{binomial_general, factorial, falling_factorial, int, ipow, Rational};
use crate::catalan::{catalan_closed, catalan_prefix, HigherCatalanTable};
use crate::coeffs::{a_closed_form, a_table_recurrence};
use crate::error::Result;

/// Checks
/// `C_{n+N} = 1/(n+N)_N sum_{i=1}^{N} sum_{m=0}^{n} 4^m binom((2N-i)/2 + m - 1, m) a_i(N) C_{n-m}^(i+1)`.
pub fn verify_thm2(n: usize, big_n: usize) -> Result<VerificationReport> {
    verify_thm2_with(n, big_n, CoeffSource::Recurrence)
}

pub fn verify_thm2_with(n: usize, big_n: usize, source: CoeffSource) -> Result<VerificationReport> {
    require_positive("N", big_n)?;
    let start = Instant::now();
    let a = a_row(big_n, source)?;
    let higher = HigherCatalanTable::new(big_n + 1, n);

    let mut sum = Rational::zero();
    for (idx, a_i) in a.iter().enumerate() {
        let i = idx + 1;
        let alpha_base =
            Rational::new(BigInt::from(2 * big_n - i), BigInt::from(2)) - Rational::one();
        for m in 0..=n {
            let binom = binomial_general(&(&alpha_base + int(m)), m);
            let c = higher
                .get(i + 1, n - m)
                .expect("table covers i+1 <= N+1, n-m <= n");
            sum += binom * int(ipow(4, m) * a_i * c);
        }
    }
    let lhs = sum / falling_factorial(&int(n + big_n), big_n);
    let rhs = int(catalan_closed((n + big_n) as u64));

    let witness = (lhs != rhs).then(|| Witness {
        index: n as i64,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    });
    Ok(VerificationReport::build(
        IdentityId::Thm2,
        &[("N", big_n as i64), ("n", n as i64)],
        Mode::Series,
        witness,
        start.elapsed(),
    ))
}

/// Checks
/// `C_k^(N+1) = 1/N! sum_{i=0}^{N/2} sum_{m=0}^{k} binom(N/2 - i, k - m) (m+N-i)_{N-i} (-4)^(k-m) b_i(N) C_{m+N-i}`
/// against the coefficient of `t^k` in `C^(N+1)`.
pub fn verify_thm4(k: usize, big_n: usize) -> Result<VerificationReport> {
    require_positive("N", big_n)?;
    let start = Instant::now();
    let b = b_row(big_n)?;
    let catalan = catalan_prefix(k + big_n);

    let mut sum = Rational::zero();
    for (i, b_i) in b.iter().enumerate() {
        let alpha = Rational::new(BigInt::from(big_n as i64 - 2 * i as i64), BigInt::from(2));
        let depth = big_n - i;
        for m in 0..=k {
            let binom = binomial_general(&alpha, k - m);
            if binom.is_zero() {
                continue;
            }
            let falling = falling_factorial(&int(m + depth), depth);
            sum += binom * falling * int(ipow(-4, k - m) * b_i * &catalan[m + depth]);
        }
    }
    let lhs = sum / int(factorial(big_n as u64));
    let higher = HigherCatalanTable::new(big_n + 1, k);
    let rhs = int(higher.get(big_n + 1, k).expect("table entry").clone());

    let witness = (lhs != rhs).then(|| Witness {
        index: k as i64,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    });
    Ok(VerificationReport::build(
        IdentityId::Thm4,
        &[("N", big_n as i64), ("k", k as i64)],
        Mode::Series,
        witness,
        start.elapsed(),
    ))
}

/// Checks `sum_{i=0}^{min(N-j, N/2)} a_j(N-i) b_i(N) / N! = delta_{j,N}` for
/// every `1 <= j <= N`.
pub fn verify_inverse_delta(big_n: usize) -> Result<VerificationReport> {
    verify_inverse_delta_with(big_n, CoeffSource::Recurrence)
}

pub(crate) fn verify_inverse_delta_with(
    big_n: usize,
    source: CoeffSource,
) -> Result<VerificationReport> {
    require_positive("N", big_n)?;
    let start = Instant::now();
    let a_rec = a_table_recurrence(big_n)?;
    let a = |j: usize, n: usize| -> Result<BigInt> {
        match source {
            CoeffSource::Recurrence => Ok(a_rec.get(j, n).expect("a_j(n) with j <= n").clone()),
            CoeffSource::ClosedForm => a_closed_form(j, n),
        }
    };
    let b = b_row(big_n)?;
    let n_fact = int(factorial(big_n as u64));

    let mut witness = None;
    for j in 1..=big_n {
        let upper = (big_n - j).min(big_n / 2);
        let mut sum = BigInt::zero();
        for (i, b_i) in b.iter().enumerate().take(upper + 1) {
            sum += a(j, big_n - i)? * b_i;
        }
        let lhs = int(sum) / &n_fact;
        let rhs = if j == big_n {
            Rational::one()
        } else {
            Rational::zero()
        };
        if lhs != rhs {
            witness = Some(Witness {
                index: j as i64,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
            break;
        }
    }
    Ok(VerificationReport::build(
        IdentityId::Eq57,
        &[("N", big_n as i64)],
        Mode::Symbolic,
        witness,
        start.elapsed(),
    ))
}
