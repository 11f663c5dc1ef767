//! Executable checks of every identity relating the Catalan numbers, the
//! coefficient families and the differential equations. Each check yields
//! a [`VerificationReport`]; [`suite`] sweeps them over parameter ranges.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigInt;

use crate::coeffs::{a_closed_form, a_table_recurrence, b_closed_form, b_table_recurrence};
use crate::error::{Error, Result};
use crate::field::DEFAULT_DEGREE_CAP;

mod coefficient_sums;
mod further;
mod odes;
pub mod suite;

pub use coefficient_sums::{verify_inverse_delta, verify_thm2, verify_thm2_with, verify_thm4};
pub use further::{
    eq59_target, eq62_target, sum_eq59, sum_eq62, verify_asymptotic,
    verify_convolution_recurrences, verify_eq59, verify_eq62, verify_eq64, verify_eq66,
    verify_sqrt_expansion, ConvergentSum, ASYMPTOTIC_BAND,
};
pub use odes::{verify_thm1, verify_thm1_with, verify_thm3, verify_thm3_with};

/// Identities the suite knows how to check, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Eq57,
    Eq58,
    Eq59,
    Eq62,
    Eq64,
    Eq66,
    Asymptotic,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Thm3,
        IdentityId::Thm4,
        IdentityId::Eq57,
        IdentityId::Eq58,
        IdentityId::Eq59,
        IdentityId::Eq62,
        IdentityId::Eq64,
        IdentityId::Eq66,
        IdentityId::Asymptotic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Thm1 => "thm1",
            IdentityId::Thm2 => "thm2",
            IdentityId::Thm3 => "thm3",
            IdentityId::Thm4 => "thm4",
            IdentityId::Eq57 => "eq57",
            IdentityId::Eq58 => "eq58",
            IdentityId::Eq59 => "eq59",
            IdentityId::Eq62 => "eq62",
            IdentityId::Eq64 => "eq64",
            IdentityId::Eq66 => "eq66",
            IdentityId::Asymptotic => "asymptotic",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidBound(format!("unknown identity id {s:?}")))
    }
}

/// How a check was carried out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Exact comparison of power-series coefficients (truncated series or
    /// coefficient-level identities).
    Series,
    /// Exact normal form in the algebraic function field.
    Symbolic,
    /// Exact partial sums compared against an irrational target.
    Numeric,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Series => "series",
            Mode::Symbolic => "symbolic",
            Mode::Numeric => "numeric",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "series" => Ok(Mode::Series),
            "symbolic" => Ok(Mode::Symbolic),
            "numeric" => Ok(Mode::Numeric),
            other => Err(Error::InvalidBound(format!("unknown mode {other:?}"))),
        }
    }
}

/// First place where the two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    /// Coefficient or term index; -1 when no single index applies.
    pub index: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity check. A report passes exactly when it carries
/// no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    identity: IdentityId,
    parameters: BTreeMap<String, i64>,
    mode: Mode,
    witness: Option<Witness>,
    elapsed: Duration,
}

impl VerificationReport {
    pub fn new(
        identity: IdentityId,
        parameters: BTreeMap<String, i64>,
        mode: Mode,
        witness: Option<Witness>,
        elapsed: Duration,
    ) -> Self {
        VerificationReport {
            identity,
            parameters,
            mode,
            witness,
            elapsed,
        }
    }

    pub(crate) fn build(
        identity: IdentityId,
        params: &[(&str, i64)],
        mode: Mode,
        witness: Option<Witness>,
        elapsed: Duration,
    ) -> Self {
        let parameters = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        VerificationReport::new(identity, parameters, mode, witness, elapsed)
    }

    pub fn identity(&self) -> IdentityId {
        self.identity
    }

    pub fn parameters(&self) -> &BTreeMap<String, i64> {
        &self.parameters
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }

    /// Deterministic report order: identity, then parameters compared as
    /// sorted `(name, value)` sequences, then mode.
    pub fn sort_key(&self) -> (IdentityId, Vec<(&str, i64)>, Mode) {
        (
            self.identity,
            self.parameters
                .iter()
                .map(|(k, &v)| (k.as_str(), v))
                .collect(),
            self.mode,
        )
    }
}

/// Which route supplies `a_i(N)` to the checks that consume it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoeffSource {
    #[default]
    Recurrence,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub degree_cap: usize,
    pub a_source: CoeffSource,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            degree_cap: DEFAULT_DEGREE_CAP,
            a_source: CoeffSource::Recurrence,
        }
    }
}

/// `a_1(N)..=a_N(N)` from the chosen route.
pub(crate) fn a_row(n: usize, source: CoeffSource) -> Result<Vec<BigInt>> {
    match source {
        CoeffSource::Recurrence => Ok(a_table_recurrence(n)?.row(n).expect("row N").to_vec()),
        CoeffSource::ClosedForm => (1..=n).map(|i| a_closed_form(i, n)).collect(),
    }
}

/// `b_0(N)..=b_{N/2}(N)` from the recurrence, cross-checked cell by cell
/// against the closed form in debug builds.
pub(crate) fn b_row(n: usize) -> Result<Vec<BigInt>> {
    let row = b_table_recurrence(n)?.row(n).expect("row N").to_vec();
    debug_assert!(row
        .iter()
        .enumerate()
        .all(|(i, b)| b_closed_form(i, n).as_ref() == Ok(b)));
    Ok(row)
}

pub(crate) fn require_positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidBound(format!("{name} must be >= 1")));
    }
    Ok(())
}
