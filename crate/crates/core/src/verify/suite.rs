//! Sweeps identity checks over parameter ranges, optionally on a worker
//! pool, and returns the reports in a deterministic order.

use rayon::prelude::*;

use super::*;
use crate::field::DEFAULT_DEGREE_CAP;

/// Bounds for a suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest `N` for the differential-equation families and their
    /// coefficient identities.
    pub max_big_n: usize,
    /// Truncation order `K` for series-mode checks.
    pub series_order: usize,
    /// Largest `n` for `thm2` and `k` for `thm4`.
    pub max_small_n: usize,
    pub terms_eq59: usize,
    pub terms_eq62: usize,
    /// Largest `n` for the two convolution recurrences.
    pub recurrence_nmax: usize,
    /// Index at which the asymptotic ratio is evaluated.
    pub asymptotic_n: u64,
    pub degree_cap: usize,
    /// Worker threads; 0 picks one per core.
    pub parallelism: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_big_n: 8,
            series_order: 64,
            max_small_n: 20,
            terms_eq59: 500,
            terms_eq62: 2000,
            recurrence_nmax: 200,
            asymptotic_n: 1000,
            degree_cap: DEFAULT_DEGREE_CAP,
            parallelism: 0,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        require_positive("max N", self.max_big_n)?;
        require_positive("series order", self.series_order)?;
        require_positive("max n", self.max_small_n)?;
        require_positive("degree cap", self.degree_cap)?;
        require_positive("asymptotic n", self.asymptotic_n as usize)?;
        if self.series_order < self.max_big_n + 8 {
            return Err(Error::InvalidBound(format!(
                "series order {} must be at least max N + 8 = {}",
                self.series_order,
                self.max_big_n + 8
            )));
        }
        if self.terms_eq59 < 2 {
            return Err(Error::InvalidBound("eq59 needs at least 2 terms".into()));
        }
        require_positive("eq62 terms", self.terms_eq62)?;
        if self.recurrence_nmax < 2 {
            return Err(Error::InvalidBound("recurrence nmax must be >= 2".into()));
        }
        Ok(())
    }

    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            degree_cap: self.degree_cap,
            ..VerifyOptions::default()
        }
    }
}

/// One unit of work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Job {
    Thm1 { big_n: usize, mode: Mode },
    Thm2 { n: usize, big_n: usize },
    Thm3 { big_n: usize, mode: Mode },
    Thm4 { k: usize, big_n: usize },
    Eq57 { big_n: usize },
    Eq58 { order: usize },
    Eq59 { terms: usize },
    Eq62 { terms: usize },
    Eq64 { nmax: usize },
    Eq66 { nmax: usize },
    Asymptotic { n: u64 },
}

/// Expands identity ids into the jobs the configuration asks for.
pub fn plan(ids: &[IdentityId], cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    let modes = [Mode::Series, Mode::Symbolic];
    for &id in ids {
        match id {
            IdentityId::Thm1 | IdentityId::Thm3 => {
                for big_n in 1..=cfg.max_big_n {
                    for mode in modes {
                        jobs.push(if id == IdentityId::Thm1 {
                            Job::Thm1 { big_n, mode }
                        } else {
                            Job::Thm3 { big_n, mode }
                        });
                    }
                }
            }
            IdentityId::Thm2 | IdentityId::Thm4 => {
                for big_n in 1..=cfg.max_big_n {
                    for n in 0..=cfg.max_small_n {
                        jobs.push(if id == IdentityId::Thm2 {
                            Job::Thm2 { n, big_n }
                        } else {
                            Job::Thm4 { k: n, big_n }
                        });
                    }
                }
            }
            IdentityId::Eq57 => jobs.extend((1..=cfg.max_big_n).map(|big_n| Job::Eq57 { big_n })),
            IdentityId::Eq58 => jobs.push(Job::Eq58 {
                order: cfg.series_order,
            }),
            IdentityId::Eq59 => jobs.push(Job::Eq59 {
                terms: cfg.terms_eq59,
            }),
            IdentityId::Eq62 => jobs.push(Job::Eq62 {
                terms: cfg.terms_eq62,
            }),
            IdentityId::Eq64 => jobs.push(Job::Eq64 {
                nmax: cfg.recurrence_nmax,
            }),
            IdentityId::Eq66 => jobs.push(Job::Eq66 {
                nmax: cfg.recurrence_nmax,
            }),
            IdentityId::Asymptotic => jobs.push(Job::Asymptotic {
                n: cfg.asymptotic_n,
            }),
        }
    }
    jobs
}

pub fn run_job(job: Job, cfg: &SuiteConfig) -> Result<VerificationReport> {
    let opts = cfg.options();
    match job {
        Job::Thm1 { big_n, mode } => verify_thm1_with(big_n, mode, cfg.series_order, &opts),
        Job::Thm2 { n, big_n } => verify_thm2(n, big_n),
        Job::Thm3 { big_n, mode } => verify_thm3_with(big_n, mode, cfg.series_order, &opts),
        Job::Thm4 { k, big_n } => verify_thm4(k, big_n),
        Job::Eq57 { big_n } => verify_inverse_delta(big_n),
        Job::Eq58 { order } => verify_sqrt_expansion(order),
        Job::Eq59 { terms } => verify_eq59(terms),
        Job::Eq62 { terms } => verify_eq62(terms),
        Job::Eq64 { nmax } => verify_eq64(nmax),
        Job::Eq66 { nmax } => verify_eq66(nmax),
        Job::Asymptotic { n } => verify_asymptotic(n),
    }
}

/// Runs every job for `ids` and returns the reports sorted by
/// [`VerificationReport::sort_key`]. Fails on the first job error (bad
/// bounds, degree cap), not on identity mismatches.
pub fn run_suite(ids: &[IdentityId], cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    cfg.validate()?;
    let jobs = plan(ids, cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::InvalidBound(format!("cannot start worker pool: {e}")))?;
    let mut reports = pool.install(|| {
        jobs.par_iter()
            .map(|&job| run_job(job, cfg))
            .collect::<Result<Vec<_>>>()
    })?;
    sort_reports(&mut reports);
    Ok(reports)
}

pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            max_big_n: 3,
            series_order: 16,
            max_small_n: 4,
            terms_eq59: 20,
            terms_eq62: 20,
            recurrence_nmax: 20,
            asymptotic_n: 1000,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn validation() {
        assert!(SuiteConfig::default().validate().is_ok());
        let bad = SuiteConfig {
            series_order: 10,
            ..small()
        };
        assert!(bad.validate().is_err());
        let bad = SuiteConfig {
            max_big_n: 0,
            ..small()
        };
        assert!(bad.validate().is_err());
        let bad = SuiteConfig {
            terms_eq59: 1,
            ..small()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn plan_counts() {
        let cfg = small();
        assert_eq!(plan(&[IdentityId::Thm1], &cfg).len(), 6);
        assert_eq!(plan(&[IdentityId::Thm2], &cfg).len(), 15);
        assert_eq!(plan(&[IdentityId::Eq57, IdentityId::Eq58], &cfg).len(), 4);
    }

    #[test]
    fn small_suite_passes_in_order() {
        let reports = run_suite(&IdentityId::ALL, &small()).unwrap();
        assert!(reports.iter().all(VerificationReport::passed));
        let keys: Vec<_> = reports.iter().map(|r| r.sort_key()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(reports.first().unwrap().identity(), IdentityId::Thm1);
        assert_eq!(reports.last().unwrap().identity(), IdentityId::Asymptotic);
    }

    #[test]
    fn serial_and_parallel_agree() {
        let serial = run_suite(
            &[IdentityId::Thm3, IdentityId::Thm4],
            &SuiteConfig {
                parallelism: 1,
                ..small()
            },
        )
        .unwrap();
        let parallel = run_suite(
            &[IdentityId::Thm3, IdentityId::Thm4],
            &SuiteConfig {
                parallelism: 4,
                ..small()
            },
        )
        .unwrap();
        let strip = |v: &[VerificationReport]| -> Vec<_> {
            v.iter()
                .map(|r| (r.identity(), r.parameters().clone(), r.mode(), r.passed()))
                .collect()
        };
        assert_eq!(strip(&serial), strip(&parallel));
    }
}
