//! Timed, parallel execution of registry checks.

use std::time::Instant;

use qcert_core::verify::{self, Check, CheckResult, VerifyError};
use rayon::prelude::*;

/// Runs one check and records its wall time.
pub fn timed(check: &Check, prec: usize) -> Result<CheckResult, VerifyError> {
    let start = Instant::now();
    let mut r = check.run(prec)?;
    r.elapsed = start.elapsed();
    Ok(r)
}

/// Runs `checks` in parallel. Results keep the input order.
pub fn run_checks(checks: &[Check], prec: usize) -> Result<Vec<CheckResult>, VerifyError> {
    checks.par_iter().map(|c| timed(c, prec)).collect()
}

/// Every registered check, ordered by name.
pub fn run_all(prec: usize) -> Result<Vec<CheckResult>, VerifyError> {
    run_checks(&verify::registry(), prec)
}

/// Times a closure producing results that carry no timing of their own,
/// spreading the measured time evenly over them.
pub fn timed_batch<E>(
    run: impl FnOnce() -> Result<Vec<CheckResult>, E>,
) -> Result<Vec<CheckResult>, E> {
    let start = Instant::now();
    let mut results = run()?;
    if !results.is_empty() {
        let share = start.elapsed() / results.len() as u32;
        for r in &mut results {
            r.elapsed = share;
        }
    }
    Ok(results)
}

/// `QCERT_PREC` when set to a positive integer, otherwise `fallback`.
pub fn default_prec(fallback: usize) -> usize {
    std::env::var(crate::PREC_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&p| p > 0)
        .unwrap_or(fallback)
}
