//! Scans of conjectured congruence families and a brute-force search for
//! progressions on which a series vanishes.
//!
//! The search in [`discover`] reduces coefficients modulo each tested modulus
//! for speed, then re-checks every candidate on the exact integers. Its output
//! is empirical evidence only.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::fps::{Coefficient, Series, SeriesError};
use crate::progression::Progression;
use crate::special::{self, Named};
use crate::verify::{check_congruence, check_vanishing, CheckResult, CongruenceClaim, VerifyError};

/// Minimum number of progression members below the precision before
/// [`discover`] reports a progression.
pub const MIN_WITNESSES: usize = 20;

/// Default precision for the `c(32n+23)` scan: covers every index ≤ 5000.
pub const OPENQ_PREC: usize = 5001;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScanError {
    #[error("offset {numerator}/3 is not an integer for k = {k}")]
    NonIntegralOffset { k: u32, numerator: u128 },
    #[error("family parameters overflow for k = {0}")]
    Overflow(u32),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `c(32n+23) ≡ 0 (mod 8)`.
pub fn openq_claim() -> CongruenceClaim {
    CongruenceClaim::on(Named::C, 23, 32, 8).expect("valid claim")
}

/// `c(32n+23) ≡ 0 (mod 8)` for every `32n+23 < prec`.
pub fn scan_conjecture_openq(prec: usize) -> Vec<CheckResult> {
    scan_conjecture_openq_on(&special::series_c_sum(prec))
}

/// As [`scan_conjecture_openq`], on an already built `C(q)`.
pub fn scan_conjecture_openq_on(c: &Series<BigInt>) -> Vec<CheckResult> {
    let r = check_congruence(&openq_claim(), c).expect("integer coefficients");
    alloc::vec![r]
}

/// The three conjectured progressions at level `k`:
///
/// `c(2^(2k+3) n + (11·4^k+1)/3) ≡ 0 (mod 4)`,
/// `c(2^(2k+3) n + (17·4^k+1)/3) ≡ 0 (mod 8)`,
/// `c(2^(2k+4) n + (38·4^k+1)/3) ≡ 0 (mod 4)`.
pub fn family_claims(k: u32) -> Result<[CongruenceClaim; 3], ScanError> {
    let four_k = 4u128.checked_pow(k).ok_or(ScanError::Overflow(k))?;
    let offset = |a: u128| -> Result<usize, ScanError> {
        let numerator = a
            .checked_mul(four_k)
            .and_then(|v| v.checked_add(1))
            .ok_or(ScanError::Overflow(k))?;
        if numerator % 3 != 0 {
            return Err(ScanError::NonIntegralOffset { k, numerator });
        }
        usize::try_from(numerator / 3).map_err(|_| ScanError::Overflow(k))
    };
    let modulus = |e: u32| {
        1usize
            .checked_shl(e)
            .filter(|_| e < usize::BITS)
            .ok_or(ScanError::Overflow(k))
    };
    let small = modulus(2 * k + 3)?;
    let large = modulus(2 * k + 4)?;
    Ok([
        CongruenceClaim::on(Named::C, offset(11)?, small, 4)?,
        CongruenceClaim::on(Named::C, offset(17)?, small, 8)?,
        CongruenceClaim::on(Named::C, offset(38)?, large, 4)?,
    ])
}

/// Every family instance for `k = 0..=k_max`, checked below `prec`.
pub fn scan_conjecture_family(k_max: u32, prec: usize) -> Result<Vec<CheckResult>, ScanError> {
    scan_conjecture_family_on(k_max, &special::series_c_sum(prec))
}

/// As [`scan_conjecture_family`], on an already built `C(q)`.
pub fn scan_conjecture_family_on(
    k_max: u32,
    c: &Series<BigInt>,
) -> Result<Vec<CheckResult>, ScanError> {
    let mut out = Vec::new();
    for k in 0..=k_max {
        for claim in family_claims(k)? {
            out.push(check_congruence(&claim, c)?);
        }
    }
    Ok(out)
}

/// What "vanishes" means for a discovered progression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vanishing {
    /// Coefficients are exactly zero.
    Exact,
    /// Coefficients are divisible by the modulus (at least 2).
    Mod(u64),
}

impl Vanishing {
    /// Short tag used in check names: `exact` or `mod4`.
    pub fn tag(&self) -> alloc::string::String {
        match self {
            Vanishing::Exact => "exact".into(),
            Vanishing::Mod(m) => alloc::format!("mod{m}"),
        }
    }
}

impl fmt::Display for Vanishing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vanishing::Exact => f.write_str("= 0"),
            Vanishing::Mod(m) => write!(f, "≡ 0 (mod {m})"),
        }
    }
}

/// An empirical vanishing pattern found by [`discover`]. Never a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discovery {
    pub progression: Progression,
    pub vanishing: Vanishing,
    /// Progression members below the precision, all of which vanish.
    pub witnesses: usize,
    /// Set when every available coefficient of the series vanishes, so the
    /// pattern says nothing about the progression itself.
    pub degenerate: bool,
    /// The exact re-check of the pattern at the same precision.
    pub check: CheckResult,
}

/// All progressions `r mod m`, `1 ≤ m ≤ m_max`, on which every available
/// coefficient of `f` vanishes in each sense listed in `tests`, with at least
/// [`MIN_WITNESSES`] members below the precision. Ordered by `(m, r, test)`.
pub fn discover<C: Coefficient>(
    f: &Series<C>,
    tests: &[Vanishing],
    m_max: usize,
) -> Result<Vec<Discovery>, ScanError> {
    let exact: Vec<BigInt> = (0..f.prec())
        .map(|n| {
            f.coeffs()[n]
                .to_integer()
                .ok_or(SeriesError::NonInteger { index: n })
        })
        .collect::<Result<_, _>>()?;
    let exact = Series::from_coeffs(exact);
    let degenerate = exact.is_zero();

    let mut tests = tests.to_vec();
    tests.sort_unstable();
    tests.dedup();
    let mut reduced = Vec::with_capacity(tests.len());
    for &t in &tests {
        reduced.push(match t {
            Vanishing::Exact => exact.clone(),
            Vanishing::Mod(m) if m < 2 => return Err(VerifyError::InvalidModulus(m).into()),
            Vanishing::Mod(m) => exact.reduce_mod(m)?,
        });
    }

    let mut out = Vec::new();
    for m in 1..=m_max {
        for r in 0..m {
            let progression = Progression::new(r, m).expect("r < m");
            let witnesses = progression.count_below(exact.prec());
            if witnesses < MIN_WITNESSES {
                continue;
            }
            for (&vanishing, fast) in tests.iter().zip(&reduced) {
                if !progression
                    .members(fast.prec())
                    .all(|n| fast.coeffs()[n].is_zero())
                {
                    continue;
                }
                let check = match vanishing {
                    Vanishing::Exact => check_vanishing("", &exact, progression),
                    Vanishing::Mod(m) => {
                        let claim = CongruenceClaim::new(progression, m, Named::C)?;
                        check_congruence(&claim, &exact)?
                    }
                };
                let name = alloc::format!("{progression}-{}", vanishing.tag());
                let check = check.named(name);
                if check.passed() {
                    out.push(Discovery {
                        progression,
                        vanishing,
                        witnesses,
                        degenerate,
                        check,
                    });
                }
            }
        }
    }
    Ok(out)
}
