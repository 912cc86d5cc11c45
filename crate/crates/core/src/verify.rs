//! Certification registry: one named check per identity or congruence.
//!
//! A check builds both sides of a statement as truncated series and compares
//! them coefficientwise up to the smaller precision, reporting the first
//! exponent where they differ. Congruence checks reduce the exact integer
//! coefficients; no step works modulo `m` before the final comparison.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fps::{Coefficient, Series, SeriesError, Sign};
use crate::oracle;
use crate::progression::{self, Progression, ProgressionError};
use crate::qprod::{self, at_power, eta_quotient, PochSpec, EULER};
use crate::special::{self, Named};

type S = Series<BigInt>;

const ODD: PochSpec = PochSpec::pos(1, 2);
const NEG_EVEN: PochSpec = PochSpec::neg(2, 2);
const EVEN: PochSpec = PochSpec::pos(2, 2);
const QUAD: PochSpec = PochSpec::pos(4, 4);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Progression(#[from] ProgressionError),
    #[error("parameters a, b, c must be nonzero")]
    ZeroParameter,
    #[error("congruence modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

/// The first coefficient where two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of one certification. The status is derived from `first_failure`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub prec: usize,
    pub first_failure: Option<Mismatch>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn status(&self) -> Status {
        if self.first_failure.is_none() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Merges sub-results: precision is the minimum, the failure is the first
    /// failing part's.
    pub fn combine(name: impl Into<String>, parts: impl IntoIterator<Item = CheckResult>) -> Self {
        let mut prec = usize::MAX;
        let mut first_failure = None;
        for part in parts {
            prec = prec.min(part.prec);
            if first_failure.is_none() {
                first_failure = part.first_failure;
            }
        }
        CheckResult {
            name: name.into(),
            prec: if prec == usize::MAX { 0 } else { prec },
            first_failure,
            elapsed: Duration::ZERO,
        }
    }
}

/// Coefficientwise comparison up to the smaller precision.
pub fn check_identity<C: Coefficient>(name: &str, lhs: &Series<C>, rhs: &Series<C>) -> CheckResult {
    let prec = lhs.prec().min(rhs.prec());
    let first_failure = lhs.coeffs()[..prec]
        .iter()
        .zip(&rhs.coeffs()[..prec])
        .position(|(l, r)| l != r)
        .map(|exponent| Mismatch {
            exponent,
            lhs: lhs.coeffs()[exponent].to_rational(),
            rhs: rhs.coeffs()[exponent].to_rational(),
        });
    CheckResult {
        name: name.into(),
        prec,
        first_failure,
        elapsed: Duration::ZERO,
    }
}

/// `coeff(f, progression) ≡ 0 (mod modulus)` for a named series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceClaim {
    pub progression: Progression,
    modulus: u64,
    pub series: Named,
}

impl CongruenceClaim {
    pub fn new(progression: Progression, modulus: u64, series: Named) -> Result<Self, VerifyError> {
        if modulus < 2 {
            return Err(VerifyError::InvalidModulus(modulus));
        }
        Ok(CongruenceClaim {
            progression,
            modulus,
            series,
        })
    }

    /// Shorthand for `series(modulus·n + residue) ≡ 0 (mod m)`.
    pub fn on(series: Named, residue: usize, modulus: usize, m: u64) -> Result<Self, VerifyError> {
        Self::new(Progression::new(residue, modulus)?, m, series)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Stable name such as `C-8n+4-mod4`.
    pub fn name(&self) -> String {
        format!("{}-{}-mod{}", self.series, self.progression, self.modulus)
    }
}

/// Checks a congruence claim against the exact coefficients of `f`.
pub fn check_congruence<C: Coefficient>(
    claim: &CongruenceClaim,
    f: &Series<C>,
) -> Result<CheckResult, VerifyError> {
    let m = BigInt::from(claim.modulus);
    let mut first_failure = None;
    for n in claim.progression.members(f.prec()) {
        let c = f.coeffs()[n]
            .to_integer()
            .ok_or(SeriesError::NonInteger { index: n })?;
        if !(&c % &m).is_zero() {
            first_failure = Some(Mismatch {
                exponent: n,
                lhs: BigRational::from_integer(c),
                rhs: BigRational::zero(),
            });
            break;
        }
    }
    Ok(CheckResult {
        name: claim.name(),
        prec: f.prec(),
        first_failure,
        elapsed: Duration::ZERO,
    })
}

/// Every coefficient of `f` on `p` is exactly zero.
pub fn check_vanishing<C: Coefficient>(name: &str, f: &Series<C>, p: Progression) -> CheckResult {
    let first_failure = p
        .members(f.prec())
        .find(|&n| !f.coeffs()[n].is_zero())
        .map(|n| Mismatch {
            exponent: n,
            lhs: f.coeffs()[n].to_rational(),
            rhs: BigRational::zero(),
        });
    CheckResult {
        name: name.into(),
        prec: f.prec(),
        first_failure,
        elapsed: Duration::ZERO,
    }
}

fn identity_mod(name: &str, lhs: &S, rhs: &S, m: u64) -> Result<CheckResult, VerifyError> {
    Ok(check_identity(
        name,
        &lhs.reduce_mod(m)?,
        &rhs.reduce_mod(m)?,
    ))
}

fn scaled(mut s: S, c: i64) -> S {
    if c != 1 {
        s = s.scale(&BigInt::from(c));
    }
    s
}

fn quotient(c: i64, factors: &[(PochSpec, i32)], prec: usize) -> S {
    scaled(eta_quotient(factors, prec), c)
}

/// `q^k · f`, truncated back to `prec`.
fn times_q(f: &S, k: usize, prec: usize) -> S {
    f.shift(k as isize)
        .expect("nonnegative shift")
        .truncate(prec)
}

fn b_neg(prec: usize) -> S {
    special::series_b_sum(prec).negate_q()
}

/// `S(q) = 2B(-q) - (q;q²)²/(-q²;q²) · ω(-q)`.
pub fn check_theorem_s(prec: usize) -> CheckResult {
    let lhs = special::series_s(prec);
    let two_b = scaled(b_neg(prec), 2);
    let mut omega_part = special::series_omega(prec).negate_q();
    qprod::apply_quotient(&mut omega_part, &[(ODD, 2), (NEG_EVEN, -1)]);
    check_identity("theorem-S", &lhs, &(&two_b - &omega_part))
}

/// `C(q) = 2q (-q²;q²)/(q;q²)² · B(-q) - q ω(-q)`.
pub fn check_c_decomposition(prec: usize) -> CheckResult {
    let lhs = special::series_c_sum(prec);
    let mut b_part = scaled(b_neg(prec), 2);
    qprod::apply_quotient(&mut b_part, &[(NEG_EVEN, 1), (ODD, -2)]);
    let omega_neg = special::series_omega(prec).negate_q();
    let rhs = &times_q(&b_part, 1, prec) - &times_q(&omega_neg, 1, prec);
    check_identity("C-decomposition", &lhs, &rhs)
}

type Q = Series<BigRational>;

/// Precision cap for the rational-parameter checks: coefficient heights grow
/// quickly with the order, so the registry runs them at `min(prec, 60)`.
pub const TRANSFORMATION_PREC: usize = 60;

/// Rational parameter triples `(a, b, c)` as `(numerator, denominator)` pairs.
pub const TRANSFORMATION_TRIPLES: [[(i64, i64); 3]; 8] = [
    [(1, 1), (1, 1), (1, 1)],
    [(2, 1), (1, 3), (-1, 2)],
    [(-1, 1), (2, 1), (3, 1)],
    [(1, 2), (1, 2), (1, 2)],
    [(-3, 1), (-1, 5), (2, 1)],
    [(3, 4), (-2, 1), (-5, 3)],
    [(5, 1), (7, 1), (-1, 1)],
    [(-1, 2), (4, 1), (1, 7)],
];

fn ratio(p: (i64, i64)) -> BigRational {
    BigRational::new(p.0.into(), p.1.into())
}

/// Both sides of the bilateral-type transformation
///
/// `Σ_{n≥0} (-aq,-bq;q)_n q^(n+1) / (-cq;q)_n
///   = c/(ab) Σ_{n≥1} (-1/c;q)_n (ab/c)^n q^(n(n+1)/2) / (aq/c,bq/c;q)_n
///   - c (-aq,-bq;q)_∞ / (ab (-cq;q)_∞) · Σ_{n≥1} (ab/c²)^n q^(n²) / (aq/c,bq/c;q)_n`
///
/// at fixed rational `a, b, c`.
pub fn q_transformation_sides(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    prec: usize,
) -> Result<(Q, Q), VerifyError> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(VerifyError::ZeroParameter);
    }
    let ab = a * b;
    let a_c = a / c;
    let b_c = b / c;

    // left: term ratio q (1 + a q^(n+1)) (1 + b q^(n+1)) / (1 + c q^(n+1))
    let mut lhs = Q::zero(prec);
    let mut unit = Q::one(prec.saturating_sub(1));
    let mut n = 0;
    let mut v = 1;
    while v < prec {
        lhs.add_shifted_assign(&unit, v);
        v += 1;
        if v >= prec {
            break;
        }
        unit = unit.truncate(prec - v);
        unit.mul_one_minus(&-a, n + 1);
        unit.mul_one_minus(&-b, n + 1);
        unit.div_one_minus(&-c, n + 1);
        n += 1;
    }

    // first right sum, from n = 1: term ratio
    // (1 + q^n/c) (ab/c) q^(n+1) / ((1 - (a/c) q^(n+1)) (1 - (b/c) q^(n+1)))
    let mut first = Q::zero(prec);
    if prec > 1 {
        let lead = (BigRational::one() + c.recip()) * (&ab / c);
        let mut unit = Q::monomial(lead, 0, prec - 1);
        unit.div_one_minus(&a_c, 1);
        unit.div_one_minus(&b_c, 1);
        let (mut n, mut v) = (1, 1);
        while v < prec {
            first.add_shifted_assign(&unit, v);
            v += n + 1;
            if v >= prec {
                break;
            }
            unit = unit.truncate(prec - v);
            unit.mul_one_minus(&-c.recip(), n);
            unit = unit.scale(&(&ab / c));
            unit.div_one_minus(&a_c, n + 1);
            unit.div_one_minus(&b_c, n + 1);
            n += 1;
        }
    }

    // second right sum, from n = 1: term ratio
    // (ab/c²) q^(2n+1) / ((1 - (a/c) q^(n+1)) (1 - (b/c) q^(n+1)))
    let mut second = Q::zero(prec);
    if prec > 1 {
        let step = &ab / (c * c);
        let mut unit = Q::monomial(step.clone(), 0, prec - 1);
        unit.div_one_minus(&a_c, 1);
        unit.div_one_minus(&b_c, 1);
        let (mut n, mut v) = (1, 1);
        while v < prec {
            second.add_shifted_assign(&unit, v);
            v += 2 * n + 1;
            if v >= prec {
                break;
            }
            unit = unit.truncate(prec - v);
            unit = unit.scale(&step);
            unit.div_one_minus(&a_c, n + 1);
            unit.div_one_minus(&b_c, n + 1);
            n += 1;
        }
    }

    let mut prefactor = Q::monomial(c / &ab, 0, prec);
    for e in 1..prec {
        prefactor.mul_one_minus(&-a, e);
        prefactor.mul_one_minus(&-b, e);
        prefactor.div_one_minus(&-c, e);
    }
    let rhs = &first.scale(&(c / &ab)) - &(&prefactor * &second);
    Ok((lhs, rhs))
}

/// The transformation at one rational specialization, in exact arithmetic.
pub fn check_q_transformation(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    prec: usize,
) -> Result<CheckResult, VerifyError> {
    let (lhs, rhs) = q_transformation_sides(a, b, c, prec)?;
    Ok(check_identity(
        &format!("q-transformation[a={a},b={b},c={c}]"),
        &lhs,
        &rhs,
    ))
}

/// `Θ(q) = Θ(q⁴) + 2q ψ(q⁸)`, with the left side from the product form.
pub fn check_theta_dissection(prec: usize) -> CheckResult {
    let lhs = qprod::theta_product(prec);
    let t4 = at_power(qprod::theta, 4, Sign::Plus, prec);
    let p8 = scaled(at_power(qprod::psi, 8, Sign::Plus, prec), 2);
    check_identity("theta-4-dissection", &lhs, &(&t4 + &times_q(&p8, 1, prec)))
}

pub fn check_b_lerch(prec: usize) -> CheckResult {
    check_identity(
        "B-lerch-form",
        &special::series_b_sum(prec),
        &special::series_b_lerch(prec),
    )
}

/// `Σ c_B(4n) q^n = (q²;q²)^14 / ((q;q)^9 (q⁴;q⁴)^4)`.
pub fn check_b_component0(prec: usize) -> CheckResult {
    let lhs = progression::component(&special::series_b_sum(prec), 4, 0);
    let rhs = quotient(1, &[(EVEN, 14), (EULER, -9), (QUAD, -4)], lhs.prec());
    check_identity("B-component-0", &lhs, &rhs)
}

/// `Σ c_B(4n+1) q^n = 2 (q²;q²)^8 / (q;q)^7`.
pub fn check_b_component1(prec: usize) -> CheckResult {
    let lhs = progression::component(&special::series_b_sum(prec), 4, 1);
    let rhs = quotient(2, &[(EVEN, 8), (EULER, -7)], lhs.prec());
    check_identity("B-component-1", &lhs, &rhs)
}

/// `f(q⁸) + 2qω(q) + 2q³ω(-q⁴) = Θ(q) Θ(q²)² / (q⁴;q⁴)²`.
pub fn check_watson(prec: usize) -> CheckResult {
    let f8 = at_power(special::series_f, 8, Sign::Plus, prec);
    let omega = scaled(special::series_omega(prec), 2);
    let omega4 = scaled(at_power(special::series_omega, 4, Sign::Minus, prec), 2);
    let lhs = &(&f8 + &times_q(&omega, 1, prec)) + &times_q(&omega4, 3, prec);
    check_identity("watson-f-omega", &lhs, &special::series_g(prec))
}

/// `G(q) = Σ_{j=0}^{3} q^j G_j(q⁴)`.
pub fn check_g_dissection(prec: usize) -> CheckResult {
    let mut rhs = S::zero(prec);
    for j in 0..4 {
        let gj = at_power(
            |p| special::series_g_j(j, p).expect("j ≤ 3"),
            4,
            Sign::Plus,
            prec,
        );
        rhs = &rhs + &times_q(&gj, j, prec);
    }
    check_identity("G-dissection", &special::series_g(prec), &rhs)
}

/// The first two 4-dissection components of ω equal `G_1/2` and `G_2/2`.
pub fn check_omega_components(prec: usize) -> CheckResult {
    let omega = special::series_omega(prec);
    let parts = (0..2).map(|j| {
        let lhs = progression::component(&omega, 4, j);
        let name = [Named::Omega0, Named::Omega1][j];
        let rhs = name.build(lhs.prec()).expect("catalog entry");
        check_identity("", &lhs, &rhs)
    });
    CheckResult::combine("omega-components", parts.collect::<Vec<_>>())
}

/// `A_0 = (q;q) Θ(q)` and `A_1 = 2 (q;q) ψ(q²)` against their eta quotients.
pub fn check_a_components(prec: usize) -> CheckResult {
    let euler: S = qprod::poch_infinite(EULER, prec);
    let a0_sum = &euler * &qprod::theta(prec);
    let a1_sum = scaled(&euler * &at_power(qprod::psi, 2, Sign::Plus, prec), 2);
    CheckResult::combine(
        "A-components-closed",
        [
            check_identity("", &a0_sum, &Named::A0.build(prec).expect("catalog entry")),
            check_identity("", &a1_sum, &Named::A1.build(prec).expect("catalog entry")),
        ],
    )
}

/// Components 0 and 1 of `B(-q)` against the displayed closed forms
/// `B_0 = (q²;q²)^14/((q;q)^9 (q⁴;q⁴)^4)` and `B_1 = -2 (q²;q²)^8/(q;q)^7`.
pub fn check_b_components(prec: usize) -> CheckResult {
    let b = b_neg(prec);
    let parts = [(0, Named::B0Closed), (1, Named::B1Closed)].map(|(j, name)| {
        let lhs = progression::component(&b, 4, j);
        check_identity("", &lhs, &name.build(lhs.prec()).expect("catalog entry"))
    });
    CheckResult::combine("B-components-closed", parts)
}

fn theta_omega(prec: usize) -> S {
    &qprod::theta(prec) * &special::series_omega(prec)
}

/// `R(Θ(q) ω(q)) = 4 (q²;q²)² / (q;q²)^6`.
pub fn check_prop_m(prec: usize) -> CheckResult {
    let lhs = progression::restrict_r(&theta_omega(prec));
    let rhs = Named::MClosed.build(lhs.prec()).expect("catalog entry");
    check_identity("M-closed-form", &lhs, &rhs)
}

/// `R(Θ(-q) ω(-q)) = -M(q)`.
pub fn check_r_theta_omega_sign(prec: usize) -> CheckResult {
    let flipped = &qprod::theta_neg(prec) * &special::series_omega(prec).negate_q();
    let lhs = progression::restrict_r(&flipped);
    let rhs = -&Named::MClosed.build(lhs.prec()).expect("catalog entry");
    check_identity("R-theta-omega-sign", &lhs, &rhs)
}

fn minus_four_even_over_odd7(prec: usize) -> S {
    quotient(-4, &[(EVEN, 1), (ODD, -7)], prec)
}

/// `R(2B(-q)) = -2 Σ c_B(4n+1) q^n = -4 (q²;q²)^8/(q;q)^7 = -4 (q²;q²)/(q;q²)^7`.
pub fn check_r_two_b(prec: usize) -> CheckResult {
    let b = special::series_b_sum(prec);
    let lhs = progression::restrict_r(&scaled(b.negate_q(), 2));
    let p = lhs.prec();
    let via_cb = scaled(progression::component(&b, 4, 1), -2);
    let eta = quotient(-4, &[(EVEN, 8), (EULER, -7)], p);
    CheckResult::combine(
        "R-2B-neg",
        [
            check_identity("", &lhs, &via_cb),
            check_identity("", &lhs, &eta),
            check_identity("", &lhs, &minus_four_even_over_odd7(p)),
        ],
    )
}

/// `D(q) = (q;q²)²/(-q²;q²) ω(-q) = Θ(-q) ω(-q) / (q⁴;q⁴)`.
pub fn check_d_theta_form(prec: usize) -> CheckResult {
    let mut rhs = &qprod::theta_neg(prec) * &special::series_omega(prec).negate_q();
    qprod::apply_quotient(&mut rhs, &[(QUAD, -1)]);
    check_identity("D-theta-form", &special::series_d(prec), &rhs)
}

/// `R(D(q)) = -M(q)/(q;q) = -4 (q²;q²)/(q;q²)^7`.
pub fn check_r_d(prec: usize) -> CheckResult {
    let lhs = progression::restrict_r(&special::series_d(prec));
    let p = lhs.prec();
    let mut via_m = -&Named::MClosed.build(p).expect("catalog entry");
    qprod::apply_quotient(&mut via_m, &[(EULER, -1)]);
    CheckResult::combine(
        "R-D",
        [
            check_identity("", &lhs, &via_m),
            check_identity("", &lhs, &minus_four_even_over_odd7(p)),
        ],
    )
}

/// `R(2B(-q)) = R(D(q))`, both operators applied directly to the series.
pub fn check_r_two_b_equals_r_d(prec: usize) -> CheckResult {
    let lhs = progression::restrict_r(&scaled(b_neg(prec), 2));
    let rhs = progression::restrict_r(&special::series_d(prec));
    check_identity("R-2B-equals-R-D", &lhs, &rhs)
}

/// `s(4n+1) = 0`.
pub fn check_s_vanishing(prec: usize) -> CheckResult {
    let p = Progression::new(1, 4).expect("valid progression");
    check_vanishing("S-4n+1-zero", &special::series_s(prec), p)
}

fn a_times_b_neg(prec: usize) -> S {
    &special::series_a(prec) * &b_neg(prec)
}

/// `A(q) ≡ A_0(q⁴) + q A_1(q⁴) (mod 4)`.
fn a_dissection_mod4(prec: usize) -> S {
    let a0 = at_power(
        |p| Named::A0.build(p).expect("catalog entry"),
        4,
        Sign::Plus,
        prec,
    );
    let a1 = at_power(
        |p| Named::A1.build(p).expect("catalog entry"),
        4,
        Sign::Plus,
        prec,
    );
    &a0 + &times_q(&a1, 1, prec)
}

/// Intermediate congruences of the `c(8n+6)` and `c(16n+13)` arguments.
pub fn check_mod_claims(prec: usize) -> Result<Vec<CheckResult>, VerifyError> {
    let a = special::series_a(prec);
    let ab = a_times_b_neg(prec);
    let mut out = Vec::new();

    let claims = [
        CongruenceClaim::on(Named::A, 2, 4, 4)?,
        CongruenceClaim::on(Named::A, 3, 4, 4)?,
    ];
    let parts = claims
        .iter()
        .map(|c| check_congruence(c, &a))
        .collect::<Result<Vec<_>, _>>()?;
    out.push(CheckResult::combine("A-mod4-residues-2-3", parts));

    out.push(identity_mod(
        "A-mod4-dissection",
        &a,
        &a_dissection_mod4(prec),
        4,
    )?);

    let tsalt = CongruenceClaim::new(Progression::new(1, 4)?, 4, Named::A)?;
    out.push(check_congruence(&tsalt, &ab)?.named("AB-neg-4n+1-mod4"));

    // F_1 = -A_0 B_1 + A_1 B_0 with B_j the components of B(q) itself
    let b = special::series_b_sum(prec);
    let q = prec.div_ceil(4);
    let (b0, b1) = (
        progression::component(&b, 4, 0),
        progression::component(&b, 4, 1),
    );
    let a0 = Named::A0.build(q).expect("catalog entry");
    let a1 = Named::A1.build(q).expect("catalog entry");
    let f1 = &(&a1 * &b0) - &(&a0 * &b1);
    let via_product = progression::component(&(&a_dissection_mod4(prec) * &b_neg(prec)), 4, 1);
    let zero_mod4 = CongruenceClaim::new(Progression::new(0, 1)?, 4, Named::A)?;
    out.push(CheckResult::combine(
        "F1-cancellation",
        [
            check_identity("", &f1, &via_product),
            check_congruence(&zero_mod4, &f1)?,
        ],
    ));

    let quad: S = qprod::poch_infinite(QUAD, prec);
    out.push(identity_mod("A-mod2", &a, &quad, 2)?);
    let psi4 = at_power(qprod::psi, 4, Sign::Plus, prec);
    out.push(identity_mod("B-neg-mod2-psi", &b_neg(prec), &psi4, 2)?);
    let (pos, neg) = special::lerch_pairing_halves(prec);
    out.push(check_identity("lerch-pairing", &(&pos + &neg), &psi4));
    let q16: S = qprod::poch_infinite(PochSpec::pos(16, 16), prec);
    out.push(identity_mod("AB-neg-mod2-q16", &ab, &q16, 2)?);
    Ok(out)
}

/// `c(8n+4) ≡ 0 (4)`, `c(8n+6) ≡ 0 (8)`, `c(16n+13) ≡ 0 (4)`.
pub fn c_theorem_claims() -> [CongruenceClaim; 3] {
    [(4, 8, 4), (6, 8, 8), (13, 16, 4)]
        .map(|(r, m, k)| CongruenceClaim::on(Named::C, r, m, k).expect("valid claim"))
}

/// `c_ω(8n+3) ≡ 0 (4)`, `c_ω(8n+5) ≡ 0 (8)`, `c_ω(16n+12) ≡ 0 (4)`.
pub fn omega_claims() -> [CongruenceClaim; 3] {
    [(3, 8, 4), (5, 8, 8), (12, 16, 4)]
        .map(|(r, m, k)| CongruenceClaim::on(Named::Omega, r, m, k).expect("valid claim"))
}

/// Whether both sides of a check come from disjoint builder paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Independence {
    Dual,
    SinglePath,
}

type CheckFn = dyn Fn(usize) -> Result<CheckResult, VerifyError> + Send + Sync;

/// One registry entry.
pub struct Check {
    pub name: String,
    pub description: &'static str,
    pub independence: Independence,
    run: Box<CheckFn>,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("name", &self.name)
            .field("independence", &self.independence)
            .finish_non_exhaustive()
    }
}

impl Check {
    fn new(
        name: impl Into<String>,
        description: &'static str,
        independence: Independence,
        run: impl Fn(usize) -> Result<CheckResult, VerifyError> + Send + Sync + 'static,
    ) -> Self {
        Check {
            name: name.into(),
            description,
            independence,
            run: Box::new(run),
        }
    }

    fn infallible(
        name: &str,
        description: &'static str,
        independence: Independence,
        run: fn(usize) -> CheckResult,
    ) -> Self {
        Check::new(name, description, independence, move |p| Ok(run(p)))
    }

    pub fn run(&self, prec: usize) -> Result<CheckResult, VerifyError> {
        Ok((self.run)(prec)?.named(self.name.clone()))
    }
}

/// Every registered check, ordered by name.
pub fn registry() -> Vec<Check> {
    use Independence::*;
    let mut checks = vec![
        Check::infallible(
            "theta-sum-product",
            "Theta(q): square sum = (q^2;q^2)^5/((q)^2 (q^4;q^4)^2)",
            Dual,
            |p| check_identity("", &qprod::theta::<BigInt>(p), &qprod::theta_product(p)),
        ),
        Check::infallible(
            "theta-neg-sum-product",
            "Theta(-q): signed square sum = (q)^2/(q^2;q^2)",
            Dual,
            |p| {
                check_identity(
                    "",
                    &qprod::theta_neg::<BigInt>(p),
                    &qprod::theta_neg_product(p),
                )
            },
        ),
        Check::infallible(
            "psi-sum-product",
            "psi(q): triangular sum = (q^2;q^2)^2/(q)",
            Dual,
            |p| check_identity("", &qprod::psi::<BigInt>(p), &qprod::psi_product(p)),
        ),
        Check::infallible(
            "euler-pentagonal",
            "(q;q) = pentagonal number series",
            Dual,
            |p| {
                check_identity(
                    "",
                    &qprod::poch_infinite::<BigInt>(EULER, p),
                    &qprod::pentagonal_sum(p),
                )
            },
        ),
        Check::infallible(
            "convolution-C-qAS",
            "C(q) = q A(q) S(q)",
            Dual,
            oracle::convolution_check,
        ),
        Check::infallible(
            "theorem-S",
            "S(q) = 2B(-q) - (q;q^2)^2/(-q^2;q^2) omega(-q)",
            Dual,
            check_theorem_s,
        ),
        Check::infallible(
            "C-decomposition",
            "C(q) = 2q A(q) B(-q) - q omega(-q)",
            Dual,
            check_c_decomposition,
        ),
        Check::infallible(
            "theta-4-dissection",
            "Theta(q) = Theta(q^4) + 2q psi(q^8)",
            Dual,
            check_theta_dissection,
        ),
        Check::infallible(
            "B-lerch-form",
            "B(q): q-hypergeometric sum = Lerch-type sum",
            Dual,
            check_b_lerch,
        ),
        Check::infallible(
            "B-component-0",
            "sum c_B(4n) q^n = (q^2;q^2)^14/((q)^9 (q^4;q^4)^4)",
            Dual,
            check_b_component0,
        ),
        Check::infallible(
            "B-component-1",
            "sum c_B(4n+1) q^n = 2 (q^2;q^2)^8/(q)^7",
            Dual,
            check_b_component1,
        ),
        Check::infallible(
            "watson-f-omega",
            "f(q^8) + 2q omega(q) + 2q^3 omega(-q^4) = G(q)",
            Dual,
            check_watson,
        ),
        Check::infallible(
            "G-dissection",
            "G(q) = sum_(j=0..3) q^j G_j(q^4)",
            Dual,
            check_g_dissection,
        ),
        Check::infallible(
            "omega-components",
            "4-dissection of omega: omega_0 = G_1/2, omega_1 = G_2/2",
            Dual,
            check_omega_components,
        ),
        Check::infallible(
            "A-components-closed",
            "A_0 = (q)Theta(q), A_1 = 2(q)psi(q^2) as eta quotients",
            Dual,
            check_a_components,
        ),
        Check::infallible(
            "B-components-closed",
            "components 0, 1 of B(-q) = B_0, B_1 closed forms",
            Dual,
            check_b_components,
        ),
        Check::infallible(
            "M-closed-form",
            "R(Theta(q) omega(q)) = 4 (q^2;q^2)^2/(q;q^2)^6",
            Dual,
            check_prop_m,
        ),
        Check::infallible(
            "R-theta-omega-sign",
            "R(Theta(-q) omega(-q)) = -M(q)",
            Dual,
            check_r_theta_omega_sign,
        ),
        Check::infallible(
            "R-2B-neg",
            "R(2B(-q)) = -4 (q^2;q^2)/(q;q^2)^7",
            Dual,
            check_r_two_b,
        ),
        Check::infallible(
            "D-theta-form",
            "D(q) = Theta(-q) omega(-q)/(q^4;q^4)",
            Dual,
            check_d_theta_form,
        ),
        Check::infallible("R-D", "R(D(q)) = -4 (q^2;q^2)/(q;q^2)^7", Dual, check_r_d),
        Check::infallible(
            "R-2B-equals-R-D",
            "R(2B(-q)) = R(D(q))",
            Dual,
            check_r_two_b_equals_r_d,
        ),
        Check::infallible(
            "S-4n+1-zero",
            "s(4n+1) = 0 exactly",
            SinglePath,
            check_s_vanishing,
        ),
    ];
    for (i, t) in TRANSFORMATION_TRIPLES.iter().enumerate() {
        let (a, b, c) = (ratio(t[0]), ratio(t[1]), ratio(t[2]));
        checks.push(Check::new(
            format!("q-transformation-{}", i + 1),
            "sum (-aq,-bq)_n q^(n+1)/(-cq)_n transformation at rational (a,b,c)",
            Dual,
            move |p| check_q_transformation(&a, &b, &c, p.min(TRANSFORMATION_PREC)),
        ));
    }
    for claim in c_theorem_claims().into_iter().chain(omega_claims()) {
        checks.push(Check::new(
            claim.name(),
            "Ramanujan-type congruence",
            SinglePath,
            move |p| check_congruence(&claim, &claim.series.build(p).expect("catalog entry")),
        ));
    }
    let mod_claims: [(&str, &'static str, Independence); 8] = [
        (
            "A-mod4-residues-2-3",
            "a(4n+2), a(4n+3) = 0 mod 4",
            SinglePath,
        ),
        (
            "A-mod4-dissection",
            "A(q) = A_0(q^4) + q A_1(q^4) mod 4",
            Dual,
        ),
        (
            "AB-neg-4n+1-mod4",
            "coefficients of A(q)B(-q) at 4n+1 = 0 mod 4",
            SinglePath,
        ),
        (
            "F1-cancellation",
            "F_1 = -A_0 B_1 + A_1 B_0 = 0 mod 4",
            Dual,
        ),
        ("A-mod2", "A(q) = (q^4;q^4) mod 2", Dual),
        ("B-neg-mod2-psi", "B(-q) = psi(q^4) mod 2", Dual),
        (
            "lerch-pairing",
            "pairing n with -n-1 in the Lerch sum gives psi(q^4)",
            Dual,
        ),
        ("AB-neg-mod2-q16", "A(q)B(-q) = (q^16;q^16) mod 2", Dual),
    ];
    for (i, (name, description, independence)) in mod_claims.into_iter().enumerate() {
        checks.push(Check::new(name, description, independence, move |p| {
            Ok(check_mod_claims(p)?.swap_remove(i))
        }));
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    checks
}

/// Looks up one registry entry by name.
pub fn find(name: &str) -> Result<Check, VerifyError> {
    registry()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| VerifyError::UnknownCheck(name.into()))
}

/// Runs every check sequentially, in registry order.
pub fn run_all(prec: usize) -> Result<Vec<CheckResult>, VerifyError> {
    registry().iter().map(|c| c.run(prec)).collect()
}
