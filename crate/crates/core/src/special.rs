//! Named generating functions: the restricted two-color partition series,
//! the mock theta functions ω, f and B, and the eta quotients that appear in
//! their dissections.
//!
//! Every `q`-hypergeometric sum is built termwise. Consecutive summands
//! differ by a handful of binomial factors and a power of `q`, so each term is
//! kept as `q^v · u` with `u` known modulo `q^(N-v)` and updated in place with
//! linear-time factor operations. Summation stops once the valuation `v`
//! reaches the precision.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::fps::{Series, Sign};
use crate::qprod::{self, at_power, eta_quotient, PochSpec, EULER};

const ODD: PochSpec = PochSpec::pos(1, 2); // (q;q²)
const NEG_EVEN: PochSpec = PochSpec::neg(2, 2); // (-q²;q²)
const EVEN: PochSpec = PochSpec::pos(2, 2); // (q²;q²)
const QUAD: PochSpec = PochSpec::pos(4, 4); // (q⁴;q⁴)

type S = Series<BigInt>;

fn one() -> BigInt {
    BigInt::one()
}

fn minus_one() -> BigInt {
    -BigInt::one()
}

/// Accumulates `Σ q^v · u` for terms supplied in increasing valuation.
struct TermSum {
    acc: S,
}

impl TermSum {
    fn new(prec: usize) -> Self {
        TermSum { acc: S::zero(prec) }
    }

    fn add(&mut self, unit: &S, valuation: usize) {
        let prec = self.acc.prec();
        self.acc.add_shifted_assign(unit, valuation);
        // keep the full precision: `unit` is known to `prec - valuation`
        debug_assert_eq!(self.acc.prec(), prec);
    }
}

/// `A(q) = (-q²;q²) / (q;q²)²`.
pub fn series_a(prec: usize) -> S {
    eta_quotient(&[(NEG_EVEN, 1), (ODD, -2)], prec)
}

/// `S(q) = Σ_{n≥0} (q;q²)_n² q^(2n) / (-q²;q²)_n`.
pub fn series_s(prec: usize) -> S {
    let mut sum = TermSum::new(prec);
    let mut unit = S::one(prec);
    let mut n = 0;
    let mut v = 0;
    while v < prec {
        sum.add(&unit, v);
        // ratio: q² (1 - q^(2n+1))² / (1 + q^(2n+2))
        v += 2;
        if v >= prec {
            break;
        }
        unit = unit.truncate(prec - v);
        unit.mul_one_minus(&one(), 2 * n + 1);
        unit.mul_one_minus(&one(), 2 * n + 1);
        unit.div_one_minus(&minus_one(), 2 * n + 2);
        n += 1;
    }
    sum.acc
}

/// `C(q) = Σ_{n≥0} (-q^(2n+2);q²)_∞ q^(2n+1) / (q^(2n+1);q²)_∞²`.
pub fn series_c_sum(prec: usize) -> S {
    c_family(None, prec)
}

/// `C_k(q) = Σ_{n≥0} (-q^(2n+2k), -q^(2n+2);q²)_∞ q^(2n+1) / (q^(2n+1);q²)_∞²`.
pub fn series_c_k(k: usize, prec: usize) -> Result<S, SpecialError> {
    if k < 1 {
        return Err(SpecialError::InvalidK(k));
    }
    Ok(c_family(Some(k), prec))
}

// The n-th summand's product part P_n satisfies
// P_{n+1} = P_n (1 - q^(2n+1))² / ((1 + q^(2n+2)) (1 + q^(2n+2k))),
// with the last factor absent in the limit k → ∞.
fn c_family(k: Option<usize>, prec: usize) -> S {
    let mut sum = TermSum::new(prec);
    if prec <= 1 {
        return sum.acc;
    }
    let mut factors = alloc::vec![(NEG_EVEN, 1), (ODD, -2)];
    if let Some(k) = k {
        factors.push((PochSpec::neg(2 * k, 2), 1));
    }
    let mut unit: S = eta_quotient(&factors, prec - 1);
    let mut n = 0;
    loop {
        let v = 2 * n + 1;
        sum.add(&unit, v);
        let next = v + 2;
        if next >= prec {
            break;
        }
        unit = unit.truncate(prec - next);
        unit.mul_one_minus(&one(), 2 * n + 1);
        unit.mul_one_minus(&one(), 2 * n + 1);
        unit.div_one_minus(&minus_one(), 2 * n + 2);
        if let Some(k) = k {
            unit.div_one_minus(&minus_one(), 2 * n + 2 * k);
        }
        n += 1;
    }
    sum.acc
}

/// Third order mock theta function `ω(q) = Σ_{n≥0} q^(2n(n+1)) / (q;q²)_{n+1}²`.
pub fn series_omega(prec: usize) -> S {
    let mut sum = TermSum::new(prec);
    let mut unit = S::one(prec);
    if prec > 1 {
        unit.div_one_minus(&one(), 1);
        unit.div_one_minus(&one(), 1);
    }
    let mut n = 0;
    let mut v = 0;
    while v < prec {
        sum.add(&unit, v);
        // ratio: q^(4n+4) / (1 - q^(2n+3))²
        v += 4 * n + 4;
        if v >= prec {
            break;
        }
        unit = unit.truncate(prec - v);
        unit.div_one_minus(&one(), 2 * n + 3);
        unit.div_one_minus(&one(), 2 * n + 3);
        n += 1;
    }
    sum.acc
}

/// Second order mock theta function
/// `B(q) = Σ_{n≥0} (-q²;q²)_n q^(n(n+1)) / (q;q²)_{n+1}²`.
pub fn series_b_sum(prec: usize) -> S {
    let mut sum = TermSum::new(prec);
    let mut unit = S::one(prec);
    if prec > 1 {
        unit.div_one_minus(&one(), 1);
        unit.div_one_minus(&one(), 1);
    }
    let mut n = 0;
    let mut v = 0;
    while v < prec {
        sum.add(&unit, v);
        // ratio: (1 + q^(2n+2)) q^(2n+2) / (1 - q^(2n+3))²
        v += 2 * n + 2;
        if v >= prec {
            break;
        }
        unit = unit.truncate(prec - v);
        unit.mul_one_minus(&minus_one(), 2 * n + 2);
        unit.div_one_minus(&one(), 2 * n + 3);
        unit.div_one_minus(&one(), 2 * n + 3);
        n += 1;
    }
    sum.acc
}

/// `B(q)` from its Lerch-type form
/// `(-q²;q²)/(q²;q²) · Σ_{n∈Z} (-1)^n q^(2n(n+1)) / (1 - q^(2n+1))`.
///
/// The term for `n = -m-1` is rewritten with nonnegative exponents as
/// `(-1)^m q^(2m²+4m+1) / (1 - q^(2m+1))`.
pub fn series_b_lerch(prec: usize) -> S {
    let mut coeffs = S::zero(prec).into_coeffs();
    for m in 0usize.. {
        let sign = if m % 2 == 0 { one() } else { minus_one() };
        let period = 2 * m + 1;
        let positive = 2 * m * (m + 1);
        let negative = positive + period;
        if positive >= prec {
            break;
        }
        for v in [positive, negative] {
            for e in (v..prec).step_by(period) {
                coeffs[e] += &sign;
            }
        }
    }
    let mut out = S::from_coeffs(coeffs);
    qprod::apply_quotient(&mut out, &[(NEG_EVEN, 1), (EVEN, -1)]);
    out
}

/// The `n ≥ 0` and `n ≤ -1` parts of `Σ_{n∈Z} q^(2n(n+1)) / (1 + q^(2n+1))`,
/// each written with nonnegative exponents.
pub fn lerch_pairing_halves(prec: usize) -> (S, S) {
    let mut pos = S::zero(prec).into_coeffs();
    let mut neg = S::zero(prec).into_coeffs();
    for m in 0usize.. {
        let period = 2 * m + 1;
        let base = 2 * m * (m + 1);
        if base >= prec {
            break;
        }
        // 1/(1 + q^p) = Σ (-1)^j q^(jp)
        for (j, e) in (base..prec).step_by(period).enumerate() {
            pos[e] += &alt(j);
        }
        // q^(-p)/(1 + q^(-p)) rewritten: q^p/(1 + q^p)
        for (j, e) in (base + period..prec).step_by(period).enumerate() {
            neg[e] += &alt(j);
        }
    }
    (S::from_coeffs(pos), S::from_coeffs(neg))
}

fn alt(j: usize) -> BigInt {
    if j.is_multiple_of(2) {
        one()
    } else {
        minus_one()
    }
}

/// Third order mock theta function `f(q) = Σ_{n≥0} q^(n²) / (-q;q)_n²`.
pub fn series_f(prec: usize) -> S {
    let mut sum = TermSum::new(prec);
    let mut unit = S::one(prec);
    let mut n = 0;
    let mut v = 0;
    while v < prec {
        sum.add(&unit, v);
        // ratio: q^(2n+1) / (1 + q^(n+1))²
        v += 2 * n + 1;
        if v >= prec {
            break;
        }
        unit = unit.truncate(prec - v);
        unit.div_one_minus(&minus_one(), n + 1);
        unit.div_one_minus(&minus_one(), n + 1);
        n += 1;
    }
    sum.acc
}

fn theta_at(k: usize, prec: usize) -> S {
    at_power(qprod::theta, k, Sign::Plus, prec)
}

fn psi_at(k: usize, prec: usize) -> S {
    at_power(qprod::psi, k, Sign::Plus, prec)
}

/// `G(q) = Θ(q) Θ(q²)² / (q⁴;q⁴)²`.
pub fn series_g(prec: usize) -> S {
    let t2 = theta_at(2, prec);
    let mut g = &(&qprod::theta(prec) * &t2) * &t2;
    qprod::apply_quotient(&mut g, &[(QUAD, -2)]);
    g
}

/// Components `G_0..G_3` of the 4-dissection of `G`:
/// `2^j Θ(q)^(3-j) ψ(q²)^j / (q;q)²`.
pub fn series_g_j(j: usize, prec: usize) -> Result<S, SpecialError> {
    if j > 3 {
        return Err(SpecialError::InvalidComponent(j));
    }
    let theta: S = qprod::theta(prec);
    let psi2 = psi_at(2, prec);
    let mut g = S::monomial(BigInt::from(1u32 << j), 0, prec);
    for _ in 0..3 - j {
        g = &g * &theta;
    }
    for _ in 0..j {
        g = &g * &psi2;
    }
    qprod::apply_quotient(&mut g, &[(EULER, -2)]);
    Ok(g)
}

/// `Σ_{n≥1} q^(n²)`.
pub fn series_t(prec: usize) -> S {
    let mut coeffs = S::zero(prec).into_coeffs();
    for n in (1..).take_while(|n| n * n < prec) {
        coeffs[n * n] = one();
    }
    S::from_coeffs(coeffs)
}

/// `D(q) = (q;q²)² / (-q²;q²) · ω(-q)`.
pub fn series_d(prec: usize) -> S {
    let mut d = series_omega(prec).negate_q();
    qprod::apply_quotient(&mut d, &[(ODD, 2), (NEG_EVEN, -1)]);
    d
}

/// How a catalog entry is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DefinitionPath {
    Sum,
    Product,
    Lerch,
    ClosedForm,
}

impl fmt::Display for DefinitionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DefinitionPath::Sum => "sum",
            DefinitionPath::Product => "product",
            DefinitionPath::Lerch => "lerch",
            DefinitionPath::ClosedForm => "closed_form",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecialError {
    #[error("C_k needs k >= 1, got {0}")]
    InvalidK(usize),
    #[error("G_j is defined for j in 0..=3, got {0}")]
    InvalidComponent(usize),
    #[error("unknown series name {0:?}")]
    UnknownName(String),
}

/// The fixed catalog of named series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Named {
    A,
    S,
    C,
    Ck(usize),
    B,
    BLerch,
    Omega,
    F,
    G,
    Gj(usize),
    MClosed,
    D,
    A0,
    A1,
    B0Closed,
    B1Closed,
    Omega0,
    Omega1,
    T,
    Theta,
    ThetaNeg,
    Psi,
}

impl Named {
    /// Every entry, with `C_k` and `G_j` represented by `k = 1` and `j = 0..3`.
    pub const ALL: [Named; 25] = [
        Named::A,
        Named::S,
        Named::C,
        Named::Ck(1),
        Named::B,
        Named::BLerch,
        Named::Omega,
        Named::F,
        Named::G,
        Named::Gj(0),
        Named::Gj(1),
        Named::Gj(2),
        Named::Gj(3),
        Named::MClosed,
        Named::D,
        Named::A0,
        Named::A1,
        Named::B0Closed,
        Named::B1Closed,
        Named::Omega0,
        Named::Omega1,
        Named::T,
        Named::Theta,
        Named::ThetaNeg,
        Named::Psi,
    ];

    pub fn definition_path(&self) -> DefinitionPath {
        use Named::*;
        match self {
            S | C | Ck(_) | B | Omega | F | T | Theta | ThetaNeg | Psi => DefinitionPath::Sum,
            A => DefinitionPath::Product,
            BLerch => DefinitionPath::Lerch,
            G | Gj(_) | MClosed | D | A0 | A1 | B0Closed | B1Closed | Omega0 | Omega1 => {
                DefinitionPath::ClosedForm
            }
        }
    }

    /// The defining formula, as built.
    pub fn formula(&self) -> &'static str {
        use Named::*;
        match self {
            A => "(-q^2;q^2)_inf / (q;q^2)_inf^2",
            S => "sum_n (q;q^2)_n^2 q^(2n) / (-q^2;q^2)_n",
            C => "sum_n (-q^(2n+2);q^2)_inf q^(2n+1) / (q^(2n+1);q^2)_inf^2",
            Ck(_) => "sum_n (-q^(2n+2k),-q^(2n+2);q^2)_inf q^(2n+1) / (q^(2n+1);q^2)_inf^2",
            B => "sum_n (-q^2;q^2)_n q^(n(n+1)) / (q;q^2)_(n+1)^2",
            BLerch => "(-q^2;q^2)_inf/(q^2;q^2)_inf sum_(n in Z) (-1)^n q^(2n(n+1)) / (1-q^(2n+1))",
            Omega => "sum_n q^(2n(n+1)) / (q;q^2)_(n+1)^2",
            F => "sum_n q^(n^2) / (-q;q)_n^2",
            G => "Theta(q) Theta(q^2)^2 / (q^4;q^4)_inf^2",
            Gj(_) => "2^j Theta(q)^(3-j) psi(q^2)^j / (q;q)_inf^2",
            MClosed => "4 (q^2;q^2)_inf^2 / (q;q^2)_inf^6",
            D => "(q;q^2)_inf^2 / (-q^2;q^2)_inf * omega(-q)",
            A0 => "(q^2;q^2)_inf^5 / ((q;q)_inf (q^4;q^4)_inf^2)",
            A1 => "2 (q;q)_inf (q^4;q^4)_inf^2 / (q^2;q^2)_inf",
            B0Closed => "(q^2;q^2)_inf^14 / ((q;q)_inf^9 (q^4;q^4)_inf^4)",
            B1Closed => "-2 (q^2;q^2)_inf^8 / (q;q)_inf^7",
            Omega0 => "G_1/2 = Theta(q)^2 psi(q^2) / (q;q)_inf^2",
            Omega1 => "G_2/2 = 2 Theta(q) psi(q^2)^2 / (q;q)_inf^2",
            T => "sum_(n>=1) q^(n^2)",
            Theta => "sum_(n in Z) q^(n^2)",
            ThetaNeg => "sum_(n in Z) (-1)^n q^(n^2)",
            Psi => "sum_(n>=0) q^(n(n+1)/2)",
        }
    }

    pub fn build(&self, prec: usize) -> Result<S, SpecialError> {
        use Named::*;
        Ok(match *self {
            A => series_a(prec),
            S => series_s(prec),
            C => series_c_sum(prec),
            Ck(k) => series_c_k(k, prec)?,
            B => series_b_sum(prec),
            BLerch => series_b_lerch(prec),
            Omega => series_omega(prec),
            F => series_f(prec),
            G => series_g(prec),
            Gj(j) => series_g_j(j, prec)?,
            MClosed => {
                let mut m = Series::monomial(BigInt::from(4), 0, prec);
                qprod::apply_quotient(&mut m, &[(EVEN, 2), (ODD, -6)]);
                m
            }
            D => series_d(prec),
            A0 => eta_quotient(&[(EVEN, 5), (EULER, -1), (QUAD, -2)], prec),
            A1 => eta_quotient::<BigInt>(&[(EULER, 1), (QUAD, 2), (EVEN, -1)], prec)
                .scale(&BigInt::from(2)),
            B0Closed => eta_quotient(&[(EVEN, 14), (EULER, -9), (QUAD, -4)], prec),
            B1Closed => {
                eta_quotient::<BigInt>(&[(EVEN, 8), (EULER, -7)], prec).scale(&BigInt::from(-2))
            }
            Omega0 => halve(&series_g_j(1, prec)?),
            Omega1 => halve(&series_g_j(2, prec)?),
            T => series_t(prec),
            Theta => qprod::theta(prec),
            ThetaNeg => qprod::theta_neg(prec),
            Psi => qprod::psi(prec),
        })
    }
}

fn halve(s: &S) -> S {
    s.map(|c| {
        debug_assert!(c % 2u32 == BigInt::from(0));
        c / 2u32
    })
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Named::*;
        match self {
            Ck(k) => write!(f, "C_{k}"),
            Gj(j) => write!(f, "G{j}"),
            other => f.write_str(match other {
                A => "A",
                S => "S",
                C => "C",
                B => "B",
                BLerch => "B_lerch",
                Omega => "omega",
                F => "f",
                G => "G",
                MClosed => "M_closed",
                D => "D",
                A0 => "A0",
                A1 => "A1",
                B0Closed => "B0_closed",
                B1Closed => "B1_closed",
                Omega0 => "omega0",
                Omega1 => "omega1",
                T => "T",
                Theta => "theta",
                ThetaNeg => "theta_neg",
                Psi => "psi",
                Ck(_) | Gj(_) => unreachable!(),
            }),
        }
    }
}

impl FromStr for Named {
    type Err = SpecialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || SpecialError::UnknownName(s.into());
        if let Some(k) = s.strip_prefix("C_") {
            let k: usize = k.parse().map_err(|_| unknown())?;
            return if k >= 1 {
                Ok(Named::Ck(k))
            } else {
                Err(SpecialError::InvalidK(k))
            };
        }
        if let Some(j) = s.strip_prefix('G').filter(|j| !j.is_empty()) {
            let j: usize = j.parse().map_err(|_| unknown())?;
            return if j <= 3 {
                Ok(Named::Gj(j))
            } else {
                Err(SpecialError::InvalidComponent(j))
            };
        }
        Named::ALL
            .iter()
            .copied()
            .filter(|n| !matches!(n, Named::Ck(_) | Named::Gj(_)))
            .find(|n| {
                let mut buf = String::new();
                fmt::write(&mut buf, format_args!("{n}")).is_ok() && buf == s
            })
            .ok_or_else(unknown)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    // First 25 coefficients, from an independent dense-polynomial expansion
    // of each defining sum (Python, schoolbook products and inverses).
    const A25: [i64; 25] = [
        1, 2, 4, 8, 13, 22, 36, 56, 85, 128, 188, 272, 390, 550, 768, 1064, 1458, 1982, 2676, 3584,
        4771, 6314, 8304, 10864, 14144,
    ];
    const S25: [i64; 25] = [
        1, 0, 1, -2, 1, 0, 1, -4, 4, 0, 1, -6, 5, 0, 4, -12, 8, 0, 5, -16, 12, 0, 8, -28, 21,
    ];
    const C25: [i64; 25] = [
        0, 1, 2, 5, 8, 14, 24, 38, 58, 90, 134, 195, 284, 404, 568, 796, 1098, 1501, 2042, 2750,
        3680, 4898, 6472, 8504, 11122,
    ];
    const C1_25: [i64; 25] = [
        0, 1, 2, 6, 10, 19, 34, 58, 92, 150, 234, 356, 538, 799, 1164, 1690, 2418, 3420, 4804,
        6686, 9228, 12658, 17234, 23314, 31362,
    ];
    const C2_25: [i64; 25] = [
        0, 1, 2, 5, 8, 15, 26, 43, 68, 109, 166, 251, 376, 551, 798, 1149, 1628, 2291, 3198, 4421,
        6072, 8285, 11222, 15115, 20244,
    ];
    const OMEGA25: [i64; 25] = [
        1, 2, 3, 4, 6, 8, 10, 14, 18, 22, 29, 36, 44, 56, 68, 82, 101, 122, 146, 176, 210, 248,
        296, 350, 410,
    ];
    const B25: [i64; 25] = [
        1, 2, 4, 6, 9, 14, 20, 28, 40, 54, 72, 98, 129, 168, 220, 282, 360, 460, 580, 728, 912,
        1134, 1404, 1734, 2129,
    ];
    const F25: [i64; 25] = [
        1, 1, -2, 3, -3, 3, -5, 7, -6, 6, -10, 12, -11, 13, -17, 20, -21, 21, -27, 34, -33, 36,
        -46, 51, -53,
    ];

    fn frozen(c: &[i64]) -> S {
        S::from_i64s(c)
    }

    #[test]
    fn builders_match_frozen_expansions() {
        assert_eq!(series_a(25), frozen(&A25));
        assert_eq!(series_s(25), frozen(&S25));
        assert_eq!(series_c_sum(25), frozen(&C25));
        assert_eq!(series_c_k(1, 25).unwrap(), frozen(&C1_25));
        assert_eq!(series_c_k(2, 25).unwrap(), frozen(&C2_25));
        assert_eq!(series_omega(25), frozen(&OMEGA25));
        assert_eq!(series_b_sum(25), frozen(&B25));
        assert_eq!(series_f(25), frozen(&F25));
    }

    #[test]
    fn builders_are_prefix_consistent() {
        let big = 80;
        for prec in [0, 1, 2, 3, 7, 24] {
            for name in Named::ALL {
                let lo = name.build(prec).unwrap();
                assert_eq!(lo.prec(), prec, "{name}");
                assert_eq!(
                    lo,
                    name.build(big).unwrap().truncate(prec),
                    "{name} at {prec}"
                );
            }
        }
    }

    #[test]
    fn spot_values() {
        let a = series_a(10);
        assert_eq!(a.coeffs()[..4], [1, 2, 4, 8].map(BigInt::from));
        assert!(a.coeff(10).is_err());
        let s = series_s(10);
        assert_eq!(s.coeffs()[..4], [1, 0, 1, -2].map(BigInt::from));
        assert_eq!(series_c_sum(2).coeffs(), [0, 1].map(BigInt::from));
        assert_eq!(series_c_sum(5).coeffs()[4].clone() % 4, BigInt::from(0));
        let omega = series_omega(6);
        assert_eq!(omega.coeffs(), [1, 2, 3, 4, 6, 8].map(BigInt::from));
        assert_eq!(series_b_sum(2).coeffs(), [1, 2].map(BigInt::from));
        assert_eq!(series_f(3).coeffs(), [1, 1, -2].map(BigInt::from));
        assert_eq!(series_g(3).coeffs()[0], BigInt::from(1));
    }

    #[test]
    fn c_k_needs_positive_k() {
        assert_eq!(series_c_k(0, 5), Err(SpecialError::InvalidK(0)));
        for k in 1..5 {
            assert_eq!(series_c_k(k, 5).unwrap().coeffs()[0], BigInt::from(0));
        }
        assert_eq!(series_c_k(1, 5).unwrap().coeffs()[1], BigInt::from(1));
    }

    #[test]
    fn c_k_agrees_with_limit_through_2k() {
        let prec = 100;
        let c = series_c_sum(prec);
        for k in 1..=20 {
            let ck = series_c_k(k, prec).unwrap();
            let through = (2 * k).min(prec - 1);
            assert_eq!(ck.coeffs()[..=through], c.coeffs()[..=through], "k={k}");
        }
    }

    #[test]
    fn lerch_form_equals_sum_form() {
        assert_eq!(series_b_lerch(300), series_b_sum(300));
        assert_eq!(series_b_lerch(1).coeffs(), [BigInt::from(1)]);
    }

    #[test]
    fn lerch_pairing_sums_to_psi_q4() {
        let prec = 200;
        let (pos, neg) = lerch_pairing_halves(prec);
        assert_eq!(&pos + &neg, psi_at(4, prec));
    }

    #[test]
    fn g_components_reassemble() {
        let prec = 400;
        let mut sum = S::zero(prec);
        for j in 0..4 {
            let gj = at_power(|p| series_g_j(j, p).unwrap(), 4, Sign::Plus, prec);
            sum = &sum + &gj.shift(j as isize).unwrap().truncate(prec);
        }
        assert_eq!(sum, series_g(prec));
        assert!(series_g_j(3, 100)
            .unwrap()
            .coeffs()
            .iter()
            .all(|c| c % 8u32 == BigInt::from(0)));
        assert_eq!(series_g_j(4, 10), Err(SpecialError::InvalidComponent(4)));
    }

    #[test]
    fn closed_forms_leading_terms() {
        let lead = |n: Named| n.build(5).unwrap().coeffs().to_vec();
        assert_eq!(lead(Named::MClosed)[0], BigInt::from(4));
        assert_eq!(lead(Named::B1Closed)[0], BigInt::from(-2));
        assert_eq!(lead(Named::T)[..2], [0, 1].map(BigInt::from));
    }

    #[test]
    fn counting_series_are_nonnegative() {
        for s in [
            series_a(300),
            series_c_sum(300),
            series_omega(300),
            series_b_sum(300),
        ] {
            assert!(s.coeffs().iter().all(|c| c >= &BigInt::from(0)));
        }
    }

    #[test]
    fn catalog_names_round_trip() {
        let names: Vec<_> = Named::ALL.iter().map(|n| n.to_string()).collect();
        for (name, text) in Named::ALL.iter().zip(&names) {
            assert_eq!(&text.parse::<Named>().unwrap(), name);
        }
        assert_eq!("C_7".parse::<Named>().unwrap(), Named::Ck(7));
        assert!("C_0".parse::<Named>().is_err());
        assert!("G9".parse::<Named>().is_err());
        assert!("nope".parse::<Named>().is_err());
    }
}
