//! q-Pochhammer symbols, infinite products, and the classical theta series.
//!
//! Infinite products are truncated by exponent: every factor `1 - s·q^e`
//! with `e ≥ prec` is `1 + O(q^prec)` and is skipped, so the truncation is
//! exact modulo `q^prec`. Factors are applied with the linear-time
//! [`Series::mul_one_minus`] / [`Series::div_one_minus`] updates, which keeps
//! an eta quotient with total exponent weight `w` at `O(w·N²/step)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::fps::{Coefficient, Series, Sign};

/// The product family `∏_j (1 - sign·q^(offset + j·step))`.
///
/// With `sign = Plus` this is `(q^offset; q^step)`; with `sign = Minus` it is
/// `(-q^offset; q^step)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PochSpec {
    pub sign: Sign,
    pub offset: usize,
    pub step: usize,
}

impl PochSpec {
    pub const fn new(sign: Sign, offset: usize, step: usize) -> Self {
        assert!(offset >= 1 && step >= 1, "offset and step must be positive");
        PochSpec { sign, offset, step }
    }

    /// `(q^offset; q^step)`.
    pub const fn pos(offset: usize, step: usize) -> Self {
        Self::new(Sign::Plus, offset, step)
    }

    /// `(-q^offset; q^step)`.
    pub const fn neg(offset: usize, step: usize) -> Self {
        Self::new(Sign::Minus, offset, step)
    }

    fn x<C: Coefficient>(&self) -> C {
        self.sign.apply(C::one())
    }

    /// Exponents of the factors that are not `1 + O(q^prec)`.
    fn exponents(&self, prec: usize) -> impl Iterator<Item = usize> {
        (self.offset..prec).step_by(self.step)
    }
}

/// `(q; q)` as a spec, the Euler product.
pub const EULER: PochSpec = PochSpec::pos(1, 1);

/// First `n` factors of the family, truncated at `prec`.
pub fn poch_finite<C: Coefficient>(spec: PochSpec, n: usize, prec: usize) -> Series<C> {
    let mut out = Series::one(prec);
    let x = spec.x::<C>();
    for e in spec.exponents(prec).take(n) {
        out.mul_one_minus(&x, e);
    }
    out
}

/// The infinite product, exact modulo `q^prec`.
pub fn poch_infinite<C: Coefficient>(spec: PochSpec, prec: usize) -> Series<C> {
    eta_quotient(&[(spec, 1)], prec)
}

/// `∏ spec_i^(power_i)` for integer powers, exact modulo `q^prec`.
pub fn eta_quotient<C: Coefficient>(factors: &[(PochSpec, i32)], prec: usize) -> Series<C> {
    let mut out = Series::one(prec);
    apply_quotient(&mut out, factors);
    out
}

/// Multiplies `f` in place by `∏ spec_i^(power_i)`.
pub fn apply_quotient<C: Coefficient>(f: &mut Series<C>, factors: &[(PochSpec, i32)]) {
    let prec = f.prec();
    for &(spec, power) in factors {
        let x = spec.x::<C>();
        for e in spec.exponents(prec) {
            for _ in 0..power.unsigned_abs() {
                if power > 0 {
                    f.mul_one_minus(&x, e);
                } else {
                    f.div_one_minus(&x, e);
                }
            }
        }
    }
}

/// Builds a series known modulo `q^prec` as `g(sign·q^k)` where `g` comes from
/// `build` at the smallest sufficient precision.
pub fn at_power<C: Coefficient>(
    build: impl FnOnce(usize) -> Series<C>,
    k: usize,
    sign: Sign,
    prec: usize,
) -> Series<C> {
    build(prec.div_ceil(k))
        .substitute_power(k, sign)
        .expect("k is positive")
        .truncate(prec)
}

/// `Σ_{n ∈ Z} q^(n²) = 1 + 2Σ_{n≥1} q^(n²)`.
pub fn theta<C: Coefficient>(prec: usize) -> Series<C> {
    signed_squares(prec, Sign::Plus)
}

/// `Θ(-q) = Σ_{n ∈ Z} (-1)^n q^(n²)`.
pub fn theta_neg<C: Coefficient>(prec: usize) -> Series<C> {
    signed_squares(prec, Sign::Minus)
}

fn signed_squares<C: Coefficient>(prec: usize, sign: Sign) -> Series<C> {
    let mut coeffs = alloc::vec![C::zero(); prec];
    if prec > 0 {
        coeffs[0] = C::one();
    }
    let two = C::from_i64(2);
    for n in (1..).take_while(|n| n * n < prec) {
        coeffs[n * n] = sign.pow(n).apply(two.clone());
    }
    Series::from_coeffs(coeffs)
}

/// `Σ_{n≥0} q^(n(n+1)/2)`.
pub fn psi<C: Coefficient>(prec: usize) -> Series<C> {
    let mut coeffs = alloc::vec![C::zero(); prec];
    for t in (0..).map(|n| n * (n + 1) / 2).take_while(|&t| t < prec) {
        coeffs[t] = C::one();
    }
    Series::from_coeffs(coeffs)
}

/// `(q²;q²)^5 / ((q;q)^2 (q⁴;q⁴)^2)`.
pub fn theta_product<C: Coefficient>(prec: usize) -> Series<C> {
    eta_quotient(
        &[
            (PochSpec::pos(2, 2), 5),
            (EULER, -2),
            (PochSpec::pos(4, 4), -2),
        ],
        prec,
    )
}

/// `(q;q)^2 / (q²;q²)`.
pub fn theta_neg_product<C: Coefficient>(prec: usize) -> Series<C> {
    eta_quotient(&[(EULER, 2), (PochSpec::pos(2, 2), -1)], prec)
}

/// `(q²;q²)^2 / (q;q)`.
pub fn psi_product<C: Coefficient>(prec: usize) -> Series<C> {
    eta_quotient(&[(PochSpec::pos(2, 2), 2), (EULER, -1)], prec)
}

/// Euler's pentagonal series `Σ_{k∈Z} (-1)^k q^(k(3k-1)/2)`.
pub fn pentagonal_sum(prec: usize) -> Series<BigInt> {
    let mut coeffs = alloc::vec![BigInt::zero(); prec];
    if prec > 0 {
        coeffs[0] = BigInt::one();
    }
    for k in 1usize.. {
        let lo = k * (3 * k - 1) / 2;
        if lo >= prec {
            break;
        }
        let c = if k % 2 == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        coeffs[lo] = c.clone();
        let hi = k * (3 * k + 1) / 2;
        if hi < prec {
            coeffs[hi] = c;
        }
    }
    Series::from_coeffs(coeffs)
}

/// Generalized pentagonal numbers below `bound`, ascending.
pub fn pentagonal_numbers(bound: usize) -> Vec<usize> {
    let mut out = alloc::vec![0];
    for k in (1usize..).take_while(|k| k * (3 * k - 1) / 2 < bound) {
        out.push(k * (3 * k - 1) / 2);
        let hi = k * (3 * k + 1) / 2;
        if hi < bound {
            out.push(hi);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = Series<BigInt>;

    #[test]
    fn finite_products() {
        let odd = PochSpec::pos(1, 2);
        assert_eq!(poch_finite::<BigInt>(odd, 0, 6), S::one(6));
        assert_eq!(
            poch_finite::<BigInt>(odd, 2, 6),
            S::from_i64s(&[1, -1, 0, -1, 1, 0])
        );
        assert_eq!(
            poch_finite::<BigInt>(PochSpec::neg(2, 2), 1, 4),
            S::from_i64s(&[1, 0, 1, 0])
        );
    }

    #[test]
    fn infinite_products() {
        assert_eq!(
            poch_infinite::<BigInt>(EULER, 8),
            S::from_i64s(&[1, -1, -1, 0, 0, 1, 0, 1])
        );
        // distinct even parts ≤ 6: {}, {2}, {4}, {6}, {2,4}
        assert_eq!(
            poch_infinite::<BigInt>(PochSpec::neg(2, 2), 7),
            S::from_i64s(&[1, 0, 1, 0, 1, 0, 2])
        );
        for spec in [EULER, PochSpec::neg(3, 5), PochSpec::pos(2, 2)] {
            assert_eq!(poch_infinite::<BigInt>(spec, 1), S::one(1));
        }
    }

    #[test]
    fn infinite_matches_long_finite_product() {
        for spec in [
            EULER,
            PochSpec::neg(2, 2),
            PochSpec::pos(1, 2),
            PochSpec::neg(3, 7),
        ] {
            let prec = 60;
            let n = (prec - spec.offset).div_ceil(spec.step);
            assert_eq!(
                poch_infinite::<BigInt>(spec, prec),
                poch_finite(spec, n, prec)
            );
        }
    }

    #[test]
    fn theta_family_small() {
        assert_eq!(theta::<BigInt>(5), S::from_i64s(&[1, 2, 0, 0, 2]));
        assert_eq!(theta::<BigInt>(2), S::from_i64s(&[1, 2]));
        assert_eq!(theta_neg::<BigInt>(5), S::from_i64s(&[1, -2, 0, 0, 2]));
        assert_eq!(theta_neg::<BigInt>(50), theta::<BigInt>(50).negate_q());
        assert_eq!(psi::<BigInt>(7), S::from_i64s(&[1, 1, 0, 1, 0, 0, 1]));
        assert_eq!(psi::<BigInt>(1), S::one(1));
    }

    #[test]
    fn theta_family_sum_equals_product() {
        let prec = 200;
        assert_eq!(theta::<BigInt>(prec), theta_product(prec));
        assert_eq!(theta_neg::<BigInt>(prec), theta_neg_product(prec));
        assert_eq!(psi::<BigInt>(prec), psi_product(prec));
    }

    #[test]
    fn euler_is_pentagonal() {
        let prec = 300;
        let euler = poch_infinite::<BigInt>(EULER, prec);
        assert_eq!(euler, pentagonal_sum(prec));
        let support: Vec<usize> = (0..prec)
            .filter(|&n| !euler.coeffs()[n].is_zero())
            .collect();
        assert_eq!(support, pentagonal_numbers(prec));
    }

    #[test]
    fn at_power_truncates() {
        let f = at_power(psi::<BigInt>, 4, Sign::Plus, 10);
        assert_eq!(f, S::from_i64s(&[1, 0, 0, 0, 1, 0, 0, 0, 0, 0]));
    }
}
