//! Truncated formal power series in one variable `q` with exact coefficients.
//!
//! A [`Series`] stores the coefficients of `q^0 .. q^(N-1)` and represents a
//! power series known modulo `q^N`; `N` is its precision. Every operation
//! propagates precision: binary operations truncate to the smaller of their
//! inputs, so a coefficient is never reported past the point where it is
//! actually determined.
//!
//! Coefficients are generic over [`Coefficient`]. Integer series use
//! [`BigInt`]; series with rational parameters use [`BigRational`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors raised by series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("coefficient count {len} does not match precision {prec}")]
    LengthMismatch { len: usize, prec: usize },
    #[error("constant term is not a unit")]
    NotAUnit,
    #[error("substitution q -> q^0 is not a power series map")]
    ZeroPower,
    #[error("series is not divisible by q^{shift}: coefficient of q^{index} is nonzero")]
    NotDivisible { shift: usize, index: usize },
    #[error("coefficient of q^{index} is beyond the truncation order {prec}")]
    BeyondTruncation { index: usize, prec: usize },
    #[error("coefficient of q^{index} is not an integer")]
    NonInteger { index: usize },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
}

/// Exact coefficient ring for [`Series`].
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    /// Multiplicative inverse, if the element is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// The element as an integer, if it is one.
    fn to_integer(&self) -> Option<BigInt>;

    fn from_integer(n: BigInt) -> Self;

    fn to_rational(&self) -> BigRational;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(BigInt::from(n))
    }
}

impl Coefficient for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn to_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }

    fn from_integer(n: BigInt) -> Self {
        n
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coefficient for BigRational {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn to_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.to_integer())
        } else {
            None
        }
    }

    fn from_integer(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// Sign applied to `q` by a substitution `q -> ±q^k`, or to a product
/// factor `(1 - sign·q^e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply<C: Coefficient>(self, c: C) -> C {
        match self {
            Sign::Plus => c,
            Sign::Minus => -c,
        }
    }

    /// `sign^n`.
    pub fn pow(self, n: usize) -> Sign {
        if self == Sign::Minus && n % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// A power series in `q` known modulo `q^prec`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series<C = BigInt> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Series<C> {
    /// Builds a series from its first `prec` coefficients.
    pub fn make(coeffs: Vec<C>, prec: usize) -> Result<Self, SeriesError> {
        if coeffs.len() != prec {
            return Err(SeriesError::LengthMismatch {
                len: coeffs.len(),
                prec,
            });
        }
        Ok(Series { coeffs })
    }

    /// Builds a series whose precision is the number of coefficients given.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Series {
            coeffs: coeffs.iter().map(|&c| C::from_i64(c)).collect(),
        }
    }

    pub fn zero(prec: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); prec],
        }
    }

    pub fn one(prec: usize) -> Self {
        Self::monomial(C::one(), 0, prec)
    }

    /// `c·q^n + O(q^prec)`.
    pub fn monomial(c: C, n: usize, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if n < prec {
            s.coeffs[n] = c;
        }
        s
    }

    #[inline]
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `q^n`; indices at or past the precision are an error,
    /// never an implicit zero.
    pub fn coeff(&self, n: usize) -> Result<&C, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::BeyondTruncation {
            index: n,
            prec: self.prec(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops every coefficient at index `prec` or above.
    pub fn truncate(mut self, prec: usize) -> Self {
        self.coeffs.truncate(prec);
        self
    }

    pub fn scale(&self, c: &C) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse.
    ///
    /// Over the integers the constant term must be `±1`; over the rationals it
    /// must be nonzero.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let n = self.prec();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        let c0_inv = self.coeffs[0].unit_inverse().ok_or(SeriesError::NotAUnit)?;
        let neg_inv = -c0_inv.clone();
        let support: Vec<usize> = (1..n).filter(|&k| !self.coeffs[k].is_zero()).collect();
        let mut out: Vec<C> = Vec::with_capacity(n);
        out.push(c0_inv);
        for m in 1..n {
            let mut acc = C::zero();
            for &k in support.iter().take_while(|&&k| k <= m) {
                if !out[m - k].is_zero() {
                    acc += &(self.coeffs[k].clone() * out[m - k].clone());
                }
            }
            out.push(acc * neg_inv.clone());
        }
        Ok(Series { coeffs: out })
    }

    /// `f(sign·q^k)`.
    ///
    /// For `k > 1` the result has precision `prec·k`: the coefficients between
    /// the images of known indices are known to vanish.
    pub fn substitute_power(&self, k: usize, sign: Sign) -> Result<Self, SeriesError> {
        if k == 0 {
            return Err(SeriesError::ZeroPower);
        }
        let mut out = vec![C::zero(); self.prec() * k];
        for (n, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[n * k] = sign.pow(n).apply(c.clone());
            }
        }
        Ok(Series { coeffs: out })
    }

    /// `f(-q)`.
    pub fn negate_q(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Multiplies by `q^k`. A negative `k` requires the dropped leading
    /// coefficients to be zero and lowers the precision by `|k|`.
    pub fn shift(&self, k: isize) -> Result<Self, SeriesError> {
        if k >= 0 {
            let k = k as usize;
            let mut out = vec![C::zero(); k];
            out.extend(self.coeffs.iter().cloned());
            return Ok(Series { coeffs: out });
        }
        let drop = k.unsigned_abs();
        if drop > self.prec() {
            return Err(SeriesError::BeyondTruncation {
                index: self.prec(),
                prec: self.prec(),
            });
        }
        if let Some(index) = self.coeffs[..drop].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible { shift: drop, index });
        }
        Ok(Series {
            coeffs: self.coeffs[drop..].to_vec(),
        })
    }

    /// Reduces every coefficient to its representative in `[0, m)`.
    pub fn reduce_mod(&self, m: u64) -> Result<Self, SeriesError> {
        if m < 2 {
            return Err(SeriesError::InvalidModulus(m));
        }
        let modulus = BigInt::from(m);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                let n = c.to_integer().ok_or(SeriesError::NonInteger { index })?;
                Ok(C::from_integer(n.mod_floor(&modulus)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Series { coeffs })
    }

    /// `f^e` for any integer `e`; negative powers invert first.
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Series::one(self.prec());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// In place: multiplies by `(1 - x·q^e)`, `e ≥ 1`. Linear time.
    pub fn mul_one_minus(&mut self, x: &C, e: usize) {
        assert!(e >= 1, "factor exponent must be positive");
        let n = self.prec();
        if e >= n || x.is_zero() {
            return;
        }
        let unit = unit_kind(x);
        for i in (e..n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            let src = &lo[i - e];
            if src.is_zero() {
                continue;
            }
            match unit {
                Some(Sign::Plus) => hi[0] -= src,
                Some(Sign::Minus) => hi[0] += src,
                None => hi[0] -= &(src.clone() * x.clone()),
            }
        }
    }

    /// In place: divides by `(1 - x·q^e)`, `e ≥ 1`. Linear time.
    pub fn div_one_minus(&mut self, x: &C, e: usize) {
        assert!(e >= 1, "factor exponent must be positive");
        let n = self.prec();
        if e >= n || x.is_zero() {
            return;
        }
        let unit = unit_kind(x);
        for i in e..n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            let src = &lo[i - e];
            if src.is_zero() {
                continue;
            }
            match unit {
                Some(Sign::Plus) => hi[0] += src,
                Some(Sign::Minus) => hi[0] -= src,
                None => hi[0] += &(src.clone() * x.clone()),
            }
        }
    }

    /// In place: adds `q^v·other`, lowering the precision to `v + other.prec()`
    /// when that is smaller.
    pub fn add_shifted_assign(&mut self, other: &Series<C>, v: usize) {
        let prec = self.prec().min(v + other.prec());
        self.coeffs.truncate(prec);
        for (i, c) in other.coeffs.iter().enumerate() {
            if v + i >= prec {
                break;
            }
            if !c.is_zero() {
                self.coeffs[v + i] += c;
            }
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl Series<BigInt> {
    pub fn to_rational(&self) -> Series<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

fn unit_kind<C: Coefficient>(x: &C) -> Option<Sign> {
    if x.is_one() {
        Some(Sign::Plus)
    } else if (-x.clone()).is_one() {
        Some(Sign::Minus)
    } else {
        None
    }
}

fn zip_with<C: Coefficient>(a: &Series<C>, b: &Series<C>, f: impl Fn(&C, &C) -> C) -> Series<C> {
    Series {
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| f(x, y))
            .collect(),
    }
}

impl<C: Coefficient> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: &Series<C>) -> Series<C> {
        zip_with(self, rhs, |x, y| x.clone() + y.clone())
    }
}

impl<C: Coefficient> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: &Series<C>) -> Series<C> {
        zip_with(self, rhs, |x, y| x.clone() - y.clone())
    }
}

impl<C: Coefficient> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

/// Truncated Cauchy product at the smaller precision.
///
/// Schoolbook multiplication that iterates only over the nonzero
/// coefficients of the sparser operand; theta-type factors have `O(√N)`
/// nonzero terms, which brings those products down to `O(N^1.5)`.
impl<C: Coefficient> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: &Series<C>) -> Series<C> {
        let n = self.prec().min(rhs.prec());
        let nonzero = |s: &Series<C>| s.coeffs[..n].iter().filter(|c| !c.is_zero()).count();
        let (sparse, dense) = if nonzero(self) <= nonzero(rhs) {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = vec![C::zero(); n];
        for (i, a) in sparse.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in dense.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a.clone() * b.clone());
                }
            }
        }
        Series { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: Coefficient> $tr for Series<C> {
            type Output = Series<C>;
            fn $f(self, rhs: Series<C>) -> Series<C> {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> Neg for Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => f.write_str("q")?,
                1 => write!(f, "({c})q")?,
                _ if c.is_one() => write!(f, "q^{n}")?,
                _ => write!(f, "({c})q^{n}")?,
            }
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(q^{})", self.prec())
    }
}

/// Absolute value of the largest coefficient, in bits; a rough size measure
/// for reports.
pub fn max_bits(s: &Series<BigInt>) -> u64 {
    s.coeffs.iter().map(|c| c.abs().bits()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    type S = Series<BigInt>;

    fn s(c: &[i64]) -> S {
        S::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn make_checks_length() {
        assert_eq!(S::make(vec![1.into()], 1).unwrap(), s(&[1]));
        assert_eq!(S::make(vec![0.into(), 1.into()], 2).unwrap(), s(&[0, 1]));
        assert_eq!(
            S::make(vec![1.into(), (-1).into()], 1),
            Err(SeriesError::LengthMismatch { len: 2, prec: 1 })
        );
    }

    #[test]
    fn add_sub_neg_follow_min_precision() {
        assert_eq!(&s(&[1, 1]) + &s(&[1, -1]), s(&[2, 0]));
        let f = s(&[3, -1, 4, 1]);
        assert_eq!(&f + &(-&f), S::zero(4));
        assert_eq!((&s(&[1, 2, 3]) + &s(&[1, 1, 1, 1, 1])).prec(), 3);
        assert_eq!(&s(&[5, 5, 5]) - &s(&[1, 2]), s(&[4, 3]));
    }

    #[test]
    fn mul_small_cases() {
        assert_eq!(&s(&[1, 1, 0]) * &s(&[1, -1, 0]), s(&[1, 0, -1]));
        let f = s(&[2, -7, 1, 8]);
        assert_eq!(&f * &S::one(4), f);
        let cube = &(&s(&[1, 2, 1, 0]) * &s(&[1, 1, 0, 0]));
        assert_eq!(cube.coeff(2).unwrap(), &BigInt::from(3));
        assert_eq!(cube, &s(&[1, 3, 3, 1]));
    }

    #[test]
    fn invert_cases() {
        assert_eq!(s(&[1, -1, 0, 0]).invert().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(s(&[1]).invert().unwrap(), s(&[1]));
        assert_eq!(s(&[0, 1]).invert(), Err(SeriesError::NotAUnit));
        // 2 is not a unit over the integers but is over the rationals
        assert_eq!(s(&[2, 1]).invert(), Err(SeriesError::NotAUnit));
        let half = s(&[2, 1]).to_rational().invert().unwrap();
        assert_eq!(half.coeffs(), &[r(1, 2), r(-1, 4)]);
    }

    #[test]
    fn substitute_power_cases() {
        assert_eq!(
            s(&[1, 1]).substitute_power(2, Sign::Plus).unwrap(),
            s(&[1, 0, 1, 0])
        );
        assert_eq!(
            s(&[1, 1, 1]).substitute_power(1, Sign::Minus).unwrap(),
            s(&[1, -1, 1])
        );
        let f = s(&[4, 0, -2, 9]);
        assert_eq!(f.substitute_power(1, Sign::Plus).unwrap(), f);
        assert_eq!(
            f.substitute_power(0, Sign::Plus),
            Err(SeriesError::ZeroPower)
        );
        assert_eq!(f.substitute_power(1, Sign::Minus).unwrap(), f.negate_q());
        assert_eq!(
            s(&[1, 2]).substitute_power(3, Sign::Minus).unwrap(),
            s(&[1, 0, 0, -2, 0, 0])
        );
    }

    #[test]
    fn shift_cases() {
        assert_eq!(s(&[1, 1]).shift(1).unwrap(), s(&[0, 1, 1]));
        assert_eq!(s(&[0, 0, 1, 1]).shift(-2).unwrap(), s(&[1, 1]));
        assert_eq!(
            s(&[1, 1]).shift(-1),
            Err(SeriesError::NotDivisible { shift: 1, index: 0 })
        );
        assert!(matches!(
            s(&[0]).shift(-2),
            Err(SeriesError::BeyondTruncation { .. })
        ));
    }

    #[test]
    fn coeff_cases() {
        let f = s(&[1, 2]);
        assert_eq!(f.coeff(1).unwrap(), &BigInt::from(2));
        assert_eq!(f.coeff(0).unwrap(), &BigInt::from(1));
        assert_eq!(
            f.coeff(5),
            Err(SeriesError::BeyondTruncation { index: 5, prec: 2 })
        );
    }

    #[test]
    fn reduce_mod_cases() {
        assert_eq!(s(&[1, 4, 6]).reduce_mod(4).unwrap(), s(&[1, 0, 2]));
        assert_eq!(s(&[-1, -6, 7]).reduce_mod(4).unwrap(), s(&[3, 2, 3]));
        assert!(s(&[2, 0, 2, 2, 2]).reduce_mod(2).unwrap().is_zero());
        let bad = Series::from_coeffs(vec![r(1, 2), r(1, 1)]);
        assert_eq!(bad.reduce_mod(2), Err(SeriesError::NonInteger { index: 0 }));
        assert_eq!(s(&[1]).reduce_mod(1), Err(SeriesError::InvalidModulus(1)));
    }

    #[test]
    fn binomial_factor_ops_match_dense_products() {
        let f = s(&[3, -1, 4, 1, -5, 9, 2, -6]);
        for e in 1..9 {
            for x in [-2i64, -1, 1, 3] {
                let mut factor = vec![0i64; 8];
                factor[0] = 1;
                if e < 8 {
                    factor[e] = -x;
                }
                let dense = &f * &s(&factor);
                let mut sparse = f.clone();
                sparse.mul_one_minus(&BigInt::from(x), e);
                assert_eq!(sparse, dense, "x={x} e={e}");
                if x.abs() == 1 {
                    sparse.div_one_minus(&BigInt::from(x), e);
                    assert_eq!(sparse, f);
                }
            }
        }
    }

    #[test]
    fn pow_and_negative_pow() {
        let f = s(&[1, -1, 0, 0, 0]);
        assert_eq!(f.pow(2).unwrap(), s(&[1, -2, 1, 0, 0]));
        assert_eq!(f.pow(-2).unwrap(), s(&[1, 2, 3, 4, 5]));
        assert_eq!(f.pow(0).unwrap(), S::one(5));
    }

    #[test]
    fn add_shifted_respects_precision() {
        let mut acc = S::zero(6);
        acc.add_shifted_assign(&s(&[1, 1]), 2);
        assert_eq!(acc, s(&[0, 0, 1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 2, 0, 0, 1]).to_string(), "1 + (2)q + q^4 + O(q^5)");
        assert_eq!(S::zero(3).to_string(), "O(q^3)");
    }
}
