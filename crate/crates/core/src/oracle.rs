//! Brute-force counting of restricted two-color partitions, independent of
//! every series builder.
//!
//! A partition is admissible for `C(k, n)` when its smallest part is odd and
//! occurs at least once in blue, even parts of the same color are distinct,
//! and every blue even part is at least `2k - 1` larger than the smallest
//! part. Letting `k → ∞` forbids blue even parts altogether.

use alloc::vec::Vec;

use crate::special;
use crate::verify::{check_identity, CheckResult};

/// Practical bound for exhaustive enumeration.
pub const ENUMERATION_BOUND: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

/// Constraint on blue even parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlueEvenRule {
    /// No blue even parts (the `k → ∞` limit).
    Forbidden,
    /// Blue even parts must be at least `smallest + gap`.
    MinGap(usize),
}

impl BlueEvenRule {
    /// The rule for finite `k`: blue even parts ≥ smallest + 2k − 1.
    pub fn for_k(k: usize) -> Self {
        BlueEvenRule::MinGap(2 * k - 1)
    }
}

/// A multiset of colored parts, stored in nonincreasing order of size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColorPartition {
    parts: Vec<(usize, Color)>,
}

impl TwoColorPartition {
    pub fn new(mut parts: Vec<(usize, Color)>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        TwoColorPartition { parts }
    }

    pub fn parts(&self) -> &[(usize, Color)] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.parts.last().map(|p| p.0)
    }

    pub fn is_admissible(&self, rule: BlueEvenRule) -> bool {
        let Some(s) = self.smallest() else {
            return false;
        };
        if s % 2 == 0 || !self.parts.contains(&(s, Color::Blue)) {
            return false;
        }
        let evens = || self.parts.iter().filter(|p| p.0 % 2 == 0);
        // parts are sorted, so repeated colored parts are adjacent
        if self
            .parts
            .windows(2)
            .any(|w| w[0] == w[1] && w[0].0 % 2 == 0)
        {
            return false;
        }
        evens()
            .filter(|p| p.1 == Color::Blue)
            .all(|&(size, _)| match rule {
                BlueEvenRule::Forbidden => false,
                BlueEvenRule::MinGap(gap) => size >= s + gap,
            })
    }
}

/// Calls `visit` on every two-color partition of `n` in which each even size
/// occurs at most once per color.
pub fn for_each_candidate(n: usize, mut visit: impl FnMut(&TwoColorPartition)) {
    let mut stack = Vec::new();
    walk(n, n, &mut stack, &mut visit);
}

fn walk(
    remaining: usize,
    max_part: usize,
    stack: &mut Vec<(usize, Color)>,
    visit: &mut impl FnMut(&TwoColorPartition),
) {
    if remaining == 0 {
        if !stack.is_empty() {
            visit(&TwoColorPartition {
                parts: stack.clone(),
            });
        }
        return;
    }
    if max_part == 0 {
        return;
    }
    let size = max_part;
    let cap = if size.is_multiple_of(2) {
        1
    } else {
        remaining / size
    };
    for red in 0..=cap.min(remaining / size) {
        let left = remaining / size - red;
        for blue in 0..=cap.min(left) {
            let used = (red + blue) * size;
            let mark = stack.len();
            stack.extend(core::iter::repeat_n((size, Color::Red), red));
            stack.extend(core::iter::repeat_n((size, Color::Blue), blue));
            walk(remaining - used, size - 1, stack, visit);
            stack.truncate(mark);
        }
    }
}

/// Number of admissible partitions of `n` under `rule`.
pub fn enumerate_with_rule(n: usize, rule: BlueEvenRule) -> u64 {
    let mut count = 0;
    for_each_candidate(n, |p| {
        if p.is_admissible(rule) {
            count += 1;
        }
    });
    count
}

/// `c(n)`, by exhaustive enumeration.
pub fn enumerate_c(n: usize) -> u64 {
    enumerate_with_rule(n, BlueEvenRule::Forbidden)
}

/// `C(k, n)`, by exhaustive enumeration. `k` must be positive.
pub fn enumerate_c_k(k: usize, n: usize) -> u64 {
    assert!(k >= 1, "k must be positive");
    enumerate_with_rule(n, BlueEvenRule::for_k(k))
}

/// `C(q) = q A(q) S(q)`, each side from its own builder.
pub fn convolution_check(prec: usize) -> CheckResult {
    let lhs = special::series_c_sum(prec);
    let rhs = (&special::series_a(prec) * &special::series_s(prec))
        .shift(1)
        .expect("positive shift")
        .truncate(prec);
    check_identity("convolution-C-qAS", &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_c(0), 0);
        assert_eq!(enumerate_c(1), 1);
        for k in 1..5 {
            assert_eq!(enumerate_c_k(k, 0), 0);
        }
    }

    #[test]
    fn admissibility_rules() {
        use Color::*;
        let p = |v: &[(usize, Color)]| TwoColorPartition::new(v.to_vec());
        assert!(p(&[(1, Blue)]).is_admissible(BlueEvenRule::Forbidden));
        assert!(!p(&[(1, Red)]).is_admissible(BlueEvenRule::Forbidden));
        assert!(!p(&[(2, Blue)]).is_admissible(BlueEvenRule::MinGap(0)));
        assert!(p(&[(2, Red), (1, Blue)]).is_admissible(BlueEvenRule::Forbidden));
        assert!(!p(&[(2, Red), (2, Red), (1, Blue)]).is_admissible(BlueEvenRule::Forbidden));
        assert!(
            p(&[(3, Red), (3, Blue), (1, Blue), (1, Blue)]).is_admissible(BlueEvenRule::Forbidden)
        );
        let blue_even = p(&[(4, Blue), (1, Blue)]);
        assert!(!blue_even.is_admissible(BlueEvenRule::Forbidden));
        assert!(blue_even.is_admissible(BlueEvenRule::for_k(2))); // 4 ≥ 1 + 3
        assert!(!blue_even.is_admissible(BlueEvenRule::for_k(3))); // 4 < 1 + 5
        assert!(p(&[(4, Blue), (4, Red), (1, Blue)]).is_admissible(BlueEvenRule::for_k(1)));
        assert!(!TwoColorPartition::new(Vec::new()).is_admissible(BlueEvenRule::Forbidden));
    }

    #[test]
    fn limit_count_matches_series() {
        let c = special::series_c_sum(26);
        for n in 0..26 {
            assert_eq!(BigInt::from(enumerate_c(n)), c.coeffs()[n], "n={n}");
        }
    }

    #[test]
    fn finite_k_reading_is_validated_against_series() {
        for k in 1..=3 {
            let ck = special::series_c_k(k, 21).unwrap();
            for n in 0..21 {
                assert_eq!(
                    BigInt::from(enumerate_c_k(k, n)),
                    ck.coeffs()[n],
                    "k={k} n={n}"
                );
            }
        }
        // the stricter reading, blue even ≥ smallest + 2k, disagrees already at k = 1
        let c1 = special::series_c_k(1, 21).unwrap();
        assert!((0..21).any(
            |n| BigInt::from(enumerate_with_rule(n, BlueEvenRule::MinGap(2))) != c1.coeffs()[n]
        ));
    }

    #[test]
    fn finite_k_equals_limit_when_2k_exceeds_n() {
        for n in 0..16 {
            let k = n / 2 + 1;
            assert_eq!(enumerate_c_k(k, n), enumerate_c(n), "n={n}");
        }
    }

    #[test]
    fn convolution_identity_holds() {
        let r = convolution_check(300);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.prec, 300);
    }
}
