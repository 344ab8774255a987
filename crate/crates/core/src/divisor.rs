//! Formal divisors with rational coefficients and the rounding calculus.
//!
//! A [`CoeffDivisor`] is a finite map from prime-divisor labels to nonzero
//! rational coefficients. Zero coefficients are normalized away on insertion,
//! so divisor equality is plain map equality. The rounding operators and the
//! `<1` / `=1` / `>1` part extraction are what the two ideal engines consume:
//! a prime divisor with pair coefficient `d` imposes order `nlc_exponent(d)`
//! on the non-lc ideal and order `mult_exponent(d)` on the multiplier ideal.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffDivisor<L: Ord + Clone> {
    entries: BTreeMap<L, Rational>,
}

/// Result of splitting a divisor by coefficient size.
///
/// `lt1 + eq1 + gt1` recomposes the divisor; `frac` is `D - round_down(D)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorParts<L: Ord + Clone> {
    pub lt1: CoeffDivisor<L>,
    pub eq1: CoeffDivisor<L>,
    pub gt1: CoeffDivisor<L>,
    pub frac: CoeffDivisor<L>,
}

impl<L: Ord + Clone> Default for CoeffDivisor<L> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<L: Ord + Clone> CoeffDivisor<L> {
    pub fn empty() -> Self {
        CoeffDivisor {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I: IntoIterator<Item = (L, Rational)>>(entries: I) -> Self {
        let mut d = Self::empty();
        for (label, coeff) in entries {
            d.insert(label, coeff);
        }
        d
    }

    /// Inserts (replacing any previous coefficient); zero is never stored.
    pub fn insert(&mut self, label: L, coeff: Rational) {
        if coeff.is_zero() {
            self.entries.remove(&label);
        } else {
            self.entries.insert(label, coeff);
        }
    }

    pub fn coeff(&self, label: &L) -> Rational {
        self.entries.get(label).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &Rational)> {
        self.entries.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn map_coeffs<F: Fn(&Rational) -> Rational>(&self, f: F) -> Self {
        Self::from_entries(self.entries.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    /// Coefficient-wise least integer above: `d_j -> ceil(d_j)`.
    pub fn round_up(&self) -> Self {
        self.map_coeffs(|c| Rational::from_bigint(c.ceil_int()))
    }

    /// Coefficient-wise greatest integer below: `d_j -> floor(d_j)`.
    pub fn round_down(&self) -> Self {
        self.map_coeffs(|c| Rational::from_bigint(c.floor_int()))
    }

    /// Splits by coefficient size and extracts the fractional part.
    ///
    /// `lt1` keeps entries with coefficient `< 1` (with their coefficients),
    /// `eq1` keeps entries with coefficient exactly `1`, `gt1` the rest.
    pub fn parts(&self) -> DivisorParts<L> {
        let one = Rational::one();
        let mut lt1 = Self::empty();
        let mut eq1 = Self::empty();
        let mut gt1 = Self::empty();
        for (l, c) in &self.entries {
            if *c < one {
                lt1.insert(l.clone(), c.clone());
            } else if *c == one {
                eq1.insert(l.clone(), one.clone());
            } else {
                gt1.insert(l.clone(), c.clone());
            }
        }
        let frac = self.sub(&self.round_down());
        DivisorParts { lt1, eq1, gt1, frac }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.entries {
            let sum = out.coeff(l) + c.clone();
            out.insert(l.clone(), sum);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.entries {
            let diff = out.coeff(l) - c.clone();
            out.insert(l.clone(), diff);
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map_coeffs(|c| c * factor)
    }
}

/// Order imposed along a prime divisor of pair coefficient `d` by the non-lc
/// ideal: `floor(d)` when `d > 1`, nothing otherwise. Coefficients `<= 1`
/// (including the boundary `d = 1`) impose no condition, and negative
/// coefficients merely allow poles, which is no condition on regular
/// functions either.
pub fn nlc_exponent(d: &Rational) -> BigInt {
    if d.cmp_int(1) == std::cmp::Ordering::Greater {
        d.floor_int()
    } else {
        BigInt::zero()
    }
}

/// Order imposed along a prime divisor of pair coefficient `d` by the
/// multiplier ideal: `max(0, floor(d))`. Differs from [`nlc_exponent`]
/// exactly at `d = 1`, where the multiplier ideal still demands order one.
pub fn mult_exponent(d: &Rational) -> BigInt {
    let f = d.floor_int();
    if f < BigInt::zero() {
        BigInt::zero()
    } else {
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(entries: &[(&str, (i64, i64))]) -> CoeffDivisor<String> {
        CoeffDivisor::from_entries(
            entries
                .iter()
                .map(|(l, (n, m))| (l.to_string(), Rational::ratio(*n, *m))),
        )
    }

    #[test]
    fn round_up_examples() {
        assert_eq!(d(&[("A", (3, 2)), ("B", (-1, 4))]).round_up(), d(&[("A", (2, 1))]));
        assert_eq!(d(&[("A", (2, 1))]).round_up(), d(&[("A", (2, 1))]));
        assert_eq!(d(&[]).round_up(), d(&[]));
    }

    #[test]
    fn round_down_examples() {
        assert_eq!(
            d(&[("A", (3, 2)), ("B", (-1, 4))]).round_down(),
            d(&[("A", (1, 1)), ("B", (-1, 1))])
        );
        assert_eq!(d(&[("A", (1, 1))]).round_down(), d(&[("A", (1, 1))]));
        assert_eq!(d(&[("A", (5, 6))]).round_down(), d(&[]));
    }

    #[test]
    fn parts_examples() {
        let p = d(&[("A", (2, 1)), ("B", (1, 1)), ("C", (1, 2))]).parts();
        assert_eq!(p.lt1, d(&[("C", (1, 2))]));
        assert_eq!(p.eq1, d(&[("B", (1, 1))]));
        assert_eq!(p.gt1, d(&[("A", (2, 1))]));
        assert_eq!(p.frac, d(&[("C", (1, 2))]));

        let p = d(&[("A", (1, 1))]).parts();
        assert!(p.lt1.is_empty() && p.gt1.is_empty() && p.frac.is_empty());
        assert_eq!(p.eq1, d(&[("A", (1, 1))]));

        let p = d(&[("A", (7, 3))]).parts();
        assert!(p.lt1.is_empty() && p.eq1.is_empty());
        assert_eq!(p.gt1, d(&[("A", (7, 3))]));
        assert_eq!(p.frac, d(&[("A", (1, 3))]));
    }

    #[test]
    fn exponents() {
        assert_eq!(nlc_exponent(&Rational::from_int(2)), BigInt::from(2));
        assert_eq!(nlc_exponent(&Rational::from_int(1)), BigInt::from(0));
        assert_eq!(nlc_exponent(&Rational::ratio(7, 3)), BigInt::from(2));
        assert_eq!(nlc_exponent(&Rational::ratio(-3, 2)), BigInt::from(0));
        assert_eq!(mult_exponent(&Rational::from_int(1)), BigInt::from(1));
        assert_eq!(mult_exponent(&Rational::from_int(2)), BigInt::from(2));
        assert_eq!(mult_exponent(&Rational::ratio(5, 6)), BigInt::from(0));
        assert_eq!(mult_exponent(&Rational::ratio(-1, 2)), BigInt::from(0));
    }

    /// The two exponents agree except at d = 1, where they differ by one.
    #[test]
    fn exponents_differ_only_at_one() {
        for num in -24..=48 {
            for den in 1..=6 {
                let r = Rational::ratio(num, den);
                let n = nlc_exponent(&r);
                let m = mult_exponent(&r);
                assert!(n <= m, "nlc_exponent > mult_exponent at {}", r);
                if r == Rational::one() {
                    assert_eq!(&m - &n, BigInt::from(1));
                } else {
                    assert_eq!(n, m, "disagree away from 1 at {}", r);
                }
            }
        }
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, m)| Rational::ratio(n, m))
    }

    fn arb_divisor() -> impl Strategy<Value = CoeffDivisor<u32>> {
        proptest::collection::btree_map(0u32..6, arb_rational(), 0..5)
            .prop_map(CoeffDivisor::from_entries)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn round_up_within_one(dv in arb_divisor()) {
            let diff = dv.round_up().sub(&dv);
            for (_, c) in diff.iter() {
                prop_assert!(!c.is_negative() && c.cmp_int(1) == std::cmp::Ordering::Less);
            }
        }

        #[test]
        fn round_down_within_one(dv in arb_divisor()) {
            let diff = dv.sub(&dv.round_down());
            for (_, c) in diff.iter() {
                prop_assert!(!c.is_negative() && c.cmp_int(1) == std::cmp::Ordering::Less);
            }
        }

        #[test]
        fn parts_recompose(dv in arb_divisor()) {
            let p = dv.parts();
            prop_assert_eq!(p.lt1.add(&p.eq1).add(&p.gt1), dv);
        }
    }
}
