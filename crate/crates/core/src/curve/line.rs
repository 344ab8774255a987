//! Divisors and ideals on a rational line in the plane.
//!
//! A line is a smooth curve, so its pairs need no resolution: a point of
//! coefficient `b` imposes order `nlc_exponent(b)` (or `mult_exponent(b)`)
//! directly, and the truncated slices are spans of shifted power products.

use super::PlaneCurve;
use crate::divisor::{mult_exponent, nlc_exponent};
use crate::linalg;
use crate::poly::Poly1;
use crate::rational::Rational;
use num_traits::ToPrimitive;
use std::fmt;

/// An effective divisor on a line, in the line's rational parameter:
/// distinct parameter values with positive coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinePointDivisor {
    pub line: PlaneCurve,
    pub points: Vec<(Rational, Rational)>,
}

impl fmt::Display for LinePointDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .points
            .iter()
            .map(|(t, c)| format!("{}*({})", c, t))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Order conditions at finitely many rational points of the line.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LineIdeal {
    pub conditions: Vec<(Rational, u64)>,
}

impl LineIdeal {
    pub fn is_trivial(&self) -> bool {
        self.conditions.is_empty()
    }

    pub fn total_order(&self) -> u64 {
        self.conditions.iter().map(|(_, m)| m).sum()
    }

    /// Canonical basis (echelon over descending powers) of the degree-`d`
    /// slice: multiples of the product of the point factors.
    pub fn basis(&self, d: u32) -> Vec<Poly1> {
        let mut pi = Poly1::one();
        for (t, m) in &self.conditions {
            let linear = Poly1::new(vec![-t, Rational::one()]);
            pi = pi.mul(&linear.pow(*m as usize));
        }
        let pi_deg = pi.degree().unwrap_or(0) as u32;
        if pi_deg > d {
            return Vec::new();
        }
        let mut out = Vec::new();
        for k in (0..=(d - pi_deg)).rev() {
            out.push(pi.mul(&Poly1::monomial(k as usize, Rational::one())));
        }
        out
    }
}

/// Non-lc ideal of the line pair: points of coefficient above one impose
/// the floor of their coefficient.
pub fn nlc_on_line(bs: &LinePointDivisor) -> LineIdeal {
    line_ideal(bs, nlc_exponent)
}

/// Multiplier ideal of the line pair.
pub fn mult_on_line(bs: &LinePointDivisor) -> LineIdeal {
    line_ideal(bs, mult_exponent)
}

fn line_ideal(
    bs: &LinePointDivisor,
    rule: fn(&Rational) -> num_bigint::BigInt,
) -> LineIdeal {
    let mut conditions = Vec::new();
    for (t, coeff) in &bs.points {
        let m = rule(coeff).to_u64().unwrap_or(u64::MAX);
        if m >= 1 {
            conditions.push((t.clone(), m));
        }
    }
    LineIdeal { conditions }
}

/// A one-dimensional pair is log canonical iff every coefficient is at
/// most one.
pub fn line_divisor_is_lc(bs: &LinePointDivisor) -> bool {
    bs.points
        .iter()
        .all(|(_, c)| c.cmp_int(1) != std::cmp::Ordering::Greater)
}

/// Equality of spans of univariate slices at degree `d`.
pub fn line_slices_equal(a: &[Poly1], b: &[Poly1], d: u32) -> bool {
    line_slice_matrix(a, d) == line_slice_matrix(b, d)
}

pub fn line_slice_matrix(polys: &[Poly1], d: u32) -> Vec<Vec<Rational>> {
    let ncols = d as usize + 1;
    let rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); ncols];
            for (deg, c) in p.coeffs().iter().enumerate() {
                assert!(deg < ncols, "slice polynomial exceeds the stated degree");
                row[d as usize - deg] = c.clone();
            }
            row
        })
        .collect();
    linalg::rref(rows)
}

/// `true` iff the degree-`d` span of `inner` sits inside that of `outer`.
pub fn line_slice_contains(outer: &[Poly1], inner: &[Poly1], d: u32) -> bool {
    let big = line_slice_matrix(outer, d);
    let small = line_slice_matrix(inner, d);
    linalg::span_contains(&big, &small)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly2;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn line_div(points: &[(i64, i64, i64, i64)]) -> LinePointDivisor {
        LinePointDivisor {
            line: PlaneCurve::new(Poly2::var_x()).unwrap(),
            points: points
                .iter()
                .map(|&(tn, td, cn, cd)| (Rational::ratio(tn, td), Rational::ratio(cn, cd)))
                .collect(),
        }
    }

    #[test]
    fn double_point_gives_m_squared() {
        let ideal = nlc_on_line(&line_div(&[(0, 1, 2, 1)]));
        assert_eq!(ideal.conditions, vec![(q(0, 1), 2)]);
        let basis = ideal.basis(4);
        assert_eq!(basis.len(), 3); // t^2, t^3, t^4
    }

    #[test]
    fn coefficient_one_imposes_nothing() {
        let ideal = nlc_on_line(&line_div(&[(0, 1, 1, 1)]));
        assert!(ideal.is_trivial());
        // the multiplier ideal does see coefficient one
        let m = mult_on_line(&line_div(&[(0, 1, 1, 1)]));
        assert_eq!(m.conditions, vec![(q(0, 1), 1)]);
    }

    #[test]
    fn fractional_coefficient_floors() {
        let ideal = nlc_on_line(&line_div(&[(0, 1, 5, 2)]));
        assert_eq!(ideal.conditions, vec![(q(0, 1), 2)]);
    }

    #[test]
    fn lc_verdict() {
        assert!(line_divisor_is_lc(&line_div(&[(0, 1, 1, 1), (1, 1, 1, 2)])));
        assert!(!line_divisor_is_lc(&line_div(&[(0, 1, 2, 1)])));
    }

    #[test]
    fn slice_comparison() {
        let a = nlc_on_line(&line_div(&[(0, 1, 2, 1)]));
        let b = nlc_on_line(&line_div(&[(0, 1, 5, 2)]));
        assert!(line_slices_equal(&a.basis(5), &b.basis(5), 5));
        let c = nlc_on_line(&line_div(&[(1, 1, 2, 1)]));
        assert!(!line_slices_equal(&a.basis(5), &c.basis(5), 5));
    }
}
