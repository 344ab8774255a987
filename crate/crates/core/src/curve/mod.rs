//! Non-lc ideals and multiplier ideals of effective Q-divisors on the
//! affine plane, through embedded resolution by iterated point blow-ups.
//!
//! [`resolve`] builds a blow-up tree whose final total transform is simple
//! normal crossing, recording discrepancies, multiplicity tables and
//! proximity relations. [`nlc_ideal`] and [`mult_ideal`] read the pair
//! coefficients off the tree and present the pushforward as finitely many
//! valuation conditions; membership, truncated bases, equality of truncated
//! slices, restriction to a line, the non-lc locus, lc centers and lc/klt
//! verdicts are all downstream of that.

pub(crate) mod ideal;
mod line;
mod points;
mod resolve;

pub use ideal::{
    default_truncation_degree, ideal_equal, ideal_for, jumping_numbers_curve, member,
    ord_of, restrict_ideal, restriction_sides_equal, slice_contains, slice_matrix,
    truncated_basis, ExponentRule, MemberCertificate, ValuationIdeal,
};
pub use line::{
    line_divisor_is_lc, line_slice_contains, line_slice_matrix, line_slices_equal,
    mult_on_line, nlc_on_line, LineIdeal, LinePointDivisor,
};
pub use points::{singular_points, tangency_points, triple_points, Point};
pub use resolve::{
    pair_coefficients, resolve, resolve_with, BlowupNode, ProcessOrder, ResolutionData,
    ResolveOptions,
};

use crate::poly::Poly2;
use crate::rational::Rational;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("a required blow-up center has irrational coordinates")]
    NonRationalCenter,
    #[error("blow-up tree exceeded the configured size cap")]
    DegreeOverflow,
    #[error("the zero polynomial has no order along a divisor")]
    ZeroPolynomial,
    #[error("curve polynomial must be squarefree")]
    NotSquarefree,
    #[error("curve polynomial must be nonconstant")]
    NotACurve,
    #[error("divisor components must be pairwise coprime")]
    CommonFactor,
    #[error("divisor coefficients must be positive")]
    NonPositiveCoefficient,
    #[error("the line occurs as a component of the divisor")]
    CommonComponent,
    #[error("restriction meets the line in an irrational point")]
    NonRationalPoint,
    #[error("expected a line (degree-one curve)")]
    NotALine,
    #[error("coefficient too large for exact factorization")]
    CoefficientOverflow,
    #[error("resolution does not belong to this divisor")]
    MismatchedResolution,
}

/// A squarefree, nonconstant plane curve, normalized so the graded-lex
/// leading coefficient is 1. Irreducibility is not required: every formula
/// downstream is additive over the (unknown) irreducible factors, so exact
/// factorization over Q is never needed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneCurve {
    poly: Poly2,
}

impl PlaneCurve {
    pub fn new(poly: Poly2) -> Result<Self, CurveError> {
        if poly.is_zero() || poly.is_constant() {
            return Err(CurveError::NotACurve);
        }
        if !poly.is_squarefree() {
            return Err(CurveError::NotSquarefree);
        }
        Ok(PlaneCurve {
            poly: poly.normalize_glex(),
        })
    }

    pub fn poly(&self) -> &Poly2 {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.poly.total_degree().expect("nonzero")
    }

    pub fn is_line(&self) -> bool {
        self.degree() == 1
    }

    /// Rational parametrization of a line: `t -> (px(t), py(t))`.
    ///
    /// For `x + b y + c = 0` the parameter is `y`; for `y + c = 0` it is `x`.
    pub fn line_param(&self) -> Result<(crate::poly::Poly1, crate::poly::Poly1), CurveError> {
        use crate::poly::Poly1;
        if !self.is_line() {
            return Err(CurveError::NotALine);
        }
        let a = self.poly.coeff(1, 0);
        let b = self.poly.coeff(0, 1);
        let c = self.poly.coeff(0, 0);
        if !a.is_zero() {
            // normalized: a = 1; x = -c - b t, y = t
            debug_assert!(a.is_one());
            let px = Poly1::new(vec![-&c, -&b]);
            let py = Poly1::var();
            Ok((px, py))
        } else {
            debug_assert!(b.is_one());
            let px = Poly1::var();
            let py = Poly1::constant(-&c);
            Ok((px, py))
        }
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// An effective Q-divisor on the plane: positively weighted, pairwise
/// coprime squarefree curves. The zero divisor (no components) is allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveDivisor {
    components: Vec<(PlaneCurve, Rational)>,
}

impl CurveDivisor {
    pub fn new(components: Vec<(PlaneCurve, Rational)>) -> Result<Self, CurveError> {
        for (_, coeff) in &components {
            if !coeff.is_positive() {
                return Err(CurveError::NonPositiveCoefficient);
            }
        }
        for i in 0..components.len() {
            for j in (i + 1)..components.len() {
                let g = components[i].0.poly().gcd(components[j].0.poly());
                if !g.is_constant() {
                    return Err(CurveError::CommonFactor);
                }
            }
        }
        let mut components = components;
        components.sort_by(|(a, _), (b, _)| {
            let key = |p: &PlaneCurve| {
                (
                    p.degree(),
                    p.poly()
                        .terms()
                        .map(|(k, c)| (*k, c.clone()))
                        .collect::<Vec<_>>(),
                )
            };
            key(a).cmp(&key(b))
        });
        Ok(CurveDivisor { components })
    }

    pub fn zero() -> Self {
        CurveDivisor {
            components: Vec::new(),
        }
    }

    pub fn single(curve: PlaneCurve, coeff: Rational) -> Result<Self, CurveError> {
        CurveDivisor::new(vec![(curve, coeff)])
    }

    pub fn components(&self) -> &[(PlaneCurve, Rational)] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn coefficient(&self, idx: usize) -> &Rational {
        &self.components[idx].1
    }

    pub fn scale(&self, c: &Rational) -> Result<Self, CurveError> {
        CurveDivisor::new(
            self.components
                .iter()
                .map(|(curve, d)| (curve.clone(), c * d))
                .collect(),
        )
    }

    /// Sum of two divisors with disjoint components.
    pub fn add_disjoint(&self, other: &CurveDivisor) -> Result<Self, CurveError> {
        let mut comps = self.components.clone();
        comps.extend(other.components.iter().cloned());
        CurveDivisor::new(comps)
    }

    /// Multiplicity at a point: sum of coefficients times local
    /// multiplicities of the components.
    pub fn multiplicity_at(&self, p: &Point) -> Rational {
        let mut acc = Rational::zero();
        for (curve, d) in &self.components {
            let shifted = curve.poly().shift(&p.0, &p.1);
            let m = shifted.min_total_degree().unwrap_or(0);
            acc = &acc + &(d * &Rational::from_int(m as i64));
        }
        acc
    }
}

impl fmt::Display for CurveDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(curve, c)| format!("{}*({})", c, curve))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A prime divisor on the resolved surface: a strict transform of an input
/// component, or an exceptional curve of the blow-up tree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum DivisorId {
    Component(usize),
    Exceptional(usize),
}

impl fmt::Display for DivisorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorId::Component(j) => write!(f, "C{}", j + 1),
            DivisorId::Exceptional(i) => write!(f, "E{}", i + 1),
        }
    }
}

/// Closure of the image of a log canonical place.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Center {
    Curve(usize),
    Point(Point),
}

/// The non-lc locus: components with coefficient above one, plus isolated
/// image points of exceptional divisors with pair coefficient above one.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Locus {
    pub components: Vec<usize>,
    pub points: Vec<Point>,
}

impl Locus {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty() && self.points.is_empty()
    }
}

/// `true` iff every pair coefficient on the resolution is at most one.
pub fn is_lc(delta: &CurveDivisor) -> Result<bool, CurveError> {
    let res = resolve(delta)?;
    let coeffs = pair_coefficients(&res, delta)?;
    let verdict = coeffs
        .iter()
        .all(|(_, c)| c.cmp_int(1) != std::cmp::Ordering::Greater);
    Ok(verdict)
}

/// `true` iff every pair coefficient on the resolution is strictly below one.
pub fn is_klt(delta: &CurveDivisor) -> Result<bool, CurveError> {
    let res = resolve(delta)?;
    let coeffs = pair_coefficients(&res, delta)?;
    let verdict = coeffs
        .iter()
        .all(|(_, c)| c.cmp_int(1) == std::cmp::Ordering::Less);
    Ok(verdict)
}

/// Union of the images of prime divisors with pair coefficient above one.
pub fn nlc_locus(delta: &CurveDivisor) -> Result<Locus, CurveError> {
    let res = resolve(delta)?;
    nlc_locus_on(&res, delta)
}

pub fn nlc_locus_on(res: &ResolutionData, delta: &CurveDivisor) -> Result<Locus, CurveError> {
    let coeffs = pair_coefficients(res, delta)?;
    let mut locus = Locus::default();
    for (id, c) in coeffs.iter() {
        if c.cmp_int(1) != std::cmp::Ordering::Greater {
            continue;
        }
        match id {
            DivisorId::Component(j) => locus.components.push(*j),
            DivisorId::Exceptional(i) => {
                let image = res.nodes[*i].image.clone();
                locus.points.push(image);
            }
        }
    }
    // points already on a listed component curve are absorbed by it
    locus.points.retain(|p| {
        !locus
            .components
            .iter()
            .any(|&j| delta.components()[j].0.poly().eval(&p.0, &p.1).is_zero())
    });
    locus.points.sort();
    locus.points.dedup();
    Ok(locus)
}

/// Lc centers in the coefficient-one sense: images of prime divisors on the
/// resolution with pair coefficient exactly one, excluding those whose image
/// lies inside the non-lc locus.
pub fn lc_centers(delta: &CurveDivisor) -> Result<Vec<Center>, CurveError> {
    let res = resolve(delta)?;
    let coeffs = pair_coefficients(&res, delta)?;
    let locus = nlc_locus_on(&res, delta)?;
    let point_in_locus = |p: &Point| -> bool {
        locus
            .components
            .iter()
            .any(|&j| delta.components()[j].0.poly().eval(&p.0, &p.1).is_zero())
            || locus.points.contains(p)
    };
    let mut centers = Vec::new();
    for (id, c) in coeffs.iter() {
        if !c.is_one() {
            continue;
        }
        match id {
            // a curve never fits inside finitely many points or a coprime
            // curve, so a coefficient-one component is always a center
            DivisorId::Component(j) => centers.push(Center::Curve(*j)),
            DivisorId::Exceptional(i) => {
                let image = res.nodes[*i].image.clone();
                if !point_in_locus(&image) {
                    if !centers.contains(&Center::Point(image.clone())) {
                        centers.push(Center::Point(image));
                    }
                }
            }
        }
    }
    Ok(centers)
}

/// Non-lc ideal of the pair `(A^2, delta)` as valuation conditions.
pub fn nlc_ideal(delta: &CurveDivisor) -> Result<ValuationIdeal, CurveError> {
    let res = std::sync::Arc::new(resolve(delta)?);
    ideal_for(&res, delta, &Rational::one(), ideal::ExponentRule::NonLc)
}

/// Multiplier ideal of the pair `(A^2, delta)` as valuation conditions.
pub fn mult_ideal(delta: &CurveDivisor) -> Result<ValuationIdeal, CurveError> {
    let res = std::sync::Arc::new(resolve(delta)?);
    ideal_for(&res, delta, &Rational::one(), ideal::ExponentRule::Multiplier)
}

/// Restriction of a divisor to a rational line: for each component, the
/// roots of its restriction weighted by root multiplicity and coefficient.
/// Every restricted root must be rational.
pub fn restrict_divisor(
    b: &CurveDivisor,
    s: &PlaneCurve,
) -> Result<LinePointDivisor, CurveError> {
    let (px, py) = s.line_param()?;
    let mut acc: std::collections::BTreeMap<Rational, Rational> = std::collections::BTreeMap::new();
    for (curve, d) in b.components() {
        let restricted = curve.poly().subst_line(&px, &py);
        if restricted.is_zero() {
            return Err(CurveError::CommonComponent);
        }
        let (roots, rest) = restricted
            .rational_roots()
            .map_err(|_| CurveError::CoefficientOverflow)?;
        if !rest.is_constant() {
            return Err(CurveError::NonRationalPoint);
        }
        for (t, mult) in roots {
            let add = d * &Rational::from_int(mult as i64);
            let entry = acc.entry(t).or_insert_with(Rational::zero);
            *entry = &*entry + &add;
        }
    }
    Ok(LinePointDivisor {
        line: s.clone(),
        points: acc.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly2;

    fn x() -> Poly2 {
        Poly2::var_x()
    }

    fn y() -> Poly2 {
        Poly2::var_y()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn curve_validation() {
        assert!(PlaneCurve::new(Poly2::zero()).is_err());
        assert!(PlaneCurve::new(Poly2::one()).is_err());
        assert_eq!(
            PlaneCurve::new(x().pow(2)).unwrap_err(),
            CurveError::NotSquarefree
        );
        let cusp = PlaneCurve::new(y().pow(2).sub(&x().pow(3))).unwrap();
        assert_eq!(cusp.poly().to_string(), "x^3 - y^2");
    }

    #[test]
    fn divisor_validation() {
        let cx = PlaneCurve::new(x()).unwrap();
        let cy = PlaneCurve::new(y()).unwrap();
        assert!(CurveDivisor::new(vec![(cx.clone(), q(1, 1)), (cy, q(1, 2))]).is_ok());
        assert_eq!(
            CurveDivisor::new(vec![(cx.clone(), q(-1, 2))]).unwrap_err(),
            CurveError::NonPositiveCoefficient
        );
        assert_eq!(
            CurveDivisor::new(vec![(cx.clone(), q(1, 1)), (cx, q(1, 2))]).unwrap_err(),
            CurveError::CommonFactor
        );
    }

    #[test]
    fn line_params() {
        let vertical = PlaneCurve::new(x()).unwrap();
        let (px, py) = vertical.line_param().unwrap();
        assert!(px.is_zero());
        assert_eq!(py, crate::poly::Poly1::var());
        let cusp = PlaneCurve::new(y().pow(2).sub(&x().pow(3))).unwrap();
        assert_eq!(cusp.line_param().unwrap_err(), CurveError::NotALine);
    }

    #[test]
    fn restrict_divisor_examples() {
        let s = PlaneCurve::new(x()).unwrap();
        // cusp restricted to x = 0: double point at the origin
        let b = CurveDivisor::single(
            PlaneCurve::new(y().pow(2).sub(&x().pow(3))).unwrap(),
            q(1, 1),
        )
        .unwrap();
        let bs = restrict_divisor(&b, &s).unwrap();
        assert_eq!(bs.points, vec![(q(0, 1), q(2, 1))]);

        let b = CurveDivisor::single(PlaneCurve::new(y()).unwrap(), q(1, 1)).unwrap();
        let bs = restrict_divisor(&b, &s).unwrap();
        assert_eq!(bs.points, vec![(q(0, 1), q(1, 1))]);

        // (1/2)(y - x^2) restricted to y = 0: double root at x = 0, weight 1
        let sy = PlaneCurve::new(y()).unwrap();
        let b = CurveDivisor::single(
            PlaneCurve::new(y().sub(&x().pow(2))).unwrap(),
            q(1, 2),
        )
        .unwrap();
        let bs = restrict_divisor(&b, &sy).unwrap();
        assert_eq!(bs.points, vec![(q(0, 1), q(1, 1))]);
    }

    #[test]
    fn restrict_divisor_errors() {
        let s = PlaneCurve::new(x()).unwrap();
        let b = CurveDivisor::single(PlaneCurve::new(x()).unwrap(), q(1, 1)).unwrap();
        assert_eq!(restrict_divisor(&b, &s).unwrap_err(), CurveError::CommonComponent);
        // y^2 - x restricted to... x = 2: y^2 - 2 has no rational roots
        let b = CurveDivisor::single(
            PlaneCurve::new(y().pow(2).sub(&x())).unwrap(),
            q(1, 1),
        )
        .unwrap();
        let s2 = PlaneCurve::new(x().sub(&Poly2::constant(q(2, 1)))).unwrap();
        assert_eq!(restrict_divisor(&b, &s2).unwrap_err(), CurveError::NonRationalPoint);
    }
}
