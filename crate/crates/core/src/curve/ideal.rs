//! Ideals presented by order conditions along prime divisors of a
//! resolution, and the linear algebra for their truncated slices.
//!
//! A membership query replays the blow-up charts on the polynomial: the
//! order along an exceptional is the `s`-adic valuation of the pullback in
//! the chart where that exceptional is `{s = 0}`. A truncated basis expands
//! each condition into linear constraints on the coefficients of a general
//! bounded-degree polynomial and returns the reduced-echelon basis of the
//! solution space, which is canonical and is what every equality and
//! containment test compares.

use super::line::LineIdeal;
use super::resolve::{pair_coefficients, ResolutionData};
use super::{CurveDivisor, CurveError, DivisorId, PlaneCurve};
use crate::divisor::{mult_exponent, nlc_exponent};
use crate::linalg;
use crate::poly::{Poly1, Poly2};
use crate::rational::Rational;
use num_traits::ToPrimitive;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExponentRule {
    NonLc,
    Multiplier,
}

/// Finitely many conditions `ord_D(h) >= m` over the divisors of a fixed
/// resolution; the stored orders are always at least one.
#[derive(Clone, Debug)]
pub struct ValuationIdeal {
    pub resolution: Arc<ResolutionData>,
    pub conditions: Vec<(DivisorId, u64)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MemberCertificate {
    pub divisor: DivisorId,
    pub required: u64,
    pub achieved: u64,
}

/// Builds the ideal of the scaled pair `(A^2, c * delta)` on a resolution of
/// the support (the blow-up tree depends only on the support, so one
/// resolution serves every scale).
pub fn ideal_for(
    res: &Arc<ResolutionData>,
    delta: &CurveDivisor,
    c: &Rational,
    rule: ExponentRule,
) -> Result<ValuationIdeal, CurveError> {
    let scaled = delta.scale(c)?;
    let coeffs = pair_coefficients(res, &scaled)?;
    let mut conditions = Vec::new();
    for (id, coeff) in coeffs.iter() {
        let order = match rule {
            ExponentRule::NonLc => nlc_exponent(coeff),
            ExponentRule::Multiplier => mult_exponent(coeff),
        };
        let order = order.to_u64().ok_or(CurveError::DegreeOverflow)?;
        if order >= 1 {
            conditions.push((*id, order));
        }
    }
    Ok(ValuationIdeal {
        resolution: Arc::clone(res),
        conditions,
    })
}

impl ValuationIdeal {
    pub fn is_trivial(&self) -> bool {
        self.conditions.is_empty()
    }

    pub fn total_order(&self) -> u64 {
        self.conditions.iter().map(|(_, m)| m).sum()
    }
}

/// Degree used for truncated comparisons when none is requested.
pub fn default_truncation_degree(ideal: &ValuationIdeal) -> u32 {
    let total: u64 = ideal.total_order().min(1 << 20);
    (2 * total as u32).max(10)
}

/// Order of vanishing of `h` along a divisor of the resolution.
///
/// For a strict transform this is the number of times the component divides
/// `h`; for an exceptional it is the `s`-adic valuation of the pullback of
/// `h`, recomputed here from the chart maps rather than from the order
/// tables, so the two routes check each other.
pub fn ord_of(h: &Poly2, id: DivisorId, res: &ResolutionData) -> Result<u64, CurveError> {
    if h.is_zero() {
        return Err(CurveError::ZeroPolynomial);
    }
    match id {
        DivisorId::Component(j) => {
            let g = &res.components[j];
            let mut count = 0u64;
            let mut cur = h.clone();
            while let Some(q) = cur.div_exact(g) {
                count += 1;
                cur = q;
            }
            Ok(count)
        }
        DivisorId::Exceptional(i) => {
            let chart = res.exceptional_chart(i);
            let (mx, my) = &res.charts[chart].maps;
            let mut cap: u32 = 8;
            loop {
                let pb = h.subst_trunc(mx, my, cap);
                if let Some(val) = pb.terms().map(|(&(e, _), _)| e).min() {
                    return Ok(val as u64);
                }
                cap = cap.checked_mul(2).ok_or(CurveError::DegreeOverflow)?;
                if cap > (1 << 24) {
                    return Err(CurveError::DegreeOverflow);
                }
            }
        }
    }
}

/// Membership with a per-condition certificate.
pub fn member(
    h: &Poly2,
    ideal: &ValuationIdeal,
) -> Result<(bool, Vec<MemberCertificate>), CurveError> {
    if h.is_zero() {
        return Err(CurveError::ZeroPolynomial);
    }
    let mut certs = Vec::new();
    let mut ok = true;
    for (id, required) in &ideal.conditions {
        let achieved = ord_of(h, *id, &ideal.resolution)?;
        if achieved < *required {
            ok = false;
        }
        certs.push(MemberCertificate {
            divisor: *id,
            required: *required,
            achieved,
        });
    }
    Ok((ok, certs))
}

fn glex_desc_monomials(d: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for deg in (0..=d).rev() {
        for i in (0..=deg).rev() {
            out.push((i, deg - i));
        }
    }
    out
}

/// Canonical basis of the degree-at-most-`d` slice of the ideal.
///
/// Component conditions are satisfied by factoring out the corresponding
/// power product `G`; exceptional conditions become linear constraints on
/// the cofactor via the truncated pullback of each monomial.
pub fn truncated_basis(ideal: &ValuationIdeal, d: u32) -> Vec<Poly2> {
    let res = &ideal.resolution;
    let mut g = Poly2::one();
    let mut exc_conditions: Vec<(usize, u64)> = Vec::new();
    for (id, m) in &ideal.conditions {
        match id {
            DivisorId::Component(j) => {
                g = g.mul(&res.components[*j].pow(*m as u32));
            }
            DivisorId::Exceptional(i) => exc_conditions.push((*i, *m)),
        }
    }
    let g_deg = g.total_degree().unwrap_or(0);
    if g_deg > d {
        return Vec::new();
    }
    let q_deg = d - g_deg;
    let cols = glex_desc_monomials(q_deg);
    let ncols = cols.len();

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (node, m) in &exc_conditions {
        let cap = *m as u32;
        let chart = res.exceptional_chart(*node);
        let (mx, my) = &res.charts[chart].maps;
        let pb_g = g.subst_trunc(mx, my, cap);
        let mxt = mx.truncate_x(cap);
        let myt = my.truncate_x(cap);
        let max_i = cols.iter().map(|&(i, _)| i).max().unwrap_or(0) as usize;
        let max_j = cols.iter().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut xs = vec![Poly2::one()];
        for _ in 0..max_i {
            xs.push(xs.last().unwrap().mul_trunc_x(&mxt, cap));
        }
        let mut ys = vec![Poly2::one()];
        for _ in 0..max_j {
            ys.push(ys.last().unwrap().mul_trunc_x(&myt, cap));
        }
        // rows indexed by the (s, t) monomials below the required order
        let mut row_index: std::collections::BTreeMap<(u32, u32), usize> = Default::default();
        let mut local_rows: Vec<Vec<Rational>> = Vec::new();
        for (col, &(i, j)) in cols.iter().enumerate() {
            let mono = xs[i as usize].mul_trunc_x(&ys[j as usize], cap);
            let pb = pb_g.mul_trunc_x(&mono, cap);
            for (&key, coeff) in pb.terms() {
                let idx = *row_index.entry(key).or_insert_with(|| {
                    local_rows.push(vec![Rational::zero(); ncols]);
                    local_rows.len() - 1
                });
                local_rows[idx][col] = coeff.clone();
            }
        }
        rows.extend(local_rows);
    }
    let basis = linalg::nullspace(&rows, ncols);
    basis
        .into_iter()
        .map(|v| {
            let mut q = Poly2::zero();
            for (col, &(i, j)) in cols.iter().enumerate() {
                q.add_term(i, j, v[col].clone());
            }
            g.mul(&q)
        })
        .collect()
}

/// Coefficient matrix (reduced echelon form) of a set of polynomials over
/// the graded-lex descending monomials of degree at most `d`.
pub fn slice_matrix(polys: &[Poly2], d: u32) -> Vec<Vec<Rational>> {
    let cols = glex_desc_monomials(d);
    let index: std::collections::BTreeMap<(u32, u32), usize> = cols
        .iter()
        .enumerate()
        .map(|(idx, &k)| (k, idx))
        .collect();
    let rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); cols.len()];
            for (&k, c) in p.terms() {
                let idx = *index.get(&k).expect("degree bound exceeded");
                row[idx] = c.clone();
            }
            row
        })
        .collect();
    linalg::rref(rows)
}

/// Equality of truncated slices at degree `d`.
pub fn ideal_equal(a: &ValuationIdeal, b: &ValuationIdeal, d: u32) -> bool {
    slice_matrix(&truncated_basis(a, d), d) == slice_matrix(&truncated_basis(b, d), d)
}

/// `true` iff the degree-`d` slice of `inner` is contained in `outer`'s.
pub fn slice_contains(outer: &ValuationIdeal, inner: &ValuationIdeal, d: u32) -> bool {
    let big = slice_matrix(&truncated_basis(outer, d), d);
    let small = slice_matrix(&truncated_basis(inner, d), d);
    linalg::span_contains(&big, &small)
}

/// Image of the degree-`d` slice under restriction to a rational line,
/// as a canonical basis of univariate polynomials.
///
/// The slice is lifted internally to a slightly larger degree before
/// substituting the parametrization, so low-degree restrictions that only
/// have higher-degree preimages are not missed.
pub fn restrict_ideal(ideal: &ValuationIdeal, s: &PlaneCurve, d: u32) -> Result<Vec<Poly1>, CurveError> {
    let (px, py) = s.line_param()?;
    let lift = d + (ideal.total_order().min(1 << 16) as u32);
    let basis = truncated_basis(ideal, lift);
    let restricted: Vec<Poly1> = basis.iter().map(|p| p.subst_line(&px, &py)).collect();
    // canonical form over descending powers, then cut to degree <= d
    let ncols = lift as usize + 1;
    let rows: Vec<Vec<Rational>> = restricted
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); ncols];
            for (deg, c) in p.coeffs().iter().enumerate() {
                row[lift as usize - deg] = c.clone();
            }
            row
        })
        .collect();
    let reduced = linalg::rref(rows);
    let mut kept = Vec::new();
    for row in reduced {
        let pivot = row.iter().position(|c| !c.is_zero()).unwrap_or(ncols);
        if pivot == ncols {
            continue;
        }
        let pivot_degree = lift as usize - pivot;
        if pivot_degree <= d as usize {
            let mut coeffs = vec![Rational::zero(); pivot_degree + 1];
            for (idx, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    coeffs[lift as usize - idx] = c.clone();
                }
            }
            kept.push(Poly1::new(coeffs));
        }
    }
    Ok(kept)
}

/// Jumping numbers of `c * delta` for `c` in `(0, c_max]`: candidates are
/// `(m + k + 1) / O` over the divisors of the resolution, confirmed by
/// comparing truncated multiplier-ideal slices on either side.
pub fn jumping_numbers_curve(
    delta: &CurveDivisor,
    c_max: &Rational,
) -> Result<Vec<Rational>, CurveError> {
    if !c_max.is_positive() {
        return Err(CurveError::NonPositiveCoefficient);
    }
    let res = Arc::new(super::resolve::resolve(delta)?);
    let mut divisor_data: Vec<(Rational, u64)> = Vec::new();
    for (j, (_, dj)) in delta.components().iter().enumerate() {
        let _ = j;
        divisor_data.push((dj.clone(), 0));
    }
    for node in &res.nodes {
        let mut o = Rational::zero();
        for (j, (_, dj)) in delta.components().iter().enumerate() {
            o = &o + &(dj * &Rational::from_int(node.ord[j] as i64));
        }
        divisor_data.push((o, node.k));
    }
    let mut candidates: std::collections::BTreeSet<Rational> = Default::default();
    for (o, k) in &divisor_data {
        if !o.is_positive() {
            continue;
        }
        let mut m = 0i64;
        loop {
            let cand = &Rational::from_int(m + *k as i64 + 1) / o;
            if &cand > c_max {
                break;
            }
            candidates.insert(cand);
            m += 1;
        }
    }
    // comparison degree: generous enough to separate every ideal in range
    let top = ideal_for(&res, delta, c_max, ExponentRule::Multiplier)?;
    let d = default_truncation_degree(&top);
    let slice_at = |c: &Rational| -> Result<Vec<Vec<Rational>>, CurveError> {
        let ideal = ideal_for(&res, delta, c, ExponentRule::Multiplier)?;
        Ok(slice_matrix(&truncated_basis(&ideal, d), d))
    };
    let mut out = Vec::new();
    let mut prev = Rational::zero();
    for cand in candidates {
        let mid = &(&prev + &cand) / &Rational::from_int(2);
        if slice_at(&mid)? != slice_at(&cand)? {
            out.push(cand.clone());
        }
        prev = cand;
    }
    Ok(out)
}

/// The restriction comparison used by the structural checks: image of the
/// valuation ideal on the line versus an intrinsically computed line ideal.
pub fn restriction_sides_equal(
    ambient: &ValuationIdeal,
    s: &PlaneCurve,
    line_ideal: &LineIdeal,
    d: u32,
) -> Result<bool, CurveError> {
    let image = restrict_ideal(ambient, s, d)?;
    let intrinsic = line_ideal.basis(d);
    Ok(super::line::line_slices_equal(&image, &intrinsic, d))
}

#[cfg(test)]
mod tests {
    use super::super::resolve::resolve;
    use super::*;
    use crate::curve::{nlc_ideal, mult_ideal};

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn x() -> Poly2 {
        Poly2::var_x()
    }

    fn y() -> Poly2 {
        Poly2::var_y()
    }

    fn cusp() -> Poly2 {
        y().pow(2).sub(&x().pow(3))
    }

    fn divisor(parts: &[(Poly2, Rational)]) -> CurveDivisor {
        CurveDivisor::new(
            parts
                .iter()
                .map(|(p, c)| (PlaneCurve::new(p.clone()).unwrap(), c.clone()))
                .collect(),
        )
        .unwrap()
    }

    fn mono(i: u32, j: u32) -> Poly2 {
        Poly2::monomial(i, j, Rational::one())
    }

    /// Reference slice: all polynomials of degree <= d vanishing to order
    /// >= 2 at the origin.
    fn msquared_slice(d: u32) -> Vec<Poly2> {
        let mut out = Vec::new();
        for deg in 2..=d {
            for i in 0..=deg {
                out.push(mono(i, deg - i));
            }
        }
        out
    }

    #[test]
    fn three_lines_nlc_is_m_squared() {
        let d = divisor(&[
            (x(), q(1, 1)),
            (y(), q(1, 1)),
            (x().sub(&y()), q(1, 1)),
        ]);
        let ideal = nlc_ideal(&d).unwrap();
        assert_eq!(ideal.conditions, vec![(DivisorId::Exceptional(0), 2)]);
        let basis = truncated_basis(&ideal, 6);
        assert_eq!(
            slice_matrix(&basis, 6),
            slice_matrix(&msquared_slice(6), 6)
        );
    }

    #[test]
    fn three_lines_scaled_down_both_maximal() {
        let d = divisor(&[
            (x(), q(9, 10)),
            (y(), q(9, 10)),
            (x().sub(&y()), q(9, 10)),
        ]);
        let nlc = nlc_ideal(&d).unwrap();
        let mult = mult_ideal(&d).unwrap();
        assert_eq!(nlc.conditions, vec![(DivisorId::Exceptional(0), 1)]);
        assert_eq!(mult.conditions, vec![(DivisorId::Exceptional(0), 1)]);
        assert!(ideal_equal(&nlc, &mult, 6));
    }

    #[test]
    fn cusp_plus_line_conditions_and_basis() {
        let d = divisor(&[(x(), q(1, 1)), (cusp(), q(1, 1))]);
        let ideal = nlc_ideal(&d).unwrap();
        assert_eq!(
            ideal.conditions,
            vec![
                (DivisorId::Exceptional(0), 2),
                (DivisorId::Exceptional(1), 2),
                (DivisorId::Exceptional(2), 4),
            ]
        );
        let basis = truncated_basis(&ideal, 2);
        assert_eq!(
            slice_matrix(&basis, 2),
            slice_matrix(&[mono(2, 0), mono(1, 1), mono(0, 2)], 2)
        );
    }

    #[test]
    fn ord_of_replay_matches_tables() {
        let d = divisor(&[(x(), q(1, 1)), (cusp(), q(1, 1))]);
        let res = Arc::new(resolve(&d).unwrap());
        // line is component 0, cusp is component 1 in sorted order
        for (j, expected) in [(0usize, [1u64, 1, 2]), (1usize, [2, 3, 6])] {
            let poly = res.components[j].clone();
            for i in 0..3 {
                assert_eq!(
                    ord_of(&poly, DivisorId::Exceptional(i), &res).unwrap(),
                    expected[i],
                    "component {} at E{}",
                    j,
                    i + 1
                );
                assert_eq!(res.nodes[i].ord[j], expected[i]);
            }
        }
        let xy = x().mul(&y());
        let ords: Vec<u64> = (0..3)
            .map(|i| ord_of(&xy, DivisorId::Exceptional(i), &res).unwrap())
            .collect();
        assert_eq!(ords, vec![2, 3, 5]);
        assert_eq!(ord_of(&Poly2::one(), DivisorId::Exceptional(0), &res).unwrap(), 0);
    }

    #[test]
    fn membership_with_certificates() {
        let d = divisor(&[(x(), q(1, 1)), (cusp(), q(1, 1))]);
        let ideal = nlc_ideal(&d).unwrap();
        let (ok, certs) = member(&x().mul(&y()), &ideal).unwrap();
        assert!(ok);
        assert_eq!(
            certs.iter().map(|c| c.achieved).collect::<Vec<_>>(),
            vec![2, 3, 5]
        );
        let (ok, _) = member(&x(), &ideal).unwrap();
        assert!(!ok);
        let trivial = ValuationIdeal {
            resolution: ideal.resolution.clone(),
            conditions: Vec::new(),
        };
        assert!(member(&Poly2::one(), &trivial).unwrap().0);
        assert!(member(&Poly2::zero(), &ideal).is_err());
    }

    #[test]
    fn smooth_divisor_ideals() {
        let d = divisor(&[(x(), q(1, 1))]);
        assert!(nlc_ideal(&d).unwrap().is_trivial());
        let m = mult_ideal(&d).unwrap();
        assert_eq!(m.conditions, vec![(DivisorId::Component(0), 1)]);
        let d11 = divisor(&[(x(), q(11, 10))]);
        let n = nlc_ideal(&d11).unwrap();
        assert_eq!(n.conditions, vec![(DivisorId::Component(0), 1)]);
        assert!(ideal_equal(&n, &m, 6));
    }

    #[test]
    fn empty_conditions_basis_is_everything() {
        let d = divisor(&[(x(), q(1, 1))]);
        let ideal = nlc_ideal(&d).unwrap();
        let basis = truncated_basis(&ideal, 1);
        assert_eq!(basis.len(), 3); // 1, x, y
    }

    #[test]
    fn three_lines_dimension_count() {
        // degree <= 3 slice of the origin's m^2: 10 monomials minus 3 conditions
        let d = divisor(&[
            (x(), q(1, 1)),
            (y(), q(1, 1)),
            (x().sub(&y()), q(1, 1)),
        ]);
        let ideal = nlc_ideal(&d).unwrap();
        assert_eq!(truncated_basis(&ideal, 3).len(), 7);
    }

    #[test]
    fn restrict_nlc_of_cusp_plus_line() {
        let d = divisor(&[(x(), q(1, 1)), (cusp(), q(1, 1))]);
        let ideal = nlc_ideal(&d).unwrap();
        let s = PlaneCurve::new(x()).unwrap();
        let image = restrict_ideal(&ideal, &s, 2).unwrap();
        // spanned by t^2 alone
        assert_eq!(image.len(), 1);
        assert_eq!(image[0], Poly1::monomial(2, Rational::one()));
    }

    #[test]
    fn cusp_jumping_numbers() {
        let d = divisor(&[(cusp(), q(1, 1))]);
        let jumps = jumping_numbers_curve(&d, &q(1, 1)).unwrap();
        assert_eq!(jumps.first().unwrap(), &q(5, 6));
    }

    #[test]
    fn ideal_equality_distinguishes() {
        let three = divisor(&[
            (x(), q(1, 1)),
            (y(), q(1, 1)),
            (x().sub(&y()), q(1, 1)),
        ]);
        let nlc = nlc_ideal(&three).unwrap(); // m^2
        let scaled = divisor(&[
            (x(), q(9, 10)),
            (y(), q(9, 10)),
            (x().sub(&y()), q(9, 10)),
        ]);
        let m = nlc_ideal(&scaled).unwrap(); // m
        assert!(!ideal_equal(&nlc, &m, 2));
        assert!(slice_contains(&m, &nlc, 6));
        assert!(!slice_contains(&nlc, &m, 6));
    }
}
