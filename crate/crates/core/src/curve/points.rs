//! Exact location of the rational solutions of small plane polynomial
//! systems, with certification that no irrational solution was missed.
//!
//! The resolution engine only ever needs the *bad* points of an arrangement:
//! singular points of a component, tangential contacts of two curves, and
//! points on three curves. Each of those is the zero set of a system of two
//! or three polynomials. A blow-up center must be rational, so these systems
//! have to be solved completely: rational solutions are returned, and any
//! certified-present irrational solution aborts with `NonRationalCenter`.
//!
//! Strategy: shear `x -> x + lambda y` until every polynomial has a constant
//! leading y-coefficient. Then resultants specialize cleanly, every root of
//! `Res_y` is the x-coordinate of a genuine common point, and rationality can
//! be read off the rational-root factorizations. For a triple system the
//! irrational roots of `Res_y(f, g)` are harmless unless they also support a
//! zero of `h`; disjointness of the resultant supports certifies that, and a
//! genuinely irrational triple point persists under every shear, so trying a
//! few shears is a sound and complete test.

use super::CurveError;
use crate::poly::{resultant_y, Poly1, Poly2};
use crate::rational::Rational;
use std::collections::BTreeSet;

pub type Point = (Rational, Rational);

const SHEARS: [i64; 12] = [0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11];

fn good_shears(polys: &[&Poly2]) -> Vec<Rational> {
    SHEARS
        .iter()
        .map(|&l| Rational::from_int(l))
        .filter(|lam| polys.iter().all(|p| !p.top_form_at(lam).is_zero()))
        .collect()
}

fn unshear(a: &Rational, b: &Rational, lam: &Rational) -> Point {
    (a + &(lam * b), b.clone())
}

fn roots_of(p: &Poly1) -> Result<(Vec<(Rational, usize)>, Poly1), CurveError> {
    p.rational_roots()
        .map_err(|_| CurveError::CoefficientOverflow)
}

/// All common zeros of two coprime polynomials; every one must be rational.
pub fn certified_pair(f: &Poly2, g: &Poly2) -> Result<Vec<Point>, CurveError> {
    assert!(!f.is_zero() && !g.is_zero(), "zero polynomial in system");
    if f.is_constant() || g.is_constant() {
        return Ok(Vec::new());
    }
    let lam = good_shears(&[f, g])
        .into_iter()
        .next()
        .ok_or(CurveError::NonRationalCenter)?;
    let fs = f.shear(&lam);
    let gs = g.shear(&lam);
    let r = resultant_y(&fs, &gs);
    debug_assert!(!r.is_zero(), "resultant of coprime polynomials vanished");
    let (xs, x_rest) = roots_of(&r)?;
    if !x_rest.is_constant() {
        return Err(CurveError::NonRationalCenter);
    }
    let mut out = Vec::new();
    for (a, _) in xs {
        let w = fs.eval_x(&a).gcd(&gs.eval_x(&a));
        if w.is_constant() {
            continue;
        }
        let (ys, y_rest) = roots_of(&w)?;
        if !y_rest.is_constant() {
            return Err(CurveError::NonRationalCenter);
        }
        for (b, _) in ys {
            out.push(unshear(&a, &b, &lam));
        }
    }
    Ok(out)
}

/// All common zeros of `{f, g, h}` with `gcd(f, g) = 1`; rational ones are
/// returned, and a certified irrational one is an error.
pub fn certified_triple(f: &Poly2, g: &Poly2, h: &Poly2) -> Result<Vec<Point>, CurveError> {
    assert!(!f.is_zero() && !g.is_zero(), "zero polynomial in system");
    if h.is_zero() {
        return certified_pair(f, g);
    }
    if f.is_constant() || g.is_constant() || h.is_constant() {
        return Ok(Vec::new());
    }
    // split off common factors so all three resultants below are honest
    let d = f.gcd(h);
    if !d.is_constant() {
        let f1 = f.div_exact(&d).expect("gcd divides");
        let h1 = h.div_exact(&d).expect("gcd divides");
        let mut pts: BTreeSet<Point> = certified_pair(&d, g)?.into_iter().collect();
        pts.extend(certified_triple(&f1, g, &h1)?);
        return Ok(pts.into_iter().collect());
    }
    let d = g.gcd(h);
    if !d.is_constant() {
        let g1 = g.div_exact(&d).expect("gcd divides");
        let h1 = h.div_exact(&d).expect("gcd divides");
        let mut pts: BTreeSet<Point> = certified_pair(f, &d)?.into_iter().collect();
        pts.extend(certified_triple(f, &g1, &h1)?);
        return Ok(pts.into_iter().collect());
    }
    for lam in good_shears(&[f, g, h]) {
        let fs = f.shear(&lam);
        let gs = g.shear(&lam);
        let hs = h.shear(&lam);
        let r = resultant_y(&fs, &gs);
        debug_assert!(!r.is_zero());
        let (xs, x_rest) = roots_of(&r)?;
        if !x_rest.is_constant() {
            // irrational intersections of f and g exist; they are triple
            // points only if h also vanishes there, i.e. only if the
            // supports of the two resultants overlap
            let r2 = resultant_y(&fs, &hs);
            if !x_rest.gcd(&r2).is_constant() {
                // ambiguous under this shear; a different shear separates
                // distinct points, while a true triple point never goes away
                continue;
            }
        }
        let mut out = Vec::new();
        for (a, _) in xs {
            let w = fs.eval_x(&a).gcd(&gs.eval_x(&a));
            if w.is_constant() {
                continue;
            }
            let (ys, y_rest) = roots_of(&w)?;
            if !y_rest.is_constant() {
                // irrational y over a rational x: fatal only if h vanishes
                if !y_rest.gcd(&hs.eval_x(&a)).is_constant() {
                    return Err(CurveError::NonRationalCenter);
                }
            }
            for (b, _) in ys {
                if hs.eval(&a, &b).is_zero() {
                    out.push(unshear(&a, &b, &lam));
                }
            }
        }
        return Ok(out);
    }
    Err(CurveError::NonRationalCenter)
}

/// Singular points of a squarefree curve; all of them are blow-up centers,
/// so every one must be rational.
pub fn singular_points(g: &Poly2) -> Result<Vec<Point>, CurveError> {
    let gx = g.partial_x();
    let gy = g.partial_y();
    if gx.is_zero() && gy.is_zero() {
        return Ok(Vec::new());
    }
    if gx.is_zero() || gy.is_zero() {
        // a squarefree polynomial in one variable only has no singular point
        return Ok(Vec::new());
    }
    let mut pts: BTreeSet<Point> = BTreeSet::new();
    let h1 = g.gcd(&gx);
    if !h1.is_constant() {
        // every factor common to g and g_x is a polynomial in y alone; on
        // each of its root lines y = b, both g and g_x vanish identically,
        // and the singular points there are the zeros of g_y(., b)
        debug_assert_eq!(h1.deg_x(), Some(0), "gcd(g, g_x) must not involve x");
        let h1y = h1.eval_x(&Rational::zero());
        let (betas, beta_rest) = roots_of(&h1y)?;
        for (b, _) in betas {
            let slice = gy.eval_y(&b);
            if slice.is_constant() {
                continue;
            }
            let (alphas, alpha_rest) = roots_of(&slice)?;
            if !alpha_rest.is_constant() {
                return Err(CurveError::NonRationalCenter);
            }
            for (a, _) in alphas {
                pts.insert((a, b.clone()));
            }
        }
        if !beta_rest.is_constant() {
            // lines at irrational heights: demand g_y constant-nonzero there
            let cols = gy.x_coeffs();
            for (k, col) in cols.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if col.is_zero() {
                    continue;
                }
                if col.div_exact(&beta_rest).is_none() {
                    return Err(CurveError::NonRationalCenter);
                }
            }
            if let Some(c0) = cols.first() {
                if !beta_rest.gcd(c0).is_constant() {
                    return Err(CurveError::NonRationalCenter);
                }
            }
        }
        let q = g.div_exact(&h1).expect("gcd divides");
        if !q.is_constant() {
            pts.extend(certified_triple(&q, &gx, &gy)?);
        }
    } else {
        pts.extend(certified_triple(g, &gx, &gy)?);
    }
    Ok(pts.into_iter().collect())
}

/// Points where two coprime curves touch without crossing transversally
/// (including common points where either is singular).
pub fn tangency_points(f: &Poly2, g: &Poly2) -> Result<Vec<Point>, CurveError> {
    let jac = f
        .partial_x()
        .mul(&g.partial_y())
        .sub(&f.partial_y().mul(&g.partial_x()));
    if jac.is_zero() {
        // parallel gradients everywhere: any common point is a contact point
        return certified_pair(f, g);
    }
    certified_triple(f, g, &jac)
}

/// Common points of three pairwise coprime curves.
pub fn triple_points(f: &Poly2, g: &Poly2, h: &Poly2) -> Result<Vec<Point>, CurveError> {
    certified_triple(f, g, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn x() -> Poly2 {
        Poly2::var_x()
    }

    fn y() -> Poly2 {
        Poly2::var_y()
    }

    #[test]
    fn cusp_singularity_at_origin() {
        let cusp = y().pow(2).sub(&x().pow(3));
        assert_eq!(
            singular_points(&cusp).unwrap(),
            vec![(q(0, 1), q(0, 1))]
        );
    }

    #[test]
    fn smooth_curves_have_no_singular_points() {
        assert!(singular_points(&x()).unwrap().is_empty());
        let parabola = y().sub(&x().pow(2));
        assert!(singular_points(&parabola).unwrap().is_empty());
    }

    #[test]
    fn node_is_singular() {
        // y^2 = x^2 (x + 1) has a node at the origin
        let node = y()
            .pow(2)
            .sub(&x().pow(2).mul(&x().add(&Poly2::one())));
        assert_eq!(singular_points(&node).unwrap(), vec![(q(0, 1), q(0, 1))]);
    }

    #[test]
    fn irrational_singularity_rejected() {
        // y^2 = (x^2 - 2)^2 has nodes at x = +-sqrt(2)
        let base = x().pow(2).sub(&Poly2::constant(q(2, 1)));
        let f = y().pow(2).sub(&base.pow(2));
        assert_eq!(
            singular_points(&f).unwrap_err(),
            CurveError::NonRationalCenter
        );
    }

    #[test]
    fn tangency_of_line_and_parabola() {
        let parabola = y().sub(&x().pow(2));
        assert_eq!(
            tangency_points(&y(), &parabola).unwrap(),
            vec![(q(0, 1), q(0, 1))]
        );
        // a transversal line has no tangency with the parabola
        let slanted = y().sub(&x());
        assert!(tangency_points(&slanted, &parabola).unwrap().is_empty());
    }

    #[test]
    fn irrational_tangency_rejected() {
        // y and y - (x^2 - 2)^2 touch at x = +-sqrt(2)
        let base = x().pow(2).sub(&Poly2::constant(q(2, 1)));
        let g = y().sub(&base.pow(2));
        assert_eq!(
            tangency_points(&y(), &g).unwrap_err(),
            CurveError::NonRationalCenter
        );
    }

    #[test]
    fn three_concurrent_lines() {
        let l3 = x().sub(&y());
        assert_eq!(
            triple_points(&x(), &y(), &l3).unwrap(),
            vec![(q(0, 1), q(0, 1))]
        );
        let shifted = x().sub(&Poly2::one());
        assert!(triple_points(&x(), &y(), &shifted).unwrap().is_empty());
    }

    #[test]
    fn parallel_lines_no_contact() {
        let x1 = x().sub(&Poly2::one());
        assert!(tangency_points(&x(), &x1).unwrap().is_empty());
    }

    #[test]
    fn transversal_irrational_crossings_are_fine() {
        // y = 0 meets y = x^2 - 2 at x = +-sqrt(2), transversally: the
        // tangency system must come back empty rather than erroring
        let g = y().sub(&x().pow(2).sub(&Poly2::constant(q(2, 1))));
        assert!(tangency_points(&y(), &g).unwrap().is_empty());
    }

    #[test]
    fn triple_points_with_cusp() {
        let cusp = y().pow(2).sub(&x().pow(3));
        let diag = x().sub(&y());
        assert_eq!(
            triple_points(&x(), &cusp, &diag).unwrap(),
            vec![(q(0, 1), q(0, 1))]
        );
    }
}
