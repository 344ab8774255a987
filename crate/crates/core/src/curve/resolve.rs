//! Embedded resolution of plane-curve divisors by iterated point blow-ups.
//!
//! The surface is covered by an expanding tree of affine charts. Blowing up
//! a rational center `(a, b)` of a chart produces two charts
//!
//! ```text
//!   side A: (u, v) = (a + s, b + s t)    exceptional = {s = 0}
//!   side B: (u, v) = (a + s t, b + t)    exceptional = {t = 0}
//! ```
//!
//! Strict transforms are monomial rewrites of the recentered polynomials, so
//! everything stays exact. Two invariants drive the bookkeeping:
//!
//! * discrepancy: `k_i = 1 + sum of k_j over proximate earlier centers`;
//! * orders: `ord_i(C) = mult of the strict transform of C at the center
//!   plus the sum of ord_j(C) over proximate earlier centers`,
//!
//! where "proximate" means the center lies on the (strict transform of the)
//! earlier exceptional. Bad points requiring further blow-ups are exactly
//! where the total transform fails to be simple normal crossing: a singular
//! point of a strict transform, a tangential contact, or three curves
//! through one point. New bad points only ever appear on the freshly created
//! exceptional, so after the initial plane-wide scan all detection work is
//! univariate along exceptional lines.

use super::points::{singular_points, tangency_points, triple_points, Point};
use super::{CurveDivisor, CurveError, DivisorId};
use crate::divisor::CoeffDivisor;
use crate::poly::{Poly1, Poly2};
use crate::rational::Rational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Axis {
    /// the line `s = 0`
    S,
    /// the line `t = 0`
    T,
}

#[derive(Clone, Debug)]
pub(crate) struct Chart {
    /// Which blow-up node created this chart; `None` for the base plane.
    pub created_by: Option<usize>,
    /// Strict transform of each input component in this chart.
    pub stricts: Vec<Poly2>,
    /// Exceptional curves visible in this chart, always coordinate axes.
    pub exc_lines: Vec<(usize, Axis)>,
    /// Composed map back to base-plane coordinates `(x(s,t), y(s,t))`.
    pub maps: (Poly2, Poly2),
}

#[derive(Clone, Debug)]
pub struct BlowupNode {
    /// Chart hosting the center.
    pub chart: usize,
    /// Node whose blow-up created that chart; `None` for base-plane centers.
    pub parent: Option<usize>,
    /// Center coordinates within `chart`.
    pub center: Point,
    /// Image of the center on the base plane.
    pub image: Point,
    /// Coefficient of this exceptional in the relative canonical divisor.
    pub k: u64,
    /// Earlier exceptionals through the center.
    pub proximity: Vec<usize>,
    /// Order of each input component along this exceptional.
    pub ord: Vec<u64>,
    pub(crate) chart_a: usize,
    pub(crate) chart_b: usize,
}

#[derive(Clone, Debug)]
pub struct ResolutionData {
    pub(crate) charts: Vec<Chart>,
    pub nodes: Vec<BlowupNode>,
    pub(crate) components: Vec<Poly2>,
    /// Set when the final total transform re-verified as simple normal
    /// crossing (it always does; this records the re-derivation).
    pub snc_verified: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProcessOrder {
    /// Bad points in lexicographic (chart, coordinates) order.
    Canonical,
    /// The same set processed from the other end.
    Reversed,
    /// Seeded pseudo-random order.
    Shuffled(u64),
}

#[derive(Clone, Debug)]
pub struct ResolveOptions {
    pub max_nodes: usize,
    pub order: ProcessOrder,
    /// Additional blow-up centers on the base plane (for building
    /// non-minimal resolutions of the same pair).
    pub extra_centers: Vec<Point>,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            max_nodes: 160,
            order: ProcessOrder::Canonical,
            extra_centers: Vec::new(),
        }
    }
}

pub fn resolve(delta: &CurveDivisor) -> Result<ResolutionData, CurveError> {
    resolve_with(delta, &ResolveOptions::default())
}

pub fn resolve_with(
    delta: &CurveDivisor,
    opts: &ResolveOptions,
) -> Result<ResolutionData, CurveError> {
    let components: Vec<Poly2> = delta
        .components()
        .iter()
        .map(|(c, _)| c.poly().clone())
        .collect();
    let base = Chart {
        created_by: None,
        stricts: components.clone(),
        exc_lines: Vec::new(),
        maps: (Poly2::var_x(), Poly2::var_y()),
    };
    let mut builder = Builder {
        charts: vec![base],
        nodes: Vec::new(),
        components,
    };
    let mut worklist: BTreeSet<(usize, Point)> = initial_bad_points(&builder.components)?
        .into_iter()
        .map(|p| (0, p))
        .collect();
    for p in &opts.extra_centers {
        worklist.insert((0, p.clone()));
    }
    let mut rng = match opts.order {
        ProcessOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    while !worklist.is_empty() {
        let item = match opts.order {
            ProcessOrder::Canonical => worklist.iter().next().cloned().unwrap(),
            ProcessOrder::Reversed => worklist.iter().next_back().cloned().unwrap(),
            ProcessOrder::Shuffled(_) => {
                let idx = rng.as_mut().unwrap().gen_range(0..worklist.len());
                worklist.iter().nth(idx).cloned().unwrap()
            }
        };
        worklist.remove(&item);
        if builder.nodes.len() >= opts.max_nodes {
            return Err(CurveError::DegreeOverflow);
        }
        let (chart, center) = item;
        let node_id = builder.blow_up(chart, center);
        for bp in builder.scan_exceptional(node_id)? {
            worklist.insert(bp);
        }
    }
    let snc_verified = builder.verify_snc()?;
    debug_assert!(snc_verified, "resolution finished without SNC certificate");
    Ok(ResolutionData {
        charts: builder.charts,
        nodes: builder.nodes,
        components: builder.components,
        snc_verified,
    })
}

fn initial_bad_points(components: &[Poly2]) -> Result<BTreeSet<Point>, CurveError> {
    let mut bad = BTreeSet::new();
    for f in components {
        bad.extend(singular_points(f)?);
    }
    for i in 0..components.len() {
        for j in (i + 1)..components.len() {
            bad.extend(tangency_points(&components[i], &components[j])?);
        }
    }
    for i in 0..components.len() {
        for j in (i + 1)..components.len() {
            for k in (j + 1)..components.len() {
                bad.extend(triple_points(
                    &components[i],
                    &components[j],
                    &components[k],
                )?);
            }
        }
    }
    Ok(bad)
}

struct Builder {
    charts: Vec<Chart>,
    nodes: Vec<BlowupNode>,
    components: Vec<Poly2>,
}

impl Builder {
    fn blow_up(&mut self, chart_id: usize, center: Point) -> usize {
        let (a, b) = center.clone();
        let proximity: Vec<usize> = self.charts[chart_id]
            .exc_lines
            .iter()
            .filter(|(_, axis)| match axis {
                Axis::S => a.is_zero(),
                Axis::T => b.is_zero(),
            })
            .map(|(id, _)| *id)
            .collect();
        let k = 1 + proximity.iter().map(|&e| self.nodes[e].k).sum::<u64>();
        let ncomp = self.components.len();
        let mut ord = Vec::with_capacity(ncomp);
        let mut shifted = Vec::with_capacity(ncomp);
        for j in 0..ncomp {
            let fs = self.charts[chart_id].stricts[j].shift(&a, &b);
            let m = fs.min_total_degree().unwrap_or(0);
            let o = m as u64 + proximity.iter().map(|&e| self.nodes[e].ord[j]).sum::<u64>();
            ord.push(o);
            shifted.push((fs, m));
        }
        let new_id = self.nodes.len();
        let parent_maps = self.charts[chart_id].maps.clone();
        let image = (
            parent_maps.0.eval(&a, &b),
            parent_maps.1.eval(&a, &b),
        );

        // side A: (u, v) = (a + s, b + s t)
        let ua = Poly2::from_terms([((0, 0), a.clone()), ((1, 0), Rational::one())]);
        let va = Poly2::from_terms([((0, 0), b.clone()), ((1, 1), Rational::one())]);
        let maps_a = (
            parent_maps.0.subst(&ua, &va),
            parent_maps.1.subst(&ua, &va),
        );
        let mut lines_a = vec![(new_id, Axis::S)];
        for &(e, axis) in &self.charts[chart_id].exc_lines {
            if proximity.contains(&e) && axis == Axis::T {
                lines_a.push((e, Axis::T));
            }
        }
        let chart_a = self.charts.len();
        self.charts.push(Chart {
            created_by: Some(new_id),
            stricts: shifted.iter().map(|(f, m)| f.blowup_a(*m)).collect(),
            exc_lines: lines_a,
            maps: maps_a,
        });

        // side B: (u, v) = (a + s t, b + t)
        let ub = Poly2::from_terms([((0, 0), a.clone()), ((1, 1), Rational::one())]);
        let vb = Poly2::from_terms([((0, 0), b.clone()), ((0, 1), Rational::one())]);
        let maps_b = (
            parent_maps.0.subst(&ub, &vb),
            parent_maps.1.subst(&ub, &vb),
        );
        let mut lines_b = vec![(new_id, Axis::T)];
        for &(e, axis) in &self.charts[chart_id].exc_lines {
            if proximity.contains(&e) && axis == Axis::S {
                lines_b.push((e, Axis::S));
            }
        }
        let chart_b = self.charts.len();
        self.charts.push(Chart {
            created_by: Some(new_id),
            stricts: shifted.iter().map(|(f, m)| f.blowup_b(*m)).collect(),
            exc_lines: lines_b,
            maps: maps_b,
        });

        self.nodes.push(BlowupNode {
            chart: chart_id,
            parent: self.charts[chart_id].created_by,
            center,
            image,
            k,
            proximity,
            ord,
            chart_a,
            chart_b,
        });
        new_id
    }

    /// Finds the points on the exceptional of `node_id` where the total
    /// transform fails to be simple normal crossing. Irrational crossings
    /// are certified harmless or rejected.
    fn scan_exceptional(&self, node_id: usize) -> Result<Vec<(usize, Point)>, CurveError> {
        let node = &self.nodes[node_id];
        let mut bad = Vec::new();

        // chart A: exceptional is {s = 0}, points (0, t)
        let ca = node.chart_a;
        let mut slices: Vec<Option<Poly1>> = Vec::new();
        let mut meets: std::collections::BTreeMap<Rational, Vec<usize>> = Default::default();
        let mut irrationals: Vec<(usize, Poly1)> = Vec::new();
        for (j, f) in self.charts[ca].stricts.iter().enumerate() {
            let p = f.on_x_zero();
            debug_assert!(!p.is_zero(), "strict transform divisible by the exceptional");
            if p.is_constant() {
                slices.push(None);
                continue;
            }
            let (roots, rest) = p
                .rational_roots()
                .map_err(|_| CurveError::CoefficientOverflow)?;
            for (lam, _) in roots {
                meets.entry(lam).or_default().push(j);
            }
            if !rest.is_constant() {
                irrationals.push((j, rest));
            }
            slices.push(Some(p));
        }
        let old_line_at_zero = self.charts[ca]
            .exc_lines
            .iter()
            .any(|&(e, axis)| e != node_id && axis == Axis::T);
        for (lam, comps_here) in &meets {
            let nlines = if lam.is_zero() && old_line_at_zero { 1 } else { 0 };
            let ncurves = 1 + nlines + comps_here.len();
            let mut is_bad = ncurves >= 3;
            if !is_bad {
                for &j in comps_here {
                    let f = &self.charts[ca].stricts[j];
                    let (gs, gt) = f.gradient_at(&Rational::zero(), lam);
                    if gt.is_zero() {
                        // singular point of the strict transform, or contact
                        // with the exceptional {s = 0}
                        is_bad = true;
                    } else if nlines == 1 && gs.is_zero() {
                        is_bad = true;
                    }
                }
            }
            if is_bad {
                bad.push((ca, (Rational::zero(), lam.clone())));
            }
        }
        for (j, rest) in &irrationals {
            let p = slices[*j].as_ref().expect("slice recorded");
            if !rest.gcd(&p.derivative()).is_constant() {
                // multiple crossing at an irrational direction: tangency or
                // singularity needing an irrational center
                return Err(CurveError::NonRationalCenter);
            }
            for (j2, p2) in slices.iter().enumerate() {
                if j2 == *j {
                    continue;
                }
                if let Some(p2) = p2 {
                    if !rest.gcd(p2).is_constant() {
                        return Err(CurveError::NonRationalCenter);
                    }
                }
            }
        }

        // chart B: only its origin is new (the vertical direction)
        let cb = node.chart_b;
        let zero = Rational::zero();
        let comps_b: Vec<usize> = self.charts[cb]
            .stricts
            .iter()
            .enumerate()
            .filter(|(_, f)| f.eval(&zero, &zero).is_zero())
            .map(|(j, _)| j)
            .collect();
        let old_vertical = self.charts[cb]
            .exc_lines
            .iter()
            .any(|&(e, axis)| e != node_id && axis == Axis::S);
        let nlines = if old_vertical { 1 } else { 0 };
        let ncurves = 1 + nlines + comps_b.len();
        let mut is_bad = ncurves >= 3;
        if !is_bad {
            for &j in &comps_b {
                let f = &self.charts[cb].stricts[j];
                let (gs, gt) = f.gradient_at(&zero, &zero);
                // exceptional here is {t = 0}
                if gs.is_zero() {
                    is_bad = true;
                } else if nlines == 1 && gt.is_zero() {
                    is_bad = true;
                }
            }
        }
        if is_bad {
            bad.push((cb, (zero.clone(), zero)));
        }
        Ok(bad)
    }

    /// Re-derives every bad point of the final surface and checks that each
    /// one was blown up: the simple-normal-crossing certificate.
    fn verify_snc(&self) -> Result<bool, CurveError> {
        let used: BTreeSet<(usize, Point)> = self
            .nodes
            .iter()
            .map(|n| (n.chart, n.center.clone()))
            .collect();
        for p in initial_bad_points(&self.components)? {
            if !used.contains(&(0, p)) {
                return Ok(false);
            }
        }
        for node_id in 0..self.nodes.len() {
            for bp in self.scan_exceptional(node_id)? {
                if !used.contains(&bp) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl ResolutionData {
    pub(crate) fn matches(&self, delta: &CurveDivisor) -> bool {
        self.components.len() == delta.components().len()
            && self
                .components
                .iter()
                .zip(delta.components())
                .all(|(p, (c, _))| p == c.poly())
    }

    /// Chart where the exceptional of `node` is the line `s = 0`.
    pub(crate) fn exceptional_chart(&self, node: usize) -> usize {
        self.nodes[node].chart_a
    }
}

/// Coefficients of the pulled-back pair on the resolved surface: `d_j` on
/// the strict transform of the j-th component, and
/// `sum_j d_j ord_i(C_j) - k_i` on the i-th exceptional.
pub fn pair_coefficients(
    res: &ResolutionData,
    delta: &CurveDivisor,
) -> Result<CoeffDivisor<DivisorId>, CurveError> {
    if !res.matches(delta) {
        return Err(CurveError::MismatchedResolution);
    }
    let mut out = CoeffDivisor::empty();
    for (j, (_, d)) in delta.components().iter().enumerate() {
        out.insert(DivisorId::Component(j), d.clone());
    }
    for (i, node) in res.nodes.iter().enumerate() {
        let mut acc = Rational::zero();
        for (j, (_, d)) in delta.components().iter().enumerate() {
            acc = &acc + &(d * &Rational::from_int(node.ord[j] as i64));
        }
        let coeff = &acc - &Rational::from_int(node.k as i64);
        out.insert(DivisorId::Exceptional(i), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::PlaneCurve;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn x() -> Poly2 {
        Poly2::var_x()
    }

    fn y() -> Poly2 {
        Poly2::var_y()
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

    fn cusp() -> Poly2 {
        y().pow(2).sub(&x().pow(3))
    }

    #[test]
    fn smooth_line_needs_no_blowup() {
        let d = divisor(&[(x(), q(1, 1))]);
        let res = resolve(&d).unwrap();
        assert!(res.nodes.is_empty());
        assert!(res.snc_verified);
    }

    #[test]
    fn transversal_pair_needs_no_blowup() {
        let d = divisor(&[(x(), q(1, 1)), (y(), q(1, 1))]);
        let res = resolve(&d).unwrap();
        assert!(res.nodes.is_empty());
    }

    #[test]
    fn three_concurrent_lines_one_blowup() {
        let d = divisor(&[
            (x(), q(1, 1)),
            (y(), q(1, 1)),
            (x().sub(&y()), q(1, 1)),
        ]);
        let res = resolve(&d).unwrap();
        assert_eq!(res.nodes.len(), 1);
        assert_eq!(res.nodes[0].k, 1);
        assert_eq!(res.nodes[0].ord, vec![1, 1, 1]);
        let coeffs = pair_coefficients(&res, &d).unwrap();
        assert_eq!(coeffs.coeff(&DivisorId::Exceptional(0)), q(2, 1));
    }

    #[test]
    fn cusp_resolution_classical_tables() {
        let d = divisor(&[(cusp(), q(1, 1))]);
        let res = resolve(&d).unwrap();
        assert_eq!(res.nodes.len(), 3);
        let ks: Vec<u64> = res.nodes.iter().map(|n| n.k).collect();
        assert_eq!(ks, vec![1, 2, 4]);
        let ords: Vec<u64> = res.nodes.iter().map(|n| n.ord[0]).collect();
        assert_eq!(ords, vec![2, 3, 6]);
        // proximity: second center on E1, third on both E1 and E2
        assert_eq!(res.nodes[1].proximity, vec![0]);
        let mut prox3 = res.nodes[2].proximity.clone();
        prox3.sort();
        assert_eq!(prox3, vec![0, 1]);
    }

    #[test]
    fn cusp_plus_line_tables() {
        let d = divisor(&[(x(), q(1, 1)), (cusp(), q(1, 1))]);
        let res = resolve(&d).unwrap();
        assert_eq!(res.nodes.len(), 3);
        // component order is sorted: x before the cusp
        let line_ords: Vec<u64> = res.nodes.iter().map(|n| n.ord[0]).collect();
        let cusp_ords: Vec<u64> = res.nodes.iter().map(|n| n.ord[1]).collect();
        assert_eq!(line_ords, vec![1, 1, 2]);
        assert_eq!(cusp_ords, vec![2, 3, 6]);
        let coeffs = pair_coefficients(&res, &d).unwrap();
        let e: Vec<Rational> = (0..3)
            .map(|i| coeffs.coeff(&DivisorId::Exceptional(i)))
            .collect();
        assert_eq!(e, vec![q(2, 1), q(2, 1), q(4, 1)]);
    }

    #[test]
    fn tacnode_two_blowups() {
        // y^2 = x^4: two smooth branches with second-order contact
        let d = divisor(&[(y().pow(2).sub(&x().pow(4)), q(1, 1))]);
        let res = resolve(&d).unwrap();
        assert_eq!(res.nodes.len(), 2);
        assert_eq!(res.nodes.iter().map(|n| n.k).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(
            res.nodes.iter().map(|n| n.ord[0]).collect::<Vec<_>>(),
            vec![2, 4]
        );
    }

    #[test]
    fn higher_cusp_tables() {
        // y^2 = x^5 resolves in four blow-ups
        let d = divisor(&[(y().pow(2).sub(&x().pow(5)), q(1, 1))]);
        let res = resolve(&d).unwrap();
        assert_eq!(res.nodes.len(), 4);
        assert_eq!(
            res.nodes.iter().map(|n| n.k).collect::<Vec<_>>(),
            vec![1, 2, 3, 6]
        );
        assert_eq!(
            res.nodes.iter().map(|n| n.ord[0]).collect::<Vec<_>>(),
            vec![2, 4, 5, 10]
        );
    }

    #[test]
    fn discrepancy_recurrence_holds() {
        let d = divisor(&[(x(), q(1, 1)), (cusp(), q(1, 1))]);
        let res = resolve(&d).unwrap();
        for node in &res.nodes {
            let expected = 1 + node
                .proximity
                .iter()
                .map(|&e| res.nodes[e].k)
                .sum::<u64>();
            assert_eq!(node.k, expected);
        }
    }

    #[test]
    fn gratuitous_center_allowed() {
        let d = divisor(&[(x(), q(1, 1))]);
        let opts = ResolveOptions {
            extra_centers: vec![(q(0, 1), q(3, 1))],
            ..Default::default()
        };
        let res = resolve_with(&d, &opts).unwrap();
        assert_eq!(res.nodes.len(), 1);
        // on-curve smooth point: exceptional coefficient 1*1 - 1 = 0
        let coeffs = pair_coefficients(&res, &d).unwrap();
        assert!(coeffs.coeff(&DivisorId::Exceptional(0)).is_zero());
    }

    #[test]
    fn processing_order_changes_labels_not_validity() {
        let d = divisor(&[
            (x(), q(1, 1)),
            (y(), q(1, 1)),
            (x().sub(&y()), q(1, 1)),
            (x().add(&y()), q(1, 2)),
        ]);
        for order in [
            ProcessOrder::Canonical,
            ProcessOrder::Reversed,
            ProcessOrder::Shuffled(7),
        ] {
            let res = resolve_with(
                &d,
                &ResolveOptions {
                    order,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(res.snc_verified);
            assert_eq!(res.nodes.len(), 1);
        }
    }

    #[test]
    fn node_curve_resolves_in_one_blowup() {
        let node = y()
            .pow(2)
            .sub(&x().pow(2).mul(&x().add(&Poly2::one())));
        let d = divisor(&[(node, q(1, 1))]);
        let res = resolve(&d).unwrap();
        assert_eq!(res.nodes.len(), 1);
        assert_eq!(res.nodes[0].ord, vec![2]);
    }

    #[test]
    fn irrational_tangency_rejected_by_resolve() {
        let base = x().pow(2).sub(&Poly2::constant(q(2, 1)));
        let g = y().sub(&base.pow(2));
        let d = divisor(&[(y(), q(1, 1)), (g, q(1, 1))]);
        assert_eq!(resolve(&d).unwrap_err(), CurveError::NonRationalCenter);
    }

    #[test]
    fn node_cap_respected() {
        let d = divisor(&[(cusp(), q(1, 1))]);
        let opts = ResolveOptions {
            max_nodes: 1,
            ..Default::default()
        };
        assert_eq!(resolve_with(&d, &opts).unwrap_err(), CurveError::DegreeOverflow);
    }
}
