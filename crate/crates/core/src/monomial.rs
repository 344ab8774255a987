//! Non-lc ideals and multiplier ideals of monomial ideals on affine n-space.
//!
//! A primitive vector `w >= 0` defines a monomial valuation `ord_w` and a
//! toric divisor `E_w` over the origin with discrepancy `<w, 1> - 1`. For the
//! pair `((A^n, 0); a^c)` the coefficient of `E_w` in the pulled-back pair is
//! `c * ord_w(a) - <w, 1> + 1`, and the pushforward conditions become, after
//! clearing the floor against the integrality of `<w, v>`:
//!
//! * multiplier ideal: `x^v` is a member iff `<w, v+1> > c * ord_w(a)` for
//!   every ray `w`;
//! * non-lc ideal: the same inequality, required only on rays whose pair
//!   coefficient exceeds 1, i.e. `c * ord_w(a) > <w, 1>`.
//!
//! Quantifying over *all* primitive rays is equivalent to pushing forward
//! from any single toric log resolution: every ray appears on some smooth
//! refinement of a resolving fan, refinements only add conditions, and the
//! pushforward does not depend on the resolution. Membership is therefore
//! decided exactly by rational linear feasibility over the linearity regions
//! of `ord_w` (one region per Newton-polyhedron vertex), with no enumeration
//! bound. The brute-force ray oracle in [`crate::harness`] cross-checks this
//! criterion on every corpus run.

use crate::feasibility::{feasible, supremum_of_var, Feasibility, LinearConstraint, Supremum};
use crate::rational::Rational;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonomialError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("a monomial ideal needs at least one generator")]
    EmptyGenerators,
    #[error("a ray valuation must be a nonzero nonnegative vector")]
    ZeroRay,
    #[error("the exponent must be positive")]
    NonPositiveExponent,
    #[error("schedule must be nonempty and strictly increasing")]
    BadSchedule,
}

/// A monomial ideal, stored as its minimal generating exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdealGens {
    dim: usize,
    gens: Vec<Vec<u64>>,
}

impl MonomialIdealGens {
    pub fn new(dim: usize, gens: Vec<Vec<u64>>) -> Result<Self, MonomialError> {
        if gens.is_empty() {
            return Err(MonomialError::EmptyGenerators);
        }
        for g in &gens {
            if g.len() != dim {
                return Err(MonomialError::DimensionMismatch {
                    expected: dim,
                    got: g.len(),
                });
            }
        }
        Ok(MonomialIdealGens {
            dim,
            gens: minimalize(gens),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Vec<u64>] {
        &self.gens
    }

    /// The unit ideal, generated by the constant monomial.
    pub fn is_full_ring(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    pub fn contains_exponent(&self, v: &[u64]) -> bool {
        self.gens
            .iter()
            .any(|g| g.iter().zip(v).all(|(a, b)| a <= b))
    }

    pub fn product(&self, other: &Self) -> Result<Self, MonomialError> {
        if self.dim != other.dim {
            return Err(MonomialError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        MonomialIdealGens::new(self.dim, sums)
    }

    pub fn power(&self, k: u64) -> Self {
        let mut acc = MonomialIdealGens::new(self.dim, vec![vec![0; self.dim]]).unwrap();
        for _ in 0..k {
            acc = acc.product(self).unwrap();
        }
        acc
    }

    pub fn max_gen_weight(&self) -> u64 {
        self.gens
            .iter()
            .map(|g| g.iter().sum::<u64>())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for MonomialIdealGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .gens
            .iter()
            .map(|g| exponent_to_monomial(g))
            .collect();
        write!(f, "({})", names.join(", "))
    }
}

pub fn exponent_to_monomial(v: &[u64]) -> String {
    let aliases = ["x", "y", "z"];
    let var = |i: usize| -> String {
        if v.len() <= 3 {
            aliases[i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    };
    let mut parts = Vec::new();
    for (i, &e) in v.iter().enumerate() {
        if e == 1 {
            parts.push(var(i));
        } else if e > 1 {
            parts.push(format!("{}^{}", var(i), e));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn minimalize(gens: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let set: BTreeSet<Vec<u64>> = gens.into_iter().collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    for g in &set {
        let dominated = set
            .iter()
            .any(|h| h != g && h.iter().zip(g).all(|(a, b)| a <= b));
        if !dominated {
            out.push(g.clone());
        }
    }
    out.sort_by_key(|g| (g.iter().sum::<u64>(), g.clone()));
    out
}

/// A primitive nonnegative integer vector: a toric divisorial valuation over
/// the origin. The constructor divides out the gcd.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RayValuation {
    w: Vec<u64>,
}

impl RayValuation {
    pub fn new(w: Vec<u64>) -> Result<Self, MonomialError> {
        if w.iter().all(|&x| x == 0) {
            return Err(MonomialError::ZeroRay);
        }
        let g = w.iter().fold(0u64, |acc, &x| gcd_u64(acc, x));
        Ok(RayValuation {
            w: w.iter().map(|&x| x / g).collect(),
        })
    }

    pub fn weights(&self) -> &[u64] {
        &self.w
    }

    pub fn dim(&self) -> usize {
        self.w.len()
    }

    pub fn weight_sum(&self) -> u64 {
        self.w.iter().sum()
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// The pair `((A^n, 0); a^c)` with `c > 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialPair {
    pub ideal: MonomialIdealGens,
    pub c: Rational,
}

impl MonomialPair {
    pub fn new(ideal: MonomialIdealGens, c: Rational) -> Result<Self, MonomialError> {
        if !c.is_positive() {
            return Err(MonomialError::NonPositiveExponent);
        }
        Ok(MonomialPair { ideal, c })
    }
}

/// `ord_w(a) = min over generators u of <w, u>`. Minimizing over generators
/// suffices because `w >= 0` makes every other monomial of the ideal weigh
/// at least as much as some generator.
pub fn ord_ray(w: &RayValuation, a: &MonomialIdealGens) -> Result<u64, MonomialError> {
    if w.dim() != a.dim() {
        return Err(MonomialError::DimensionMismatch {
            expected: a.dim(),
            got: w.dim(),
        });
    }
    Ok(a.gens()
        .iter()
        .map(|g| g.iter().zip(w.weights()).map(|(e, wi)| e * wi).sum::<u64>())
        .min()
        .expect("nonempty generators"))
}

/// Coefficient of the toric divisor `E_w` in the pulled-back pair:
/// `c * ord_w(a) - <w, 1> + 1`.
pub fn delta_coefficient(w: &RayValuation, p: &MonomialPair) -> Result<Rational, MonomialError> {
    let ord = ord_ray(w, &p.ideal)?;
    Ok(&(&p.c * &Rational::from_int(ord as i64)) - &Rational::from_int(w.weight_sum() as i64 - 1))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealKind {
    NonLc,
    Multiplier,
}

/// True iff `x^v` lies in the non-lc ideal of the pair.
pub fn nlc_member(v: &[u64], p: &MonomialPair) -> Result<bool, MonomialError> {
    member(v, p, IdealKind::NonLc)
}

/// True iff `x^v` lies in the multiplier ideal of the pair.
pub fn mult_member(v: &[u64], p: &MonomialPair) -> Result<bool, MonomialError> {
    member(v, p, IdealKind::Multiplier)
}

pub fn member(v: &[u64], p: &MonomialPair, kind: IdealKind) -> Result<bool, MonomialError> {
    if v.len() != p.ideal.dim() {
        return Err(MonomialError::DimensionMismatch {
            expected: p.ideal.dim(),
            got: v.len(),
        });
    }
    Ok(member_unchecked(v, p, kind))
}

/// A linearity region of `ord_w`: on the cone cut out by `extra_rows >= 0`
/// (within the nonnegative orthant), `ord_w(a) = <w, vertex>`.
struct OrdRegion {
    vertex: Vec<u64>,
    rows: Vec<Vec<Rational>>,
}

fn regions_for(a: &MonomialIdealGens) -> Vec<OrdRegion> {
    let n = a.dim();
    if n == 2 {
        // Newton polygon: only hull vertices matter, and each region is the
        // cone between two adjacent edge normals.
        return polygon_regions(a);
    }
    a.gens()
        .iter()
        .map(|u| {
            let rows = a
                .gens()
                .iter()
                .filter(|other| *other != u)
                .map(|other| {
                    (0..n)
                        .map(|i| Rational::from_int(other[i] as i64 - u[i] as i64))
                        .collect()
                })
                .collect();
            OrdRegion {
                vertex: u.clone(),
                rows,
            }
        })
        .collect()
}

/// Lower-left hull of the exponent set in two variables, with the dual cone
/// decomposition of ray space.
fn polygon_regions(a: &MonomialIdealGens) -> Vec<OrdRegion> {
    let verts = newton_polygon_vertices(a);
    let k = verts.len();
    let mut regions = Vec::with_capacity(k);
    for (idx, v) in verts.iter().enumerate() {
        let mut rows = Vec::new();
        // neighbor constraints: <w, prev - v> >= 0 and <w, next - v> >= 0
        if idx > 0 {
            let p = &verts[idx - 1];
            rows.push(vec![
                Rational::from_int(p.0 as i64 - v.0 as i64),
                Rational::from_int(p.1 as i64 - v.1 as i64),
            ]);
        }
        if idx + 1 < k {
            let nx = &verts[idx + 1];
            rows.push(vec![
                Rational::from_int(nx.0 as i64 - v.0 as i64),
                Rational::from_int(nx.1 as i64 - v.1 as i64),
            ]);
        }
        regions.push(OrdRegion {
            vertex: vec![v.0, v.1],
            rows,
        });
    }
    regions
}

/// Vertices of the Newton polygon (hull of exponents plus the positive
/// orthant) in order of decreasing x-exponent. Because the generator set is
/// minimal, decreasing x means strictly increasing y; a Graham sweep keeps
/// the convex chain.
pub fn newton_polygon_vertices(a: &MonomialIdealGens) -> Vec<(u64, u64)> {
    assert_eq!(a.dim(), 2);
    let mut pts: Vec<(u64, u64)> = a.gens().iter().map(|g| (g[0], g[1])).collect();
    pts.sort_by(|p, q| q.0.cmp(&p.0));
    let mut hull: Vec<(u64, u64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let a2 = hull[hull.len() - 2];
            let b2 = hull[hull.len() - 1];
            // drop b2 if it lies on or above segment a2 -> p
            let cross = (b2.0 as i128 - a2.0 as i128) * (p.1 as i128 - a2.1 as i128)
                - (b2.1 as i128 - a2.1 as i128) * (p.0 as i128 - a2.0 as i128);
            if cross >= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

fn member_unchecked(v: &[u64], p: &MonomialPair, kind: IdealKind) -> bool {
    let n = p.ideal.dim();
    let c = &p.c;
    let v1: Vec<Rational> = v
        .iter()
        .map(|&e| Rational::from_int(e as i64 + 1))
        .collect();
    for region in regions_for(&p.ideal) {
        // quick reject: if c*u < v+1 componentwise, no ray in this region
        // (or anywhere) can violate the condition
        let cu: Vec<Rational> = region
            .vertex
            .iter()
            .map(|&e| c * &Rational::from_int(e as i64))
            .collect();
        if cu.iter().zip(&v1).all(|(a, b)| a < b) {
            continue;
        }
        let mut constraints: Vec<LinearConstraint> = Vec::new();
        for i in 0..n {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            constraints.push(LinearConstraint::at_least_zero(row, Rational::zero()));
        }
        for row in &region.rows {
            constraints.push(LinearConstraint::at_least_zero(
                row.clone(),
                Rational::zero(),
            ));
        }
        // violation: <w, c*u - (v+1)> >= 0
        let viol: Vec<Rational> = cu.iter().zip(&v1).map(|(a, b)| a - b).collect();
        constraints.push(LinearConstraint::at_least_zero(viol, Rational::zero()));
        match kind {
            IdealKind::NonLc => {
                // pair coefficient > 1: <w, c*u - 1> > 0
                let row: Vec<Rational> = cu.iter().map(|a| a - &Rational::one()).collect();
                constraints.push(LinearConstraint::greater_than_zero(row, Rational::zero()));
            }
            IdealKind::Multiplier => {
                // exclude w = 0
                constraints.push(LinearConstraint::at_least_zero(
                    vec![Rational::one(); n],
                    -Rational::one(),
                ));
            }
        }
        if feasible(n, &constraints) == Feasibility::Feasible {
            return false;
        }
    }
    true
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GeneratorReport {
    pub generators: Vec<Vec<u64>>,
    pub complete: bool,
}

impl GeneratorReport {
    pub fn contains_exponent(&self, v: &[u64]) -> bool {
        self.generators
            .iter()
            .any(|g| g.iter().zip(v).all(|(a, b)| a <= b))
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().any(|g| g.iter().all(|&e| e == 0))
    }
}

/// Every minimal generator of either ideal of the pair has each exponent at
/// most `ceil(c * max |u|_1)`, so total degree at most `n` times that.
pub fn certified_degree_bound(p: &MonomialPair) -> u64 {
    let w = Rational::from_int(p.ideal.max_gen_weight() as i64);
    let b = (&p.c * &w).ceil_int();
    let b = b.to_u64().unwrap_or(u64::MAX / 4);
    (p.ideal.dim() as u64).saturating_mul(b)
}

/// Minimal monomial generators among exponents of total degree at most
/// `degree_bound` (default: the certified bound). `complete` is set when the
/// bound reaches the certified bound, so no minimal generator can be missing.
pub fn nlc_generators(p: &MonomialPair, degree_bound: Option<u64>) -> GeneratorReport {
    generators(p, IdealKind::NonLc, degree_bound)
}

pub fn mult_generators(p: &MonomialPair, degree_bound: Option<u64>) -> GeneratorReport {
    generators(p, IdealKind::Multiplier, degree_bound)
}

pub fn generators(p: &MonomialPair, kind: IdealKind, degree_bound: Option<u64>) -> GeneratorReport {
    let certified = certified_degree_bound(p);
    let bound = degree_bound.unwrap_or(certified);
    let n = p.ideal.dim();
    let mut memo: HashMap<Vec<u64>, bool> = HashMap::new();
    let is_member = |v: &[u64], memo: &mut HashMap<Vec<u64>, bool>| -> bool {
        if let Some(&m) = memo.get(v) {
            return m;
        }
        let m = member_unchecked(v, p, kind);
        memo.insert(v.to_vec(), m);
        m
    };
    let mut gens = Vec::new();
    let mut v = vec![0u64; n];
    loop {
        if is_member(&v, &mut memo) {
            let minimal = (0..n).all(|i| {
                if v[i] == 0 {
                    return true;
                }
                let mut parent = v.clone();
                parent[i] -= 1;
                !is_member(&parent, &mut memo)
            });
            if minimal {
                gens.push(v.clone());
            }
        }
        if !next_in_simplex(&mut v, bound) {
            break;
        }
    }
    GeneratorReport {
        generators: minimalize(gens),
        complete: bound >= certified,
    }
}

/// Iterates over all nonnegative vectors of coordinate sum <= bound.
fn next_in_simplex(v: &mut [u64], bound: u64) -> bool {
    let n = v.len();
    for i in 0..n {
        let tail: u64 = v[i..].iter().sum();
        if tail + 1 <= bound {
            v[i] += 1;
            for slot in v.iter_mut().take(i) {
                *slot = 0;
            }
            return true;
        }
    }
    false
}

/// The largest `t` with `v + 1` in `t * P(a)` (Newton polyhedron scaling):
/// the membership threshold of `x^v` for the multiplier ideal.
pub fn membership_threshold(v: &[u64], a: &MonomialIdealGens) -> Option<Rational> {
    if a.is_full_ring() {
        return None; // unbounded
    }
    let n = a.dim();
    let g = a.gens().len();
    // variables: mu_0..mu_{g-1}, t at index g
    let mut constraints = Vec::new();
    for k in 0..g {
        let mut row = vec![Rational::zero(); g + 1];
        row[k] = Rational::one();
        constraints.push(LinearConstraint::at_least_zero(row, Rational::zero()));
    }
    for i in 0..n {
        let mut row = vec![Rational::zero(); g + 1];
        for (k, u) in a.gens().iter().enumerate() {
            row[k] = -Rational::from_int(u[i] as i64);
        }
        constraints.push(LinearConstraint::at_least_zero(
            row,
            Rational::from_int(v[i] as i64 + 1),
        ));
    }
    let mut row = vec![Rational::one(); g + 1];
    row[g] = -Rational::one();
    constraints.push(LinearConstraint::at_least_zero(row, Rational::zero()));
    match supremum_of_var(g + 1, &constraints, g) {
        Supremum::Value(t) => Some(t),
        Supremum::Unbounded => None,
        Supremum::Infeasible => Some(Rational::zero()),
    }
}

/// All jumping numbers of the monomial ideal in `(0, c_max]`: the exponents
/// where the multiplier ideal at the origin strictly shrinks. Candidates are
/// the membership thresholds over the certified exponent box; each candidate
/// is confirmed by comparing generator sets on either side.
pub fn jumping_numbers(a: &MonomialIdealGens, c_max: &Rational) -> Result<Vec<Rational>, MonomialError> {
    if !c_max.is_positive() {
        return Err(MonomialError::NonPositiveExponent);
    }
    if a.is_full_ring() {
        return Ok(Vec::new());
    }
    let n = a.dim();
    let coord_cap = (c_max * &Rational::from_int(a.max_gen_weight() as i64))
        .ceil_int()
        .to_u64()
        .unwrap_or(0);
    let mut candidates: BTreeSet<Rational> = BTreeSet::new();
    let mut v = vec![0u64; n];
    loop {
        if let Some(t) = membership_threshold(&v, a) {
            if t.is_positive() && &t <= c_max {
                candidates.insert(t);
            }
        }
        if !next_box(&mut v, coord_cap) {
            break;
        }
    }
    let candidates: Vec<Rational> = candidates.into_iter().collect();
    // confirm each candidate: the ideal at the candidate differs from the
    // ideal just before it
    let degree_bound = {
        let p = MonomialPair::new(a.clone(), c_max.clone())?;
        certified_degree_bound(&p)
    };
    let gens_at = |c: &Rational| -> Vec<Vec<u64>> {
        let p = MonomialPair::new(a.clone(), c.clone()).unwrap();
        generators(&p, IdealKind::Multiplier, Some(degree_bound)).generators
    };
    let mut confirmed = Vec::new();
    let mut prev = Rational::zero();
    for cand in candidates {
        let mid = &(&prev + &cand) / &Rational::from_int(2);
        if gens_at(&mid) != gens_at(&cand) {
            confirmed.push(cand.clone());
        }
        prev = cand;
    }
    Ok(confirmed)
}

fn next_box(v: &mut [u64], cap: u64) -> bool {
    for slot in v.iter_mut() {
        if *slot < cap {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}

/// A graded system of monomial ideals. Only two shapes are supported, both
/// of which satisfy `a_m * a_l <= a_{m+l}` by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GradedSystemSpec {
    /// `a_p = a^p` for a fixed ideal `a`.
    Powers(MonomialIdealGens),
    /// `a_p = (monomials v with <w0, v> >= p)` for a fixed primitive ray.
    RayTruncation(RayValuation),
}

impl GradedSystemSpec {
    pub fn dim(&self) -> usize {
        match self {
            GradedSystemSpec::Powers(a) => a.dim(),
            GradedSystemSpec::RayTruncation(w) => w.dim(),
        }
    }

    pub fn member_ideal(&self, p: u64) -> MonomialIdealGens {
        assert!(p >= 1);
        match self {
            GradedSystemSpec::Powers(a) => a.power(p),
            GradedSystemSpec::RayTruncation(w0) => {
                let n = w0.dim();
                let w = w0.weights();
                let mut gens = Vec::new();
                let caps: Vec<u64> = w
                    .iter()
                    .map(|&wi| if wi == 0 { 0 } else { p.div_ceil(wi) })
                    .collect();
                let mut v = vec![0u64; n];
                loop {
                    let dot: u64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
                    if dot >= p {
                        gens.push(v.clone());
                    }
                    if !next_box_mixed(&mut v, &caps) {
                        break;
                    }
                }
                MonomialIdealGens::new(n, gens).expect("truncation ideal is nonzero")
            }
        }
    }
}

fn next_box_mixed(v: &mut [u64], caps: &[u64]) -> bool {
    for (slot, &cap) in v.iter_mut().zip(caps) {
        if *slot < cap {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AsymptoticReport {
    /// Generator sets computed along the schedule, keyed by `p`.
    pub terms: Vec<(u64, GeneratorReport)>,
    /// The maximal member among the computed terms (the asymptotic ideal).
    pub maximal: GeneratorReport,
    /// Smallest schedule entry whose successor computes the same ideal.
    pub stabilized_at: Option<u64>,
}

/// Computes `J_NLC((c/p) * a_p)` along the schedule and reports the maximal
/// member and the first point of consecutive agreement.
pub fn asymptotic_nlc(
    g: &GradedSystemSpec,
    c: &Rational,
    schedule: &[u64],
) -> Result<AsymptoticReport, MonomialError> {
    if !c.is_positive() {
        return Err(MonomialError::NonPositiveExponent);
    }
    if schedule.is_empty() || schedule.windows(2).any(|w| w[0] >= w[1]) || schedule[0] == 0 {
        return Err(MonomialError::BadSchedule);
    }
    let mut terms = Vec::new();
    for &p in schedule {
        let ideal = g.member_ideal(p);
        let exponent = c / &Rational::from_int(p as i64);
        let pair = MonomialPair::new(ideal, exponent)?;
        terms.push((p, nlc_generators(&pair, None)));
    }
    let contains = |big: &GeneratorReport, small: &GeneratorReport| -> bool {
        small.generators.iter().all(|g| big.contains_exponent(g))
    };
    let maximal = terms
        .iter()
        .map(|(_, r)| r)
        .find(|cand| terms.iter().all(|(_, other)| contains(cand, other)))
        .cloned()
        .unwrap_or_else(|| terms.last().unwrap().1.clone());
    let stabilized_at = terms
        .windows(2)
        .find(|w| w[0].1.generators == w[1].1.generators)
        .map(|w| w[0].0);
    Ok(AsymptoticReport {
        terms,
        maximal,
        stabilized_at,
    })
}

/// `a^c` with rational `c = num/den`, rewritten as the integer-power pair
/// `(a^num)^(1/den)`; the two have the same valuation data.
pub fn power_pair(a: &MonomialIdealGens, c: &Rational) -> Result<MonomialPair, MonomialError> {
    if !c.is_positive() {
        return Err(MonomialError::NonPositiveExponent);
    }
    let num = c.numer().to_u64().ok_or(MonomialError::NonPositiveExponent)?;
    let den = c.denom().to_u64().ok_or(MonomialError::NonPositiveExponent)?;
    MonomialPair::new(a.power(num), Rational::ratio(1, den as i64))
}

/// `a^c * b^d` as a single pair over a common denominator.
pub fn mixed_pair(
    a: &MonomialIdealGens,
    c: &Rational,
    b: &MonomialIdealGens,
    d: &Rational,
) -> Result<MonomialPair, MonomialError> {
    if !c.is_positive() || !d.is_positive() {
        return Err(MonomialError::NonPositiveExponent);
    }
    let cd = c.denom().to_u64().ok_or(MonomialError::NonPositiveExponent)?;
    let dd = d.denom().to_u64().ok_or(MonomialError::NonPositiveExponent)?;
    let q = cd / gcd_u64(cd, dd) * dd;
    let ca = (c * &Rational::from_int(q as i64))
        .numer()
        .to_u64()
        .unwrap();
    let db = (d * &Rational::from_int(q as i64))
        .numer()
        .to_u64()
        .unwrap();
    let big = a.power(ca).product(&b.power(db))?;
    MonomialPair::new(big, Rational::ratio(1, q as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&[u64]]) -> MonomialIdealGens {
        MonomialIdealGens::new(gens[0].len(), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn pair(gens: &[&[u64]], c: Rational) -> MonomialPair {
        MonomialPair::new(ideal(gens), c).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn ray(w: &[u64]) -> RayValuation {
        RayValuation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn minimality_normalization() {
        let a = ideal(&[&[2, 0], &[3, 1], &[0, 1]]);
        assert_eq!(a.gens(), &[vec![0, 1], vec![2, 0]]);
    }

    #[test]
    fn ord_ray_examples() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        assert_eq!(ord_ray(&ray(&[1, 1]), &m).unwrap(), 1);
        let a = ideal(&[&[2, 1], &[0, 3]]);
        assert_eq!(ord_ray(&ray(&[1, 1]), &a).unwrap(), 3);
        assert_eq!(ord_ray(&ray(&[1, 2]), &a).unwrap(), 4);
    }

    #[test]
    fn delta_coefficient_examples() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        let p2 = MonomialPair::new(m.clone(), q(2, 1)).unwrap();
        assert_eq!(delta_coefficient(&ray(&[1, 1]), &p2).unwrap(), q(1, 1));
        let p3 = MonomialPair::new(m.clone(), q(3, 1)).unwrap();
        assert_eq!(delta_coefficient(&ray(&[1, 1]), &p3).unwrap(), q(2, 1));
        assert_eq!(delta_coefficient(&ray(&[1, 2]), &p3).unwrap(), q(1, 1));
    }

    #[test]
    fn blowup_of_maximal_ideal_members() {
        let m: &[&[u64]] = &[&[1, 0], &[0, 1]];
        // c = n = 2: non-lc ideal trivial, multiplier ideal is the maximal ideal
        assert!(nlc_member(&[0, 0], &pair(m, q(2, 1))).unwrap());
        assert!(!mult_member(&[0, 0], &pair(m, q(2, 1))).unwrap());
        assert!(mult_member(&[1, 0], &pair(m, q(2, 1))).unwrap());
        // c > n
        assert!(!nlc_member(&[1, 0], &pair(m, q(3, 1))).unwrap());
        assert!(nlc_member(&[1, 1], &pair(m, q(3, 1))).unwrap());
        // c < n
        assert!(mult_member(&[0, 0], &pair(m, q(3, 2))).unwrap());
    }

    #[test]
    fn generator_reports() {
        let m: &[&[u64]] = &[&[1, 0], &[0, 1]];
        let r = nlc_generators(&pair(m, q(3, 1)), None);
        assert!(r.complete);
        assert_eq!(r.generators, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let r = nlc_generators(&pair(m, q(2, 1)), None);
        assert!(r.complete);
        assert_eq!(r.generators, vec![vec![0, 0]]);
        let r = mult_generators(&pair(m, q(2, 1)), None);
        assert_eq!(r.generators, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn jumping_numbers_examples() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            jumping_numbers(&m, &q(4, 1)).unwrap(),
            vec![q(2, 1), q(3, 1), q(4, 1)]
        );
        let principal = ideal(&[&[1]]);
        assert_eq!(
            jumping_numbers(&principal, &q(2, 1)).unwrap(),
            vec![q(1, 1), q(2, 1)]
        );
        let cusp = ideal(&[&[2, 0], &[0, 3]]);
        let jumps = jumping_numbers(&cusp, &q(1, 1)).unwrap();
        assert_eq!(jumps.first().unwrap(), &q(5, 6));
    }

    #[test]
    fn asymptotic_powers_stabilize_immediately() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        let rep = asymptotic_nlc(&GradedSystemSpec::Powers(m), &q(3, 1), &[1, 2, 6]).unwrap();
        assert_eq!(rep.stabilized_at, Some(1));
        assert_eq!(
            rep.maximal.generators,
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
    }

    #[test]
    fn asymptotic_ray_truncation() {
        let rep = asymptotic_nlc(
            &GradedSystemSpec::RayTruncation(ray(&[1, 1])),
            &q(3, 1),
            &[1, 2, 4, 8],
        )
        .unwrap();
        assert_eq!(rep.stabilized_at, Some(1));
        assert_eq!(
            rep.maximal.generators,
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
    }

    #[test]
    fn asymptotic_homogeneous_example() {
        let a = ideal(&[&[2, 0], &[0, 3]]);
        let rep = asymptotic_nlc(&GradedSystemSpec::Powers(a), &q(1, 1), &[1, 2]).unwrap();
        assert_eq!(rep.stabilized_at, Some(1));
    }

    #[test]
    fn graded_system_multiplicativity_small() {
        for spec in [
            GradedSystemSpec::Powers(ideal(&[&[2, 1], &[0, 3]])),
            GradedSystemSpec::RayTruncation(ray(&[1, 2])),
        ] {
            for m in 1..=3u64 {
                for l in 1..=3u64 {
                    let am = spec.member_ideal(m);
                    let al = spec.member_ideal(l);
                    let aml = spec.member_ideal(m + l);
                    let prod = am.product(&al).unwrap();
                    for g in prod.gens() {
                        assert!(aml.contains_exponent(g), "a_m * a_l not inside a_(m+l)");
                    }
                }
            }
        }
    }

    #[test]
    fn newton_polygon_of_staircase() {
        // (3,3) is dominated and (1,3) is on the segment (2,1)-(0,5)
        let a = ideal(&[&[4, 0], &[2, 1], &[1, 3], &[0, 5], &[3, 3]]);
        let hull = newton_polygon_vertices(&a);
        assert_eq!(hull, vec![(4, 0), (2, 1), (0, 5)]);
    }

    #[test]
    fn monotone_in_exponent() {
        let a: &[&[u64]] = &[&[2, 1], &[0, 3]];
        for v in [[0u64, 0], [1, 0], [2, 2], [0, 4]] {
            let big = nlc_member(&v, &pair(a, q(5, 2))).unwrap();
            let small = nlc_member(&v, &pair(a, q(3, 2))).unwrap();
            if big {
                assert!(small, "membership must not grow with the exponent");
            }
        }
    }
}
