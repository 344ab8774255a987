//! Sparse bivariate polynomials over the rationals.
//!
//! Terms are keyed by exponent pairs `(i, j)` for `x^i y^j`. The same type
//! also serves as local chart coordinates `(s, t)` in the blow-up engine;
//! [`Poly2::blowup_a`] and [`Poly2::blowup_b`] are the monomial substitutions
//! `(u, v) = (s, s t)` and `(u, v) = (s t, t)` followed by division by the
//! exceptional power.

use super::uni::Poly1;
use crate::rational::Rational;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly2::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        Poly2::constant(Rational::one())
    }

    pub fn var_x() -> Self {
        Poly2::monomial(1, 0, Rational::one())
    }

    pub fn var_y() -> Self {
        Poly2::monomial(0, 1, Rational::one())
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut p = Poly2::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut p = Poly2::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Order of vanishing at the origin.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly2 {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(&k, c)| (k, c * factor)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly2::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    /// Product, truncated to x-degree below `x_cap`.
    pub fn mul_trunc_x(&self, other: &Self, x_cap: u32) -> Self {
        let mut out = Poly2::zero();
        for (&(i1, j1), c1) in &self.terms {
            if i1 >= x_cap {
                continue;
            }
            for (&(i2, j2), c2) in &other.terms {
                if i1 + i2 >= x_cap {
                    continue;
                }
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn truncate_x(&self, x_cap: u32) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, _), _)| i < x_cap)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly2::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc = &acc + &(&(c * &x.pow(i)) * &y.pow(j));
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        let mut out = Poly2::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c * &Rational::from_int(i as i64));
            }
        }
        out
    }

    pub fn partial_y(&self) -> Self {
        let mut out = Poly2::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * &Rational::from_int(j as i64));
            }
        }
        out
    }

    pub fn gradient_at(&self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        (self.partial_x().eval(x, y), self.partial_y().eval(x, y))
    }

    /// General substitution `x -> px, y -> py`.
    pub fn subst(&self, px: &Poly2, py: &Poly2) -> Self {
        self.subst_impl(px, py, None)
    }

    /// Substitution truncated to x-degree `< x_cap` throughout.
    pub fn subst_trunc(&self, px: &Poly2, py: &Poly2, x_cap: u32) -> Self {
        self.subst_impl(px, py, Some(x_cap))
    }

    fn subst_impl(&self, px: &Poly2, py: &Poly2, cap: Option<u32>) -> Self {
        let maybe_trunc = |p: Poly2| match cap {
            Some(c) => p.truncate_x(c),
            None => p,
        };
        let mul = |a: &Poly2, b: &Poly2| match cap {
            Some(c) => a.mul_trunc_x(b, c),
            None => a.mul(b),
        };
        // power tables
        let max_i = self.deg_x().unwrap_or(0);
        let max_j = self.deg_y().unwrap_or(0);
        let mut xs = Vec::with_capacity(max_i as usize + 1);
        xs.push(Poly2::one());
        for _ in 0..max_i {
            let next = mul(xs.last().unwrap(), px);
            xs.push(next);
        }
        let mut ys = Vec::with_capacity(max_j as usize + 1);
        ys.push(Poly2::one());
        for _ in 0..max_j {
            let next = mul(ys.last().unwrap(), py);
            ys.push(next);
        }
        let mut out = Poly2::zero();
        for (&(i, j), c) in &self.terms {
            let term = mul(&xs[i as usize], &ys[j as usize]).scale(c);
            out = out.add(&term);
        }
        maybe_trunc(out)
    }

    /// Translation `x -> x + a, y -> y + b`.
    pub fn shift(&self, a: &Rational, b: &Rational) -> Self {
        let px = Poly2::from_terms([((0, 0), a.clone()), ((1, 0), Rational::one())]);
        let py = Poly2::from_terms([((0, 0), b.clone()), ((0, 1), Rational::one())]);
        self.subst(&px, &py)
    }

    /// Strict transform in the chart `(u, v) = (s, s t)`:
    /// `u^i v^j -> s^(i+j-m) t^j` where `m` is the multiplicity at the origin.
    pub fn blowup_a(&self, m: u32) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    debug_assert!(i + j >= m);
                    ((i + j - m, j), c.clone())
                })
                .collect(),
        }
    }

    /// Strict transform in the chart `(u, v) = (s t, t)`:
    /// `u^i v^j -> s^i t^(i+j-m)`.
    pub fn blowup_b(&self, m: u32) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    debug_assert!(i + j >= m);
                    ((i, i + j - m), c.clone())
                })
                .collect(),
        }
    }

    /// Restriction to the line `x = 0`, as a polynomial in `y`.
    pub fn on_x_zero(&self) -> Poly1 {
        let deg = self.deg_y().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            if i == 0 {
                coeffs[j as usize] = c.clone();
            }
        }
        Poly1::new(coeffs)
    }

    /// Restriction to the line `y = 0`, as a polynomial in `x`.
    pub fn on_y_zero(&self) -> Poly1 {
        let deg = self.deg_x().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                coeffs[i as usize] = c.clone();
            }
        }
        Poly1::new(coeffs)
    }

    /// Specialization `x = a`, as a polynomial in `y`.
    pub fn eval_x(&self, a: &Rational) -> Poly1 {
        let deg = self.deg_y().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[j as usize] = &coeffs[j as usize] + &(c * &a.pow(i));
        }
        Poly1::new(coeffs)
    }

    /// Specialization `y = b`, as a polynomial in `x`.
    pub fn eval_y(&self, b: &Rational) -> Poly1 {
        let deg = self.deg_x().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[i as usize] = &coeffs[i as usize] + &(c * &b.pow(j));
        }
        Poly1::new(coeffs)
    }

    /// Viewed as a polynomial in `x` with coefficients in `Q[y]`.
    pub fn x_coeffs(&self) -> Vec<Poly1> {
        let deg = match self.deg_x() {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![Poly1::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let mut coeffs = out[i as usize].coeffs().to_vec();
            if coeffs.len() <= j as usize {
                coeffs.resize(j as usize + 1, Rational::zero());
            }
            coeffs[j as usize] = &coeffs[j as usize] + c;
            out[i as usize] = Poly1::new(coeffs);
        }
        out
    }

    /// Substitutes univariate polynomials for both variables.
    pub fn subst_line(&self, px: &Poly1, py: &Poly1) -> Poly1 {
        let max_i = self.deg_x().unwrap_or(0);
        let max_j = self.deg_y().unwrap_or(0);
        let mut xs = vec![Poly1::one()];
        for _ in 0..max_i {
            xs.push(xs.last().unwrap().mul(px));
        }
        let mut ys = vec![Poly1::one()];
        for _ in 0..max_j {
            ys.push(ys.last().unwrap().mul(py));
        }
        let mut out = Poly1::zero();
        for (&(i, j), c) in &self.terms {
            out = out.add(&xs[i as usize].mul(&ys[j as usize]).scale(c));
        }
        out
    }

    /// Viewed as a polynomial in `y` with coefficients in `Q[x]`.
    pub fn y_coeffs(&self) -> Vec<Poly1> {
        let deg = match self.deg_y() {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![Poly1::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let mut coeffs = out[j as usize].coeffs().to_vec();
            if coeffs.len() <= i as usize {
                coeffs.resize(i as usize + 1, Rational::zero());
            }
            coeffs[i as usize] = &coeffs[i as usize] + c;
            out[j as usize] = Poly1::new(coeffs);
        }
        out
    }

    pub fn from_y_coeffs(coeffs: &[Poly1]) -> Self {
        let mut out = Poly2::zero();
        for (j, p) in coeffs.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        out
    }

    /// Leading term in graded lex order with `x > y`.
    pub fn leading_term_glex(&self) -> Option<((u32, u32), Rational)> {
        self.terms
            .iter()
            .max_by(|(&(i1, j1), _), (&(i2, j2), _)| {
                (i1 + j1, i1).cmp(&(i2 + j2, i2))
            })
            .map(|(&k, c)| (k, c.clone()))
    }

    /// Scales so the graded-lex leading coefficient is 1.
    pub fn normalize_glex(&self) -> Self {
        match self.leading_term_glex() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.recip()),
        }
    }

    /// The top-degree form evaluated at `(lambda, 1)`; nonzero means the
    /// shear `x -> x + lambda y` gives full y-degree (constant leading
    /// y-coefficient).
    pub fn top_form_at(&self, lambda: &Rational) -> Rational {
        let d = match self.total_degree() {
            None => return Rational::zero(),
            Some(d) => d,
        };
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            if i + j == d {
                acc = &acc + &(c * &lambda.pow(i));
            }
        }
        acc
    }

    /// Shear `x -> x + lambda y`.
    pub fn shear(&self, lambda: &Rational) -> Self {
        if lambda.is_zero() {
            return self.clone();
        }
        let px = Poly2::from_terms([((1, 0), Rational::one()), ((0, 1), lambda.clone())]);
        self.subst(&px, &Poly2::var_y())
    }

    /// Exact division; `None` when not divisible.
    pub fn div_exact(&self, divisor: &Poly2) -> Option<Poly2> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly2::zero());
        }
        let d_y = divisor.y_coeffs();
        let ddeg = d_y.len() - 1;
        let dlc = d_y.last().unwrap().clone();
        let mut rem = self.y_coeffs();
        let mut quot: Vec<Poly1> = Vec::new();
        loop {
            while rem.last().map(|p| p.is_zero()).unwrap_or(false) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
            let rdeg = rem.len() - 1;
            if rdeg < ddeg {
                return None;
            }
            let q = rem[rdeg].div_exact(&dlc)?;
            let shift = rdeg - ddeg;
            if quot.len() <= shift {
                quot.resize(shift + 1, Poly1::zero());
            }
            quot[shift] = quot[shift].add(&q);
            for (k, dc) in d_y.iter().enumerate() {
                rem[k + shift] = rem[k + shift].sub(&dc.mul(&q));
            }
        }
        Some(Poly2::from_y_coeffs(&quot))
    }

    /// Greatest common divisor, normalized to graded-lex leading coefficient 1.
    pub fn gcd(&self, other: &Poly2) -> Poly2 {
        fn content_y(p: &Poly2) -> Poly1 {
            let mut acc = Poly1::zero();
            for c in p.y_coeffs() {
                acc = acc.gcd(&c);
            }
            acc
        }
        fn go(a: &Poly2, b: &Poly2) -> Poly2 {
            if a.is_zero() {
                return b.clone();
            }
            if b.is_zero() {
                return a.clone();
            }
            let (lo, hi) = if a.deg_y().unwrap() <= b.deg_y().unwrap() {
                (a, b)
            } else {
                (b, a)
            };
            if lo.deg_y().unwrap() == 0 {
                // lo is a polynomial in x alone
                let lo1 = lo.on_y_zero();
                let g = lo1.gcd(&content_y(hi));
                return Poly2::from_y_coeffs(&[g]);
            }
            let ca = content_y(a);
            let cb = content_y(b);
            let cg = ca.gcd(&cb);
            let pa = a
                .div_exact(&Poly2::from_y_coeffs(&[ca]))
                .expect("content divides");
            let pb = b
                .div_exact(&Poly2::from_y_coeffs(&[cb]))
                .expect("content divides");
            // primitive Euclid in (Q[x])[y] via pseudo-remainders
            let mut f = pa;
            let mut g = pb;
            loop {
                if g.is_zero() {
                    break;
                }
                if g.deg_y().unwrap() == 0 {
                    // primitive and y-degree zero: the primitive gcd is 1
                    f = Poly2::one();
                    break;
                }
                if f.deg_y().unwrap() < g.deg_y().unwrap() {
                    std::mem::swap(&mut f, &mut g);
                    continue;
                }
                let r = pseudo_rem(&f, &g);
                f = g;
                g = match r {
                    None => Poly2::zero(),
                    Some(r) => {
                        let cr = content_y(&r);
                        if cr.is_zero() {
                            Poly2::zero()
                        } else {
                            r.div_exact(&Poly2::from_y_coeffs(&[cr])).unwrap()
                        }
                    }
                };
            }
            let prim = f;
            Poly2::from_y_coeffs(&[cg]).mul(&prim)
        }
        fn pseudo_rem(f: &Poly2, g: &Poly2) -> Option<Poly2> {
            let mut fy = f.y_coeffs();
            let gy = g.y_coeffs();
            let gdeg = gy.len() - 1;
            let glc = gy.last().unwrap().clone();
            loop {
                while fy.last().map(|p| p.is_zero()).unwrap_or(false) {
                    fy.pop();
                }
                if fy.is_empty() {
                    return None;
                }
                let fdeg = fy.len() - 1;
                if fdeg < gdeg {
                    return Some(Poly2::from_y_coeffs(&fy));
                }
                let flc = fy[fdeg].clone();
                let shift = fdeg - gdeg;
                // multiply f through by glc, then subtract flc * y^shift * g
                for p in fy.iter_mut() {
                    *p = p.mul(&glc);
                }
                for (k, gc) in gy.iter().enumerate() {
                    fy[k + shift] = fy[k + shift].sub(&gc.mul(&flc));
                }
            }
        }
        let g = go(self, other);
        g.normalize_glex()
    }

    /// Squarefree over Q: no repeated factor.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() || self.is_constant() {
            return false;
        }
        let px = self.partial_x();
        let py = self.partial_y();
        let d1 = if px.is_zero() {
            self.clone()
        } else {
            self.gcd(&px)
        };
        let d = if py.is_zero() { d1 } else { d1.gcd(&py) };
        d.is_constant()
    }
}

/// Resultant with respect to `y`, computed by specialization at sample points
/// where neither leading coefficient drops, followed by interpolation.
pub fn resultant_y(f: &Poly2, g: &Poly2) -> Poly1 {
    let dy_f = f.deg_y().unwrap_or(0);
    let dy_g = g.deg_y().unwrap_or(0);
    assert!(dy_f > 0 && dy_g > 0, "resultant_y needs positive y-degrees");
    let dx_f = f.deg_x().unwrap_or(0);
    let dx_g = g.deg_x().unwrap_or(0);
    let bound = (dy_f * dx_g + dy_g * dx_f) as usize;
    let fy = f.y_coeffs();
    let gy = g.y_coeffs();
    let lc_f = fy.last().unwrap().clone();
    let lc_g = gy.last().unwrap().clone();
    let mut samples = Vec::with_capacity(bound + 1);
    let mut a = 0i64;
    while samples.len() <= bound {
        let x = Rational::from_int(a);
        if !lc_f.eval(&x).is_zero() && !lc_g.eval(&x).is_zero() {
            let r = super::uni::resultant(&f.eval_x(&x), &g.eval_x(&x));
            samples.push((x, r));
        }
        a = if a >= 0 { -(a + 1) } else { -a };
    }
    super::uni::interpolate(&samples)
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // graded lex, descending, x > y
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by(|&(i1, j1), &(i2, j2)| (i2 + j2, i2).cmp(&(i1 + j1, i1)));
        let mut first = true;
        for (i, j) in keys {
            let c = self.coeff(i, j);
            let (sign, mag) = if c.is_negative() {
                ("-", -&c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                pieces.push(mag.to_string());
            }
            if i > 0 {
                pieces.push(if i == 1 {
                    "x".to_string()
                } else {
                    format!("x^{}", i)
                });
            }
            if j > 0 {
                pieces.push(if j == 1 {
                    "y".to_string()
                } else {
                    format!("y^{}", j)
                });
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn x() -> Poly2 {
        Poly2::var_x()
    }

    fn y() -> Poly2 {
        Poly2::var_y()
    }

    /// y^2 - x^3
    fn cusp() -> Poly2 {
        y().pow(2).sub(&x().pow(3))
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = cusp();
        assert_eq!(p.eval(&q(1), &q(1)), q(0));
        assert_eq!(p.eval(&q(2), &q(3)), q(1));
        assert_eq!(p.total_degree(), Some(3));
        assert_eq!(p.min_total_degree(), Some(2));
    }

    #[test]
    fn blowup_charts() {
        // y^2 - x^3 has multiplicity 2; chart a gives t^2 - s
        let p = cusp();
        let a = p.blowup_a(2);
        assert_eq!(a, y().pow(2).sub(&x()));
        // chart b gives 1 - s^3 t
        let b = p.blowup_b(2);
        assert_eq!(b, Poly2::one().sub(&x().pow(3).mul(&y())));
    }

    #[test]
    fn exact_division() {
        let p = x().mul(&y()).add(&y().pow(2)); // y(x + y)
        let d = x().add(&y());
        assert_eq!(p.div_exact(&d).unwrap(), y());
        assert!(p.div_exact(&x()).is_none());
    }

    #[test]
    fn gcd_bivariate() {
        let a = x().add(&y()); // x + y
        let p = a.mul(&x()); // x(x+y)
        let r = a.mul(&y()); // y(x+y)
        assert_eq!(p.gcd(&r), a.normalize_glex());
        assert!(x().gcd(&y()).is_constant());
    }

    #[test]
    fn squarefree_checks() {
        assert!(cusp().is_squarefree());
        assert!(x().mul(&y()).is_squarefree());
        assert!(!x().pow(2).is_squarefree());
        let tac = y().pow(2).sub(&x().pow(4)); // (y-x^2)(y+x^2), squarefree
        assert!(tac.is_squarefree());
        assert!(!tac.mul(&y().sub(&x().pow(2))).is_squarefree());
    }

    #[test]
    fn resultant_y_of_cusp_and_line() {
        // res_y(y^2 - x^3, y - x) = x^2 - x^3
        let r = resultant_y(&cusp(), &y().sub(&x()));
        let expected = Poly1::new(vec![q(0), q(0), q(1), q(-1)]);
        assert_eq!(r, expected);
    }

    #[test]
    fn shear_restores_y_degree() {
        let p = x().pow(2); // no y at all
        let sheared = p.shear(&q(1)); // (x + y)^2
        assert_eq!(sheared.deg_y(), Some(2));
        assert!(!p.top_form_at(&q(1)).is_zero());
        assert!(p.top_form_at(&q(0)).is_zero());
    }

    #[test]
    fn display_round_shape() {
        assert_eq!(cusp().to_string(), "-x^3 + y^2");
        assert_eq!(cusp().normalize_glex().to_string(), "x^3 - y^2");
        assert_eq!(Poly2::zero().to_string(), "0");
    }
}
