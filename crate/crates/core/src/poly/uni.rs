//! Dense univariate polynomials over the rationals.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly1 {
    /// Coefficients by ascending degree, no trailing zeros; empty = zero.
    coeffs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UniError {
    #[error("coefficient too large to factor exactly")]
    CoefficientOverflow,
}

impl Poly1 {
    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly1::new(vec![c])
    }

    pub fn one() -> Self {
        Poly1::constant(Rational::one())
    }

    pub fn var() -> Self {
        Poly1::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(deg: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly1::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> Rational {
        self.coeffs.get(deg).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &other.coeff(i));
        }
        Poly1::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &other.coeff(i));
        }
        Poly1::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly1::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Poly1::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly1::new(out)
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Poly1::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics only if `divisor` is zero.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let ddeg = divisor.degree().unwrap();
        let dlc = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = vec![
            Rational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = &rem.leading_coeff() / &dlc;
            let shift = rdeg - ddeg;
            quot[shift] = &quot[shift] + &factor;
            let piece = divisor.mul(&Poly1::monomial(shift, factor));
            rem = rem.sub(&piece);
        }
        (Poly1::new(quot), rem)
    }

    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divmod(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
            // keep coefficients small
            if !b.is_zero() {
                let inv = b.leading_coeff().recip();
                b = b.scale(&inv);
            }
        }
        if a.is_zero() {
            a
        } else {
            let inv = a.leading_coeff().recip();
            a.scale(&inv)
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly1::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from_int(i as i64))
            .collect();
        Poly1::new(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            self.clone()
        } else {
            self.div_exact(&g).expect("gcd divides")
        }
    }

    /// All rational roots with multiplicities, plus the root-free cofactor.
    ///
    /// Errors only when a cleared constant term is too large to factor.
    pub fn rational_roots(&self) -> Result<(Vec<(Rational, usize)>, Poly1), UniError> {
        if self.is_constant() {
            return Ok((Vec::new(), self.clone()));
        }
        let mut roots: Vec<(Rational, usize)> = Vec::new();
        let mut rest = self.clone();

        // root at zero
        let zero_mult = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zero_mult > 0 {
            roots.push((Rational::zero(), zero_mult));
            rest = Poly1::new(rest.coeffs[zero_mult..].to_vec());
        }

        if rest.is_constant() {
            return Ok((roots, rest));
        }

        let candidates = root_candidates(&rest.squarefree_part())?;
        for cand in candidates {
            if rest.is_constant() {
                break;
            }
            if !rest.eval(&cand).is_zero() {
                continue;
            }
            let linear = Poly1::new(vec![-&cand, Rational::one()]);
            let mut mult = 0;
            while let Some(q) = rest.div_exact(&linear) {
                rest = q;
                mult += 1;
            }
            roots.push((cand, mult));
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        Ok((roots, rest))
    }

    /// `true` iff the polynomial has no rational root (or is constant).
    pub fn no_rational_roots(&self) -> Result<bool, UniError> {
        Ok(self.rational_roots()?.0.is_empty())
    }
}

/// Candidate rational roots `p/q` of a squarefree polynomial: `p` divides the
/// cleared constant term and `q` divides the cleared leading term.
fn root_candidates(p: &Poly1) -> Result<Vec<Rational>, UniError> {
    // Clear denominators to an integer polynomial.
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let a0 = ints.first().cloned().unwrap_or_else(BigInt::zero);
    let an = ints.last().cloned().unwrap_or_else(BigInt::zero);
    debug_assert!(!a0.is_zero() && !an.is_zero());
    let ps = divisors(&a0.abs())?;
    let qs = divisors(&an.abs())?;
    let mut out = Vec::new();
    for p_ in &ps {
        for q_ in &qs {
            let r = Rational::new(p_.clone(), q_.clone()).unwrap();
            out.push(r.clone());
            out.push(-r);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn small_primes() -> &'static [u64] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        const CAP: usize = 1_000_000;
        let mut sieve = vec![true; CAP + 1];
        let mut primes = Vec::new();
        for p in 2..=CAP {
            if sieve[p] {
                primes.push(p as u64);
                let mut q = p * p;
                while q <= CAP {
                    sieve[q] = false;
                    q += p;
                }
            }
        }
        primes
    })
}

/// All positive divisors, via trial division by sieved primes plus a
/// primality check on any large leftover factor.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>, UniError> {
    debug_assert!(n.is_positive());
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            break;
        }
        if (&m % &pb).is_zero() {
            let mut e = 0;
            while (&m % &pb).is_zero() {
                m /= &pb;
                e += 1;
            }
            primes.push((pb, e));
        }
    }
    if m > BigInt::one() {
        let cap = BigInt::from(1_000_000u64);
        if &m <= &(&cap * &cap) {
            // below cap^2 with no prime factor <= cap: prime
            primes.push((m, 1));
        } else {
            let m64 = m.to_u64().ok_or(UniError::CoefficientOverflow)?;
            if is_prime_u64(m64) {
                primes.push((m, 1));
            } else {
                return Err(UniError::CoefficientOverflow);
            }
        }
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for base in &out {
            let mut acc = base.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = &acc * &p;
                next.push(acc.clone());
            }
        }
        out = next;
        if out.len() > 200_000 {
            return Err(UniError::CoefficientOverflow);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Resultant of two univariate polynomials.
pub fn resultant(p: &Poly1, q: &Poly1) -> Rational {
    fn go(p: &Poly1, q: &Poly1) -> Rational {
        if p.is_zero() || q.is_zero() {
            return Rational::zero();
        }
        let dp = p.degree().unwrap();
        let dq = q.degree().unwrap();
        if dp == 0 {
            return p.leading_coeff().pow(dq as u32);
        }
        if dq == 0 {
            return q.leading_coeff().pow(dp as u32);
        }
        let (_, r) = p.divmod(q);
        if r.is_zero() {
            return Rational::zero();
        }
        let dr = r.degree().unwrap();
        let sign = if (dp * dq) % 2 == 1 {
            -Rational::one()
        } else {
            Rational::one()
        };
        let lc = q.leading_coeff().pow((dp - dr) as u32);
        &(&sign * &lc) * &go(q, &r)
    }
    go(p, q)
}

/// Interpolates the unique polynomial of degree `< points.len()` through the
/// given (x, y) pairs; x values must be pairwise distinct.
pub fn interpolate(points: &[(Rational, Rational)]) -> Poly1 {
    let mut acc = Poly1::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Poly1::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&Poly1::new(vec![-xj, Rational::one()]));
            denom = &denom * &(xi - xj);
        }
        acc = acc.add(&basis.scale(&(yi / &denom)));
    }
    acc
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
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
            if deg == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                if deg == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", deg)?;
                }
            } else if deg == 1 {
                write!(f, "{}*t", mag)?;
            } else {
                write!(f, "{}*t^{}", mag, deg)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn poly(coeffs: &[i64]) -> Poly1 {
        Poly1::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    #[test]
    fn div_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let p = poly(&[-1, 0, 1]);
        let a = poly(&[-1, 1]);
        let b = poly(&[1, 1]);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.gcd(&a), a);
        assert_eq!(poly(&[2, 2]).gcd(&poly(&[3, 3])), poly(&[1, 1]));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // t^2 (t - 1/2)^2 (t + 3) (t^2 + 1)
        let p = Poly1::var()
            .pow(2)
            .mul(&Poly1::new(vec![q(-1, 2), q(1, 1)]).pow(2))
            .mul(&poly(&[3, 1]))
            .mul(&poly(&[1, 0, 1]));
        let (roots, rest) = p.rational_roots().unwrap();
        assert_eq!(
            roots,
            vec![
                (q(-3, 1), 1),
                (Rational::zero(), 2),
                (q(1, 2), 2),
            ]
        );
        assert_eq!(rest, poly(&[1, 0, 1]));
    }

    #[test]
    fn no_rational_roots_detected() {
        assert!(poly(&[-2, 0, 1]).no_rational_roots().unwrap()); // t^2 - 2
        assert!(!poly(&[-4, 0, 1]).no_rational_roots().unwrap()); // t^2 - 4
    }

    #[test]
    fn resultant_values() {
        // res(t^2 - 1, t - 2) = value of t^2 - 1 at 2, times sign/lc bookkeeping
        let r = resultant(&poly(&[-1, 0, 1]), &poly(&[-2, 1]));
        assert_eq!(r.abs(), Rational::from_int(3));
        // coprime quadratics have nonzero resultant
        assert!(!resultant(&poly(&[1, 0, 1]), &poly(&[-2, 0, 1])).is_zero());
        // common root makes it vanish
        assert!(resultant(&poly(&[-1, 0, 1]), &poly(&[-1, 1])).is_zero());
    }

    #[test]
    fn interpolation_recovers() {
        let p = Poly1::new(vec![q(1, 2), q(-3, 1), q(2, 1)]);
        let pts: Vec<_> = (0..3)
            .map(|i| {
                let x = Rational::from_int(i);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(interpolate(&pts), p);
    }
}
