//! Text input: polynomial expressions, divisor expressions, and monomial
//! generator lists.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := rational | var | factor '^' posint | '(' expr ')'
//! divisor := wterm ('+' wterm)*
//! wterm   := rational '*' '(' expr ')'
//! ```
//!
//! Rational literals are `p` or `p/q`; decimal notation is rejected so a
//! value like `0.5` must be written `1/2`. Curve expressions use the
//! variables `x`, `y`; monomial expressions use `x1..xn`, with `x`, `y`, `z`
//! as aliases for the first three.

use crate::curve::{CurveDivisor, CurveError, PlaneCurve};
use crate::monomial::{MonomialError, MonomialIdealGens};
use crate::poly::Poly2;
use crate::rational::Rational;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    NonRationalLiteral,
    UnknownVariable(String),
    NotAMonomial,
    Curve(CurveError),
    Monomial(MonomialError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "parse error at offset {}: {}", self.offset, msg),
            ParseErrorKind::NonRationalLiteral => write!(
                f,
                "parse error at offset {}: decimal notation is not accepted; write the exact fraction (e.g. 1/2 instead of 0.5)",
                self.offset
            ),
            ParseErrorKind::UnknownVariable(name) => {
                write!(f, "parse error at offset {}: unknown variable `{}`", self.offset, name)
            }
            ParseErrorKind::NotAMonomial => write!(
                f,
                "parse error at offset {}: a generator must be a single monic monomial",
                self.offset
            ),
            ParseErrorKind::Curve(e) => write!(f, "invalid divisor: {}", e),
            ParseErrorKind::Monomial(e) => write!(f, "invalid monomial ideal: {}", e),
        }
    }
}

impl std::error::Error for ParseError {}

/// Sparse polynomial in any number of variables; only used while parsing.
#[derive(Clone, PartialEq, Eq, Debug)]
struct PolyN {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PolyN {
    fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        PolyN { terms }
    }

    fn var(idx: usize) -> Self {
        let mut exps = vec![0u32; idx + 1];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Rational::one());
        PolyN { terms }
    }

    fn normalize_key(mut key: Vec<u32>) -> Vec<u32> {
        while key.last() == Some(&0) {
            key.pop();
        }
        key
    }

    fn add_term(&mut self, key: Vec<u32>, c: Rational) {
        let key = Self::normalize_key(key);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = PolyN::constant(Rational::zero());
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let n = k1.len().max(k2.len());
                let mut key = vec![0u32; n];
                for (i, slot) in key.iter_mut().enumerate() {
                    *slot = k1.get(i).copied().unwrap_or(0) + k2.get(i).copied().unwrap_or(0);
                }
                out.add_term(key, c1 * c2);
            }
        }
        out
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = PolyN::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn num_vars(&self) -> usize {
        self.terms.keys().map(|k| k.len()).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum VarSet {
    /// `x`, `y` only.
    Plane,
    /// `x1..xn` with `x`, `y`, `z` aliases.
    Affine,
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
    vars: VarSet,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, vars: VarSet) -> Self {
        Cursor {
            text: text.as_bytes(),
            pos: 0,
            vars,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError {
            kind: ParseErrorKind::Syntax(msg.to_string()),
            offset: self.pos,
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected `{}`", c as char))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        if self.text.get(self.pos) == Some(&b'.') {
            return Err(ParseError {
                kind: ParseErrorKind::NonRationalLiteral,
                offset: self.pos,
            });
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .to_string())
    }

    /// rational := '-'? digits ('/' digits)?
    fn rational(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let neg = self.eat(b'-');
        let numer = self.digits()?;
        let mut text = String::new();
        if neg {
            text.push('-');
        }
        text.push_str(&numer);
        if self.eat(b'/') {
            text.push('/');
            text.push_str(&self.digits()?);
        }
        text.parse::<Rational>().map_err(|e| ParseError {
            kind: ParseErrorKind::Syntax(e.to_string()),
            offset: self.pos,
        })
    }

    fn identifier(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a variable name");
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn var_index(&mut self, name: &str) -> Result<usize, ParseError> {
        let unknown = |pos: usize| ParseError {
            kind: ParseErrorKind::UnknownVariable(name.to_string()),
            offset: pos,
        };
        match self.vars {
            VarSet::Plane => match name {
                "x" => Ok(0),
                "y" => Ok(1),
                _ => Err(unknown(self.pos)),
            },
            VarSet::Affine => match name {
                "x" => Ok(0),
                "y" => Ok(1),
                "z" => Ok(2),
                _ => {
                    if let Some(rest) = name.strip_prefix('x') {
                        if let Ok(k) = rest.parse::<usize>() {
                            if k >= 1 && k <= 32 {
                                return Ok(k - 1);
                            }
                        }
                    }
                    Err(unknown(self.pos))
                }
            },
        }
    }

    fn posint(&mut self) -> Result<u32, ParseError> {
        let digits = self.digits()?;
        let n: u32 = digits
            .parse()
            .map_err(|_| ParseError {
                kind: ParseErrorKind::Syntax("exponent too large".to_string()),
                offset: self.pos,
            })?;
        if n == 0 {
            return self.err("exponent must be positive");
        }
        Ok(n)
    }

    fn factor(&mut self) -> Result<PolyN, ParseError> {
        let mut base = match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(b')')?;
                inner
            }
            Some(c) if c.is_ascii_digit() || c == b'-' => PolyN::constant(self.rational()?),
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.identifier()?;
                let idx = self.var_index(&name)?;
                PolyN::var(idx)
            }
            Some(b'.') => {
                return Err(ParseError {
                    kind: ParseErrorKind::NonRationalLiteral,
                    offset: self.pos,
                })
            }
            _ => return self.err("expected a rational, a variable, or `(`"),
        };
        while self.eat(b'^') {
            let e = self.posint()?;
            base = base.pow(e);
        }
        Ok(base)
    }

    fn term(&mut self) -> Result<PolyN, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<PolyN, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.add(&t);
            } else if self.peek() == Some(b'-') {
                self.bump();
                let t = self.term()?;
                acc = acc.sub(&t);
            } else {
                break;
            }
        }
        Ok(acc)
    }
}

fn polyn_to_poly2(p: &PolyN) -> Poly2 {
    let mut out = Poly2::zero();
    for (k, c) in &p.terms {
        let i = k.first().copied().unwrap_or(0);
        let j = k.get(1).copied().unwrap_or(0);
        out.add_term(i, j, c.clone());
    }
    out
}

/// Parses a polynomial in `x`, `y`.
pub fn parse_polynomial(text: &str) -> Result<Poly2, ParseError> {
    let mut cur = Cursor::new(text, VarSet::Plane);
    let p = cur.expr()?;
    if !cur.at_end() {
        return cur.err("unexpected trailing input");
    }
    Ok(polyn_to_poly2(&p))
}

/// Parses `c1*(poly1) + c2*(poly2) + ...` and validates the divisor.
pub fn parse_divisor(text: &str) -> Result<CurveDivisor, ParseError> {
    let mut cur = Cursor::new(text, VarSet::Plane);
    let mut parts = Vec::new();
    loop {
        let coeff = cur.rational()?;
        cur.expect(b'*')?;
        cur.expect(b'(')?;
        let poly = cur.expr()?;
        cur.expect(b')')?;
        let curve = PlaneCurve::new(polyn_to_poly2(&poly)).map_err(|e| ParseError {
            kind: ParseErrorKind::Curve(e),
            offset: cur.pos,
        })?;
        parts.push((curve, coeff));
        if !cur.eat(b'+') {
            break;
        }
    }
    if !cur.at_end() {
        return cur.err("unexpected trailing input");
    }
    CurveDivisor::new(parts).map_err(|e| ParseError {
        kind: ParseErrorKind::Curve(e),
        offset: text.len(),
    })
}

/// Parses a comma-separated list of monic monomials, e.g. `x^2*y, y^3`.
/// The dimension is the largest variable index used, or `dim_hint`.
pub fn parse_monomial_ideal(
    text: &str,
    dim_hint: Option<usize>,
) -> Result<MonomialIdealGens, ParseError> {
    let mut gens_n: Vec<PolyN> = Vec::new();
    let mut max_vars = dim_hint.unwrap_or(0);
    for chunk in text.split(',') {
        let mut cur = Cursor::new(chunk, VarSet::Affine);
        let p = cur.expr()?;
        if !cur.at_end() {
            return cur.err("unexpected trailing input");
        }
        if p.terms.len() != 1 {
            return Err(ParseError {
                kind: ParseErrorKind::NotAMonomial,
                offset: 0,
            });
        }
        let (_, coeff) = p.terms.iter().next().unwrap();
        if !coeff.is_one() {
            return Err(ParseError {
                kind: ParseErrorKind::NotAMonomial,
                offset: 0,
            });
        }
        max_vars = max_vars.max(p.num_vars());
        gens_n.push(p);
    }
    if max_vars == 0 {
        max_vars = 1;
    }
    let gens: Vec<Vec<u64>> = gens_n
        .iter()
        .map(|p| {
            let key = p.terms.keys().next().unwrap();
            (0..max_vars)
                .map(|i| key.get(i).copied().unwrap_or(0) as u64)
                .collect()
        })
        .collect();
    MonomialIdealGens::new(max_vars, gens).map_err(|e| ParseError {
        kind: ParseErrorKind::Monomial(e),
        offset: 0,
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

    #[test]
    fn polynomial_grammar() {
        assert_eq!(
            parse_polynomial("y^2 - x^3").unwrap(),
            y().pow(2).sub(&x().pow(3))
        );
        assert_eq!(parse_polynomial("x").unwrap(), x());
        assert_eq!(
            parse_polynomial("3/2*x*y + 1").unwrap(),
            x().mul(&y()).scale(&Rational::ratio(3, 2)).add(&Poly2::one())
        );
        assert_eq!(
            parse_polynomial("(x + y)^2").unwrap(),
            x().add(&y()).pow(2)
        );
    }

    #[test]
    fn malformed_polynomial_reports_offset() {
        let err = parse_polynomial("y^2 -").unwrap_err();
        assert_eq!(err.offset, 5);
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn decimals_rejected() {
        let err = parse_polynomial("0.5*x").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NonRationalLiteral);
        let err = parse_divisor("0.5*(x)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NonRationalLiteral);
    }

    #[test]
    fn divisor_grammar_and_validation() {
        let d = parse_divisor("1*(x) + 1*(y^2 - x^3)").unwrap();
        assert_eq!(d.components().len(), 2);
        assert!(matches!(
            parse_divisor("1*(x) + 1*(x)").unwrap_err().kind,
            ParseErrorKind::Curve(CurveError::CommonFactor)
        ));
        assert!(matches!(
            parse_divisor("1*(x^2)").unwrap_err().kind,
            ParseErrorKind::Curve(CurveError::NotSquarefree)
        ));
    }

    #[test]
    fn divisor_round_trip() {
        for text in [
            "1*(x) + 1*(x^3 - y^2)",
            "3/2*(x + y) + 2/3*(y)",
            "1*(x*y - 1)",
        ] {
            let d = parse_divisor(text).unwrap();
            let printed = d.to_string();
            let reparsed = parse_divisor(&printed).unwrap();
            assert_eq!(d, reparsed, "round trip failed for {}", printed);
        }
    }

    #[test]
    fn monomial_ideal_parsing() {
        let a = parse_monomial_ideal("x^2*y, y^3", None).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.gens(), &[vec![0, 3], vec![2, 1]]);
        let b = parse_monomial_ideal("x1*x3, x2^2", None).unwrap();
        assert_eq!(b.dim(), 3);
        let c = parse_monomial_ideal("x", Some(2)).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(parse_monomial_ideal("x + y", None).is_err());
        assert!(parse_monomial_ideal("2*x", None).is_err());
    }

    #[test]
    fn unknown_variables_rejected() {
        assert!(matches!(
            parse_polynomial("z + 1").unwrap_err().kind,
            ParseErrorKind::UnknownVariable(_)
        ));
    }
}
