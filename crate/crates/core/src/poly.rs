//! Homogeneous polynomials over `F_p` and the ambient ring description.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{PrimeField, DEFAULT_PRIME};
use crate::monomial::{grevlex, Exponent, Monomial};

/// The ambient ring `S = F_p[x_1, ..., x_n]`, standard graded, grevlex ordered.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    names: Vec<String>,
}

impl Ring {
    pub fn new(p: u32, names: Vec<String>) -> Result<Arc<Ring>> {
        let field = PrimeField::new(p)?;
        if names.is_empty() {
            return Err(Error::Structural("a ring needs at least one variable".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if !is_identifier(a) {
                return Err(Error::Structural(format!("invalid variable name '{a}'")));
            }
            if names[..i].contains(a) {
                return Err(Error::Structural(format!("duplicate variable name '{a}'")));
            }
        }
        Ok(Arc::new(Ring { field, names }))
    }

    /// `F_p[x1, ..., xn]`
    pub fn with_vars(p: u32, n: usize) -> Result<Arc<Ring>> {
        Ring::new(p, (1..=n).map(|i| format!("x{i}")).collect())
    }

    /// `F_32003[x1, ..., xn]`
    pub fn standard(n: usize) -> Arc<Ring> {
        Ring::with_vars(DEFAULT_PRIME, n).expect("default ring")
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(1, Monomial::var(self.nvars(), i))
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// Parse a polynomial in the textual form produced by [`Polynomial::render`].
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(self, text)
    }

    /// Parse, panicking on failure. Intended for literals in tests and examples.
    pub fn poly(&self, text: &str) -> Polynomial {
        self.parse(text).unwrap_or_else(|e| panic!("bad polynomial literal '{text}': {e}"))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A homogeneous polynomial: terms strictly descending in grevlex, no zero
/// coefficients, all of one total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(u32, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = ring.field.from_i64(c);
        Self::monomial(c, Monomial::one(ring.nvars()))
    }

    pub fn monomial(coeff: u32, mono: Monomial) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            Polynomial { terms: vec![(coeff, mono)] }
        }
    }

    /// Merge duplicates, drop zeros and sort. Rejects inhomogeneous input.
    pub fn normalize(ring: &Ring, mut raw: Vec<(u32, Monomial)>) -> Result<Self> {
        let f = ring.field;
        for (c, m) in raw.iter_mut() {
            if m.nvars() != ring.nvars() {
                return Err(Error::Structural("monomial from a different ring".into()));
            }
            *c %= f.characteristic();
        }
        raw.sort_by(|a, b| grevlex(&b.1, &a.1));
        let mut terms: Vec<(u32, Monomial)> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            match terms.last_mut() {
                Some(last) if last.1 == m => last.0 = f.add(last.0, c),
                _ => terms.push((c, m)),
            }
        }
        terms.retain(|t| t.0 != 0);
        if let Some(d) = terms.first().map(|t| t.1.degree()) {
            if terms.iter().any(|t| t.1.degree() != d) {
                return Err(Error::Inhomogeneous(format!(
                    "terms of degrees {} and {}",
                    d,
                    terms.iter().find(|t| t.1.degree() != d).unwrap().1.degree()
                )));
            }
        }
        Ok(Polynomial { terms })
    }

    /// Trusted constructor for already canonical term lists.
    pub(crate) fn from_sorted_terms(terms: Vec<(u32, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].1 > w[1].1));
        debug_assert!(terms.iter().all(|t| t.0 != 0));
        Polynomial { terms }
    }

    #[inline]
    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1.degree())
    }

    pub fn leading(&self) -> Option<&(u32, Monomial)> {
        self.terms.first()
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn add(&self, other: &Polynomial, ring: &Ring) -> Result<Polynomial> {
        let mut raw = self.terms.clone();
        raw.extend(other.terms.iter().cloned());
        Polynomial::normalize(ring, raw)
    }

    pub fn sub(&self, other: &Polynomial, ring: &Ring) -> Result<Polynomial> {
        self.add(&other.neg(ring), ring)
    }

    pub fn neg(&self, ring: &Ring) -> Polynomial {
        self.scale(ring.field.neg(1), ring)
    }

    pub fn scale(&self, c: u32, ring: &Ring) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(a, m)| (ring.field.mul(*a, c), m.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, c: u32, mono: &Monomial, ring: &Ring) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        // multiplication by a monomial preserves the order
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (ring.field.mul(*a, c), m.mul(mono)))
                .collect(),
        }
    }

    /// Product of homogeneous polynomials; degrees add.
    pub fn mul(&self, other: &Polynomial, ring: &Ring) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                raw.push((ring.field.mul(*a, *b), m.mul(n)));
            }
        }
        Polynomial::normalize(ring, raw).expect("product of homogeneous polynomials")
    }

    pub fn pow(&self, e: u32, ring: &Ring) -> Polynomial {
        let mut acc = Polynomial::constant(ring, 1);
        for _ in 0..e {
            acc = acc.mul(self, ring);
        }
        acc
    }

    /// Canonical text: descending grevlex, coefficients as least nonnegative
    /// residues, unit coefficients omitted, e.g. `3*x1^2 + 2*x1*x2`.
    pub fn render(&self, ring: &Ring) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, m)| {
                if m.is_one() {
                    c.to_string()
                } else if *c == 1 {
                    m.render(&ring.names)
                } else {
                    format!("{}*{}", c, m.render(&ring.names))
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Polynomial, &'a Ring);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, ring)
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

impl Lexer<'_> {
    fn next(&mut self) -> Result<Option<(usize, Tok)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'0'..=b'9' => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Num(s.parse().map_err(|_| Error::Parse {
                    col: start + 1,
                    msg: format!("number '{s}' too large"),
                })?)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
            }
            _ => {
                return Err(Error::Parse {
                    col: start + 1,
                    msg: format!("unexpected character '{}'", c as char),
                })
            }
        };
        Ok(Some((start + 1, tok)))
    }
}

fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut lex = Lexer { src: text.as_bytes(), pos: 0 };
    let mut toks = Vec::new();
    while let Some(t) = lex.next()? {
        toks.push(t);
    }
    let end_col = text.len() + 1;
    if toks.is_empty() {
        return Err(Error::Parse { col: 1, msg: "empty polynomial".into() });
    }
    let f = ring.field;
    let n = ring.nvars();
    let mut raw = Vec::new();
    let mut i = 0;
    let mut first = true;
    while i < toks.len() {
        let mut sign = 1i64;
        match &toks[i].1 {
            Tok::Plus | Tok::Minus => {
                if toks[i].1 == Tok::Minus {
                    sign = -1;
                }
                i += 1;
            }
            _ if !first => {
                return Err(Error::Parse { col: toks[i].0, msg: "expected '+' or '-'".into() })
            }
            _ => {}
        }
        first = false;
        // term := factor ('*' factor)*
        let mut coeff = f.from_i64(sign);
        let mut exps = vec![0 as Exponent; n];
        loop {
            let Some((col, tok)) = toks.get(i) else {
                return Err(Error::Parse { col: end_col, msg: "expected a factor".into() });
            };
            match tok {
                Tok::Num(v) => {
                    coeff = f.mul(coeff, (*v % f.characteristic() as u64) as u32);
                    i += 1;
                }
                Tok::Ident(name) => {
                    let Some(v) = ring.var_index(name) else {
                        return Err(Error::Parse {
                            col: *col,
                            msg: format!("unknown variable '{name}'"),
                        });
                    };
                    i += 1;
                    let mut e = 1u64;
                    if matches!(toks.get(i), Some((_, Tok::Caret))) {
                        i += 1;
                        match toks.get(i) {
                            Some((_, Tok::Num(v))) => {
                                e = *v;
                                i += 1;
                            }
                            Some((c, _)) => {
                                return Err(Error::Parse { col: *c, msg: "expected exponent".into() })
                            }
                            None => {
                                return Err(Error::Parse {
                                    col: end_col,
                                    msg: "expected exponent".into(),
                                })
                            }
                        }
                    }
                    let total = exps[v] as u64 + e;
                    exps[v] = Exponent::try_from(total).map_err(|_| Error::Parse {
                        col: *col,
                        msg: "exponent overflow".into(),
                    })?;
                }
                _ => return Err(Error::Parse { col: *col, msg: "expected a factor".into() }),
            }
            if matches!(toks.get(i), Some((_, Tok::Star))) {
                i += 1;
            } else {
                break;
            }
        }
        raw.push((coeff, Monomial::from_exponents(&exps)));
    }
    Polynomial::normalize(ring, raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Arc<Ring> {
        Ring::standard(n)
    }

    #[test]
    fn cancellation_and_sorting() {
        let r = ring(2);
        let x1 = Monomial::var(2, 0);
        let x2 = Monomial::var(2, 1);
        let p = Polynomial::normalize(&r, vec![(1, x1.clone()), (r.field().neg(1), x1.clone())]);
        assert!(p.unwrap().is_zero());
        let p = Polynomial::normalize(&r, vec![(2, x2.clone()), (3, x1.clone())]).unwrap();
        assert_eq!(p.render(&r), "3*x1 + 2*x2");
        let x1x2 = x1.mul(&x2);
        assert!(matches!(
            Polynomial::normalize(&r, vec![(1, x1), (1, x1x2)]),
            Err(Error::Inhomogeneous(_))
        ));
    }

    #[test]
    fn products() {
        let r = ring(2);
        let a = r.poly("x1 + x2");
        let b = r.poly("x1 - x2");
        assert_eq!(a.mul(&b, &r), r.poly("x1^2 - x2^2"));
        assert!(a.mul(&Polynomial::zero(), &r).is_zero());
        let r2 = Ring::with_vars(2, 2).unwrap();
        let s = r2.poly("x1 + x2");
        assert_eq!(s.mul(&s, &r2).render(&r2), "x1^2 + x2^2");
    }

    #[test]
    fn render_uses_least_residues() {
        let r = ring(4);
        assert_eq!(r.poly("x1*x3 - x2^2").render(&r), "32002*x2^2 + x1*x3");
        assert_eq!(r.poly("3*x1^2 + 2*x1*x2").render(&r), "3*x1^2 + 2*x1*x2");
        assert_eq!(r.poly("0").render(&r), "0");
        assert_eq!(r.poly("-1").render(&r), "32002");
        assert_eq!(r.poly("2*x1*x1").render(&r), "2*x1^2");
    }

    #[test]
    fn parse_errors_have_columns() {
        let r = ring(2);
        match r.parse("x1 + y") {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 6),
            other => panic!("{other:?}"),
        }
        match r.parse("x1 x2") {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(r.parse("x1 + x2*x1"), Err(Error::Inhomogeneous(_))));
        assert!(r.parse("x1 +").is_err());
        assert!(r.parse("").is_err());
    }

    #[test]
    fn ring_validation() {
        assert!(Ring::new(32003, vec!["a".into(), "a".into()]).is_err());
        assert!(Ring::new(32003, vec![]).is_err());
        assert!(Ring::new(32004, vec!["a".into()]).is_err());
        assert!(Ring::new(5, vec!["1a".into()]).is_err());
    }
}
