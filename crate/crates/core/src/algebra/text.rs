//! Human-readable text form of polynomials and series, and its parser.
//!
//! Terms are written in ascending graded-lex order of the u-monomial, then of
//! the generator monomial, e.g. `1 - 2*b1*u1 + (1/2)*z^2*u1^2`. The parser
//! accepts any expression built from integers, generator names, `u1 … uk`,
//! `+ - * ^`, division by rational constants and parentheses.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::poly::{Poly, Rational};
use super::ring::Ring;
use super::series::MultiSeries;
use super::AlgebraError;

fn write_monomial(out: &mut String, names: &dyn Fn(usize) -> String, m: &Monomial) {
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&names(i));
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

/// Writes `sum c_i * m_i` where each term is a coefficient and a (possibly
/// empty) product of factors.
fn write_sum(f: &mut fmt::Formatter<'_>, terms: &[(Rational, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        let mag = c.abs();
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{mono}")?;
        } else if mag.is_integer() {
            write!(f, "{mag}*{mono}")?;
        } else {
            write!(f, "({mag})*{mono}")?;
        }
    }
    Ok(())
}

fn generator_names(ring: &Ring) -> impl Fn(usize) -> String + '_ {
    move |i| ring.generators()[i].name().to_string()
}

fn torus_names(i: usize) -> String {
    format!("u{}", i + 1)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = generator_names(self.ring());
        let terms: Vec<(Rational, String)> = self
            .raw()
            .iter()
            .map(|(m, c)| {
                let mut s = String::new();
                write_monomial(&mut s, &names, m);
                (c.clone(), s)
            })
            .collect();
        write_sum(f, &terms)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = generator_names(self.ring());
        let mut terms = Vec::new();
        for (um, coeff) in self.raw_terms() {
            for (gm, c) in coeff {
                let mut s = String::new();
                write_monomial(&mut s, &names, gm);
                write_monomial(&mut s, &torus_names, um);
                terms.push((c.clone(), s));
            }
        }
        write_sum(f, &terms)
    }
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O(u^{})", self.order() + 1)
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("`{s}` is not a rational number"));
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(AlgebraError::Parse(format!("`{s}` has zero denominator")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?),
    };
    Ok(r)
}

/// Parses a polynomial in the generators of `ring`.
pub fn parse_poly(ring: &Ring, s: &str) -> Result<Poly, AlgebraError> {
    let series = Parser::new(ring, 0, 0, s)?.parse()?;
    Ok(series.constant_term())
}

/// Parses a series in `u1 … u{nvars}` over `ring`; terms above `order` are
/// dropped.
pub fn parse_series(
    ring: &Ring,
    nvars: usize,
    order: u32,
    s: &str,
) -> Result<MultiSeries, AlgebraError> {
    Parser::new(ring, nvars, order, s)?.parse()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, AlgebraError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Int(BigInt::from_str(&digits).expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    nvars: usize,
    order: u32,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, nvars: usize, order: u32, s: &str) -> Result<Self, AlgebraError> {
        Ok(Parser {
            ring,
            nvars,
            order,
            tokens: tokenize(s)?,
            pos: 0,
        })
    }

    fn parse(mut self) -> Result<MultiSeries, AlgebraError> {
        if self.tokens.is_empty() {
            return Err(AlgebraError::Parse("empty expression".into()));
        }
        let v = self.expr()?;
        if self.pos != self.tokens.len() {
            return Err(AlgebraError::Parse(format!(
                "unexpected token {:?}",
                self.tokens[self.pos]
            )));
        }
        Ok(v)
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn constant(&self, r: Rational) -> MultiSeries {
        MultiSeries::constant(self.ring, self.nvars, self.order, &Poly::constant(self.ring, r))
    }

    fn expr(&mut self) -> Result<MultiSeries, AlgebraError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs)? } else { acc.sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiSeries, AlgebraError> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = acc.mul(&rhs)?;
            } else {
                let d = rhs
                    .is_homogeneous_of_degree(0)
                    .then(|| rhs.constant_term().as_constant())
                    .flatten()
                    .filter(|d| !d.is_zero())
                    .ok_or_else(|| {
                        AlgebraError::Parse("division only by nonzero rational constants".into())
                    })?;
                acc = acc.scale(&d.recip());
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiSeries, AlgebraError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiSeries, AlgebraError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| AlgebraError::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(AlgebraError::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiSeries, AlgebraError> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| AlgebraError::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        match tok {
            Token::Int(n) => Ok(self.constant(Rational::from_integer(n))),
            Token::Ident(name) => {
                if let Some(i) = self.ring.index_of(&name) {
                    let g = Poly::generator(self.ring, self.ring.generators()[i].name())?;
                    return Ok(MultiSeries::constant(self.ring, self.nvars, self.order, &g));
                }
                if super::ring::is_torus_variable(&name) {
                    let i: usize = name[1..]
                        .parse()
                        .map_err(|_| AlgebraError::Parse(format!("bad variable `{name}`")))?;
                    if i == 0 || i > self.nvars {
                        return Err(AlgebraError::Parse(format!(
                            "variable `{name}` out of range (series has {} variables)",
                            self.nvars
                        )));
                    }
                    return Ok(MultiSeries::variable(self.ring, self.nvars, self.order, i - 1));
                }
                Err(AlgebraError::UnknownGenerator(name))
            }
            Token::Op('(') => {
                let v = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(AlgebraError::Parse("expected `)`".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Token::Op(c) => Err(AlgebraError::Parse(format!("unexpected `{c}`"))),
        }
    }
}
