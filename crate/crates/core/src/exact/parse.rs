//! Small expression reader for polynomial data: `+ - * / ^`, parentheses,
//! integer literals and named variables. Division is only by constants.

use super::{Poly, QAlgebra};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

enum Val<R> {
    Const(BigRational),
    Elem(R),
}

struct Parser<'a, R> {
    s: &'a [u8],
    pos: usize,
    vars: &'a [(&'a str, R)],
    proto: &'a R,
}

fn err(msg: String) -> Error {
    Error::Parse(msg)
}

impl<'a, R: QAlgebra> Parser<'a, R> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn lift(&self, v: Val<R>) -> Result<R> {
        match v {
            Val::Elem(r) => Ok(r),
            Val::Const(c) => self
                .proto
                .from_rational_like(&c)
                .ok_or_else(|| err(format!("constant {c} not representable"))),
        }
    }

    fn expr(&mut self) -> Result<Val<R>> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = match (acc, rhs) {
                (Val::Const(a), Val::Const(b)) => Val::Const(if c == b'+' { a + b } else { a - b }),
                (a, b) => {
                    let (a, b) = (self.lift(a)?, self.lift(b)?);
                    Val::Elem(if c == b'+' { a.add(&b) } else { a.sub(&b) })
                }
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Val<R>> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = match (c, acc, rhs) {
                (b'*', Val::Const(a), Val::Const(b)) => Val::Const(a * b),
                (b'*', a, b) => Val::Elem(self.lift(a)?.mul(&self.lift(b)?)),
                (_, a, Val::Const(b)) => {
                    if Zero::is_zero(&b) {
                        return Err(err("division by zero".into()));
                    }
                    match a {
                        Val::Const(a) => Val::Const(a / b),
                        Val::Elem(a) => Val::Elem(
                            a.scale_rational(&b.recip())
                                .ok_or_else(|| err("constant not invertible".into()))?,
                        ),
                    }
                }
                _ => return Err(err("division by a non-constant".into())),
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Val<R>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(match self.unary()? {
                    Val::Const(c) => Val::Const(-c),
                    Val::Elem(r) => Val::Elem(r.neg()),
                })
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Val<R>> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let e: u32 = std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| err("bad exponent".into()))?;
        match base {
            Val::Const(c) => {
                let r = num_traits::Pow::pow(&c, e);
                if neg {
                    if Zero::is_zero(&r) {
                        return Err(err("zero to a negative power".into()));
                    }
                    Ok(Val::Const(r.recip()))
                } else {
                    Ok(Val::Const(r))
                }
            }
            Val::Elem(r) => {
                if neg {
                    return Err(err("negative power of a non-constant".into()));
                }
                Ok(Val::Elem(r.pow(e as u64)))
            }
        }
    }

    fn atom(&mut self) -> Result<Val<R>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(err(format!("expected ')' at {}", self.pos)));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.pos])
                    .unwrap()
                    .parse()
                    .unwrap();
                Ok(Val::Const(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                self.vars
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|(_, v)| Val::Elem(v.clone()))
                    .ok_or_else(|| err(format!("unknown variable '{name}'")))
            }
            other => Err(err(format!(
                "unexpected {:?} at {}",
                other.map(|c| c as char),
                self.pos
            ))),
        }
    }
}

/// Evaluate an expression in the ring of `proto`, binding named variables.
pub fn parse_value<R: QAlgebra>(s: &str, vars: &[(&str, R)], proto: &R) -> Result<R> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
        vars,
        proto,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(err(format!("trailing input at {} in '{s}'", p.pos)));
    }
    p.lift(v)
}

/// A polynomial over `Q` in one named variable.
pub fn parse_poly(s: &str, var: &str) -> Result<Poly<BigRational>> {
    let z = BigRational::zero();
    let x = Poly::x(&z);
    parse_value(s, &[(var, x)], &Poly::zero(z))
}

/// A polynomial over `Z` in one named variable.
pub fn parse_poly_z(s: &str, var: &str) -> Result<Poly<BigInt>> {
    let p = parse_poly(s, var)?;
    if p.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(err(format!("'{s}' is not integral")));
    }
    Ok(p.map(|c| c.to_integer(), BigInt::zero()))
}

/// A polynomial in `outer` whose coefficients are polynomials in `inner`.
pub fn parse_bivariate(s: &str, outer: &str, inner: &str) -> Result<Poly<Poly<BigRational>>> {
    let z = BigRational::zero();
    let zi = Poly::zero(z.clone());
    let t = Poly::constant(Poly::x(&z));
    let x = Poly::x(&zi);
    parse_value(s, &[(outer, x), (inner, t)], &Poly::zero(zi))
}

/// A rational literal such as `-3/7` or `12`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim().replace('\u{2212}', "-");
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.as_str(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err(format!("bad rational '{s}'")))?;
    let d: BigInt = d.parse().map_err(|_| err(format!("bad rational '{s}'")))?;
    if Zero::is_zero(&d) {
        return Err(err("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}
