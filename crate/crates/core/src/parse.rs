//! Text input and output for polynomials and basis files.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! poly     := [sign] term (sign term)*
//! term     := rational ['*'] factor ('*' factor)* | rational | factor ('*' factor)*
//! factor   := variable ['^' nat]
//! rational := int ['/' posint]
//! ```
//!
//! A basis file starts with a `vars: x,y,z` line followed by one generator
//! per non-empty line; `#` starts a comment.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ordering::MonomialOrder;
use crate::poly::{Coefficient, Monomial, Polynomial, PowerProduct, Ring};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        position,
        message: message.into(),
    })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
            (start, s)
        })
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => self.pos += 1,
            _ => return None,
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
        Some((start, s))
    }

    fn rational(&mut self) -> Result<Option<Coefficient>> {
        let Some((_, num)) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num.parse().expect("digits");
        if !self.eat(b'/') {
            return Ok(Some(Coefficient::from_integer(num)));
        }
        let at = self.pos;
        match self.digits() {
            Some((p, den)) => {
                let den: BigInt = den.parse().expect("digits");
                if den.is_zero() {
                    return err(p, "zero denominator");
                }
                Ok(Some(Coefficient::new(num, den)))
            }
            None => err(at, "expected denominator after `/`"),
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<bool> {
        let Some((at, name)) = self.ident() else {
            return Ok(false);
        };
        let Some(i) = self.ring.index_of(name) else {
            return err(at, format!("unknown variable `{name}`"));
        };
        let mut e: u32 = 1;
        if self.eat(b'^') {
            let p = self.pos;
            let Some((p, digits)) = self.digits() else {
                return err(p, "expected exponent after `^`");
            };
            e = digits
                .parse()
                .or_else(|_| err(p, "exponent out of range"))?;
        }
        exps[i] = exps[i].checked_add(e).ok_or(Error::ExponentOverflow)?;
        Ok(true)
    }

    fn term(&mut self) -> Result<Monomial> {
        let start = self.peek().map_or(self.src.len(), |_| self.pos);
        let mut exps = vec![0u32; self.ring.nvars()];
        let coefficient = self.rational()?;
        let has_coeff = coefficient.is_some();
        if has_coeff {
            let star = self.eat(b'*');
            let got = self.factor(&mut exps)?;
            if star && !got {
                return err(self.pos, "expected variable after `*`");
            }
            if !got {
                return Ok(Monomial::new(
                    coefficient.expect("checked"),
                    PowerProduct::new(exps),
                ));
            }
        } else if !self.factor(&mut exps)? {
            return err(start, "expected a coefficient or a variable");
        }
        while self.eat(b'*') {
            if !self.factor(&mut exps)? {
                return err(self.pos, "expected variable after `*`");
            }
        }
        Ok(Monomial::new(
            coefficient.unwrap_or_else(Coefficient::one),
            PowerProduct::new(exps),
        ))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut p = Polynomial::zero(self.ring.nvars());
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let m = self.term()?;
            let c = if negative {
                -m.coefficient
            } else {
                m.coefficient
            };
            p.add_term(m.pp, c);
            negative = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                Some(_) => return err(self.pos, "expected `+`, `-` or end of input"),
                None => return Ok(p),
            };
            self.pos += 1;
        }
    }
}

/// Parses a polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    if parser.peek().is_none() {
        return err(0, "empty polynomial");
    }
    parser.polynomial()
}

/// Parses the `vars:` header line.
pub fn parse_vars_line(line: &str) -> Option<Result<Ring>> {
    let rest = line.trim().strip_prefix("vars:")?;
    Some(Ring::new(rest.split(',').map(|v| v.trim().to_string())))
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses a basis file: a `vars:` line then one generator per line.
pub fn parse_basis_file(text: &str) -> Result<(Ring, Vec<Polynomial>)> {
    let mut ring: Option<Ring> = None;
    let mut generators = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let lineno = k + 1;
        let wrap = |e: Error| Error::Line {
            line: lineno,
            message: format!("{e} in `{}`", raw.trim()),
        };
        match &ring {
            None => {
                let parsed = parse_vars_line(line).ok_or_else(|| Error::Line {
                    line: lineno,
                    message: "expected `vars: x,y,...` header".into(),
                })?;
                ring = Some(parsed.map_err(wrap)?);
            }
            Some(r) => generators.push(parse_polynomial(line, r).map_err(wrap)?),
        }
    }
    let ring = ring.ok_or(Error::Line {
        line: 0,
        message: "missing `vars:` header".into(),
    })?;
    Ok((ring, generators))
}

/// `x^2*y`; the unit power product prints as `1`.
pub fn format_pp(t: &PowerProduct, ring: &Ring) -> String {
    let parts: Vec<String> = t
        .exponents()
        .iter()
        .zip(ring.variables())
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| match e {
            1 => v.clone(),
            _ => format!("{v}^{e}"),
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn format_unsigned(c: &Coefficient, t: &PowerProduct, ring: &Ring) -> String {
    let c = c.abs();
    if t.is_one() {
        c.to_string()
    } else if c.is_one() {
        format_pp(t, ring)
    } else {
        format!("{c}*{}", format_pp(t, ring))
    }
}

pub fn format_monomial(m: &Monomial, ring: &Ring) -> String {
    let sign = if m.coefficient.is_negative() { "-" } else { "" };
    format!("{sign}{}", format_unsigned(&m.coefficient, &m.pp, ring))
}

/// Renders `p` with terms in descending `order`, e.g. `y^2 + y + 2`.
pub fn format_polynomial(p: &Polynomial, ring: &Ring, order: MonomialOrder) -> String {
    let mut terms: Vec<(&PowerProduct, &Coefficient)> = p.terms().collect();
    terms.sort_by(|a, b| order.cmp(b.0, a.0));
    let mut out = String::new();
    for (k, (t, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&format_unsigned(c, t, ring));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// [`fmt::Display`] adapter for a polynomial in a ring and ordering.
pub struct PolyDisplay<'a> {
    pub poly: &'a Polynomial,
    pub ring: &'a Ring,
    pub order: MonomialOrder,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_polynomial(self.poly, self.ring, self.order))
    }
}
