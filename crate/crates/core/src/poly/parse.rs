//! Polynomial text grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | identifier | '(' expr ')'
//! ```
//!
//! The printer emits expanded canonical form, which this parser reads back to
//! an identical polynomial.

use num_bigint::BigInt;

use super::{Polynomial, RingRef};
use crate::error::{AlgebraError, Result};
use crate::field::{Field, FieldKind};

impl<F: Field> Polynomial<F> {
    pub fn parse(ring: &RingRef<F>, text: &str) -> Result<Self> {
        let mut p = Parser {
            ring,
            src: text.as_bytes(),
            pos: 0,
        };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(poly)
    }
}

struct Parser<'a, F: Field> {
    ring: &'a RingRef<F>,
    src: &'a [u8],
    pos: usize,
}

impl<F: Field> Parser<'_, F> {
    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.bigint()?;
                let value = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let start = self.pos;
                    let den = self.bigint()?;
                    self.ring
                        .field()
                        .ratio(&num, &den)
                        .map_err(|_| AlgebraError::Parse {
                            pos: start,
                            msg: "denominator vanishes in the coefficient field".into(),
                        })?
                } else {
                    self.ring.field().big_integer(&num)
                };
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(AlgebraError::Parse {
                        pos: start,
                        msg: format!("unknown variable {name}"),
                    }),
                }
            }
            Some(_) => Err(self.error("expected a number, variable or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn bigint(&mut self) -> Result<BigInt> {
        let d = self.digits()?;
        Ok(d.parse().expect("digits parse"))
    }

    fn integer(&mut self) -> Result<u64> {
        let d = self.digits()?.to_string();
        d.parse().map_err(|_| self.error("integer too large"))
    }
}
