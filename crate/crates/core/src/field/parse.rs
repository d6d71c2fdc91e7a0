//! Parser for the canonical string grammar.
//!
//! ```text
//! elem   := poly | "(" poly ")/(" poly ")"
//! poly   := ["-"] term (("+" | "-") term)*
//! term   := coef ["*" factor]* | factor ["*" factor]*
//! coef   := int ["/" int]
//! factor := name ["^" ["-"] int]
//! ```
//!
//! The parser accepts any string of this shape (not only canonical ones)
//! and normalizes the result.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

use super::poly::{LaurentPoly, Monomial};
use super::ratfunc::FieldElem;
use super::var::Var;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(text.parse().expect("digits parse"))
    }

    fn name(&mut self) -> Result<Var> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("unknown variable {text:?}"),
        })
    }

    fn factor(&mut self) -> Result<Monomial> {
        let v = self.name()?;
        if self.eat(b'^') {
            let neg = if self.eat(b'-') {
                true
            } else {
                self.eat(b'+');
                false
            };
            let e: i32 = match i32::try_from(self.digits()?) {
                Ok(e) => e,
                Err(_) => return self.err("exponent out of range"),
            };
            Ok(Monomial::var_pow(v, if neg { -e } else { e }))
        } else {
            Ok(Monomial::var(v))
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut coef = BigRational::one();
        let mut mono = Monomial::one();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                let d = if self.eat(b'/') { self.digits()? } else { BigInt::one() };
                if d == BigInt::from(0) {
                    return self.err("zero denominator");
                }
                coef = BigRational::new(n, d);
                if !self.eat(b'*') {
                    return Ok((mono, coef));
                }
                mono = self.factor()?;
            }
            Some(c) if c.is_ascii_alphabetic() => mono = self.factor()?,
            _ => return self.err("expected term"),
        }
        while self.eat(b'*') {
            mono = mono.mul(&self.factor()?);
        }
        Ok((mono, coef))
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut terms = Vec::new();
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if sign < 0 { -c } else { c }));
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

pub fn parse_field_elem(text: &str) -> Result<FieldElem> {
    let mut c = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let value = if c.eat(b'(') {
        let num = c.poly()?;
        c.expect(b')')?;
        c.expect(b'/')?;
        c.expect(b'(')?;
        let den = c.poly()?;
        c.expect(b')')?;
        FieldElem::new(num, den)?
    } else {
        FieldElem::from_poly(c.poly()?)
    };
    if c.peek().is_some() {
        return c.err("trailing input");
    }
    Ok(value)
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let x = parse_field_elem(text)?;
    if !x.vars().is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected a rational number, got {text:?}"),
        });
    }
    Ok(x.numerator().as_constant().cloned().unwrap_or_default())
}
