//! Text syntax for Laurent polynomials, accepting everything
//! [`LaurentPoly::canonical_string`] produces and a little more:
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' ['-'] digits]
//! atom   := digits | 'i' | 't' digits | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens. Negative powers are only allowed on
//! units (variables, `i`, and parenthesised units).

use num_bigint::BigInt;

use super::{GaussianInt, LaurentPoly, Ring};
use crate::error::{Error, Result};

pub fn parse_poly(input: &str) -> Result<LaurentPoly> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        self.skip_ws();
        let e: i64 = self
            .digits()?
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        let e = if negative { -e } else { e };
        Ring::pow(&base, e).ok_or_else(|| self.error("negative power of a non-unit"))
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(LaurentPoly::constant(GaussianInt::i()))
            }
            Some(b't') => {
                self.pos += 1;
                let j: u32 = self
                    .digits()?
                    .parse()
                    .map_err(|_| self.error("variable index out of range"))?;
                if j == 0 {
                    return Err(self.error("variable indices start at 1"));
                }
                Ok(LaurentPoly::var(j))
            }
            Some(b) if b.is_ascii_digit() => {
                let n: BigInt = self.digits()?.parse().expect("ascii digits parse");
                Ok(LaurentPoly::from(n))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
