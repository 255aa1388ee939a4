//! Recursive-descent parser for the ordinal expression language.
//!
//! Grammar:
//! ```text
//! expr   := term (('+' | '#') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' factor)?
//! base   := 'w' | 'w' digits | digits | '(' expr ')'
//! ```
//! `+` is ordinal sum, `#` natural sum, `*` ordinal product; `^` is
//! right-associative and its base must be `w` or an atom `w1`, `w2`, …
//! Whitespace is insignificant.

use std::fmt;

use num_bigint::BigUint;
use ordcalc_core::ordinal::{nat_add, omega_pow, ord_add, ord_mul};
use ordcalc_core::Ordinal;

/// A syntax error, with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_ordinal(text: &str) -> Result<Ordinal, ParseError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

/// What a `base` production produced: only `w`-shaped bases may be raised
/// to a power.
enum Base {
    Power(Ordinal), // 'w' or an atom: w^e with this exponent
    Value(Ordinal),
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> ParseError {
        ParseError { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    let rhs = self.term()?;
                    acc = ord_add(&acc, &rhs);
                }
                Some(b'#') => {
                    self.pos += 1;
                    self.skip_ws();
                    let rhs = self.term()?;
                    acc = nat_add(&acc, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                self.skip_ws();
                let rhs = self.factor()?;
                acc = ord_mul(&acc, &rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Ordinal, ParseError> {
        let base = self.base()?;
        self.skip_ws();
        let caret = self.pos;
        if self.eat(b'^') {
            self.skip_ws();
            let exponent = self.factor()?;
            match base {
                Base::Power(e) => Ok(omega_pow(&ord_mul(&e, &exponent))),
                Base::Value(_) => Err(ParseError {
                    position: caret,
                    message: "general exponentiation unsupported: base of '^' must be 'w' or an atom"
                        .to_string(),
                }),
            }
        } else {
            Ok(match base {
                Base::Power(e) => omega_pow(&e),
                Base::Value(v) => v,
            })
        }
    }

    fn base(&mut self) -> Result<Base, ParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                if self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    let k = self.digits()?;
                    let k = u32::try_from(&k)
                        .ok()
                        .filter(|k| *k >= 1)
                        .ok_or_else(|| self.error("atom index must be a positive integer"))?;
                    Ok(Base::Power(Ordinal::atom(k)))
                } else {
                    Ok(Base::Power(Ordinal::one()))
                }
            }
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let v = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(Base::Value(v))
            }
            Some(b) if b.is_ascii_digit() => Ok(Base::Value(Ordinal::from_nat(self.digits()?))),
            _ => Err(self.error("expected 'w', a number, or '('")),
        }
    }

    fn digits(&mut self) -> Result<BigUint, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<BigUint>().map_err(|_| self.error("expected digits"))
    }
}
