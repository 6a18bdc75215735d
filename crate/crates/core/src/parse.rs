//! Text grammar for algebra elements.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := rational | 'Y[' int ']' | 'Ys[' int ']'
//! ```
//!
//! `1/2*Y[-1]*Ys[0] - Y[2]` is a valid element; `1` is the identity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{AlgebraElement, Generator, Word};
use crate::error::ParseError;
use crate::scalar::{self, Scalar};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
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

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse as integer"))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let start = self.pos;
        let v = self.digits()?;
        let v = if neg { -v } else { v };
        i64::try_from(v).map_err(|_| ParseError::new(start, "index out of range"))
    }

    fn rational(&mut self) -> Result<Scalar, ParseError> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError::new(at, "zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn factor(
        &mut self,
        coeff: &mut Scalar,
        letters: &mut Vec<Generator>,
    ) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                *coeff *= self.rational()?;
                Ok(())
            }
            Some(b'Y') => {
                self.pos += 1;
                let star = self.src.get(self.pos) == Some(&b's');
                if star {
                    self.pos += 1;
                }
                self.expect(b'[')?;
                let index = self.signed_int()?;
                self.expect(b']')?;
                letters.push(if star {
                    Generator::ystar(index)
                } else {
                    Generator::y(index)
                });
                Ok(())
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self, sign: Scalar) -> Result<(Word, Scalar), ParseError> {
        let mut coeff = sign;
        let mut letters = Vec::new();
        self.factor(&mut coeff, &mut letters)?;
        while self.eat(b'*') {
            self.factor(&mut coeff, &mut letters)?;
        }
        Ok((Word(letters), coeff))
    }
}

pub fn parse_element(text: &str) -> Result<AlgebraElement, ParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = AlgebraElement::zero();
    let mut sign = if cur.eat(b'-') {
        -scalar::one()
    } else {
        cur.eat(b'+');
        scalar::one()
    };
    loop {
        let (w, c) = cur.term(sign)?;
        out.add_term(w, c);
        if cur.eat(b'+') {
            sign = scalar::one();
        } else if cur.eat(b'-') {
            sign = -scalar::one();
        } else if cur.peek().is_none() {
            return Ok(out);
        } else {
            return Err(cur.err("expected `+`, `-` or `*`"));
        }
    }
}

/// Parses a single word (no coefficients, no sums). `1` is the empty word.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let e = parse_element(text)?;
    let mut it = e.iter();
    match (it.next(), it.next()) {
        (Some((w, c)), None) if *c == scalar::one() => Ok(w.clone()),
        _ => Err(ParseError::new(
            0,
            "expected a single word with coefficient 1",
        )),
    }
}
