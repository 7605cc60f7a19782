//! Text form of polynomials.
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coef ['*' monos | monos] | monos
//! coef   := nat | nat '/' nat
//! monos  := mono (['*'] mono)*
//! mono   := ('x'|'y') ['^' nat]
//! ```
//!
//! Whitespace between tokens is ignored. Formatting lists terms by
//! descending total degree, then descending power of `x`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::{Exponent, Polynomial};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    SyntaxError,
    NegativeExponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub position: usize,
    pub message: &'static str,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParseErrorKind::SyntaxError => {
                write!(f, "syntax error at {}: {}", self.position, self.message)
            }
            ParseErrorKind::NegativeExponent => {
                write!(f, "exponent at {} is not a natural number", self.position)
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseError {}

pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let poly = parser.poly()?;
    match parser.peek() {
        None => Ok(poly),
        Some(_) => Err(parser.error("expected '+', '-' or end of input")),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn error(&self, message: &'static str) -> ParseError {
        ParseError {
            kind: ParseErrorKind::SyntaxError,
            position: self.pos,
            message,
        }
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            let negate = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return Ok(acc),
            };
            self.bump();
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coef = self.coef()?;
                let exp = match self.peek() {
                    Some(b'*') => {
                        self.bump();
                        self.monos()?
                    }
                    Some(b'x' | b'y') => self.monos()?,
                    _ => Exponent::new(0, 0),
                };
                Ok(Polynomial::monomial(coef, exp.a, exp.b))
            }
            Some(b'x' | b'y') => {
                let exp = self.monos()?;
                Ok(Polynomial::monomial(Rational::one(), exp.a, exp.b))
            }
            _ => Err(self.error("expected a coefficient or a monomial")),
        }
    }

    fn coef(&mut self) -> Result<Rational, ParseError> {
        let num = self.nat()?;
        if self.peek() != Some(b'/') {
            return Ok(Rational::from_integer(num));
        }
        self.bump();
        let at = self.pos;
        let den = self.nat()?;
        if den.is_zero() {
            return Err(ParseError {
                kind: ParseErrorKind::SyntaxError,
                position: at,
                message: "zero denominator",
            });
        }
        Ok(Rational::new(num, den))
    }

    fn monos(&mut self) -> Result<Exponent, ParseError> {
        let mut exp = self.mono()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    if !matches!(self.peek(), Some(b'x' | b'y')) {
                        return Err(self.error("expected 'x' or 'y' after '*'"));
                    }
                }
                Some(b'x' | b'y') => {}
                _ => return Ok(exp),
            }
            let next = self.mono()?;
            exp = Exponent::new(
                exp.a
                    .checked_add(next.a)
                    .ok_or_else(|| self.error("exponent too large"))?,
                exp.b
                    .checked_add(next.b)
                    .ok_or_else(|| self.error("exponent too large"))?,
            );
        }
    }

    fn mono(&mut self) -> Result<Exponent, ParseError> {
        let var = self.peek();
        self.bump();
        let mut power = 1u32;
        if self.peek() == Some(b'^') {
            self.bump();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {}
                Some(b'-') => {
                    return Err(ParseError {
                        kind: ParseErrorKind::NegativeExponent,
                        position: self.pos,
                        message: "negative exponent",
                    })
                }
                _ => return Err(self.error("expected an exponent after '^'")),
            }
            let at = self.pos;
            power = u32::try_from(self.nat()?).map_err(|_| ParseError {
                kind: ParseErrorKind::SyntaxError,
                position: at,
                message: "exponent too large",
            })?;
        }
        Ok(match var {
            Some(b'x') => Exponent::new(power, 0),
            _ => Exponent::new(0, power),
        })
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        self.peek();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        Ok(BigInt::parse_bytes(&self.src[start..self.pos], 10).expect("ascii digits"))
    }
}

pub fn format_poly(h: &Polynomial) -> String {
    if h.is_zero() {
        return String::from("0");
    }
    let mut terms: Vec<(Exponent, &Rational)> = h.terms().collect();
    terms.sort_by_key(|(e, _)| core::cmp::Reverse((e.total(), e.a)));
    let mut out = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = rational::abs(c);
        let mono = monomial_text(e);
        if mono.is_empty() {
            out.push_str(&rational::to_text(&magnitude));
        } else if magnitude.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&rational::to_text(&magnitude));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn monomial_text(e: Exponent) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (var, power) in [('x', e.a), ('y', e.b)] {
        if power == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push(var);
        if power > 1 {
            let _ = write!(s, "^{power}");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::from_int_terms;
    use crate::rational::{frac, int};

    #[test]
    fn parse_examples() {
        let h = parse_poly("x^2*y - 1/2").unwrap();
        assert_eq!(
            h,
            Polynomial::from_terms([
                (Exponent::new(2, 1), int(1)),
                (Exponent::new(0, 0), frac(-1, 2)),
            ])
        );
        assert_eq!(parse_poly("y + x^2"), parse_poly("x^2 + y"));
        assert_eq!(parse_poly("3x^2y").unwrap(), from_int_terms(&[(3, 2, 1)]));
    }

    #[test]
    fn parse_grammar_corners() {
        assert_eq!(parse_poly("-x").unwrap(), from_int_terms(&[(-1, 1, 0)]));
        assert_eq!(parse_poly(" x * x ").unwrap(), from_int_terms(&[(1, 2, 0)]));
        assert_eq!(parse_poly("x y x").unwrap(), from_int_terms(&[(1, 2, 1)]));
        assert_eq!(parse_poly("2 * x^3 - 2x^3").unwrap(), Polynomial::zero());
        assert_eq!(parse_poly("0").unwrap(), Polynomial::zero());
        assert_eq!(
            parse_poly("4/6*x").unwrap(),
            Polynomial::monomial(frac(2, 3), 1, 0)
        );
        assert_eq!(parse_poly("x^0").unwrap(), Polynomial::one());
    }

    #[test]
    fn parse_errors() {
        let e = parse_poly("x^-1").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NegativeExponent);
        assert_eq!(e.position, 2);
        for bad in [
            "",
            "x +",
            "x ^",
            "2/",
            "1/0",
            "z",
            "x**y",
            "x^2^3",
            "(x)",
            "--x",
            "x^99999999999",
        ] {
            let e = parse_poly(bad).unwrap_err();
            assert_eq!(e.kind, ParseErrorKind::SyntaxError, "{bad:?}");
        }
        assert_eq!(parse_poly("x + z").unwrap_err().position, 4);
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_poly(&Polynomial::zero()), "0");
        assert_eq!(
            format_poly(&from_int_terms(&[(1, 2, 0), (1, 0, 1)])),
            "x^2 + y"
        );
        assert_eq!(
            format_poly(&Polynomial::monomial(frac(-3, 2), 1, 1)),
            "-3/2*x*y"
        );
        assert_eq!(
            format_poly(&parse_poly("1 - y^2 + x*y + 2x^2 - x").unwrap()),
            "2*x^2 + x*y - y^2 - x + 1"
        );
        assert_eq!(format_poly(&parse_poly("-1/3").unwrap()), "-1/3");
    }

    #[test]
    fn format_then_parse_is_identity_on_examples() {
        for text in ["-3/2*x*y", "x^2 + y", "x^3*y^7 - 5/9*y + 11"] {
            let h = parse_poly(text).unwrap();
            assert_eq!(format_poly(&h), text);
            assert_eq!(parse_poly(&format_poly(&h)).unwrap(), h);
        }
    }
}
