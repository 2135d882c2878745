//! Parser for polynomial expressions such as `2x^3 - 3x^2 + 1` or
//! `y^5 + 1/2 y`.
//!
//! ```text
//! poly  := term (("+" | "-") term)*
//! term  := coeff? "*"? mono?        at least one of coeff, mono
//! mono  := VAR ("^" NAT)?
//! coeff := INT ("/" POSINT)?
//! VAR   := "x" | "y"
//! ```
//!
//! A leading minus applies to the first term. Whitespace is ignored and like
//! terms are merged. One expression uses a single variable.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::{QPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    Unexpected(char),
    #[error("unexpected end of input")]
    End,
    #[error("expected a coefficient or a variable")]
    EmptyTerm,
    #[error("exponent does not fit in 32 bits")]
    ExponentOverflow,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("both x and y appear")]
    MixedVariables,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Character offset into the input.
    pub position: usize,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    var: Option<char>,
    src: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { kind, position: self.pos }
    }

    fn unexpected(&mut self) -> ParseError {
        match self.peek() {
            Some(c) => self.error(ParseErrorKind::Unexpected(c)),
            None => self.error(ParseErrorKind::End),
        }
    }

    fn digits(&mut self) -> Option<(usize, &str)> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let lo = self.chars[start].0;
        let hi = self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i);
        Some((start, &self.src[lo..hi]))
    }

    fn coeff(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some((_, num)) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num.parse().expect("ascii digits");
        if self.peek() != Some('/') {
            return Ok(Some(Rational::from_integer(num)));
        }
        self.pos += 1;
        let Some((start, den)) = self.digits() else {
            return Err(self.unexpected());
        };
        let den: BigInt = den.parse().expect("ascii digits");
        if den.is_zero() {
            return Err(ParseError { kind: ParseErrorKind::ZeroDenominator, position: start });
        }
        Ok(Some(Rational::new(num, den)))
    }

    fn mono(&mut self) -> Result<Option<usize>, ParseError> {
        let Some(v @ ('x' | 'y')) = self.peek() else {
            return Ok(None);
        };
        if self.var.is_some_and(|w| w != v) {
            return Err(self.error(ParseErrorKind::MixedVariables));
        }
        self.var = Some(v);
        self.pos += 1;
        if self.peek() != Some('^') {
            return Ok(Some(1));
        }
        self.pos += 1;
        let Some((start, exp)) = self.digits() else {
            return Err(self.unexpected());
        };
        let overflow = ParseError { kind: ParseErrorKind::ExponentOverflow, position: start };
        let e: u32 = exp.parse().map_err(|_| overflow)?;
        Ok(Some(e as usize))
    }

    fn term(&mut self) -> Result<(usize, Rational), ParseError> {
        let c = self.coeff()?;
        if c.is_some() && self.peek() == Some('*') {
            self.pos += 1;
            if self.peek().is_none_or(|ch| ch != 'x' && ch != 'y') {
                return Err(self.unexpected());
            }
        }
        let e = self.mono()?;
        match (c, e) {
            (None, None) => Err(match self.peek() {
                Some(_) => self.error(ParseErrorKind::EmptyTerm),
                None => self.error(ParseErrorKind::End),
            }),
            (c, e) => Ok((e.unwrap_or(0), c.unwrap_or_else(|| Rational::from_integer(1.into())))),
        }
    }

    fn poly(&mut self) -> Result<QPoly, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.peek() == Some('-') {
            negative = true;
            self.pos += 1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if negative { -c } else { c }));
            match self.peek() {
                Some('+') => negative = false,
                Some('-') => negative = true,
                None => break,
                Some(_) => return Err(self.unexpected()),
            }
            self.pos += 1;
        }
        let mut acc = QPoly::zero();
        for (e, c) in terms {
            acc = &acc + &QPoly::monomial(c, e);
        }
        Ok(acc)
    }
}

/// Parses an expression into an exact polynomial, returning the variable
/// used, if any.
pub fn parse_poly_with_var(text: &str) -> Result<(QPoly, Option<char>), ParseError> {
    let mut p = Parser { chars: text.char_indices().collect(), pos: 0, var: None, src: text };
    let poly = p.poly()?;
    Ok((poly, p.var))
}

pub fn parse_poly(text: &str) -> Result<QPoly, ParseError> {
    parse_poly_with_var(text).map(|(p, _)| p)
}
