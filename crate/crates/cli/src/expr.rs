//! Surface syntax for signed sums of torus knots.
//!
//! ```text
//! expr := ['-'] term (('+' | '-' | '#' ['-']) term)*
//! term := [uint ['*']] 'T' '(' uint ',' uint ')'
//! ```
//!
//! Whitespace is ignored between tokens and `−` (U+2212) is read as `-`.

use std::fmt;

use lspace_core::{TorusKnot, TorusSum};
use num_integer::Integer;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("T({0},{1}): unknot component; omit it")]
    Unknot(u64, u64),
    #[error("T({p},{q}) is not a torus knot: {reason}")]
    InvalidPair { p: u64, q: u64, reason: String },
}

/// One summand: `coefficient · T(p,q)` with a nonzero signed coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coefficient: i64,
    pub knot: TorusKnot,
}

/// A canonical expression: distinct knots, nonzero coefficients, in order of
/// first appearance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KnotExpression {
    terms: Vec<Term>,
}

impl KnotExpression {
    /// Merges like terms and drops those that cancel.
    pub fn from_terms<I: IntoIterator<Item = (TorusKnot, i64)>>(terms: I) -> Self {
        let mut merged: Vec<Term> = Vec::new();
        for (knot, c) in terms {
            match merged.iter_mut().find(|t| t.knot == knot) {
                Some(t) => t.coefficient += c,
                None => merged.push(Term {
                    coefficient: c,
                    knot,
                }),
            }
        }
        merged.retain(|t| t.coefficient != 0);
        Self { terms: merged }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_sum(&self) -> TorusSum {
        TorusSum::from_terms(self.terms.iter().map(|t| (t.knot, t.coefficient)))
    }
}

impl fmt::Display for KnotExpression {
    /// Prints the canonical surface form; an expression that cancelled to
    /// nothing prints as `unknot`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("unknot");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let sep = match (i, t.coefficient < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = t.coefficient.unsigned_abs();
            if mag == 1 {
                write!(f, "{sep}{}", t.knot)?;
            } else {
                write!(f, "{sep}{mag}*{}", t.knot)?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for KnotExpression {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expression(s)
    }
}

pub fn parse_expression(input: &str) -> Result<KnotExpression, ParseError> {
    if input.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser { src: input, pos: 0 };
    let mut raw: Vec<(TorusKnot, i64)> = Vec::new();
    let mut negative = p.eat_minus();
    loop {
        let start = p.pos;
        let (mag, knot) = p.term()?;
        let c = i64::try_from(mag).map_err(|_| p.error_at(start, "coefficient out of range"))?;
        raw.push((knot, if negative { -c } else { c }));
        p.skip_ws();
        match p.peek() {
            None => break,
            Some('+') => {
                p.bump();
                negative = false;
            }
            Some('#') => {
                p.bump();
                negative = p.eat_minus();
            }
            Some('-' | '−') => {
                p.eat_minus();
                negative = true;
            }
            Some(c) => return Err(p.error(format!("expected '+', '-' or '#', found '{c}'"))),
        }
    }

    let mut totals: Vec<(TorusKnot, i64)> = Vec::new();
    for (knot, c) in raw {
        match totals.iter_mut().find(|(k, _)| *k == knot) {
            Some((_, total)) => {
                *total = total.checked_add(c).ok_or_else(|| ParseError::Syntax {
                    offset: 0,
                    message: format!("coefficient of {knot} overflows"),
                })?;
            }
            None => totals.push((knot, c)),
        }
    }
    Ok(KnotExpression::from_terms(totals))
}

fn validate(a: u64, b: u64) -> Result<TorusKnot, ParseError> {
    let (p, q) = (a.min(b), a.max(b));
    if p == 1 {
        return Err(ParseError::Unknot(a, b));
    }
    let reason = if p == 0 {
        "p must be at least 2".to_string()
    } else if p.gcd(&q) != 1 {
        format!("gcd is {}", p.gcd(&q))
    } else {
        return TorusKnot::new(p, q).map_err(|e| ParseError::InvalidPair {
            p: a,
            q: b,
            reason: e.to_string(),
        });
    };
    Err(ParseError::InvalidPair { p: a, q: b, reason })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat_minus(&mut self) -> bool {
        self.skip_ws();
        if matches!(self.peek(), Some('-' | '−')) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error_at(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            offset,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected '{want}', found {}", self.found())))
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error(format!("expected a number, found {}", self.found())));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error_at(start, "number out of range"))
    }

    fn term(&mut self) -> Result<(u64, TorusKnot), ParseError> {
        self.skip_ws();
        let mut coefficient = 1;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            coefficient = self.uint()?;
            if coefficient == 0 {
                return Err(self.error_at(start, "coefficient must be at least 1"));
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
            }
        }
        self.expect('T')?;
        self.expect('(')?;
        let a = self.uint()?;
        self.expect(',')?;
        let b = self.uint()?;
        self.expect(')')?;
        Ok((coefficient, validate(a, b)?))
    }
}
