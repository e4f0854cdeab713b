//! Text syntax for group-algebra elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := INT ['/' INT] | 'i' | NAME ['^' ['-'] INT] | '(' expr ')' ['^' INT]
//! ```
//!
//! Names are generators of the group (`x`, `y`, `z`, `x1`, `x2`, … or Cayley element names
//! and `g<k>`). Printing emits the identity term first, then the remaining terms in
//! normal-form order, and the result parses back to the same element.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::AlgebraElement;
use crate::groups::{GroupElement, GroupSpec};
use crate::scalars::{GaussianRational, Rational};

const MAX_GENERATOR_EXPONENT: u64 = 1 << 16;
const MAX_PAREN_EXPONENT: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(s) => format!("number {s}"),
            Token::Name(s) => format!("name {s:?}"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::End => "end of input".into(),
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self, Token::Int(_) | Token::Name(_) | Token::LParen)
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let start = k;
        let token = match c {
            c if c.is_whitespace() => {
                k += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' | '\u{2212}' => Token::Minus,
            '*' | '\u{00b7}' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            c if c.is_ascii_digit() => {
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                out.push((start, Token::Int(chars[start..k].iter().collect())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                // `i` directly followed by a name character is part of that name.
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                out.push((start, Token::Name(chars[start..k].iter().collect())));
                continue;
            }
            other => {
                return Err(ParseError {
                    position: start,
                    expected: "a term".into(),
                    found: format!("character {other:?}"),
                })
            }
        };
        out.push((start, token));
        k += 1;
    }
    out.push((chars.len(), Token::End));
    Ok(out)
}

struct Parser<'a> {
    spec: &'a Arc<GroupSpec>,
    tokens: Vec<(usize, Token)>,
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].1
    }

    fn position(&self) -> usize {
        self.tokens[self.at].0
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].1.clone();
        if t != Token::End {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: impl Into<String>) -> ParseError {
        ParseError { position: self.position(), expected: expected.into(), found: self.peek().describe() }
    }

    fn expr(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut negate = match self.peek() {
            Token::Minus => {
                self.bump();
                true
            }
            Token::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = AlgebraElement::zero(self.spec);
        loop {
            let term = self.term()?;
            let term = if negate { term.neg() } else { term };
            acc = acc.add(&term).expect("terms share the parser's group");
            match self.peek() {
                Token::Plus => negate = false,
                Token::Minus => negate = true,
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if *self.peek() == Token::Star {
                self.bump();
            } else if !self.peek().starts_factor() {
                return Ok(acc);
            }
            let next = self.factor()?;
            acc = acc.mul(&next).expect("factors share the parser's group");
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Token::Int(digits) => {
                self.bump();
                Ok(digits.parse().expect("tokenizer only emits digit runs"))
            }
            _ => Err(self.error("an integer")),
        }
    }

    fn exponent(&mut self, allow_negative: bool, limit: u64) -> Result<i64, ParseError> {
        let negative = if *self.peek() == Token::Minus && allow_negative {
            self.bump();
            true
        } else {
            false
        };
        let position = self.position();
        let value = self.int()?;
        let magnitude = u64::try_from(&value).ok().filter(|&m| m <= limit).ok_or_else(|| ParseError {
            position,
            expected: format!("an exponent of at most {limit}"),
            found: format!("number {value}"),
        })?;
        let e = magnitude as i64;
        Ok(if negative { -e } else { e })
    }

    fn factor(&mut self) -> Result<AlgebraElement, ParseError> {
        match self.peek().clone() {
            Token::Int(_) => {
                let numer = self.int()?;
                let denom = if *self.peek() == Token::Slash {
                    self.bump();
                    let position = self.position();
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(ParseError {
                            position,
                            expected: "a nonzero denominator".into(),
                            found: "number 0".into(),
                        });
                    }
                    d
                } else {
                    BigInt::one()
                };
                Ok(AlgebraElement::scalar(self.spec, GaussianRational::real(Rational::new(numer, denom))))
            }
            Token::Name(name) if name == "i" => {
                self.bump();
                Ok(AlgebraElement::scalar(self.spec, GaussianRational::i()))
            }
            Token::Name(name) => {
                let position = self.position();
                let generator = self.spec.lookup_symbol(&name).ok_or_else(|| ParseError {
                    position,
                    expected: format!("a generator of {}", self.spec.descriptor()),
                    found: format!("name {name:?}"),
                })?;
                self.bump();
                let exponent = if *self.peek() == Token::Caret {
                    self.bump();
                    self.exponent(true, MAX_GENERATOR_EXPONENT)?
                } else {
                    1
                };
                let g = power(self.spec, &generator, exponent);
                Ok(AlgebraElement::monomial(self.spec, GaussianRational::one(), g)
                    .expect("generator powers are normal forms"))
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Token::RParen {
                    return Err(self.error("')'"));
                }
                self.bump();
                if *self.peek() == Token::Caret {
                    self.bump();
                    let e = self.exponent(false, MAX_PAREN_EXPONENT)?;
                    let mut acc = AlgebraElement::one(self.spec);
                    for _ in 0..e {
                        acc = acc.mul(&inner).expect("same group");
                    }
                    return Ok(acc);
                }
                Ok(inner)
            }
            _ => Err(self.error("a term")),
        }
    }
}

fn power(spec: &GroupSpec, g: &GroupElement, exponent: i64) -> GroupElement {
    match (spec, g) {
        (GroupSpec::FreeAbelian { .. }, GroupElement::Exponents(v)) => {
            GroupElement::Exponents(v.iter().map(|x| x * exponent).collect())
        }
        (GroupSpec::Finite(t), _) => {
            // Reduce modulo the group order first.
            let n = t.order() as i64;
            spec.pow(g, exponent.rem_euclid(n)).expect("generator belongs to group")
        }
        _ => spec.pow(g, exponent).expect("generator belongs to group"),
    }
}

/// Parses an element expression over `spec`.
pub fn parse_element(spec: &Arc<GroupSpec>, input: &str) -> Result<AlgebraElement, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { spec, tokens, at: 0 };
    let element = parser.expr()?;
    if *parser.peek() != Token::End {
        return Err(parser.error("'+', '-', '*' or end of input"));
    }
    Ok(element)
}

/// Parses a single group element written as a word, e.g. `x^-1*y`.
pub fn parse_group_element(spec: &Arc<GroupSpec>, input: &str) -> Result<GroupElement, ParseError> {
    let element = parse_element(spec, input)?;
    let mut terms = element.terms();
    match (terms.next(), terms.next()) {
        (Some((g, c)), None) if *c == GaussianRational::one() => Ok(g.clone()),
        _ => Err(ParseError { position: 0, expected: "a single group element".into(), found: format!("{input:?}") }),
    }
}

/// Coefficient text with its sign split off: `(negative, body)`. Complex coefficients are
/// parenthesized and never split.
fn split_coefficient(c: &GaussianRational) -> (bool, String) {
    if c.im.is_zero() {
        (c.re.is_negative(), c.re.abs().to_string())
    } else if c.re.is_zero() {
        let mag = c.im.abs();
        let body = if mag.is_one() { "i".to_string() } else { format!("{mag}i") };
        (c.im.is_negative(), body)
    } else {
        (false, format!("({c})"))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let spec = self.spec();
        let identity = spec.identity();
        let ordered = self
            .terms()
            .filter(|(g, _)| **g == identity)
            .chain(self.terms().filter(|(g, _)| **g != identity));
        for (k, (g, c)) in ordered.enumerate() {
            let (negative, body) = split_coefficient(c);
            let text = if *g == identity {
                body
            } else if body == "1" {
                spec.format_element(g)
            } else {
                format!("{body}*{}", spec.format_element(g))
            };
            match (k, negative) {
                (0, false) => write!(f, "{text}")?,
                (0, true) => write!(f, "-{text}")?,
                (_, false) => write!(f, " + {text}")?,
                (_, true) => write!(f, " - {text}")?,
            }
        }
        Ok(())
    }
}
