//! A small expression parser shared by every text form in the crate.
//!
//! Grammar (whitespace-insensitive, juxtaposition is multiplication):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' ['-'] integer]
//! atom   := integer ['/' integer] | symbol | '(' expr ')'
//! ```
//!
//! The symbol `q` always denotes the deformation parameter. Other symbols are
//! resolved by the target ring.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::scalars::{QLaurent, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.position, self.message)
    }
}

/// How identifiers are split into symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolMode {
    /// Every letter is its own symbol, so `xy` means `x*y`.
    SingleLetter,
    /// Alphanumeric words such as `e12` are single symbols.
    Word,
}

/// Target of the parser: a ring with scalars and named generators.
pub trait ParseRing: Sized + Clone {
    fn from_scalar(c: QLaurent) -> Self;
    fn symbol(name: &str) -> Option<Self>;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse, when it exists and is supported.
    fn inverse(&self) -> Option<Self>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Sym(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str, mode: SymbolMode) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
                let n = digits
                    .parse()
                    .map_err(|_| ParseError::new(pos, "bad integer literal"))?;
                out.push((pos, Tok::Num(n)));
            }
            c if c.is_alphabetic() => match mode {
                SymbolMode::SingleLetter => {
                    out.push((pos, Tok::Sym(c.to_string())));
                    i += 1;
                }
                SymbolMode::Word => {
                    let start = i;
                    while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                        i += 1;
                    }
                    let word: String = chars[start..i].iter().map(|(_, c)| c).collect();
                    out.push((pos, Tok::Sym(word)));
                }
            },
            '+' => {
                out.push((pos, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((pos, Tok::Minus));
                i += 1;
            }
            '*' | '·' => {
                out.push((pos, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((pos, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((pos, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Tok::RParen));
                i += 1;
            }
            other => return Err(ParseError::new(pos, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
}

const MAX_EXPONENT: u64 = 4096;

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr<T: ParseRing>(&mut self) -> Result<T, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.term::<T>()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.add(&self.term::<T>()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Sym(_) | Tok::LParen))
    }

    fn term<T: ParseRing>(&mut self) -> Result<T, ParseError> {
        let mut acc = self.factor::<T>()?;
        loop {
            if matches!(self.peek(), Some(Tok::Star)) {
                self.bump();
                acc = acc.mul(&self.factor()?);
            } else if self.starts_factor() {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor<T: ParseRing>(&mut self) -> Result<T, ParseError> {
        let base = self.atom::<T>()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.bump();
        let negative = matches!(self.peek(), Some(Tok::Minus));
        if negative {
            self.bump();
        }
        let pos = self.pos();
        let e = match self.bump() {
            Some(Tok::Num(n)) => u64::try_from(n)
                .ok()
                .filter(|e| *e <= MAX_EXPONENT)
                .ok_or_else(|| ParseError::new(pos, "exponent too large"))?,
            _ => return Err(ParseError::new(pos, "expected integer exponent")),
        };
        let base = if negative {
            base.inverse()
                .ok_or_else(|| ParseError::new(pos, "negative power of a non-invertible element"))?
        } else {
            base
        };
        let mut acc = T::from_scalar(QLaurent::one());
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom<T: ParseRing>(&mut self) -> Result<T, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => {
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => Ok(T::from_scalar(Rational::new(n, d).into())),
                        Some(Tok::Num(_)) => Err(ParseError::new(dpos, "zero denominator")),
                        _ => Err(ParseError::new(dpos, "expected integer denominator")),
                    }
                } else {
                    Ok(T::from_scalar(Rational::from_integer(n).into()))
                }
            }
            Some(Tok::Sym(name)) => {
                if name == "q" {
                    Ok(T::from_scalar(QLaurent::q_pow(1)))
                } else {
                    T::symbol(&name).ok_or_else(|| ParseError::new(pos, format!("unknown symbol `{name}`")))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::new(close, "expected `)`")),
                }
            }
            Some(other) => Err(ParseError::new(pos, format!("unexpected token {other:?}"))),
            None => Err(ParseError::new(pos, "unexpected end of input")),
        }
    }
}

/// Parses `src` into the ring `T`.
pub fn parse<T: ParseRing>(src: &str, mode: SymbolMode) -> Result<T, ParseError> {
    let toks = tokenize(src, mode)?;
    if toks.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let mut p = Parser {
        toks: &toks,
        at: 0,
        end: src.len(),
    };
    let value = p.expr()?;
    if p.at < toks.len() {
        return Err(ParseError::new(p.pos(), "trailing input"));
    }
    Ok(value)
}
