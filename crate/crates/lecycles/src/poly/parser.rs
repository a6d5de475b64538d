use std::sync::Arc;

use num::{BigInt, One};

use super::{Polynomial, Rational, Ring};
use crate::Error;

/// Parses an arithmetic expression in the ring's variables: `+`, `-`, `*`,
/// `^` with non-negative integer exponents, parentheses, and integer or
/// rational (`a/b`) literals. Implicit multiplication is rejected.
pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, Error> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        ring: ring.clone(),
    };
    let poly = p.expr()?;
    match p.peek() {
        Some(t) => Err(err(t.pos, format!("unexpected `{}`", t.kind.show()))),
        None => Ok(poly),
    }
}

fn err(pos: usize, msg: String) -> Error {
    Error::Parse { pos, msg }
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl TokenKind {
    fn show(&self) -> String {
        match self {
            TokenKind::Ident(s) => s.clone(),
            TokenKind::Int(n) => n.to_string(),
            TokenKind::Plus => "+".into(),
            TokenKind::Minus => "-".into(),
            TokenKind::Star => "*".into(),
            TokenKind::Caret => "^".into(),
            TokenKind::Slash => "/".into(),
            TokenKind::LParen => "(".into(),
            TokenKind::RParen => ")".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push(Token { kind: TokenKind::Plus, pos }),
            '-' => out.push(Token { kind: TokenKind::Minus, pos }),
            '*' => out.push(Token { kind: TokenKind::Star, pos }),
            '^' => out.push(Token { kind: TokenKind::Caret, pos }),
            '/' => out.push(Token { kind: TokenKind::Slash, pos }),
            '(' => out.push(Token { kind: TokenKind::LParen, pos }),
            ')' => out.push(Token { kind: TokenKind::RParen, pos }),
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().unwrap();
                out.push(Token { kind: TokenKind::Int(n), pos });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Token {
                    kind: TokenKind::Ident(text[start..i].to_string()),
                    pos,
                });
                continue;
            }
            other => return Err(err(pos, format!("unexpected character `{other}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    ring: Arc<Ring>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_pos(&self) -> usize {
        self.tokens.last().map(|t| t.pos + 1).unwrap_or(0)
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial, Error> {
        let mut negate = false;
        if let Some(t) = self.peek() {
            match t.kind {
                TokenKind::Plus => {
                    self.next();
                }
                TokenKind::Minus => {
                    self.next();
                    negate = true;
                }
                _ => {}
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        while let Some(t) = self.peek() {
            match t.kind {
                TokenKind::Plus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                TokenKind::Minus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.factor()?;
        while matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Star)) {
            self.next();
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    // factor := atom ('^' uint)?
    fn factor(&mut self) -> Result<Polynomial, Error> {
        let base = self.atom()?;
        if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Caret)) {
            self.next();
            let t = self
                .next()
                .ok_or_else(|| err(self.end_pos(), "expected exponent".into()))?;
            match t.kind {
                TokenKind::Int(n) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| err(t.pos, "exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                other => Err(err(t.pos, format!("expected integer exponent, got `{}`", other.show()))),
            }
        } else {
            Ok(base)
        }
    }

    // atom := '(' expr ')' | '-' factor | ident | int ('/' int)?
    fn atom(&mut self) -> Result<Polynomial, Error> {
        let t = self
            .next()
            .ok_or_else(|| err(self.end_pos(), "unexpected end of input".into()))?;
        match t.kind {
            TokenKind::LParen => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token { kind: TokenKind::RParen, .. }) => Ok(inner),
                    Some(u) => Err(err(u.pos, format!("expected `)`, got `{}`", u.kind.show()))),
                    None => Err(err(self.end_pos(), "missing `)`".into())),
                }
            }
            TokenKind::Minus => {
                let inner = self.factor()?;
                Ok(-&inner)
            }
            TokenKind::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(&self.ring, i)),
                None => Err(err(t.pos, format!("unknown variable `{name}`"))),
            },
            TokenKind::Int(n) => {
                // Rational literal: int '/' int (only literal denominators).
                if matches!(self.peek().map(|u| &u.kind), Some(TokenKind::Slash)) {
                    self.next();
                    let d = self
                        .next()
                        .ok_or_else(|| err(self.end_pos(), "expected denominator".into()))?;
                    match d.kind {
                        TokenKind::Int(den) if !num::Zero::is_zero(&den) => Ok(
                            Polynomial::constant(&self.ring, Rational::new(n, den)),
                        ),
                        TokenKind::Int(_) => Err(err(d.pos, "zero denominator".into())),
                        other => Err(err(
                            d.pos,
                            format!("expected integer denominator, got `{}`", other.show()),
                        )),
                    }
                } else {
                    Ok(Polynomial::constant(
                        &self.ring,
                        Rational::from_integer(n) * Rational::one(),
                    ))
                }
            }
            other => Err(err(t.pos, format!("unexpected `{}`", other.show()))),
        }
    }
}
