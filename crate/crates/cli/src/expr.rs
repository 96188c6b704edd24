//! Parser for polynomial expressions over the integers in `q`, `a`, `b`.
//!
//! Grammar: `sum := term (('+' | '-') term)*`, `term := unary ('*' unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' digits)?`,
//! `atom := digits | 'q' | 'a' | 'b' | '(' sum ')'`.
//! Every canonical `Poly` string parses back to the same polynomial.

use std::str::FromStr;

use num_bigint::BigInt;
use qhankel_core::Poly;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse expression at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let col = src[..i].chars().count() + 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut digits = String::from(c);
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                Tok::Num(digits)
            }
            'q' | 'a' | 'b' => Tok::Var(c),
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            other => {
                return Err(ParseError {
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((col, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc += &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Star) {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat(&Tok::Minus) {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Tok::Num(d)) => match d.parse::<u32>() {
                Ok(e) => {
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                Err(_) => self.fail(format!("exponent `{d}` is too large")),
            },
            _ => self.fail("expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let tok = match self.peek().cloned() {
            Some(t) => t,
            None => return self.fail("unexpected end of input"),
        };
        self.pos += 1;
        match tok {
            Tok::Num(d) => Ok(Poly::constant(BigInt::from_str(&d).expect("lexer yields digits"))),
            Tok::Var('q') => Ok(Poly::q()),
            Tok::Var('a') => Ok(Poly::a()),
            Tok::Var(_) => Ok(Poly::b()),
            Tok::Open => {
                let inner = self.sum()?;
                if self.eat(&Tok::Close) {
                    Ok(inner)
                } else {
                    self.fail("expected `)`")
                }
            }
            _ => {
                self.pos -= 1;
                self.fail("expected a number, a variable or `(`")
            }
        }
    }
}

pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count() + 1,
    };
    let value = p.sum()?;
    if p.pos < p.toks.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(value)
}
