//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ["-"|"+"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := base ("^" nat)?
//! base   := ident | int ("/" nat)? | "(" expr ")"
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::field::Rational;
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::QPoly;
use super::PolyError;

const MAX_EXPONENT: u32 = 255;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
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

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, start));
            i += 1;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else {
            return Err(PolyError::Syntax {
                position: start,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn constant(&self, c: Rational) -> QPoly {
        QPoly::constant(c, self.vars.len(), MonomialOrder::GrevLex)
    }

    fn expr(&mut self) -> Result<QPoly, PolyError> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QPoly, PolyError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        if let Some(Tok::Slash) = self.peek() {
            return Err(PolyError::Division { position: self.offset() });
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QPoly, PolyError> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(n)) => n.clone(),
                _ => return self.syntax("expected a natural-number exponent"),
            };
            let e: u32 = match u32::try_from(&e) {
                Ok(v) if v <= MAX_EXPONENT => v,
                _ => return self.syntax(format!("exponent larger than {MAX_EXPONENT}")),
            };
            self.pos += 1;
            if e == 0 {
                return Ok(self.constant(Rational::from_integer(1.into())));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<QPoly, PolyError> {
        let position = self.offset();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let Some(index) = self.vars.iter().position(|v| *v == name) else {
                    return Err(PolyError::UnknownVariable { name, position });
                };
                Ok(QPoly::var(self.vars.len(), index))
            }
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    let slash = self.offset();
                    self.pos += 1;
                    let Some(Tok::Int(d)) = self.peek().cloned() else {
                        return Err(PolyError::Division { position: slash });
                    };
                    if d.is_zero() {
                        return Err(PolyError::Division { position: slash });
                    }
                    self.pos += 1;
                    return Ok(self.constant(Rational::new(n, d)));
                }
                Ok(self.constant(Rational::from_integer(n)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.syntax("expected ')'"),
                }
            }
            Some(Tok::Slash) => Err(PolyError::Division { position }),
            Some(t) => self.syntax(format!("unexpected token {t:?}")),
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses an expression over the named variables into grevlex normal form.
pub fn parse_polynomial(expr: &str, vars: &[String]) -> Result<QPoly, PolyError> {
    let toks = tokenize(expr)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: expr.len(),
        vars,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.toks.len() {
        if let Some(Tok::Slash) = parser.peek() {
            return Err(PolyError::Division { position: parser.offset() });
        }
        return parser.syntax("trailing input");
    }
    Ok(poly)
}

/// Convenience wrapper producing a monomial from an exponent list, grevlex-sorted.
pub fn monomial_poly(exps: &[u16]) -> QPoly {
    QPoly::monomial(
        Monomial::from_exponents(exps),
        Rational::from_integer(1.into()),
        MonomialOrder::GrevLex,
    )
}
