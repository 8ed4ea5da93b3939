//! Recursive-descent parser for polynomial expressions: `+ - * ^`,
//! integer/rational literals, declared variable names, parentheses.

use super::{Polynomial, Rational, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer { src: src.as_bytes(), pos: 0 };
        let mut out = Vec::new();
        loop {
            while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_whitespace() {
                lx.pos += 1;
            }
            if lx.pos >= lx.src.len() {
                break;
            }
            let start = lx.pos;
            let c = lx.src[lx.pos];
            let tok = match c {
                b'+' => {
                    lx.pos += 1;
                    Tok::Plus
                }
                b'-' => {
                    lx.pos += 1;
                    Tok::Minus
                }
                b'*' => {
                    lx.pos += 1;
                    Tok::Star
                }
                b'^' => {
                    lx.pos += 1;
                    Tok::Caret
                }
                b'/' => {
                    lx.pos += 1;
                    Tok::Slash
                }
                b'(' => {
                    lx.pos += 1;
                    Tok::LParen
                }
                b')' => {
                    lx.pos += 1;
                    Tok::RParen
                }
                b'0'..=b'9' => {
                    let mut end = lx.pos;
                    while end < lx.src.len() && lx.src[end].is_ascii_digit() {
                        end += 1;
                    }
                    let s = std::str::from_utf8(&lx.src[lx.pos..end]).unwrap();
                    lx.pos = end;
                    Tok::Int(s.parse().unwrap())
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let mut end = lx.pos;
                    while end < lx.src.len()
                        && (lx.src[end].is_ascii_alphanumeric() || lx.src[end] == b'_')
                    {
                        end += 1;
                    }
                    let s = std::str::from_utf8(&lx.src[lx.pos..end]).unwrap().to_string();
                    lx.pos = end;
                    Tok::Ident(s)
                }
                other => {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: format!("unexpected character `{}`", other as char),
                    })
                }
            };
            out.push((tok, start));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    ring: &'a Arc<Ring>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| Error::Syntax {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Syntax { pos, msg: "expected non-negative integer exponent".into() }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // rational literal `n/d`
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let dpos = self.here();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(Error::Syntax { pos: dpos, msg: "zero denominator".into() });
                            }
                            Ok(Polynomial::constant(self.ring, Rational::new(n, d)))
                        }
                        _ => Err(Error::Syntax { pos: dpos, msg: "expected integer denominator".into() }),
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(idx) => Ok(Polynomial::var(self.ring, idx)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let cpos = self.here();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Syntax { pos: cpos, msg: "expected `)`".into() }),
                }
            }
            Some(Tok::Minus) => Ok(-&self.factor()?),
            Some(other) => Err(Error::Syntax { pos, msg: format!("unexpected token `{:?}`", other) }),
            None => Err(Error::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parse `text` in the given ring. Total on the grammar, error otherwise.
pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser { toks: &toks, pos: 0, ring, end: text.len() };
    let poly = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Syntax { pos: p.here(), msg: "trailing input".into() });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_frac, Monomial};

    #[test]
    fn grammar_examples() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse("y^2 - x^3", &r).unwrap();
        assert_eq!(p.coeff(&Monomial(vec![0, 2])), rat(1));
        assert_eq!(p.coeff(&Monomial(vec![3, 0])), rat(-1));
        assert_eq!(p.num_terms(), 2);

        let q = parse("(x+y)*(x-y)", &r).unwrap();
        assert_eq!(q, parse("x^2 - y^2", &r).unwrap());

        let s = parse("x^2*y + 3/2", &r).unwrap();
        assert_eq!(s.coeff(&Monomial(vec![2, 1])), rat(1));
        assert_eq!(s.constant_term(), rat_frac(3, 2));
    }

    #[test]
    fn error_positions() {
        let r = Ring::new(vec!["x", "y"]);
        match parse("x + $", &r) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
        match parse("x + z", &r) {
            Err(Error::UnknownVariable(name)) => assert_eq!(name, "z"),
            other => panic!("expected unknown variable, got {:?}", other),
        }
    }

    #[test]
    fn print_parse_round_trip() {
        let r = Ring::new(vec!["x", "y"]);
        for text in ["y^2 - x^3", "x^2*y + 3/2", "x", "-2*x*y + y - 1", "0"] {
            let p = parse(text, &r).unwrap();
            let printed = p.to_string();
            assert_eq!(parse(&printed, &r).unwrap(), p, "round trip failed for {}", text);
        }
    }
}
