//! Text grammar: `poly := ['+'|'-'] term (('+'|'-') term)*`,
//! `term := factor ('*' factor)*`, `factor := int ['/' int] | 'x' int ['^' int]`.
//! Whitespace is ignored between tokens.

use super::{Coefficient, Monomial, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Int(&'a str),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn err(position: usize, message: impl Into<String>) -> PolyError {
    PolyError::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token<'_>)>, PolyError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        let start = pos;
        let tok = match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                pos += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'/' => Token::Slash,
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                out.push((start, Token::Int(&s[start..pos])));
                continue;
            }
            b'x' => {
                pos += 1;
                let digits = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let index: usize = s[digits..pos]
                    .parse()
                    .map_err(|_| err(start, "expected variable index after 'x'"))?;
                if index == 0 {
                    return Err(err(start, "variables are indexed from 1"));
                }
                out.push((start, Token::Var(index)));
                continue;
            }
            _ => {
                let ch = s[pos..].chars().next().unwrap_or('?');
                return Err(err(pos, format!("unexpected character {ch:?}")));
            }
        };
        out.push((start, tok));
        pos += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    at: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn int(&mut self, what: &str) -> Result<&'a str, PolyError> {
        let pos = self.position();
        match self.next() {
            Some(Token::Int(s)) => Ok(s),
            _ => Err(err(pos, format!("expected {what}"))),
        }
    }

    fn term<C: Coefficient>(&mut self) -> Result<(C, Monomial), PolyError> {
        let mut coeff = C::one();
        let mut mono = Monomial::one();
        loop {
            let pos = self.position();
            match self.next() {
                Some(Token::Int(num)) => {
                    let den = if self.peek() == Some(&Token::Slash) {
                        self.next();
                        Some(self.int("denominator")?)
                    } else {
                        None
                    };
                    let c = C::parse_literal(num, den)
                        .ok_or_else(|| err(pos, "coefficient not representable in this ring"))?;
                    coeff = coeff * c;
                }
                Some(Token::Var(i)) => {
                    let e = if self.peek() == Some(&Token::Caret) {
                        self.next();
                        let epos = self.position();
                        self.int("exponent")?
                            .parse::<u32>()
                            .map_err(|_| err(epos, "exponent too large"))?
                    } else {
                        1
                    };
                    mono = mono.mul(&Monomial::var_pow(i, e));
                }
                _ => return Err(err(pos, "expected coefficient or variable")),
            }
            if self.peek() == Some(&Token::Star) {
                self.next();
            } else {
                return Ok((coeff, mono));
            }
        }
    }
}

pub(super) fn parse<C: Coefficient>(s: &str) -> Result<Polynomial<C>, PolyError> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(err(0, "empty input"));
    }
    let mut parser = Parser {
        tokens,
        at: 0,
        end: s.len(),
    };
    let mut poly = Polynomial::zero();
    let mut negative = false;
    match parser.peek() {
        Some(Token::Minus) => {
            parser.next();
            negative = true;
        }
        Some(Token::Plus) => {
            parser.next();
        }
        _ => {}
    }
    loop {
        let (c, m) = parser.term::<C>()?;
        poly.add_term(m, if negative { -c } else { c });
        let pos = parser.position();
        match parser.next() {
            None => return Ok(poly),
            Some(Token::Plus) => negative = false,
            Some(Token::Minus) => negative = true,
            Some(_) => return Err(err(pos, "expected '+' or '-'")),
        }
    }
}
