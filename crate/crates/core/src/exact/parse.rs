//! Parser for the textual ℚ(α) grammar emitted by `Display`.
//!
//! Accepts integer literals, `α` (or `a` as an ASCII fallback), `^` powers,
//! `+ - * /`, implicit multiplication (`3α`, `2(α+1)`) and parentheses.

use super::{AlphaRat, ExactError, Rat};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Alpha,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, ExactError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                toks.push(Tok::Int(digits.parse().unwrap()));
            }
            'α' | 'a' => {
                toks.push(Tok::Alpha);
                i += 1;
            }
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' | '−' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            other => {
                return Err(ExactError::Parse(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // sum := product (('+'|'-') product)*
    fn sum(&mut self) -> Result<AlphaRat, ExactError> {
        let mut acc = self.product()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // product := unary (('*'|'/'|implicit) unary)*
    fn product(&mut self) -> Result<AlphaRat, ExactError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(ExactError::ZeroDenominator);
                    }
                    acc = &acc / &rhs;
                }
                // implicit multiplication: 3α, 2(α+1), α(α+1)
                Some(Tok::Int(_)) | Some(Tok::Alpha) | Some(Tok::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<AlphaRat, ExactError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    // power := atom ('^' int)?
    fn power(&mut self) -> Result<AlphaRat, ExactError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| ExactError::Parse("exponent too large".into()))?;
                    let mut acc = AlphaRat::one();
                    for _ in 0..e {
                        acc = &acc * &base;
                    }
                    Ok(acc)
                }
                _ => Err(ExactError::Parse("expected integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<AlphaRat, ExactError> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(AlphaRat::from_rat(Rat::from_bigint(n))),
            Some(Tok::Alpha) => Ok(AlphaRat::alpha()),
            Some(Tok::LParen) => {
                let inner = self.sum()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ExactError::Parse("expected ')'".into())),
                }
            }
            other => Err(ExactError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an element of ℚ(α) from the rendering grammar.
pub fn parse_alpha_rat(s: &str) -> Result<AlphaRat, ExactError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(ExactError::Parse("empty input".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(ExactError::Parse("trailing input".into()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::AlphaPoly;

    #[test]
    fn parse_basic_forms() {
        let a1 = AlphaPoly::linear(1, 1);
        assert_eq!(
            parse_alpha_rat("α+1").unwrap(),
            AlphaRat::from_poly(a1.clone())
        );
        assert_eq!(parse_alpha_rat("a + 1").unwrap(), AlphaRat::from_poly(a1));
        assert_eq!(
            parse_alpha_rat("-1/(α+3)").unwrap(),
            &AlphaRat::from_int(-1) / &AlphaRat::from_poly(AlphaPoly::linear(1, 3))
        );
        assert_eq!(
            parse_alpha_rat("2α^2-α+3").unwrap(),
            AlphaRat::from_poly(AlphaPoly::from_coeffs(vec![
                Rat::from(3),
                Rat::from(-1),
                Rat::from(2)
            ]))
        );
    }

    #[test]
    fn implicit_multiplication_and_nesting() {
        let lhs = parse_alpha_rat("2(α+1)(α+2)").unwrap();
        let rhs = parse_alpha_rat("2α^2 + 6α + 4").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_alpha_rat("").is_err());
        assert!(parse_alpha_rat("α+").is_err());
        assert!(parse_alpha_rat("(α").is_err());
        assert!(parse_alpha_rat("x+1").is_err());
        assert!(parse_alpha_rat("1/0").is_err());
    }
}
