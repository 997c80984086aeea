//! A small infix grammar for algebra elements, used by the CLI:
//! `x1*y2 + 2*s(1,2)`, `t*e - 1/2*g(1)`, `(x1+x2)^2`.
//!
//! Atoms: `x<i>`, `y<i>`, `t`, rationals `p/q`, transpositions `s(i,j)`,
//! color generators `g(i)` (and powers `g(i,k)`), the idempotents `e` and
//! `em`, dihedral generators `r` and `sr`. Operators: `+ - * ^` and
//! parentheses.

use std::sync::Arc;

use super::element::{Algebra, SraElement};
use crate::error::{CherednikError, Result};
use crate::exact::scalar::{int, parse_scalar};
use crate::exact::tpoly::TPoly;
use crate::groups::element::GroupElement;
use crate::groups::spec::GroupFamily;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            '0'..='9' => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    s.push(chars[i]);
                    i += 1;
                }
                out.push(Tok::Num(s));
            }
            'a'..='z' | 'A'..='Z' => {
                let mut s = String::new();
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    s.push(chars[i]);
                    i += 1;
                }
                out.push(Tok::Ident(s));
            }
            _ => {
                return Err(CherednikError::Parse(format!(
                    "unexpected character `{c}` in expression"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    alg: &'a Arc<Algebra>,
}

impl<'a> Parser<'a> {
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

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(x) if x == t => Ok(()),
            other => Err(CherednikError::Parse(format!(
                "expected {t:?}, found {other:?}"
            ))),
        }
    }

    fn expr(&mut self) -> Result<SraElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SraElement> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.next();
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SraElement> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            match self.next() {
                Some(Tok::Num(s)) => {
                    let e: u32 = s
                        .parse()
                        .map_err(|_| CherednikError::Parse(format!("bad exponent `{s}`")))?;
                    return base.pow(e);
                }
                other => {
                    return Err(CherednikError::Parse(format!(
                        "expected exponent, found {other:?}"
                    )))
                }
            }
        }
        Ok(base)
    }

    fn int_arg(&mut self) -> Result<usize> {
        match self.next() {
            Some(Tok::Num(s)) => s
                .parse::<usize>()
                .map_err(|_| CherednikError::Parse(format!("bad index `{s}`"))),
            other => Err(CherednikError::Parse(format!(
                "expected an index, found {other:?}"
            ))),
        }
    }

    fn atom(&mut self) -> Result<SraElement> {
        let n = self.alg.nvars();
        match self.next() {
            Some(Tok::Minus) => {
                let inner = self.atom()?;
                Ok(inner.scale(&TPoly::constant(int(-1))))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Num(s)) => {
                let c = parse_scalar(&s)?;
                Ok(SraElement::scalar(self.alg, TPoly::constant(c)))
            }
            Some(Tok::Ident(name)) => {
                if name == "t" {
                    return Ok(SraElement::scalar(self.alg, TPoly::t()));
                }
                if name == "e" {
                    return Ok(SraElement::symmetrizer(self.alg));
                }
                if name == "em" {
                    return SraElement::antisymmetrizer(self.alg);
                }
                if name == "r" || name == "sr" {
                    let GroupFamily::Dihedral(m) = self.alg.spec.family else {
                        return Err(CherednikError::Parse(
                            "`r`/`sr` are dihedral generators".into(),
                        ));
                    };
                    let g = if name == "r" {
                        GroupElement::dihedral(m, 1, 0)
                    } else {
                        GroupElement::dihedral(m, 0, 1)
                    };
                    return Ok(SraElement::group(self.alg, g));
                }
                if let Some(idx) = name.strip_prefix('x').and_then(|r| r.parse::<usize>().ok()) {
                    if idx == 0 || idx > n {
                        return Err(CherednikError::Parse(format!("x index {idx} out of range")));
                    }
                    return Ok(SraElement::x(self.alg, idx - 1));
                }
                if let Some(idx) = name.strip_prefix('y').and_then(|r| r.parse::<usize>().ok()) {
                    if idx == 0 || idx > n {
                        return Err(CherednikError::Parse(format!("y index {idx} out of range")));
                    }
                    return Ok(SraElement::y(self.alg, idx - 1));
                }
                if name == "s" {
                    self.expect(Tok::LParen)?;
                    let i = self.int_arg()?;
                    self.expect(Tok::Comma)?;
                    let j = self.int_arg()?;
                    self.expect(Tok::RParen)?;
                    if i == 0 || j == 0 || i > n || j > n || i == j {
                        return Err(CherednikError::Parse(format!(
                            "bad transposition s({i},{j})"
                        )));
                    }
                    return Ok(SraElement::group(
                        self.alg,
                        GroupElement::transposition(n, i - 1, j - 1),
                    ));
                }
                if name == "g" {
                    let GroupFamily::Wreath(l, _) = self.alg.spec.family else {
                        return Err(CherednikError::Parse(
                            "`g(i)` is a wreath-product generator".into(),
                        ));
                    };
                    self.expect(Tok::LParen)?;
                    let i = self.int_arg()?;
                    let k = if matches!(self.peek(), Some(Tok::Comma)) {
                        self.next();
                        self.int_arg()? as u32
                    } else {
                        1
                    };
                    self.expect(Tok::RParen)?;
                    if i == 0 || i > n {
                        return Err(CherednikError::Parse(format!("bad color site {i}")));
                    }
                    return Ok(SraElement::group(
                        self.alg,
                        GroupElement::color_gen(n, i - 1, k, l),
                    ));
                }
                Err(CherednikError::Parse(format!("unknown symbol `{name}`")))
            }
            other => Err(CherednikError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an infix expression into a normal-form element of `alg`.
pub fn parse_element(alg: &Arc<Algebra>, text: &str) -> Result<SraElement> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, alg };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(CherednikError::Parse(format!(
            "trailing input after position {}",
            p.pos
        )));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;

    #[test]
    fn parse_basic_expression() {
        let alg = Algebra::symmetric(2, int(1), TPoly::t()).unwrap();
        let e = parse_element(&alg, "x1*y2 + 2*s(1,2)").unwrap();
        let direct = SraElement::x(&alg, 0)
            .mul(&SraElement::y(&alg, 1))
            .unwrap()
            .add(
                &SraElement::group(&alg, GroupElement::transposition(2, 0, 1))
                    .scale(&TPoly::constant(int(2))),
            )
            .unwrap();
        assert_eq!(e, direct);
    }

    #[test]
    fn parse_rationals_powers_parens() {
        let alg = Algebra::symmetric(2, int(1), TPoly::t()).unwrap();
        let e = parse_element(&alg, "1/2*(x1 + x2)^2 - t*e").unwrap();
        let sum = SraElement::x(&alg, 0).add(&SraElement::x(&alg, 1)).unwrap();
        let direct = sum
            .pow(2)
            .unwrap()
            .scale(&TPoly::constant(rat(1, 2)))
            .sub(&SraElement::symmetrizer(&alg).scale(&TPoly::t()))
            .unwrap();
        assert_eq!(e, direct);
    }

    #[test]
    fn parse_errors() {
        let alg = Algebra::symmetric(2, int(1), TPoly::t()).unwrap();
        assert!(parse_element(&alg, "x3").is_err());
        assert!(parse_element(&alg, "s(1,1)").is_err());
        assert!(parse_element(&alg, "q9").is_err());
        assert!(parse_element(&alg, "x1 +").is_err());
    }
}
