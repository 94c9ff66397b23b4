//! Products of divisor classes written as text, e.g. `(2H+R)*H*H`.
//!
//! ```text
//! expr    := product
//! product := factor ("*" factor)*
//! factor  := "(" linear ")" | term
//! linear  := ["+"|"-"] term (("+"|"-") term)*
//! term    := [integer] ("H"|"R") | integer
//! ```
//!
//! `H` and `R` stand for the resolved classes `H̃` and `R̃`. Every factor must
//! be homogeneous of degree one, and a product must have exactly `r`
//! factors for a scroll of dimension `r`. Positions in errors are 0-based
//! character offsets.

use crate::chow::intersect;
use crate::error::{Error, Result};
use crate::scroll::{ResolvedClass, ScrollType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    H,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Term {
    Class { coeff: i64, generator: Generator },
    Constant(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linear {
    /// Signed terms with their start positions.
    pub terms: Vec<(Term, usize)>,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorExpression {
    pub factors: Vec<Linear>,
    end: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(i64),
    H,
    R,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    End,
}

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let v = text
                    .parse::<i64>()
                    .map_err(|_| parse_err(start, format!("integer {text} is too large")))?;
                out.push((Tok::Int(v), start));
                continue;
            }
            'H' => Tok::H,
            'R' => Tok::R,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{b7}' => Tok::Star,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(parse_err(i, format!("unexpected character {other:?}"))),
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> (Tok, usize) {
        self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at];
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn generator(&mut self) -> Option<Generator> {
        match self.peek().0 {
            Tok::H => {
                self.bump();
                Some(Generator::H)
            }
            Tok::R => {
                self.bump();
                Some(Generator::R)
            }
            _ => None,
        }
    }

    fn term(&mut self, sign: i64) -> Result<(Term, usize)> {
        let (tok, pos) = self.peek();
        match tok {
            Tok::Int(v) => {
                self.bump();
                let term = match self.generator() {
                    Some(generator) => Term::Class { coeff: sign * v, generator },
                    None => Term::Constant(sign * v),
                };
                Ok((term, pos))
            }
            Tok::H | Tok::R => {
                let generator = self.generator().expect("peeked generator");
                Ok((Term::Class { coeff: sign, generator }, pos))
            }
            Tok::End => Err(parse_err(pos, "expected a term, found end of input")),
            _ => Err(parse_err(pos, "expected an integer, H or R")),
        }
    }

    fn linear(&mut self) -> Result<Linear> {
        let position = self.peek().1;
        let mut sign = 1;
        match self.peek().0 {
            Tok::Minus => {
                self.bump();
                sign = -1;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let mut terms = vec![self.term(sign)?];
        loop {
            match self.peek().0 {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term(1)?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(self.term(-1)?);
                }
                _ => return Ok(Linear { terms, position }),
            }
        }
    }

    fn factor(&mut self) -> Result<Linear> {
        let (tok, pos) = self.peek();
        if tok == Tok::LParen {
            self.bump();
            let lin = self.linear()?;
            match self.bump() {
                (Tok::RParen, _) => Ok(Linear { position: pos, ..lin }),
                (Tok::Star, p) => Err(parse_err(p, "product inside a factor; each factor must be linear in H and R")),
                (_, p) => Err(parse_err(p, "expected ')'")),
            }
        } else {
            let (term, p) = self.term(1)?;
            Ok(Linear { terms: vec![(term, p)], position: p })
        }
    }

    fn product(&mut self) -> Result<DivisorExpression> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                (Tok::Star, _) => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                (Tok::End, end) => return Ok(DivisorExpression { factors, end }),
                (_, p) => return Err(parse_err(p, "expected '*' or end of input")),
            }
        }
    }
}

impl Linear {
    /// The class of this factor, rejecting nonzero constant parts.
    pub fn class(&self) -> Result<ResolvedClass> {
        let mut class = ResolvedClass::default();
        for &(term, pos) in &self.terms {
            match term {
                Term::Class { coeff, generator: Generator::H } => class.h += coeff,
                Term::Class { coeff, generator: Generator::R } => class.rr += coeff,
                Term::Constant(0) => {}
                Term::Constant(c) => {
                    return Err(parse_err(
                        pos,
                        format!("constant {c} makes the factor non-linear; factors must be of degree one in H and R"),
                    ))
                }
            }
        }
        Ok(class)
    }
}

impl DivisorExpression {
    pub fn parse(src: &str) -> Result<Self> {
        let toks = lex(src)?;
        Parser { toks, at: 0 }.product()
    }

    pub fn classes(&self) -> Result<Vec<ResolvedClass>> {
        self.factors.iter().map(Linear::class).collect()
    }

    /// Intersection number of the product on `scroll`.
    pub fn evaluate(&self, scroll: &ScrollType) -> Result<i64> {
        let r = scroll.dim() as usize;
        if self.factors.len() != r {
            let pos = self.factors.get(r).map_or(self.end, |f| f.position);
            return Err(parse_err(
                pos,
                format!(
                    "product has {} factors but {scroll} has dimension {r}; exactly {r} linear factors are required",
                    self.factors.len()
                ),
            ));
        }
        intersect(scroll, &self.classes()?)
    }
}

/// Parses and evaluates in one step.
pub fn evaluate(scroll: &ScrollType, src: &str) -> Result<i64> {
    DivisorExpression::parse(src)?.evaluate(scroll)
}
