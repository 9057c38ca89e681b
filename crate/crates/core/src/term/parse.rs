//! Surface syntax for terms and equations.
//!
//! ```text
//! equation := term '=' term
//! term     := factor ( '*'? factor )*
//! factor   := atom ( '^' '-'? digits )*
//! atom     := word | '(' term ')'
//! ```
//!
//! A word `x<k>` (k ≥ 1) is the variable with index `k - 1`; any other word
//! must name an element. `^k` expands to a `|k|`-fold product, inverted
//! when `k < 0`.

use std::fmt;

use thiserror::Error;

use super::Term;
use crate::semigroup::{is_variable_name, FiniteInverseSemigroup};

/// Upper bound on syntax-tree size after exponent expansion.
pub const MAX_TERM_NODES: usize = 4096;
const MAX_EXPONENT: u32 = 64;
const MAX_NESTING: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    Empty,
    UnknownIdentifier(String),
    VariableOutOfRange { name: String, arity: usize },
    BadExponent(String),
    TooLarge,
    TooDeep,
    MissingEquals,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            Self::UnexpectedToken(t) => write!(f, "unexpected {t}"),
            Self::UnexpectedEnd => f.write_str("unexpected end of input"),
            Self::Empty => f.write_str("empty term"),
            Self::UnknownIdentifier(w) => write!(f, "unknown identifier {w:?}"),
            Self::VariableOutOfRange { name, arity } => {
                write!(f, "variable {name} is outside arity {arity}")
            }
            Self::BadExponent(e) => write!(f, "bad exponent {e:?} (need a nonzero integer up to {MAX_EXPONENT})"),
            Self::TooLarge => write!(f, "term expands to more than {MAX_TERM_NODES} nodes"),
            Self::TooDeep => write!(f, "parentheses nested deeper than {MAX_NESTING}"),
            Self::MissingEquals => f.write_str("expected `lhs = rhs`"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at byte {position}: {kind}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok<'a> {
    Word(&'a str),
    Caret,
    Minus,
    Star,
    LParen,
    RParen,
    Equals,
}

impl Tok<'_> {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("{w:?}"),
            Tok::Caret => "'^'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Equals => "'='".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok<'_>)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'^' => Tok::Caret,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'=' => Tok::Equals,
            c if c.is_ascii_alphanumeric() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Word(&text[start..i])));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('\u{fffd}');
                return Err(ParseError { kind: ParseErrorKind::UnexpectedChar(ch), position: i });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, 's> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end: usize,
    arity: usize,
    s: &'s FiniteInverseSemigroup,
    nodes: usize,
    depth: usize,
}

impl<'a> Parser<'a, '_> {
    fn peek(&self) -> Option<&Tok<'a>> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { kind, position: self.offset() }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.describe())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn charge(&mut self, n: usize) -> Result<(), ParseError> {
        self.nodes = self.nodes.saturating_add(n);
        if self.nodes > MAX_TERM_NODES {
            Err(self.err(ParseErrorKind::TooLarge))
        } else {
            Ok(())
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Word(_)) | Some(Tok::LParen))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        if !self.starts_factor() {
            return Err(match self.peek() {
                None | Some(Tok::Equals) | Some(Tok::RParen) => self.err(ParseErrorKind::Empty),
                _ => self.unexpected(),
            });
        }
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                if !self.starts_factor() {
                    return Err(self.unexpected());
                }
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let rhs = self.factor()?;
            self.charge(1)?;
            acc = Term::product(acc, rhs);
        }
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp_pos = self.offset();
            let negative = if self.peek() == Some(&Tok::Minus) {
                self.pos += 1;
                true
            } else {
                false
            };
            let digits = match self.peek() {
                Some(Tok::Word(w)) => *w,
                _ => return Err(self.unexpected()),
            };
            let k: u32 = digits
                .parse()
                .ok()
                .filter(|k| (1..=MAX_EXPONENT).contains(k))
                .ok_or(ParseError { kind: ParseErrorKind::BadExponent(digits.to_string()), position: exp_pos })?;
            self.pos += 1;
            let size = base.node_count();
            // k copies plus k-1 product nodes plus an optional inverse,
            // less the copy already charged
            self.charge(size.saturating_mul(k as usize - 1) + k as usize - 1 + usize::from(negative))?;
            let mut expanded = base.clone();
            for _ in 1..k {
                expanded = Term::product(expanded, base.clone());
            }
            base = if negative { Term::inverse(expanded) } else { expanded };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Word(w)) => {
                let here = self.offset();
                self.charge(1)?;
                self.pos += 1;
                if is_variable_name(w) {
                    let k: usize = w[1..].parse().unwrap_or(usize::MAX);
                    if k == 0 || k > self.arity {
                        return Err(ParseError {
                            kind: ParseErrorKind::VariableOutOfRange { name: w.to_string(), arity: self.arity },
                            position: here,
                        });
                    }
                    Ok(Term::Var(k - 1))
                } else {
                    self.s.index_of(w).map(Term::Const).ok_or(ParseError {
                        kind: ParseErrorKind::UnknownIdentifier(w.to_string()),
                        position: here,
                    })
                }
            }
            Some(Tok::LParen) => {
                self.depth += 1;
                if self.depth > MAX_NESTING {
                    return Err(self.err(ParseErrorKind::TooDeep));
                }
                self.pos += 1;
                let inner = self.term()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                self.depth -= 1;
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

fn parser<'a, 's>(text: &'a str, arity: usize, s: &'s FiniteInverseSemigroup) -> Result<Parser<'a, 's>, ParseError> {
    Ok(Parser { toks: lex(text)?, pos: 0, end: text.len(), arity, s, nodes: 0, depth: 0 })
}

/// Parses a single term in variables `x1..x{arity}` over `s`.
pub fn parse_term(text: &str, arity: usize, s: &FiniteInverseSemigroup) -> Result<Term, ParseError> {
    let mut p = parser(text, arity, s)?;
    let t = p.term()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(t)
}

/// Parses `lhs = rhs`.
pub fn parse_equation(text: &str, arity: usize, s: &FiniteInverseSemigroup) -> Result<(Term, Term), ParseError> {
    let mut p = parser(text, arity, s)?;
    let lhs = p.term()?;
    match p.peek() {
        Some(Tok::Equals) => p.pos += 1,
        None => return Err(p.err(ParseErrorKind::MissingEquals)),
        Some(_) => return Err(p.unexpected()),
    }
    // each side gets its own size budget
    p.nodes = 0;
    let rhs = p.term()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok((lhs, rhs))
}
