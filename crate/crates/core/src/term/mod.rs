//! Terms over an inverse semigroup: products of variables, constants and
//! inverses.
//!
//! [`Term`] is the raw syntax tree. [`FlatTerm`] is the normal form in which
//! inversion has been pushed onto single variables (via `(uv)⁻¹ = v⁻¹u⁻¹`),
//! inverted constants have been replaced by their inverses, and neighbouring
//! constants have been multiplied out.

mod clone;
mod parse;

pub use clone::{clone_closure, point_count, point_index, point_at, CloneClosure, TermFunction, DEFAULT_MAX_CELLS};
pub use parse::{parse_equation, parse_term, ParseError, ParseErrorKind, MAX_TERM_NODES};

use std::fmt;

use thiserror::Error;

use crate::semigroup::{Elem, FiniteInverseSemigroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("term mentions x{needed} but the point has arity {arity}")]
    ArityMismatch { needed: usize, arity: usize },
    #[error("point coordinate {0} is not an element of the semigroup")]
    BadCoordinate(Elem),
    #[error("{cells} table cells exceed the limit of {limit}")]
    TooLarge { cells: u128, limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Const(Elem),
    Product(Box<Term>, Box<Term>),
    Inverse(Box<Term>),
}

impl Term {
    pub fn product(a: Term, b: Term) -> Term {
        Term::Product(Box::new(a), Box::new(b))
    }

    pub fn inverse(a: Term) -> Term {
        Term::Inverse(Box::new(a))
    }

    pub fn node_count(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) => 1,
            Term::Product(a, b) => 1 + a.node_count() + b.node_count(),
            Term::Inverse(a) => 1 + a.node_count(),
        }
    }

    /// Largest variable index used, if any.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::Const(_) => None,
            Term::Product(a, b) => a.max_var().max(b.max_var()),
            Term::Inverse(a) => a.max_var(),
        }
    }

    pub fn evaluate(&self, point: &[Elem], s: &FiniteInverseSemigroup) -> Result<Elem, TermError> {
        check_point(self.max_var(), point, s)?;
        Ok(self.eval_unchecked(point, s))
    }

    fn eval_unchecked(&self, point: &[Elem], s: &FiniteInverseSemigroup) -> Elem {
        match self {
            Term::Var(i) => point[*i],
            Term::Const(c) => *c,
            Term::Product(a, b) => s.mul(a.eval_unchecked(point, s), b.eval_unchecked(point, s)),
            Term::Inverse(a) => s.inv(a.eval_unchecked(point, s)),
        }
    }

    pub fn flatten(&self, s: &FiniteInverseSemigroup) -> FlatTerm {
        let mut raw = Vec::new();
        push_flat(self, false, s, &mut raw);
        FlatTerm::from_literals(raw, s).expect("a term has at least one leaf")
    }
}

fn push_flat(t: &Term, inverted: bool, s: &FiniteInverseSemigroup, out: &mut Vec<Literal>) {
    match t {
        Term::Var(i) => out.push(Literal::Var { index: *i, inverted }),
        Term::Const(c) => out.push(Literal::Const(if inverted { s.inv(*c) } else { *c })),
        Term::Product(a, b) if inverted => {
            push_flat(b, true, s, out);
            push_flat(a, true, s, out);
        }
        Term::Product(a, b) => {
            push_flat(a, false, s, out);
            push_flat(b, false, s, out);
        }
        Term::Inverse(a) => push_flat(a, !inverted, s, out),
    }
}

fn check_point(max_var: Option<usize>, point: &[Elem], s: &FiniteInverseSemigroup) -> Result<(), TermError> {
    if let Some(v) = max_var {
        if v >= point.len() {
            return Err(TermError::ArityMismatch { needed: v + 1, arity: point.len() });
        }
    }
    match point.iter().find(|&&p| p >= s.order()) {
        Some(&bad) => Err(TermError::BadCoordinate(bad)),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Literal {
    Var { index: usize, inverted: bool },
    Const(Elem),
}

impl Literal {
    #[inline]
    pub fn value(&self, point: &[Elem], s: &FiniteInverseSemigroup) -> Elem {
        match *self {
            Literal::Var { index, inverted: false } => point[index],
            Literal::Var { index, inverted: true } => s.inv(point[index]),
            Literal::Const(c) => c,
        }
    }
}

/// A nonempty word of literals with no two constants adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlatTerm {
    literals: Vec<Literal>,
}

impl FlatTerm {
    /// Builds a flat term, multiplying out adjacent constants. `None` when
    /// `literals` is empty.
    pub fn from_literals(literals: Vec<Literal>, s: &FiniteInverseSemigroup) -> Option<FlatTerm> {
        let mut fused: Vec<Literal> = Vec::with_capacity(literals.len());
        for lit in literals {
            match (fused.last_mut(), lit) {
                (Some(Literal::Const(prev)), Literal::Const(c)) => *prev = s.mul(*prev, c),
                _ => fused.push(lit),
            }
        }
        (!fused.is_empty()).then_some(FlatTerm { literals: fused })
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn max_var(&self) -> Option<usize> {
        self.literals
            .iter()
            .filter_map(|l| match l {
                Literal::Var { index, .. } => Some(*index),
                Literal::Const(_) => None,
            })
            .max()
    }

    pub fn evaluate(&self, point: &[Elem], s: &FiniteInverseSemigroup) -> Result<Elem, TermError> {
        check_point(self.max_var(), point, s)?;
        Ok(self.eval_unchecked(point, s))
    }

    pub(crate) fn eval_unchecked(&self, point: &[Elem], s: &FiniteInverseSemigroup) -> Elem {
        let mut it = self.literals.iter();
        let first = it.next().expect("nonempty").value(point, s);
        it.fold(first, |acc, l| s.mul(acc, l.value(point, s)))
    }

    /// Back to a syntax tree: a left-nested product of the literals.
    pub fn embed(&self) -> Term {
        let leaf = |l: &Literal| match *l {
            Literal::Var { index, inverted: false } => Term::Var(index),
            Literal::Var { index, inverted: true } => Term::inverse(Term::Var(index)),
            Literal::Const(c) => Term::Const(c),
        };
        let mut it = self.literals.iter();
        let first = leaf(it.next().expect("nonempty"));
        it.fold(first, |acc, l| Term::product(acc, leaf(l)))
    }

    pub fn display<'a>(&'a self, s: &'a FiniteInverseSemigroup) -> impl fmt::Display + 'a {
        FlatDisplay { term: self, s }
    }
}

struct FlatDisplay<'a> {
    term: &'a FlatTerm,
    s: &'a FiniteInverseSemigroup,
}

impl fmt::Display for FlatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, lit) in self.term.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match *lit {
                Literal::Var { index, inverted } => {
                    write!(f, "x{}", index + 1)?;
                    if inverted {
                        f.write_str("^-1")?;
                    }
                }
                Literal::Const(c) => f.write_str(self.s.name(c))?,
            }
        }
        Ok(())
    }
}
