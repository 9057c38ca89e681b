//! Equations, solution sets and algebraic closure over a finite inverse
//! semigroup.
//!
//! For finite `S` a set `Y ⊆ Sⁿ` is algebraic exactly when it equals its
//! closure: the set of points at which every pair of n-ary term functions
//! that agree on `Y` still agree. The closure is computed extensionally from
//! the full list of term functions ([`clone_closure`]) by grouping them by
//! their restriction to `Y`.

mod certificate;
mod verdict;

pub use certificate::{Certificate, CertificateKind, CertificateParseError, RevalidationError};
pub use verdict::{ed_verdict, lemma4_check, lemma5_check, rosenblatt_check, CheckOutcome, Verdict, VerdictStatus};

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::semigroup::{Elem, FiniteInverseSemigroup};
use crate::term::{
    clone_closure, parse_equation, point_at, point_count, point_index, FlatTerm, ParseError, Term, TermError,
    DEFAULT_MAX_CELLS,
};

/// Default limit on `|S|ⁿ` for any computation that scans all points.
pub const DEFAULT_MAX_POINTS: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EqGeoError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("equation uses x{needed} but the arity is {arity}")]
    ArityMismatch { needed: usize, arity: usize },
    #[error("a system needs at least one equation")]
    EmptySystem,
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("|S|^n = {required} points exceeds the limit of {limit}")]
    TooManyPoints { required: u128, limit: usize },
    #[error("bad point {text:?}: {reason}")]
    BadPoint { text: String, reason: String },
}

/// Resource limits shared by every closure-based computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_points: usize,
    pub max_cells: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_points: DEFAULT_MAX_POINTS, max_cells: DEFAULT_MAX_CELLS }
    }
}

impl Bounds {
    /// `|S|ⁿ`, provided it fits the point limit.
    pub fn points(&self, order: usize, arity: usize) -> Result<usize, EqGeoError> {
        if arity == 0 {
            return Err(EqGeoError::ZeroArity);
        }
        match point_count(order, arity) {
            Some(p) if p <= self.max_points => Ok(p),
            _ => Err(EqGeoError::TooManyPoints {
                required: (order as u128).saturating_pow(arity.min(128) as u32),
                limit: self.max_points,
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    arity: usize,
    lhs: Term,
    rhs: Term,
    lhs_flat: FlatTerm,
    rhs_flat: FlatTerm,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term, arity: usize, s: &FiniteInverseSemigroup) -> Result<Self, EqGeoError> {
        if let Some(v) = lhs.max_var().max(rhs.max_var()) {
            if v >= arity {
                return Err(EqGeoError::ArityMismatch { needed: v + 1, arity });
            }
        }
        let (lhs_flat, rhs_flat) = (lhs.flatten(s), rhs.flatten(s));
        Ok(Equation { arity, lhs, rhs, lhs_flat, rhs_flat })
    }

    /// `x<var+1> = c`.
    pub fn var_eq_const(var: usize, c: Elem, arity: usize, s: &FiniteInverseSemigroup) -> Result<Self, EqGeoError> {
        Self::new(Term::Var(var), Term::Const(c), arity, s)
    }

    /// `x<a+1> = x<b+1>`.
    pub fn var_eq_var(a: usize, b: usize, arity: usize, s: &FiniteInverseSemigroup) -> Result<Self, EqGeoError> {
        Self::new(Term::Var(a), Term::Var(b), arity, s)
    }

    pub fn parse(text: &str, arity: usize, s: &FiniteInverseSemigroup) -> Result<Self, EqGeoError> {
        let (lhs, rhs) = parse_equation(text, arity, s)?;
        Self::new(lhs, rhs, arity, s)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    pub fn holds_at(&self, point: &[Elem], s: &FiniteInverseSemigroup) -> bool {
        self.lhs_flat.eval_unchecked(point, s) == self.rhs_flat.eval_unchecked(point, s)
    }

    pub fn display<'a>(&'a self, s: &'a FiniteInverseSemigroup) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Equation, &'a FiniteInverseSemigroup);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{} = {}", self.0.lhs_flat.display(self.1), self.0.rhs_flat.display(self.1))
            }
        }
        D(self, s)
    }
}

/// A nonempty finite set of equations sharing one arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSystem {
    arity: usize,
    equations: Vec<Equation>,
}

impl EquationSystem {
    pub fn new(equations: Vec<Equation>) -> Result<Self, EqGeoError> {
        let arity = equations.first().ok_or(EqGeoError::EmptySystem)?.arity;
        if let Some(bad) = equations.iter().find(|e| e.arity != arity) {
            return Err(EqGeoError::ArityMismatch { needed: bad.arity, arity });
        }
        Ok(EquationSystem { arity, equations })
    }

    pub fn parse<S: AsRef<str>>(texts: &[S], arity: usize, s: &FiniteInverseSemigroup) -> Result<Self, EqGeoError> {
        let eqs = texts.iter().map(|t| Equation::parse(t.as_ref(), arity, s)).collect::<Result<Vec<_>, _>>()?;
        Self::new(eqs)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }
}

/// A set of n-tuples over `S`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    arity: usize,
    members: BTreeSet<Vec<Elem>>,
}

impl PointSet {
    pub fn new(arity: usize) -> Self {
        PointSet { arity, members: BTreeSet::new() }
    }

    pub fn from_points<I>(arity: usize, points: I) -> Result<Self, EqGeoError>
    where
        I: IntoIterator<Item = Vec<Elem>>,
    {
        let mut set = PointSet::new(arity);
        for p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, p: Vec<Elem>) -> Result<bool, EqGeoError> {
        if p.len() != self.arity {
            return Err(EqGeoError::ArityMismatch { needed: p.len(), arity: self.arity });
        }
        Ok(self.members.insert(p))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &[Elem]) -> bool {
        self.members.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<Elem>> {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet, EqGeoError> {
        if self.arity != other.arity {
            return Err(EqGeoError::ArityMismatch { needed: other.arity, arity: self.arity });
        }
        Ok(PointSet { arity: self.arity, members: self.members.union(&other.members).cloned().collect() })
    }

    /// Every point of `Sⁿ`.
    pub fn full(arity: usize, s: &FiniteInverseSemigroup, bounds: &Bounds) -> Result<PointSet, EqGeoError> {
        let count = bounds.points(s.order(), arity)?;
        Ok(PointSet { arity, members: (0..count).map(|i| point_at(i, arity, s.order())).collect() })
    }

    /// Tuples written `(a,b)`, separated by `, `; `-` for the empty set.
    pub fn display<'a>(&'a self, s: &'a FiniteInverseSemigroup) -> impl fmt::Display + 'a {
        struct D<'a>(&'a PointSet, &'a FiniteInverseSemigroup);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_empty() {
                    return f.write_str("-");
                }
                for (i, p) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}", display_point(p, self.1))?;
                }
                Ok(())
            }
        }
        D(self, s)
    }
}

pub fn display_point(p: &[Elem], s: &FiniteInverseSemigroup) -> String {
    let names: Vec<&str> = p.iter().map(|&a| s.name(a)).collect();
    format!("({})", names.join(","))
}

/// Parses a point written `(a,b)`, `a,b` or `a b`.
pub fn parse_point(text: &str, arity: usize, s: &FiniteInverseSemigroup) -> Result<Vec<Elem>, EqGeoError> {
    let bad = |reason: String| EqGeoError::BadPoint { text: text.to_string(), reason };
    let trimmed = text.trim();
    let inner = match trimmed.strip_prefix('(') {
        Some(rest) => rest.strip_suffix(')').ok_or_else(|| bad("unbalanced parenthesis".into()))?,
        None => trimmed,
    };
    let point = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| s.index_of(tok).ok_or_else(|| bad(format!("unknown element {tok:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if point.len() != arity {
        return Err(bad(format!("expected {arity} coordinates, got {}", point.len())));
    }
    Ok(point)
}

/// Parses a list of points in the `(a,b), (c,d)` form produced by
/// [`PointSet::display`].
pub fn parse_point_list(text: &str, arity: usize, s: &FiniteInverseSemigroup) -> Result<PointSet, EqGeoError> {
    let text = text.trim();
    let mut set = PointSet::new(arity);
    if text == "-" {
        return Ok(set);
    }
    let mut rest = text;
    while !rest.is_empty() {
        let close = rest.find(')').ok_or_else(|| EqGeoError::BadPoint {
            text: rest.to_string(),
            reason: "missing ')'".into(),
        })?;
        set.insert(parse_point(&rest[..=close], arity, s)?)?;
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(EqGeoError::BadPoint { text: text.to_string(), reason: "trailing ','".into() });
            }
        } else if !rest.is_empty() {
            return Err(EqGeoError::BadPoint { text: rest.to_string(), reason: "expected ','".into() });
        }
    }
    Ok(set)
}

/// `V_S(sys)`: the points satisfying every equation.
pub fn solution_set(sys: &EquationSystem, s: &FiniteInverseSemigroup, bounds: &Bounds) -> Result<PointSet, EqGeoError> {
    let count = bounds.points(s.order(), sys.arity)?;
    let members = (0..count)
        .map(|i| point_at(i, sys.arity, s.order()))
        .filter(|p| sys.equations.iter().all(|e| e.holds_at(p, s)))
        .collect();
    Ok(PointSet { arity: sys.arity, members })
}

/// Result of [`closure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub points: PointSet,
    /// False when the term-function enumeration was truncated; the points
    /// then only over-approximate the true closure.
    pub exact: bool,
    pub clone_size: usize,
}

/// The least algebraic set containing `y` (exact when the clone is complete).
pub fn closure(y: &PointSet, s: &FiniteInverseSemigroup, bounds: &Bounds) -> Result<Closure, EqGeoError> {
    let n = y.arity;
    let count = bounds.points(s.order(), n)?;
    let clone = clone_closure(s, n, bounds.max_cells)?;
    let y_idx: Vec<usize> = y.iter().map(|p| point_index(p, s.order())).collect();
    let fs = clone.functions();

    // one representative per fingerprint (restriction to Y); every other
    // member of the class must agree with it wherever the point survives
    let mut reps: HashMap<Vec<Elem>, usize> = HashMap::new();
    let mut alive = vec![true; count];
    for (i, f) in fs.iter().enumerate() {
        let fp: Vec<Elem> = y_idx.iter().map(|&k| f.values()[k]).collect();
        let r = *reps.entry(fp).or_insert(i);
        if r != i {
            let g = fs[r].values();
            for (p, flag) in alive.iter_mut().enumerate() {
                if *flag && f.values()[p] != g[p] {
                    *flag = false;
                }
            }
        }
    }
    let members = alive
        .iter()
        .enumerate()
        .filter(|(_, &a)| a)
        .map(|(i, _)| point_at(i, n, s.order()))
        .collect();
    Ok(Closure { points: PointSet { arity: n, members }, exact: clone.is_complete(), clone_size: clone.len() })
}

/// Membership of a single point in the closure of `y`, decided afresh:
/// `Some(true)` iff no two term functions agree on `y` but differ at `p`.
/// `None` when the enumeration was truncated and a positive answer cannot be
/// trusted.
pub fn closure_contains(
    y: &PointSet,
    p: &[Elem],
    s: &FiniteInverseSemigroup,
    bounds: &Bounds,
) -> Result<Option<bool>, EqGeoError> {
    if p.len() != y.arity {
        return Err(EqGeoError::ArityMismatch { needed: p.len(), arity: y.arity });
    }
    bounds.points(s.order(), y.arity)?;
    let clone = clone_closure(s, y.arity, bounds.max_cells)?;
    let at = point_index(p, s.order());
    let mut value_at_p: HashMap<Vec<Elem>, Elem> = HashMap::new();
    for f in clone.functions() {
        let fp: Vec<Elem> = y.iter().map(|q| f.at(q, s.order())).collect();
        let v = f.values()[at];
        if *value_at_p.entry(fp).or_insert(v) != v {
            return Ok(Some(false));
        }
    }
    Ok(clone.is_complete().then_some(true))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebraicity {
    Yes,
    No(Vec<Elem>),
    Unknown,
}

/// Whether `y` is the solution set of some system. Only a complete
/// enumeration of term functions yields a yes/no answer.
pub fn is_algebraic(y: &PointSet, s: &FiniteInverseSemigroup, bounds: &Bounds) -> Result<Algebraicity, EqGeoError> {
    let c = closure(y, s, bounds)?;
    if !c.exact {
        return Ok(Algebraicity::Unknown);
    }
    let outside = c.points.iter().find(|p| !y.contains(p)).cloned();
    Ok(outside.map_or(Algebraicity::Yes, Algebraicity::No))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::catalog;

    fn sys(texts: &[&str], arity: usize, s: &FiniteInverseSemigroup) -> EquationSystem {
        EquationSystem::parse(texts, arity, s).unwrap()
    }

    #[test]
    fn solution_set_examples() {
        let b = Bounds::default();
        let c2 = catalog("chain2").unwrap();
        assert_eq!(solution_set(&sys(&["x1 = e"], 1, &c2), &c2, &b).unwrap(), PointSet::from_points(1, [vec![0]]).unwrap());
        assert_eq!(solution_set(&sys(&["x1 = x1"], 2, &c2), &c2, &b).unwrap().len(), 4);
        assert!(solution_set(&sys(&["x1 = e", "x1 = f"], 1, &c2), &c2, &b).unwrap().is_empty());

        let b2 = catalog("brandt_b2").unwrap();
        let v = solution_set(&sys(&["x1 x1 = x1"], 1, &b2), &b2, &b).unwrap();
        let names: Vec<_> = v.iter().map(|p| b2.name(p[0])).collect();
        assert_eq!(names, vec!["e11", "e22", "0"]);
    }

    #[test]
    fn system_errors() {
        let c2 = catalog("chain2").unwrap();
        assert_eq!(EquationSystem::new(vec![]), Err(EqGeoError::EmptySystem));
        let a = Equation::parse("x1 = e", 1, &c2).unwrap();
        let b = Equation::parse("x2 = e", 2, &c2).unwrap();
        assert!(matches!(EquationSystem::new(vec![a, b]), Err(EqGeoError::ArityMismatch { .. })));
        assert!(matches!(
            Equation::new(Term::Var(3), Term::Var(0), 2, &c2),
            Err(EqGeoError::ArityMismatch { needed: 4, arity: 2 })
        ));
    }

    #[test]
    fn closure_examples() {
        let b = Bounds::default();
        let c2 = catalog("chain2").unwrap();
        let y = PointSet::from_points(1, [vec![0]]).unwrap();
        let c = closure(&y, &c2, &b).unwrap();
        assert!(c.exact);
        assert_eq!(c.points, y);

        let b2 = catalog("brandt_b2").unwrap();
        let y = PointSet::from_points(1, [vec![0], vec![3]]).unwrap();
        let c = closure(&y, &b2, &b).unwrap();
        assert!(c.exact);
        assert!(c.points.contains(&[4]));
        assert_eq!(is_algebraic(&y, &b2, &b).unwrap(), Algebraicity::No(vec![4]));
        assert_eq!(closure_contains(&y, &[4], &b2, &b).unwrap(), Some(true));
        assert_eq!(closure_contains(&y, &[1], &b2, &b).unwrap(), Some(false));
    }

    #[test]
    fn chain_union_is_not_algebraic() {
        let b = Bounds::default();
        let c2 = catalog("chain2").unwrap();
        let y = solution_set(&sys(&["x1 = e"], 2, &c2), &c2, &b)
            .unwrap()
            .union(&solution_set(&sys(&["x2 = e"], 2, &c2), &c2, &b).unwrap())
            .unwrap();
        assert_eq!(y.len(), 3);
        assert_eq!(is_algebraic(&y, &c2, &b).unwrap(), Algebraicity::No(vec![1, 1]));
    }

    #[test]
    fn bounds_refuse_large_arity() {
        let b = Bounds::default();
        let s = catalog("sim3").unwrap();
        let y = PointSet::new(3);
        assert!(matches!(closure(&y, &s, &b), Err(EqGeoError::TooManyPoints { required: 39304, .. })));
    }

    #[test]
    fn truncated_clone_gives_unknown() {
        let s = catalog("brandt_b2").unwrap();
        let y = PointSet::from_points(1, [vec![0]]).unwrap();
        let tight = Bounds { max_points: 100, max_cells: 20 };
        assert_eq!(is_algebraic(&y, &s, &tight).unwrap(), Algebraicity::Unknown);
    }

    #[test]
    fn point_parsing() {
        let c2 = catalog("chain2").unwrap();
        assert_eq!(parse_point("(e,f)", 2, &c2).unwrap(), vec![0, 1]);
        assert_eq!(parse_point("e f", 2, &c2).unwrap(), vec![0, 1]);
        assert!(parse_point("(e,f", 2, &c2).is_err());
        assert!(parse_point("e", 2, &c2).is_err());
        assert!(parse_point("q", 1, &c2).is_err());
        let set = parse_point_list("(e,e), (e,f), (f,e)", 2, &c2).unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(set.display(&c2).to_string(), "(e,e), (e,f), (f,e)");
        assert!(parse_point_list("-", 2, &c2).unwrap().is_empty());
        assert!(parse_point_list("(e,e),", 2, &c2).is_err());
        assert!(parse_point_list("(e,e) (f,f)", 2, &c2).is_err());
    }
}
