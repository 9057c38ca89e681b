//! Conjugator normal forms of terms restricted to idempotent arguments.
//!
//! A good term is `x` itself or a product `(s1 x s1⁻¹)(s2 x s2⁻¹)…(sk x sk⁻¹)`.
//! On idempotents every one- or two-variable term agrees with a good term
//! (resp. a product of one good term in each variable) followed by a fixed
//! tail constant. The normalisers here construct those forms and verify them
//! by exhaustive evaluation before returning.
//!
//! Conjugators and tails live in `S¹`, the semigroup with a formal identity
//! adjoined: a term may start or end with a variable, and `S` need not have
//! an identity of its own. All values computed stay inside `S`.

use std::fmt;

use thiserror::Error;

use crate::semigroup::{Elem, FiniteInverseSemigroup};
use crate::term::{FlatTerm, Literal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoodTermError {
    #[error("{0} is not an idempotent")]
    NotIdempotent(String),
    #[error("term uses x{0}, outside the normaliser's variables")]
    ArityViolation(usize),
    #[error("term does not mention x{0}")]
    MissingVariable(usize),
    #[error("normal form disagrees with the term at {0}")]
    ContractViolation(String),
}

/// An element of `S¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Adjoined {
    One,
    Elem(Elem),
}

impl Adjoined {
    pub fn mul(self, other: Adjoined, s: &FiniteInverseSemigroup) -> Adjoined {
        match (self, other) {
            (Adjoined::One, x) | (x, Adjoined::One) => x,
            (Adjoined::Elem(a), Adjoined::Elem(b)) => Adjoined::Elem(s.mul(a, b)),
        }
    }

    /// `value·self`, omitting the factor when `self` is the formal identity.
    pub fn apply_right(self, value: Elem, s: &FiniteInverseSemigroup) -> Elem {
        match self {
            Adjoined::One => value,
            Adjoined::Elem(d) => s.mul(value, d),
        }
    }

    fn name(self, s: &FiniteInverseSemigroup) -> &str {
        match self {
            Adjoined::One => "1",
            Adjoined::Elem(a) => s.name(a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GoodTerm {
    VarOnly,
    Conjugated(Vec<Adjoined>),
}

impl GoodTerm {
    pub fn conjugators(&self) -> &[Adjoined] {
        match self {
            GoodTerm::VarOnly => &[],
            GoodTerm::Conjugated(c) => c,
        }
    }

    fn from_conjugators(conjugators: Vec<Adjoined>) -> GoodTerm {
        debug_assert!(!conjugators.is_empty());
        GoodTerm::Conjugated(conjugators)
    }

    /// Value at an idempotent `e`: `e` itself for `VarOnly`, otherwise the
    /// product of the conjugates `s·e·s⁻¹` (a formal-identity conjugator
    /// contributes `e`).
    pub fn evaluate(&self, e: Elem, s: &FiniteInverseSemigroup) -> Result<Elem, GoodTermError> {
        if !s.is_idempotent(e) {
            return Err(GoodTermError::NotIdempotent(s.name(e).to_string()));
        }
        Ok(self.eval_unchecked(e, s))
    }

    fn eval_unchecked(&self, e: Elem, s: &FiniteInverseSemigroup) -> Elem {
        let conj = |c: &Adjoined| match *c {
            Adjoined::One => e,
            Adjoined::Elem(a) => s.mul(s.mul(a, e), s.inv(a)),
        };
        match self {
            GoodTerm::VarOnly => e,
            GoodTerm::Conjugated(cs) => s.product(cs.iter().map(conj)).expect("nonempty"),
        }
    }

    pub fn display<'a>(&'a self, var: &'a str, s: &'a FiniteInverseSemigroup) -> impl fmt::Display + 'a {
        GoodDisplay { g: self, var, s }
    }
}

struct GoodDisplay<'a> {
    g: &'a GoodTerm,
    var: &'a str,
    s: &'a FiniteInverseSemigroup,
}

impl fmt::Display for GoodDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.g {
            GoodTerm::VarOnly => f.write_str(self.var),
            GoodTerm::Conjugated(cs) => {
                for c in cs {
                    match c {
                        Adjoined::One => write!(f, "({})", self.var)?,
                        Adjoined::Elem(a) => {
                            let n = self.s.name(*a);
                            write!(f, "({n} {} {n}^-1)", self.var)?
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// `t(e) = good(e)·tail` for every idempotent `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedUnary {
    pub good: GoodTerm,
    pub tail: Adjoined,
}

impl NormalizedUnary {
    pub fn evaluate(&self, e: Elem, s: &FiniteInverseSemigroup) -> Result<Elem, GoodTermError> {
        Ok(self.tail.apply_right(self.good.evaluate(e, s)?, s))
    }

    pub fn display<'a>(&'a self, s: &'a FiniteInverseSemigroup) -> impl fmt::Display + 'a {
        NormalDisplay { parts: vec![(&self.good, "x")], tail: self.tail, s }
    }
}

/// `t(e, f) = good_x(e)·good_y(f)·tail` for all idempotents `e, f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedBinary {
    pub good_x: GoodTerm,
    pub good_y: GoodTerm,
    pub tail: Adjoined,
}

impl NormalizedBinary {
    pub fn evaluate(&self, e: Elem, f: Elem, s: &FiniteInverseSemigroup) -> Result<Elem, GoodTermError> {
        let v = s.mul(self.good_x.evaluate(e, s)?, self.good_y.evaluate(f, s)?);
        Ok(self.tail.apply_right(v, s))
    }

    pub fn display<'a>(&'a self, s: &'a FiniteInverseSemigroup) -> impl fmt::Display + 'a {
        NormalDisplay { parts: vec![(&self.good_x, "x"), (&self.good_y, "y")], tail: self.tail, s }
    }
}

struct NormalDisplay<'a> {
    parts: Vec<(&'a GoodTerm, &'a str)>,
    tail: Adjoined,
    s: &'a FiniteInverseSemigroup,
}

impl fmt::Display for NormalDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, var) in &self.parts {
            write!(f, "{}", g.display(var, self.s))?;
        }
        if let Adjoined::Elem(_) = self.tail {
            write!(f, " * {}", self.tail.name(self.s))?;
        }
        Ok(())
    }
}

/// Splits a flat term into its variable occurrences, each paired with the
/// product (in `S¹`) of the constants before it, and the product of all
/// constants. Inverted variables count as plain occurrences: on idempotents
/// `e⁻¹ = e`.
fn occurrences(t: &FlatTerm, s: &FiniteInverseSemigroup) -> (Vec<(usize, Adjoined)>, Adjoined) {
    let mut prefix = Adjoined::One;
    let mut occ = Vec::new();
    for lit in t.literals() {
        match *lit {
            Literal::Var { index, .. } => occ.push((index, prefix)),
            Literal::Const(c) => prefix = prefix.mul(Adjoined::Elem(c), s),
        }
    }
    (occ, prefix)
}

fn good_from(prefixes: Vec<Adjoined>) -> GoodTerm {
    if prefixes == [Adjoined::One] {
        GoodTerm::VarOnly
    } else {
        GoodTerm::from_conjugators(prefixes)
    }
}

fn check_vars(t: &FlatTerm, arity: usize) -> Result<(), GoodTermError> {
    for lit in t.literals() {
        if let Literal::Var { index, .. } = *lit {
            if index >= arity {
                return Err(GoodTermError::ArityViolation(index + 1));
            }
        }
    }
    for v in 0..arity {
        if !t.literals().iter().any(|l| matches!(l, Literal::Var { index, .. } if *index == v)) {
            return Err(GoodTermError::MissingVariable(v + 1));
        }
    }
    Ok(())
}

/// Normal form of a term in `x1` alone, valid at idempotent arguments.
pub fn normalize_unary(t: &FlatTerm, s: &FiniteInverseSemigroup) -> Result<NormalizedUnary, GoodTermError> {
    check_vars(t, 1)?;
    let (occ, tail) = occurrences(t, s);
    let good = good_from(occ.into_iter().map(|(_, p)| p).collect());
    let nf = NormalizedUnary { good, tail };
    for &e in s.idempotents() {
        if t.eval_unchecked(&[e], s) != nf.evaluate(e, s)? {
            return Err(GoodTermError::ContractViolation(s.name(e).to_string()));
        }
    }
    Ok(nf)
}

/// Normal form of a term in `x1, x2`, valid at pairs of idempotents. The
/// conjugates of the two variables are idempotents and hence commute, so
/// the `x1` conjugates can be gathered to the left of the `x2` conjugates.
pub fn normalize_binary(t: &FlatTerm, s: &FiniteInverseSemigroup) -> Result<NormalizedBinary, GoodTermError> {
    check_vars(t, 2)?;
    let (occ, tail) = occurrences(t, s);
    let pick = |v: usize| occ.iter().filter(|(i, _)| *i == v).map(|(_, p)| *p).collect::<Vec<_>>();
    let nf = NormalizedBinary { good_x: good_from(pick(0)), good_y: good_from(pick(1)), tail };
    for &e in s.idempotents() {
        for &f in s.idempotents() {
            if t.eval_unchecked(&[e, f], s) != nf.evaluate(e, f, s)? {
                return Err(GoodTermError::ContractViolation(format!("({}, {})", s.name(e), s.name(f))));
            }
        }
    }
    Ok(nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{catalog, symmetric_inverse_monoid, CATALOG_NAMES};
    use crate::term::parse_term;
    use proptest::prelude::*;

    fn flat(text: &str, arity: usize, s: &FiniteInverseSemigroup) -> FlatTerm {
        parse_term(text, arity, s).unwrap().flatten(s)
    }

    #[test]
    fn bare_variable_is_var_only() {
        let s = symmetric_inverse_monoid(2).unwrap();
        let nf = normalize_unary(&flat("x1", 1, &s), &s).unwrap();
        assert_eq!(nf, NormalizedUnary { good: GoodTerm::VarOnly, tail: Adjoined::One });
    }

    #[test]
    fn s_x_x_conjugates_twice() {
        let s = symmetric_inverse_monoid(2).unwrap();
        let a = s.index_of("p2_").unwrap();
        let nf = normalize_unary(&flat("p2_ x1 x1", 1, &s), &s).unwrap();
        assert_eq!(nf.good, GoodTerm::Conjugated(vec![Adjoined::Elem(a), Adjoined::Elem(a)]));
        assert_eq!(nf.tail, Adjoined::Elem(a));
        assert_eq!(s.idempotents().len(), 4);
        for &e in s.idempotents() {
            assert_eq!(nf.evaluate(e, &s).unwrap(), s.mul(a, e));
        }
        assert_eq!(nf.display(&s).to_string(), "(p2_ x p2_^-1)(p2_ x p2_^-1) * p2_");
    }

    #[test]
    fn inverse_variable_matches_plain_only_on_idempotents() {
        let s = symmetric_inverse_monoid(2).unwrap();
        let a = normalize_unary(&flat("x1^-1", 1, &s), &s).unwrap();
        let b = normalize_unary(&flat("x1", 1, &s), &s).unwrap();
        assert_eq!(a, b);
        let non_idem = s.index_of("p2_").unwrap();
        assert_ne!(s.inv(non_idem), non_idem);
    }

    #[test]
    fn binary_examples() {
        let s = catalog("brandt_b2").unwrap();
        let nf = normalize_binary(&flat("x1 x2 x1", 2, &s), &s).unwrap();
        assert_eq!(nf.good_x, GoodTerm::Conjugated(vec![Adjoined::One, Adjoined::One]));
        assert_eq!(nf.good_y, GoodTerm::VarOnly);
        assert_eq!(nf.tail, Adjoined::One);

        let nf = normalize_binary(&flat("x1 x2", 2, &s), &s).unwrap();
        assert_eq!((nf.good_x, nf.good_y, nf.tail), (GoodTerm::VarOnly, GoodTerm::VarOnly, Adjoined::One));

        let (a, b) = (s.index_of("e12").unwrap(), s.index_of("e21").unwrap());
        let ab = s.mul(a, b);
        let nf = normalize_binary(&flat("e12 x2 e21 x1", 2, &s), &s).unwrap();
        assert_eq!(nf.good_y, GoodTerm::Conjugated(vec![Adjoined::Elem(a)]));
        assert_eq!(nf.good_x, GoodTerm::Conjugated(vec![Adjoined::Elem(ab)]));
        assert_eq!(nf.tail, Adjoined::Elem(ab));
    }

    #[test]
    fn errors() {
        let s = catalog("chain2").unwrap();
        assert_eq!(normalize_unary(&flat("x1 x2", 2, &s), &s), Err(GoodTermError::ArityViolation(2)));
        assert_eq!(normalize_unary(&flat("e", 1, &s), &s), Err(GoodTermError::MissingVariable(1)));
        assert_eq!(normalize_binary(&flat("x1 e", 2, &s), &s), Err(GoodTermError::MissingVariable(2)));
        let z = catalog("z3").unwrap();
        assert!(matches!(GoodTerm::VarOnly.evaluate(1, &z), Err(GoodTermError::NotIdempotent(_))));
    }

    fn arb_good(order: usize) -> impl Strategy<Value = GoodTerm> {
        prop_oneof![
            Just(GoodTerm::VarOnly),
            proptest::collection::vec(
                prop_oneof![Just(Adjoined::One), (0..order).prop_map(Adjoined::Elem)],
                1..5
            )
            .prop_map(GoodTerm::Conjugated),
        ]
    }

    proptest! {
        #[test]
        fn good_term_laws(idx in 0..CATALOG_NAMES.len(), g in arb_good(34)) {
            let s = catalog(CATALOG_NAMES[idx]).unwrap();
            let g = match g {
                GoodTerm::Conjugated(cs) => GoodTerm::Conjugated(cs.into_iter().map(|c| match c {
                    Adjoined::Elem(a) => Adjoined::Elem(a % s.order()),
                    one => one,
                }).collect()),
                v => v,
            };
            for &e in s.idempotents() {
                let ge = g.evaluate(e, &s).unwrap();
                prop_assert!(s.is_idempotent(ge));
                for &f in s.idempotents() {
                    let gf = g.evaluate(f, &s).unwrap();
                    prop_assert_eq!(g.evaluate(s.mul(e, f), &s).unwrap(), s.mul(ge, gf));
                    if s.leq(e, f) {
                        prop_assert!(s.leq(ge, gf));
                    }
                }
            }
        }
    }
}
