//! Finite inverse semigroups given by Cayley tables.
//!
//! Elements are plain indices into the table; names exist for parsing and
//! printing only. [`FiniteInverseSemigroup::validate`] is the single entry
//! point: it checks associativity, computes the unique inverse of every
//! element, and re-checks the standard structural facts about idempotents.

mod catalog;
mod hasse;
mod tablefile;

pub use catalog::{
    brandt_b2, catalog, chain_semilattice, cyclic_group, group_with_zero, symmetric_inverse_monoid,
    CATALOG_NAMES,
};
pub use hasse::hasse_dot;
pub use tablefile::{parse_table, render_table, TableParseError};

use thiserror::Error;

use crate::partialmap::{GroundSet, PartialInjection};

/// Index of an element in its semigroup's table.
pub type Elem = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("table has {rows} rows / row {row} has {cols} entries, expected {expected}")]
    TableShape { rows: usize, row: usize, cols: usize, expected: usize },
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("invalid element name {0:?}: names are [A-Za-z0-9_]+ and may not look like a variable x<k>")]
    BadName(String),
    #[error("not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NonAssociative(String, String, String),
    #[error("not an inverse semigroup: {element} has {candidates} inverse candidates (need exactly 1)")]
    NotInverse { element: String, candidates: usize },
    #[error("idempotents {0} and {1} do not commute")]
    IdempotentsDontCommute(String, String),
    #[error("structural self-check failed ({0})")]
    AxiomViolation(String),
    #[error("Wagner–Preston embedding check failed: {0}")]
    EmbeddingCheckFailed(String),
    #[error("size parameter {got} outside supported range {min}..={max}")]
    SizeLimit { got: usize, min: usize, max: usize },
    #[error("unknown catalog semigroup {0:?}")]
    UnknownCatalog(String),
}

/// True when `name` is usable as an element name in tables and terms.
pub fn is_valid_element_name(name: &str) -> bool {
    !name.is_empty()
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !is_variable_name(name)
}

pub(crate) fn is_variable_name(name: &str) -> bool {
    name.len() > 1 && name.starts_with('x') && name[1..].chars().all(|c| c.is_ascii_digit())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteInverseSemigroup {
    label: String,
    names: Vec<String>,
    table: Vec<Elem>,
    inv: Vec<Elem>,
    idempotents: Vec<Elem>,
    is_idem: Vec<bool>,
    zero: Option<Elem>,
    identity: Option<Elem>,
}

impl FiniteInverseSemigroup {
    /// Validates a Cayley table, `table[i][j]` = index of `names[i]·names[j]`.
    pub fn validate(names: Vec<String>, table: Vec<Vec<Elem>>) -> Result<Self, SemigroupError> {
        let n = names.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != n {
            return Err(SemigroupError::TableShape { rows: table.len(), row: 0, cols: n, expected: n });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(SemigroupError::TableShape { rows: n, row: i, cols: row.len(), expected: n });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(SemigroupError::EntryOutOfRange { row: i, col: j, value: v });
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !is_valid_element_name(name) {
                return Err(SemigroupError::BadName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(SemigroupError::DuplicateName(name.clone()));
            }
        }
        let flat: Vec<Elem> = table.into_iter().flatten().collect();
        let m = |a: Elem, b: Elem| flat[a * n + b];

        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(SemigroupError::NonAssociative(
                            names[a].clone(),
                            names[b].clone(),
                            names[c].clone(),
                        ));
                    }
                }
            }
        }

        let mut inv = Vec::with_capacity(n);
        for (s, name) in names.iter().enumerate() {
            let candidates: Vec<Elem> =
                (0..n).filter(|&t| m(m(s, t), s) == s && m(m(t, s), t) == t).collect();
            if candidates.len() != 1 {
                return Err(SemigroupError::NotInverse {
                    element: name.clone(),
                    candidates: candidates.len(),
                });
            }
            inv.push(candidates[0]);
        }

        let is_idem: Vec<bool> = (0..n).map(|e| m(e, e) == e).collect();
        let idempotents: Vec<Elem> = (0..n).filter(|&e| is_idem[e]).collect();
        let zero = (0..n).find(|&z| (0..n).all(|s| m(z, s) == z && m(s, z) == z));
        let identity = (0..n).find(|&u| (0..n).all(|s| m(u, s) == s && m(s, u) == s));

        let s = FiniteInverseSemigroup {
            label: "custom".to_string(),
            names,
            table: flat,
            inv,
            idempotents,
            is_idem,
            zero,
            identity,
        };
        for &e in &s.idempotents {
            for &f in &s.idempotents {
                if s.mul(e, f) != s.mul(f, e) {
                    return Err(SemigroupError::IdempotentsDontCommute(
                        s.name(e).to_string(),
                        s.name(f).to_string(),
                    ));
                }
            }
        }
        if let Some(v) = s.structure_violations().into_iter().next() {
            return Err(SemigroupError::AxiomViolation(v));
        }
        Ok(s)
    }

    /// Same semigroup with a presentation label (catalog name, file stem).
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.names.len() + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// Left-to-right product of a nonempty sequence.
    pub fn product<I: IntoIterator<Item = Elem>>(&self, items: I) -> Option<Elem> {
        items.into_iter().reduce(|acc, x| self.mul(acc, x))
    }

    pub fn idempotents(&self) -> &[Elem] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.is_idem[a]
    }

    pub fn zero(&self) -> Option<Elem> {
        self.zero
    }

    pub fn identity(&self) -> Option<Elem> {
        self.identity
    }

    /// An inverse semigroup with a single idempotent is a group.
    pub fn is_group(&self) -> bool {
        self.idempotents.len() == 1
    }

    /// `e ⊑ f` iff `ef = e`; both arguments must be idempotents.
    pub fn leq(&self, e: Elem, f: Elem) -> bool {
        debug_assert!(self.is_idem[e] && self.is_idem[f]);
        self.mul(e, f) == e
    }

    pub fn natural_order(&self) -> IdempotentOrder {
        let elems = self.idempotents.clone();
        let k = elems.len();
        let mut leq = vec![false; k * k];
        for (i, &e) in elems.iter().enumerate() {
            for (j, &f) in elems.iter().enumerate() {
                leq[i * k + j] = self.leq(e, f);
            }
        }
        IdempotentOrder { elems, leq }
    }

    /// Lexicographically least pair of incomparable idempotents.
    pub fn find_incomparable_pair(&self) -> Option<(Elem, Elem)> {
        let e = &self.idempotents;
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                if !self.leq(a, b) && !self.leq(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_chain(&self) -> bool {
        self.find_incomparable_pair().is_none()
    }

    pub fn minimal_idempotents(&self) -> Vec<Elem> {
        self.idempotents
            .iter()
            .copied()
            .filter(|&e| self.idempotents.iter().all(|&f| f == e || !self.leq(f, e)))
            .collect()
    }

    /// The greatest idempotent, when one exists.
    pub fn maximum_idempotent(&self) -> Option<Elem> {
        self.idempotents.iter().copied().find(|&e| self.idempotents.iter().all(|&f| self.leq(f, e)))
    }

    /// Re-checks the structural facts every inverse semigroup satisfies and
    /// returns a description of each failure (empty when all hold):
    /// idempotents commute, `ss⁻¹ ∈ E`, `ses⁻¹ ∈ E`, a single idempotent
    /// makes a group, and `(st)⁻¹ = t⁻¹s⁻¹`.
    pub fn structure_violations(&self) -> Vec<String> {
        let n = self.order();
        let mut out = Vec::new();
        for &e in &self.idempotents {
            for &f in &self.idempotents {
                if self.mul(e, f) != self.mul(f, e) {
                    out.push(format!("idempotents {} and {} do not commute", self.name(e), self.name(f)));
                }
            }
        }
        for s in 0..n {
            if !self.is_idem[self.mul(s, self.inv(s))] {
                out.push(format!("{0}·{0}⁻¹ is not idempotent", self.name(s)));
            }
            for &e in &self.idempotents {
                if !self.is_idem[self.mul(self.mul(s, e), self.inv(s))] {
                    out.push(format!("{0}·{1}·{0}⁻¹ is not idempotent", self.name(s), self.name(e)));
                }
            }
            for t in 0..n {
                if self.inv(self.mul(s, t)) != self.mul(self.inv(t), self.inv(s)) {
                    out.push(format!("({0}{1})⁻¹ ≠ {1}⁻¹{0}⁻¹", self.name(s), self.name(t)));
                }
            }
        }
        if self.is_group() {
            let one = self.idempotents[0];
            let group_ok = self.identity == Some(one)
                && (0..n).all(|s| self.mul(s, self.inv(s)) == one && self.mul(self.inv(s), s) == one);
            if !group_ok {
                out.push("single idempotent but group axioms fail".to_string());
            }
        }
        out
    }

    /// Right-translation representation: `s` acts on the ground set `S` by
    /// `x ↦ x·s` on the domain `{x : x·ss⁻¹ = x}`. Faithfulness
    /// (injective, multiplicative, inversion-preserving) is checked before
    /// returning.
    pub fn wagner_preston(&self) -> Result<WagnerPreston, SemigroupError> {
        let n = self.order();
        let fail = SemigroupError::EmbeddingCheckFailed;
        let ground = GroundSet::new(self.names.iter().cloned()).map_err(|e| fail(e.to_string()))?;
        let mut maps = Vec::with_capacity(n);
        for s in 0..n {
            let dom_idem = self.mul(s, self.inv(s));
            let images = (0..n).map(|x| (self.mul(x, dom_idem) == x).then(|| self.mul(x, s))).collect();
            let theta = PartialInjection::new(&ground, images)
                .map_err(|e| fail(format!("θ_{} is not a partial injection: {e}", self.name(s))))?;
            maps.push(theta);
        }
        for s in 0..n {
            for t in (s + 1)..n {
                if maps[s] == maps[t] {
                    return Err(fail(format!("θ_{} = θ_{}", self.name(s), self.name(t))));
                }
            }
            if maps[self.inv(s)] != maps[s].inverse() {
                return Err(fail(format!("θ_{0}⁻¹ ≠ (θ_{0})⁻¹", self.name(s))));
            }
            for t in 0..n {
                let composite = maps[s].compose(&maps[t]).map_err(|e| fail(e.to_string()))?;
                if composite != maps[self.mul(s, t)] {
                    return Err(fail(format!("θ_{0}θ_{1} ≠ θ_{0}{1}", self.name(s), self.name(t))));
                }
            }
        }
        Ok(WagnerPreston { ground, maps })
    }
}

/// The natural partial order restricted to the idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentOrder {
    elems: Vec<Elem>,
    leq: Vec<bool>,
}

impl IdempotentOrder {
    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    fn pos(&self, e: Elem) -> Option<usize> {
        self.elems.iter().position(|&x| x == e)
    }

    pub fn leq(&self, e: Elem, f: Elem) -> bool {
        match (self.pos(e), self.pos(f)) {
            (Some(i), Some(j)) => self.leq[i * self.elems.len() + j],
            _ => false,
        }
    }

    pub fn is_partial_order(&self) -> bool {
        let e = &self.elems;
        e.iter().all(|&a| self.leq(a, a))
            && e.iter().all(|&a| e.iter().all(|&b| a == b || !(self.leq(a, b) && self.leq(b, a))))
            && e.iter().all(|&a| {
                e.iter().all(|&b| e.iter().all(|&c| !(self.leq(a, b) && self.leq(b, c)) || self.leq(a, c)))
            })
    }

    /// Covering pairs `(lower, upper)`: `lower < upper` with nothing between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let e = &self.elems;
        let lt = |a: Elem, b: Elem| a != b && self.leq(a, b);
        let mut out = Vec::new();
        for &a in e {
            for &b in e {
                if lt(a, b) && !e.iter().any(|&c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// A faithful representation by partial injections on the semigroup's own
/// elements.
#[derive(Clone, Debug)]
pub struct WagnerPreston {
    ground: GroundSet,
    maps: Vec<PartialInjection>,
}

impl WagnerPreston {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn map(&self, s: Elem) -> &PartialInjection {
        &self.maps[s]
    }

    pub fn maps(&self) -> &[PartialInjection] {
        &self.maps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn two_chain_validates() {
        let s = FiniteInverseSemigroup::validate(names(&["e", "f"]), vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(s.idempotents(), &[0, 1]);
        assert_eq!(s.zero(), Some(1));
        assert_eq!(s.identity(), Some(0));
        assert_eq!(s.inv(0), 0);
        assert_eq!(s.inv(1), 1);
        assert!(!s.is_group());
        assert!(s.is_chain());
        assert_eq!(s.minimal_idempotents(), vec![1]);
        assert_eq!(s.maximum_idempotent(), Some(0));
    }

    #[test]
    fn one_element_is_group() {
        let s = FiniteInverseSemigroup::validate(names(&["u"]), vec![vec![0]]).unwrap();
        assert!(s.is_group());
        assert_eq!(s.find_incomparable_pair(), None);
    }

    #[test]
    fn left_zero_rejected_with_two_candidates() {
        let err = FiniteInverseSemigroup::validate(names(&["a", "b"]), vec![vec![0, 0], vec![1, 1]]).unwrap_err();
        assert_eq!(err, SemigroupError::NotInverse { element: "a".into(), candidates: 2 });
    }

    #[test]
    fn non_associative_witness() {
        // a·a = b, everything else a
        let err = FiniteInverseSemigroup::validate(names(&["a", "b"]), vec![vec![1, 0], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, SemigroupError::NonAssociative(..)), "{err}");
    }

    #[test]
    fn shape_and_name_errors() {
        assert_eq!(FiniteInverseSemigroup::validate(vec![], vec![]), Err(SemigroupError::Empty));
        assert!(matches!(
            FiniteInverseSemigroup::validate(names(&["a"]), vec![vec![3]]),
            Err(SemigroupError::EntryOutOfRange { .. })
        ));
        assert!(matches!(
            FiniteInverseSemigroup::validate(names(&["a", "b"]), vec![vec![0, 1]]),
            Err(SemigroupError::TableShape { .. })
        ));
        assert!(matches!(
            FiniteInverseSemigroup::validate(names(&["x1"]), vec![vec![0]]),
            Err(SemigroupError::BadName(_))
        ));
        assert!(matches!(
            FiniteInverseSemigroup::validate(names(&["a", "a"]), vec![vec![0, 1], vec![1, 1]]),
            Err(SemigroupError::DuplicateName(_))
        ));
    }

    #[test]
    fn is_group_examples() {
        assert!(cyclic_group(3).unwrap().is_group());
        assert!(!chain_semilattice(2).unwrap().is_group());
        let b2 = brandt_b2();
        assert!(!b2.is_group());
        assert_eq!(b2.idempotents().len(), 3);
    }

    #[test]
    fn brandt_incomparable_pair() {
        let b2 = brandt_b2();
        let (e, f) = b2.find_incomparable_pair().unwrap();
        assert_eq!((b2.name(e), b2.name(f)), ("e11", "e22"));
        assert!(!b2.is_chain());
        assert_eq!(b2.minimal_idempotents(), vec![b2.index_of("0").unwrap()]);
    }

    #[test]
    fn wagner_preston_examples() {
        let c2 = chain_semilattice(2).unwrap();
        let wp = c2.wagner_preston().unwrap();
        assert_eq!(wp.map(0).to_string(), "e f");
        assert_eq!(wp.map(1).to_string(), "- f");

        let z3 = cyclic_group(3).unwrap();
        let wp = z3.wagner_preston().unwrap();
        assert!(wp.maps().iter().all(|m| m.domain_of().len() == 3));

        let b2 = brandt_b2();
        let wp = b2.wagner_preston().unwrap();
        let zero = b2.zero().unwrap();
        assert_eq!(wp.map(zero).domain_of().into_iter().collect::<Vec<_>>(), vec![zero]);
        assert_eq!(wp.map(zero).apply(zero), Some(zero));
    }

    #[test]
    fn natural_order_and_covers() {
        let c3 = chain_semilattice(3).unwrap();
        let order = c3.natural_order();
        assert!(order.is_partial_order());
        assert_eq!(order.covers(), vec![(1, 0), (2, 1)]);

        let b2 = brandt_b2();
        let order = b2.natural_order();
        assert!(order.is_partial_order());
        let zero = b2.zero().unwrap();
        let mut covers = order.covers();
        covers.sort();
        assert_eq!(covers, vec![(zero, 0), (zero, 3)]);
    }

    #[test]
    fn catalog_invariants_hold() {
        for name in CATALOG_NAMES {
            let s = catalog(name).unwrap();
            assert!(s.structure_violations().is_empty(), "{name}");
            assert!(s.natural_order().is_partial_order(), "{name}");
            assert_eq!(s.find_incomparable_pair().is_none(), s.is_chain());
            s.wagner_preston().unwrap();
            if s.idempotents().len() > 1 && s.is_chain() {
                let max = s.maximum_idempotent().unwrap();
                assert!(!s.minimal_idempotents().contains(&max), "{name}");
            }
            // a semilattice has a unique minimal element iff it has a zero
            let sl_zero = s
                .idempotents()
                .iter()
                .copied()
                .find(|&z| s.idempotents().iter().all(|&e| s.mul(z, e) == z));
            assert_eq!(s.minimal_idempotents().len() == 1, sl_zero.is_some(), "{name}");
        }
    }
}
