//! Concrete refutations of the equational-domain property.
//!
//! Every non-group inverse semigroup has two idempotents. Either some pair
//! is incomparable ([`lemma4_check`]: the union `V(x=e) ∪ V(x=f)` is not
//! algebraic, its closure picks up `ef`) or the idempotents form a chain
//! ([`lemma5_check`]: `V(x=e) ∪ V(y=e)` for the top `e` picks up `(f,f)`
//! for any `f < e`). [`ed_verdict`] runs whichever applies and packages the
//! outcome with recheckable certificates.

use super::{
    closure, solution_set, Bounds, Certificate, CertificateKind, EqGeoError, Equation, EquationSystem, PointSet,
};
use crate::semigroup::{Elem, FiniteInverseSemigroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    /// The semigroup does not meet the check's precondition.
    NotApplicable,
    Certified(Certificate),
    /// Bounds were exceeded or the clone was truncated.
    Unknown(String),
    /// The closure computation contradicts the expected result. Indicates a
    /// bug or an input that is not a valid inverse semigroup.
    Refuted(String),
}

impl CheckOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CheckOutcome::Certified(c) => Some(c),
            _ => None,
        }
    }
}

fn union_of(
    eqs: Vec<Equation>,
    s: &FiniteInverseSemigroup,
    bounds: &Bounds,
) -> Result<PointSet, EqGeoError> {
    let mut union = PointSet::new(eqs[0].arity());
    for eq in eqs {
        union = union.union(&solution_set(&EquationSystem::new(vec![eq])?, s, bounds)?)?;
    }
    Ok(union)
}

/// Certifies that `witness` lies in `closure(union) \ union`.
fn certify(
    kind: CertificateKind,
    idempotents: Vec<Elem>,
    union: PointSet,
    witness: Option<Vec<Elem>>,
    s: &FiniteInverseSemigroup,
    bounds: &Bounds,
) -> CheckOutcome {
    let c = match closure(&union, s, bounds) {
        Ok(c) => c,
        Err(e) => return CheckOutcome::Unknown(e.to_string()),
    };
    if !c.exact {
        return CheckOutcome::Unknown(format!(
            "clone enumeration truncated after {} functions (raise --max-cells)",
            c.clone_size
        ));
    }
    let witness = match witness {
        Some(w) => w,
        None => match c.points.iter().find(|p| !union.contains(p)) {
            Some(p) => p.clone(),
            None => return CheckOutcome::Refuted("closure of the union equals the union".into()),
        },
    };
    if union.contains(&witness) {
        return CheckOutcome::Refuted("witness lies in the union".into());
    }
    if !c.points.contains(&witness) {
        return CheckOutcome::Refuted("witness is not in the closure".into());
    }
    CheckOutcome::Certified(Certificate {
        kind,
        semigroup: s.label().to_string(),
        idempotents,
        union,
        witness: Some(witness),
        closure_size: Some(c.points.len()),
        exact: true,
    })
}

/// Incomparable idempotents `e, f` (the lexicographically least pair): the
/// point `ef` lies in the closure of `V(x=e) ∪ V(x=f)` but not in it.
pub fn lemma4_check(s: &FiniteInverseSemigroup, bounds: &Bounds) -> CheckOutcome {
    let Some((e, f)) = s.find_incomparable_pair() else {
        return CheckOutcome::NotApplicable;
    };
    let union = match Equation::var_eq_const(0, e, 1, s)
        .and_then(|a| Ok(vec![a, Equation::var_eq_const(0, f, 1, s)?]))
        .and_then(|eqs| union_of(eqs, s, bounds))
    {
        Ok(u) => u,
        Err(err) => return CheckOutcome::Unknown(err.to_string()),
    };
    certify(CertificateKind::IncomparableWitness, vec![e, f], union, Some(vec![s.mul(e, f)]), s, bounds)
}

/// Chain of idempotents with at least two members: with `e` the top and `f`
/// the bottom, `(f,f)` lies in the closure of `V(x=e) ∪ V(y=e)`.
pub fn lemma5_check(s: &FiniteInverseSemigroup, bounds: &Bounds) -> CheckOutcome {
    if s.idempotents().len() < 2 || !s.is_chain() {
        return CheckOutcome::NotApplicable;
    }
    let e = s.maximum_idempotent().expect("finite chain has a top");
    let f = s.minimal_idempotents()[0];
    let union = match Equation::var_eq_const(0, e, 2, s)
        .and_then(|a| Ok(vec![a, Equation::var_eq_const(1, e, 2, s)?]))
        .and_then(|eqs| union_of(eqs, s, bounds))
    {
        Ok(u) => u,
        Err(err) => return CheckOutcome::Unknown(err.to_string()),
    };
    certify(CertificateKind::ChainWitness, vec![e, f], union, Some(vec![f, f]), s, bounds)
}

/// `M = V(x1=x2) ∪ V(x3=x4)` is not algebraic over a non-group; the
/// certificate carries the least point of `closure(M) \ M`.
pub fn rosenblatt_check(s: &FiniteInverseSemigroup, bounds: &Bounds) -> CheckOutcome {
    if s.is_group() {
        return CheckOutcome::NotApplicable;
    }
    let union = match Equation::var_eq_var(0, 1, 4, s)
        .and_then(|a| Ok(vec![a, Equation::var_eq_var(2, 3, 4, s)?]))
        .and_then(|eqs| union_of(eqs, s, bounds))
    {
        Ok(u) => u,
        Err(err) => return CheckOutcome::Unknown(err.to_string()),
    };
    certify(CertificateKind::RosenblattWitness, Vec::new(), union, None, s, bounds)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    /// A group; classifying groups is out of scope.
    GroupOutOfScope,
    /// Not an equational domain, with at least one computed certificate.
    NotEd,
    /// Not an equational domain by the general theorem, but every computed
    /// check was inconclusive within bounds.
    NotEdByTheorem,
    /// A computed check contradicted the expected outcome.
    Inconsistent(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub certificates: Vec<Certificate>,
    pub notes: Vec<String>,
}

/// Decides, with evidence, that a non-group inverse semigroup is not an
/// equational domain.
pub fn ed_verdict(s: &FiniteInverseSemigroup, bounds: &Bounds, with_rosenblatt: bool) -> Verdict {
    let mut notes = Vec::new();
    if s.is_group() {
        notes.push("groups are not classified here; see the literature on equational domains in groups".into());
        return Verdict {
            status: VerdictStatus::GroupOutOfScope,
            certificates: vec![Certificate {
                kind: CertificateKind::GroupOutOfScope,
                semigroup: s.label().to_string(),
                idempotents: s.idempotents().to_vec(),
                union: PointSet::new(1),
                witness: None,
                closure_size: None,
                exact: true,
            }],
            notes,
        };
    }

    let mut certificates = Vec::new();
    if let Some(z) = s.zero() {
        notes.push(format!("{} is a zero; a semigroup with zero is never an equational domain (cited)", s.name(z)));
        certificates.push(Certificate {
            kind: CertificateKind::ZeroPresent,
            semigroup: s.label().to_string(),
            idempotents: vec![z],
            union: PointSet::new(1),
            witness: Some(vec![z]),
            closure_size: None,
            exact: true,
        });
    }

    let mut outcomes = vec![if s.is_chain() { lemma5_check(s, bounds) } else { lemma4_check(s, bounds) }];
    if with_rosenblatt {
        outcomes.push(rosenblatt_check(s, bounds));
    }

    let mut computed = 0;
    let mut inconsistency = None;
    for outcome in outcomes {
        match outcome {
            CheckOutcome::Certified(c) => {
                computed += 1;
                certificates.push(c);
            }
            CheckOutcome::Unknown(why) => notes.push(format!("computation inconclusive: {why}")),
            CheckOutcome::Refuted(why) => inconsistency = Some(why),
            CheckOutcome::NotApplicable => {}
        }
    }
    let status = if let Some(why) = inconsistency {
        VerdictStatus::Inconsistent(why)
    } else if computed > 0 {
        VerdictStatus::NotEd
    } else {
        notes.push("not an equational domain by the general theorem; computation truncated".into());
        VerdictStatus::NotEdByTheorem
    };
    Verdict { status, certificates, notes }
}
