//! Recheckable records of non-algebraic unions.
//!
//! A certificate names a union of solution sets and a point that lies in the
//! closure of the union but not in the union itself. Nothing in it is
//! trusted: [`Certificate::revalidate`] rebuilds the union from its defining
//! equations and recomputes closure membership of the witness.
//!
//! Text form, one `key: value` per line:
//!
//! ```text
//! kind: IncomparableWitness
//! semigroup: brandt_b2
//! idempotents: e11 e22
//! union: (e11), (e22)
//! witness: (0)
//! closure-size: 3
//! exact: true
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{
    closure, closure_contains, display_point, parse_point, parse_point_list, solution_set, Bounds, EqGeoError,
    Equation, EquationSystem, PointSet,
};
use crate::semigroup::{Elem, FiniteInverseSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// Two incomparable idempotents `e, f`: `V(x=e) ∪ V(x=f)` has `ef` in its closure.
    IncomparableWitness,
    /// A chain of idempotents with `f < e`: `V(x=e) ∪ V(y=e)` has `(f,f)` in its closure.
    ChainWitness,
    /// `V(x1=x2) ∪ V(x3=x4)` is not closed.
    RosenblattWitness,
    /// The semigroup has a zero; semigroups with zero are never equational
    /// domains (cited, not recomputed).
    ZeroPresent,
    /// The semigroup is a group, which this tool does not classify.
    GroupOutOfScope,
}

impl CertificateKind {
    pub const ALL: [CertificateKind; 5] = [
        CertificateKind::IncomparableWitness,
        CertificateKind::ChainWitness,
        CertificateKind::RosenblattWitness,
        CertificateKind::ZeroPresent,
        CertificateKind::GroupOutOfScope,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CertificateKind::IncomparableWitness => "IncomparableWitness",
            CertificateKind::ChainWitness => "ChainWitness",
            CertificateKind::RosenblattWitness => "RosenblattWitness",
            CertificateKind::ZeroPresent => "ZeroPresent",
            CertificateKind::GroupOutOfScope => "GroupOutOfScope",
        }
    }

    /// Arity of the union's points.
    pub fn arity(self) -> usize {
        match self {
            CertificateKind::ChainWitness => 2,
            CertificateKind::RosenblattWitness => 4,
            _ => 1,
        }
    }

    fn is_computed(self) -> bool {
        matches!(
            self,
            CertificateKind::IncomparableWitness | CertificateKind::ChainWitness | CertificateKind::RosenblattWitness
        )
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CertificateKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        CertificateKind::ALL.into_iter().find(|k| k.name() == s).ok_or(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub semigroup: String,
    pub idempotents: Vec<Elem>,
    pub union: PointSet,
    pub witness: Option<Vec<Elem>>,
    pub closure_size: Option<usize>,
    pub exact: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateParseError {
    #[error("line {line}: expected `key: value`")]
    Malformed { line: usize },
    #[error("unknown key {0:?}")]
    UnknownKey(String),
    #[error("duplicate key {0:?}")]
    DuplicateKey(String),
    #[error("missing key {0:?}")]
    MissingKey(&'static str),
    #[error("bad value for {key}: {reason}")]
    BadValue { key: &'static str, reason: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RevalidationError {
    #[error("certificate does not hold: {0}")]
    Mismatch(String),
    #[error("cannot decide within bounds: {0}")]
    Unknown(String),
    #[error(transparent)]
    Compute(#[from] EqGeoError),
}

const KEYS: [&str; 7] = ["kind", "semigroup", "idempotents", "union", "witness", "closure-size", "exact"];

impl Certificate {
    pub fn render(&self, s: &FiniteInverseSemigroup) -> String {
        let idem = if self.idempotents.is_empty() {
            "-".to_string()
        } else {
            self.idempotents.iter().map(|&e| s.name(e)).collect::<Vec<_>>().join(" ")
        };
        let witness = self.witness.as_ref().map_or("-".to_string(), |p| display_point(p, s));
        let size = self.closure_size.map_or("-".to_string(), |n| n.to_string());
        format!(
            "kind: {}\nsemigroup: {}\nidempotents: {}\nunion: {}\nwitness: {}\nclosure-size: {}\nexact: {}\n",
            self.kind,
            self.semigroup,
            idem,
            self.union.display(s),
            witness,
            size,
            self.exact
        )
    }

    pub fn parse(text: &str, s: &FiniteInverseSemigroup) -> Result<Certificate, CertificateParseError> {
        let mut values: [Option<&str>; 7] = [None; 7];
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or(CertificateParseError::Malformed { line: i + 1 })?;
            let key = key.trim();
            let slot = KEYS
                .iter()
                .position(|k| *k == key)
                .ok_or_else(|| CertificateParseError::UnknownKey(key.to_string()))?;
            if values[slot].replace(value.trim()).is_some() {
                return Err(CertificateParseError::DuplicateKey(key.to_string()));
            }
        }
        let get = |i: usize| values[i].ok_or(CertificateParseError::MissingKey(KEYS[i]));
        let bad = |key: &'static str, reason: String| CertificateParseError::BadValue { key, reason };

        let kind: CertificateKind =
            get(0)?.parse().map_err(|_| bad("kind", format!("unknown kind {:?}", values[0].unwrap_or(""))))?;
        let semigroup = get(1)?.to_string();
        if semigroup.is_empty() {
            return Err(bad("semigroup", "empty".into()));
        }
        let idem_text = get(2)?;
        let idempotents = if idem_text == "-" {
            Vec::new()
        } else {
            idem_text
                .split_whitespace()
                .map(|n| s.index_of(n).ok_or_else(|| bad("idempotents", format!("unknown element {n:?}"))))
                .collect::<Result<Vec<_>, _>>()?
        };
        let arity = kind.arity();
        let union = parse_point_list(get(3)?, arity, s).map_err(|e| bad("union", e.to_string()))?;
        let witness = match get(4)? {
            "-" => None,
            w => Some(parse_point(w, arity, s).map_err(|e| bad("witness", e.to_string()))?),
        };
        let closure_size = match get(5)? {
            "-" => None,
            n => Some(n.parse().map_err(|_| bad("closure-size", format!("{n:?} is not a count")))?),
        };
        let exact = match get(6)? {
            "true" => true,
            "false" => false,
            other => return Err(bad("exact", format!("{other:?} is not a boolean"))),
        };
        Ok(Certificate { kind, semigroup, idempotents, union, witness, closure_size, exact })
    }

    /// The union the certificate is about, rebuilt from its defining
    /// equations rather than read from the record.
    fn expected_union(&self, s: &FiniteInverseSemigroup, bounds: &Bounds) -> Result<PointSet, RevalidationError> {
        let n = self.kind.arity();
        let systems: Vec<Equation> = match self.kind {
            CertificateKind::IncomparableWitness => vec![
                Equation::var_eq_const(0, self.idempotents[0], n, s)?,
                Equation::var_eq_const(0, self.idempotents[1], n, s)?,
            ],
            CertificateKind::ChainWitness => vec![
                Equation::var_eq_const(0, self.idempotents[0], n, s)?,
                Equation::var_eq_const(1, self.idempotents[0], n, s)?,
            ],
            CertificateKind::RosenblattWitness => {
                vec![Equation::var_eq_var(0, 1, n, s)?, Equation::var_eq_var(2, 3, n, s)?]
            }
            CertificateKind::ZeroPresent | CertificateKind::GroupOutOfScope => return Ok(PointSet::new(n)),
        };
        let mut union = PointSet::new(n);
        for eq in systems {
            let v = solution_set(&EquationSystem::new(vec![eq])?, s, bounds)?;
            union = union.union(&v)?;
        }
        Ok(union)
    }

    /// Rechecks every claim of the certificate against `s` from scratch.
    pub fn revalidate(&self, s: &FiniteInverseSemigroup, bounds: &Bounds) -> Result<(), RevalidationError> {
        let mismatch = |m: String| Err(RevalidationError::Mismatch(m));
        let idem = &self.idempotents;
        match self.kind {
            CertificateKind::IncomparableWitness => {
                if idem.len() != 2 || !idem.iter().all(|&e| s.is_idempotent(e)) {
                    return mismatch("needs two idempotents".into());
                }
                let (e, f) = (idem[0], idem[1]);
                if s.leq(e, f) || s.leq(f, e) {
                    return mismatch(format!("{} and {} are comparable", s.name(e), s.name(f)));
                }
                if self.witness.as_deref() != Some(&[s.mul(e, f)][..]) {
                    return mismatch("witness is not the product of the two idempotents".into());
                }
            }
            CertificateKind::ChainWitness => {
                if idem.len() != 2 || !idem.iter().all(|&e| s.is_idempotent(e)) {
                    return mismatch("needs two idempotents".into());
                }
                let (e, f) = (idem[0], idem[1]);
                if e == f || !s.leq(f, e) {
                    return mismatch(format!("{} is not strictly below {}", s.name(f), s.name(e)));
                }
                if self.witness.as_deref() != Some(&[f, f][..]) {
                    return mismatch("witness is not (f,f)".into());
                }
            }
            CertificateKind::RosenblattWitness => {
                if !idem.is_empty() {
                    return mismatch("lists idempotents".into());
                }
                if s.is_group() {
                    return mismatch("semigroup is a group".into());
                }
            }
            CertificateKind::ZeroPresent => {
                let z = match idem.as_slice() {
                    [z] => *z,
                    _ => return mismatch("needs exactly the zero".into()),
                };
                if s.zero() != Some(z) || s.is_group() {
                    return mismatch(format!("{} is not the zero of a non-group", s.name(z)));
                }
                if self.witness.as_deref() != Some(&[z][..]) {
                    return mismatch("witness is not the zero".into());
                }
            }
            CertificateKind::GroupOutOfScope => {
                if !s.is_group() {
                    return mismatch("semigroup is not a group".into());
                }
                if idem.as_slice() != s.idempotents() {
                    return mismatch("idempotent is not the identity".into());
                }
            }
        }
        let union = self.expected_union(s, bounds)?;
        if union != self.union {
            return mismatch("stated union differs from the recomputed one".into());
        }
        if !self.kind.is_computed() {
            return Ok(());
        }
        let witness = self.witness.as_ref().ok_or(RevalidationError::Mismatch("missing witness".into()))?;
        if union.contains(witness) {
            return mismatch(format!("witness {} lies in the union", display_point(witness, s)));
        }
        if !self.exact {
            return Err(RevalidationError::Unknown("certificate was produced from a truncated clone".into()));
        }
        match closure_contains(&union, witness, s, bounds)? {
            Some(true) => {}
            Some(false) => return mismatch(format!("witness {} is not in the closure", display_point(witness, s))),
            None => return Err(RevalidationError::Unknown("clone enumeration truncated".into())),
        }
        if let Some(stated) = self.closure_size {
            let recomputed = closure(&union, s, bounds)?;
            if recomputed.points.len() != stated {
                return mismatch(format!("closure has {} points, certificate says {stated}", recomputed.points.len()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::catalog;

    fn sample() -> (FiniteInverseSemigroup, Certificate) {
        let s = catalog("brandt_b2").unwrap();
        let cert = Certificate {
            kind: CertificateKind::IncomparableWitness,
            semigroup: "brandt_b2".into(),
            idempotents: vec![0, 3],
            union: PointSet::from_points(1, [vec![0], vec![3]]).unwrap(),
            witness: Some(vec![4]),
            closure_size: None,
            exact: true,
        };
        (s, cert)
    }

    #[test]
    fn render_parse_round_trip() {
        let (s, cert) = sample();
        let text = cert.render(&s);
        assert_eq!(
            text,
            "kind: IncomparableWitness\nsemigroup: brandt_b2\nidempotents: e11 e22\nunion: (e11), (e22)\n\
             witness: (0)\nclosure-size: -\nexact: true\n"
        );
        assert_eq!(Certificate::parse(&text, &s).unwrap(), cert);
    }

    #[test]
    fn revalidation_catches_tampering() {
        let b = Bounds::default();
        let (s, cert) = sample();
        cert.revalidate(&s, &b).unwrap();

        let mut wrong_witness = cert.clone();
        wrong_witness.witness = Some(vec![1]);
        assert!(matches!(wrong_witness.revalidate(&s, &b), Err(RevalidationError::Mismatch(_))));

        let mut wrong_union = cert.clone();
        wrong_union.union = PointSet::from_points(1, [vec![0]]).unwrap();
        assert!(matches!(wrong_union.revalidate(&s, &b), Err(RevalidationError::Mismatch(_))));

        let mut comparable = cert.clone();
        comparable.idempotents = vec![0, 4];
        assert!(matches!(comparable.revalidate(&s, &b), Err(RevalidationError::Mismatch(_))));

        let mut wrong_size = cert.clone();
        wrong_size.closure_size = Some(99);
        assert!(matches!(wrong_size.revalidate(&s, &b), Err(RevalidationError::Mismatch(_))));

        let mut inexact = cert;
        inexact.exact = false;
        assert!(matches!(inexact.revalidate(&s, &b), Err(RevalidationError::Unknown(_))));
    }

    #[test]
    fn parse_errors() {
        let (s, cert) = sample();
        let text = cert.render(&s);
        assert!(matches!(Certificate::parse("nonsense", &s), Err(CertificateParseError::Malformed { line: 1 })));
        assert!(matches!(
            Certificate::parse(&text.replace("exact: true\n", ""), &s),
            Err(CertificateParseError::MissingKey("exact"))
        ));
        assert!(matches!(
            Certificate::parse(&format!("{text}exact: true\n"), &s),
            Err(CertificateParseError::DuplicateKey(_))
        ));
        assert!(matches!(
            Certificate::parse(&format!("{text}colour: red\n"), &s),
            Err(CertificateParseError::UnknownKey(_))
        ));
        assert!(matches!(
            Certificate::parse(&text.replace("(0)", "(q)"), &s),
            Err(CertificateParseError::BadValue { key: "witness", .. })
        ));
        assert!(matches!(
            Certificate::parse(&text.replace("Incomparable", "Bogus"), &s),
            Err(CertificateParseError::BadValue { key: "kind", .. })
        ));
    }
}
