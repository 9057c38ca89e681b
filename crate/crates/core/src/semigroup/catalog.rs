//! Small built-in inverse semigroups used as test instances.

use super::{FiniteInverseSemigroup, SemigroupError};
use crate::partialmap::{GroundSet, PartialInjection};

pub const CATALOG_NAMES: [&str; 10] =
    ["trivial", "chain2", "chain3", "z2", "z3", "z5", "z2_zero", "brandt_b2", "sim2", "sim3"];

pub fn catalog(name: &str) -> Result<FiniteInverseSemigroup, SemigroupError> {
    let s = match name {
        "trivial" => cyclic_group(1)?,
        "chain2" => chain_semilattice(2)?,
        "chain3" => chain_semilattice(3)?,
        "z2" => cyclic_group(2)?,
        "z3" => cyclic_group(3)?,
        "z5" => cyclic_group(5)?,
        "z2_zero" => group_with_zero(2)?,
        "brandt_b2" => brandt_b2(),
        "sim2" => symmetric_inverse_monoid(2)?,
        "sim3" => symmetric_inverse_monoid(3)?,
        other => return Err(SemigroupError::UnknownCatalog(other.to_string())),
    };
    Ok(s.with_label(name))
}

fn check_range(got: usize, min: usize, max: usize) -> Result<(), SemigroupError> {
    if (min..=max).contains(&got) {
        Ok(())
    } else {
        Err(SemigroupError::SizeLimit { got, min, max })
    }
}

fn build(
    names: Vec<String>,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<FiniteInverseSemigroup, SemigroupError> {
    let n = names.len();
    let table = (0..n).map(|i| (0..n).map(|j| mul(i, j)).collect()).collect();
    FiniteInverseSemigroup::validate(names, table)
}

/// All partial injections of `{1..n}` under right-action composition.
/// Elements are named `p` followed by the image of each point, `_` where
/// undefined: `p12` is the identity of the 2-point monoid, `p__` its zero.
pub fn symmetric_inverse_monoid(n: usize) -> Result<FiniteInverseSemigroup, SemigroupError> {
    check_range(n, 1, 3)?;
    let ground = GroundSet::numbered(n).expect("numbered ground set");
    let elems = PartialInjection::enumerate(&ground);
    let names = elems
        .iter()
        .map(|f| {
            let images: String = f
                .images()
                .iter()
                .map(|img| img.map_or("_".to_string(), |j| ground.label(j).to_string()))
                .collect();
            format!("p{images}")
        })
        .collect();
    build(names, |i, j| {
        let c = elems[i].compose(&elems[j]).expect("shared ground");
        elems.iter().position(|f| *f == c).expect("closed under composition")
    })
}

/// The five 2×2 matrix units with zero: `e_ij·e_kl = e_il` when `j = k`,
/// otherwise `0`.
pub fn brandt_b2() -> FiniteInverseSemigroup {
    let units = [(1, 1), (1, 2), (2, 1), (2, 2)];
    let names = vec!["e11", "e12", "e21", "e22", "0"].into_iter().map(String::from).collect();
    build(names, |a, b| {
        if a == 4 || b == 4 {
            return 4;
        }
        let ((i, j), (k, l)) = (units[a], units[b]);
        if j == k {
            units.iter().position(|&u| u == (i, l)).unwrap()
        } else {
            4
        }
    })
    .expect("B2 is an inverse semigroup")
}

/// A chain of `k` idempotents named `e, f, g, ...` from the top down;
/// the product is the meet.
pub fn chain_semilattice(k: usize) -> Result<FiniteInverseSemigroup, SemigroupError> {
    check_range(k, 1, 20)?;
    let names = (0..k).map(|i| ((b'e' + i as u8) as char).to_string()).collect();
    build(names, |a, b| a.max(b))
}

fn cyclic_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "a".to_string(),
            _ => format!("a{i}"),
        })
        .collect()
}

/// `Z_n`, written multiplicatively as `1, a, a2, ...`.
pub fn cyclic_group(n: usize) -> Result<FiniteInverseSemigroup, SemigroupError> {
    check_range(n, 1, 64)?;
    build(cyclic_names(n), |a, b| (a + b) % n)
}

/// `Z_n` with an adjoined zero `0`.
pub fn group_with_zero(n: usize) -> Result<FiniteInverseSemigroup, SemigroupError> {
    check_range(n, 1, 64)?;
    let mut names = cyclic_names(n);
    names.push("0".to_string());
    build(names, |a, b| if a == n || b == n { n } else { (a + b) % n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(symmetric_inverse_monoid(1).unwrap().order(), 2);
        assert_eq!(symmetric_inverse_monoid(2).unwrap().order(), 7);
        assert_eq!(symmetric_inverse_monoid(3).unwrap().order(), 34);
        assert_eq!(brandt_b2().order(), 5);
        assert_eq!(cyclic_group(5).unwrap().order(), 5);
    }

    #[test]
    fn size_limits() {
        assert!(matches!(symmetric_inverse_monoid(4), Err(SemigroupError::SizeLimit { .. })));
        assert!(matches!(chain_semilattice(0), Err(SemigroupError::SizeLimit { .. })));
        assert!(matches!(catalog("nope"), Err(SemigroupError::UnknownCatalog(_))));
    }

    #[test]
    fn chain_of_one_is_trivial_group() {
        let s = chain_semilattice(1).unwrap();
        assert_eq!(s.order(), 1);
        assert!(s.is_group());
    }

    #[test]
    fn brandt_inverse_swaps_off_diagonal() {
        let b2 = brandt_b2();
        assert_eq!(b2.inv(1), 2);
        assert_eq!(b2.inv(2), 1);
        assert_eq!(b2.inv(0), 0);
        assert_eq!(b2.mul(0, 3), 4);
    }

    #[test]
    fn group_with_zero_two() {
        let s = group_with_zero(2).unwrap();
        assert_eq!(s.names(), &["1", "a", "0"]);
        assert_eq!(s.idempotents(), &[0, 2]);
        assert!(s.is_chain());
        assert_eq!(s.zero(), Some(2));
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn sim2_layout() {
        let s = symmetric_inverse_monoid(2).unwrap();
        assert_eq!(s.names(), &["p12", "p1_", "p21", "p2_", "p_1", "p_2", "p__"]);
        assert_eq!(s.identity(), Some(0));
        assert_eq!(s.zero(), Some(6));
        assert_eq!(s.idempotents().len(), 4);
        let (e, f) = s.find_incomparable_pair().unwrap();
        assert_eq!((s.name(e), s.name(f)), ("p1_", "p_2"));
    }
}
