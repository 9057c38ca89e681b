mod common;

use std::collections::BTreeMap;

use common::{all_points, random_term, Oracle};
use invsemi::eqgeo::{closure, closure_contains, solution_set, Bounds, Equation, EquationSystem, PointSet};
use invsemi::goodterm::{normalize_binary, Adjoined, NormalizedBinary};
use invsemi::semigroup::{catalog, Elem, FiniteInverseSemigroup};
use invsemi::term::parse_term;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn point_set(s: &FiniteInverseSemigroup, arity: usize, mask: u64) -> PointSet {
    let pts = all_points(s.order(), arity).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1);
    PointSet::from_points(arity, pts.map(|(_, p)| p)).unwrap()
}

fn semigroup() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("chain2"), Just("chain3"), Just("z2_zero"), Just("brandt_b2")]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_extensive_monotone_idempotent(name in semigroup(), arity in 1usize..=2, a in any::<u64>(), b in any::<u64>()) {
        let s = catalog(name).unwrap();
        let bounds = Bounds::default();
        let y1 = point_set(&s, arity, a);
        let y2 = y1.union(&point_set(&s, arity, b)).unwrap();
        let c1 = closure(&y1, &s, &bounds).unwrap();
        let c2 = closure(&y2, &s, &bounds).unwrap();
        prop_assert!(c1.exact && c2.exact);
        prop_assert!(y1.is_subset(&c1.points));
        prop_assert!(c1.points.is_subset(&c2.points));
        prop_assert_eq!(&closure(&c1.points, &s, &bounds).unwrap().points, &c1.points);
        for p in all_points(s.order(), arity) {
            let inside = closure_contains(&y1, &p, &s, &bounds).unwrap();
            prop_assert_eq!(inside, Some(c1.points.contains(&p)));
        }
    }

    #[test]
    fn closure_fixes_solution_sets(name in semigroup(), seed in any::<u64>()) {
        let s = catalog(name).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let eqs: Vec<Equation> = (0..2)
            .map(|_| {
                let l = random_term(&mut rng, 2, 4, s.order());
                let r = random_term(&mut rng, 1, 3, s.order());
                Equation::new(l, r, 2, &s).unwrap()
            })
            .collect();
        let v = solution_set(&EquationSystem::new(eqs).unwrap(), &s, &Bounds::default()).unwrap();
        let c = closure(&v, &s, &Bounds::default()).unwrap();
        prop_assert!(c.exact);
        prop_assert_eq!(c.points, v);
    }
}

fn value(nf: &NormalizedBinary, e: Elem, f: Elem, s: &FiniteInverseSemigroup) -> Elem {
    nf.evaluate(e, f, s).unwrap()
}

/// Pairs of binary terms over the 2-chain that agree on `V(x=e) ∪ V(y=e)`
/// must satisfy the three good-form equalities at `(e,e)`, `(e,f)`, `(f,e)`,
/// and then also agree at `(f,f)`.
#[test]
fn agreeing_pairs_on_chain2_satisfy_proof_equalities() {
    let s = catalog("chain2").unwrap();
    let o = Oracle::new(&s);
    let (e, f) = (s.index_of("e").unwrap(), s.index_of("f").unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut buckets: BTreeMap<[Elem; 3], Vec<NormalizedBinary>> = BTreeMap::new();
    let mut pairs = 0;
    let mut drawn = 0;
    while pairs < 100 {
        drawn += 1;
        assert!(drawn < 100_000, "could not find enough agreeing pairs");
        let t = random_term(&mut rng, 2, 6, s.order());
        let nf = normalize_binary(&t.flatten(&s), &s).unwrap();
        let key = [o.eval(&t, &[e, e]), o.eval(&t, &[e, f]), o.eval(&t, &[f, e])];
        assert_eq!(key, [value(&nf, e, e, &s), value(&nf, e, f, &s), value(&nf, f, e, &s)]);
        let bucket = buckets.entry(key).or_default();
        for other in bucket.iter() {
            for (x, y) in [(e, e), (e, f), (f, e)] {
                assert_eq!(value(&nf, x, y, &s), value(other, x, y, &s));
            }
            assert_eq!(value(&nf, f, f, &s), value(other, f, f, &s), "agreement must propagate to (f,f)");
            pairs += 1;
        }
        bucket.push(nf);
    }
}

#[test]
fn proof_equality_example_from_good_forms() {
    let s = catalog("chain2").unwrap();
    let (e, f) = (s.index_of("e").unwrap(), s.index_of("f").unwrap());
    let w = normalize_binary(&parse_term("x1 x2", 2, &s).unwrap().flatten(&s), &s).unwrap();
    let w2 = normalize_binary(&parse_term("x2 e x1 x1", 2, &s).unwrap().flatten(&s), &s).unwrap();
    assert_eq!(w.tail, Adjoined::One);
    assert_eq!(w2.tail, Adjoined::Elem(e));
    for (x, y) in [(e, e), (e, f), (f, e), (f, f)] {
        assert_eq!(value(&w, x, y, &s), value(&w2, x, y, &s));
    }
}
