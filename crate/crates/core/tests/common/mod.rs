#![allow(dead_code)]

use invsemi::semigroup::{Elem, FiniteInverseSemigroup};
use invsemi::term::Term;
use rand::Rng;

/// Cayley table plus inverses found by brute force from the defining
/// equations `x y x = x`, `y x y = y`.
pub struct Oracle {
    table: Vec<Vec<Elem>>,
    inverse: Vec<Elem>,
}

impl Oracle {
    pub fn new(s: &FiniteInverseSemigroup) -> Oracle {
        let n = s.order();
        let table: Vec<Vec<Elem>> = (0..n).map(|a| (0..n).map(|b| s.mul(a, b)).collect()).collect();
        let inverse = (0..n)
            .map(|x| {
                let found: Vec<Elem> = (0..n)
                    .filter(|&y| table[table[x][y]][x] == x && table[table[y][x]][y] == y)
                    .collect();
                assert_eq!(found.len(), 1, "element {x} must have exactly one inverse");
                found[0]
            })
            .collect();
        Oracle { table, inverse }
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a][b]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.table[a][a] == a
    }

    pub fn eval(&self, t: &Term, point: &[Elem]) -> Elem {
        match t {
            Term::Var(i) => point[*i],
            Term::Const(c) => *c,
            Term::Product(a, b) => self.mul(self.eval(a, point), self.eval(b, point)),
            Term::Inverse(a) => self.inv(self.eval(a, point)),
        }
    }
}

fn random_tree<R: Rng>(rng: &mut R, leaves: usize, arity: usize, order: usize) -> Term {
    let t = if leaves == 1 {
        if rng.gen_bool(0.5) {
            Term::Var(rng.gen_range(0..arity))
        } else {
            Term::Const(rng.gen_range(0..order))
        }
    } else {
        let left = rng.gen_range(1..leaves);
        Term::product(random_tree(rng, left, arity, order), random_tree(rng, leaves - left, arity, order))
    };
    if rng.gen_bool(0.25) {
        Term::inverse(t)
    } else {
        t
    }
}

fn mentions(t: &Term, var: usize) -> bool {
    match t {
        Term::Var(i) => *i == var,
        Term::Const(_) => false,
        Term::Product(a, b) => mentions(a, var) || mentions(b, var),
        Term::Inverse(a) => mentions(a, var),
    }
}

/// A random term with between 1 and `max_leaves` leaves over `x1..x{arity}`.
pub fn random_expr<R: Rng>(rng: &mut R, arity: usize, max_leaves: usize, order: usize) -> Term {
    let leaves = rng.gen_range(1..=max_leaves);
    random_tree(rng, leaves, arity, order)
}

/// A random term with between 1 and `max_leaves` leaves that mentions every
/// variable `x1..x{arity}`.
pub fn random_term<R: Rng>(rng: &mut R, arity: usize, max_leaves: usize, order: usize) -> Term {
    loop {
        let leaves = rng.gen_range(arity.max(1)..=max_leaves);
        let t = random_tree(rng, leaves, arity, order);
        if (0..arity).all(|v| mentions(&t, v)) {
            return t;
        }
    }
}

/// Every point of `S^arity` in row-major order.
pub fn all_points(order: usize, arity: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out.into_iter().flat_map(|p| (0..order).map(move |a| [p.clone(), vec![a]].concat())).collect();
    }
    out
}

/// Term functions of the given arity, found by saturating the projections,
/// constants and inverted projections under all pairwise products.
pub fn oracle_clone(o: &Oracle, order: usize, arity: usize) -> Vec<Vec<Elem>> {
    use std::collections::BTreeSet;
    let points = all_points(order, arity);
    let mut gens: Vec<Vec<Elem>> = Vec::new();
    for v in 0..arity {
        gens.push(points.iter().map(|p| p[v]).collect());
        gens.push(points.iter().map(|p| o.inv(p[v])).collect());
    }
    for c in 0..order {
        gens.push(vec![c; points.len()]);
    }
    let mut seen: BTreeSet<Vec<Elem>> = gens.iter().cloned().collect();
    let mut all: Vec<Vec<Elem>> = seen.iter().cloned().collect();
    let mut start = 0;
    while start < all.len() {
        let end = all.len();
        for i in 0..end {
            for j in 0..end {
                if i < start && j < start {
                    continue;
                }
                let h: Vec<Elem> = all[i].iter().zip(&all[j]).map(|(&a, &b)| o.mul(a, b)).collect();
                if seen.insert(h.clone()) {
                    all.push(h);
                }
            }
        }
        start = end;
    }
    all
}

/// Points `p` such that any two term functions agreeing on `y` also agree at `p`.
pub fn oracle_closure(o: &Oracle, order: usize, arity: usize, y: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let points = all_points(order, arity);
    let clone = oracle_clone(o, order, arity);
    let idx: Vec<usize> = y.iter().map(|p| points.iter().position(|q| q == p).unwrap()).collect();
    let mut out = Vec::new();
    'points: for (k, p) in points.iter().enumerate() {
        for f in &clone {
            for g in &clone {
                if idx.iter().all(|&i| f[i] == g[i]) && f[k] != g[k] {
                    continue 'points;
                }
            }
        }
        out.push(p.clone());
    }
    out
}
