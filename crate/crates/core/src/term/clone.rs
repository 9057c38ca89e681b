//! Enumeration of all n-ary term functions over a finite semigroup.
//!
//! The set of term functions is the subsemigroup of `S^(S^n)` (pointwise
//! product) generated by the projections, the inverted projections and the
//! constants; it is automatically closed under pointwise inversion because
//! the inverse of a product of generators is the reversed product of their
//! inverses, which are again generators. It is therefore reachable by a
//! breadth-first walk that right-multiplies known functions by generators.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::{FlatTerm, Literal, TermError};
use crate::semigroup::{Elem, FiniteInverseSemigroup};

/// Default budget of materialised table cells (functions × points).
pub const DEFAULT_MAX_CELLS: usize = 5_000_000;

/// `|S|^arity`, or `None` on overflow.
pub fn point_count(order: usize, arity: usize) -> Option<usize> {
    u32::try_from(arity).ok().and_then(|a| order.checked_pow(a))
}

/// Row-major index of a point: the first coordinate is most significant.
pub fn point_index(point: &[Elem], order: usize) -> usize {
    point.iter().fold(0, |acc, &p| acc * order + p)
}

pub fn point_at(mut index: usize, arity: usize, order: usize) -> Vec<Elem> {
    let mut p = vec![0; arity];
    for slot in p.iter_mut().rev() {
        *slot = index % order;
        index /= order;
    }
    p
}

/// An n-ary function on `S`, stored as its value at every point in
/// [`point_index`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermFunction {
    arity: usize,
    values: Vec<Elem>,
}

impl TermFunction {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn at(&self, point: &[Elem], order: usize) -> Elem {
        self.values[point_index(point, order)]
    }

    /// Table of a flat term, evaluated at every point.
    pub fn of_term(t: &FlatTerm, arity: usize, s: &FiniteInverseSemigroup) -> Result<TermFunction, TermError> {
        if let Some(v) = t.max_var() {
            if v >= arity {
                return Err(TermError::ArityMismatch { needed: v + 1, arity });
            }
        }
        let count = point_count(s.order(), arity)
            .ok_or(TermError::TooLarge { cells: u128::MAX, limit: usize::MAX })?;
        let values = (0..count).map(|i| t.eval_unchecked(&point_at(i, arity, s.order()), s)).collect();
        Ok(TermFunction { arity, values })
    }
}

#[derive(Clone, Copy, Debug)]
enum Origin {
    Generator(Literal),
    Extend(usize, Literal),
}

/// The term functions found by [`clone_closure`], each with a witness term.
#[derive(Clone, Debug)]
pub struct CloneClosure {
    arity: usize,
    functions: Vec<TermFunction>,
    origins: Vec<Origin>,
    complete: bool,
}

impl CloneClosure {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn functions(&self) -> &[TermFunction] {
        &self.functions
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    /// False when the cell budget stopped the enumeration early.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn contains(&self, f: &TermFunction) -> bool {
        self.functions.iter().any(|g| g == f)
    }

    /// A term whose table is `functions()[i]`.
    pub fn witness(&self, i: usize, s: &FiniteInverseSemigroup) -> FlatTerm {
        let mut lits = Vec::new();
        let mut cur = i;
        loop {
            match self.origins[cur] {
                Origin::Generator(l) => {
                    lits.push(l);
                    break;
                }
                Origin::Extend(parent, l) => {
                    lits.push(l);
                    cur = parent;
                }
            }
        }
        lits.reverse();
        FlatTerm::from_literals(lits, s).expect("nonempty witness")
    }
}

/// All `arity`-ary term functions over `s`, materialising at most
/// `max_cells` table cells. Output order is deterministic (breadth-first
/// from the generators `x1..xn`, the constants, then `x1⁻¹..xn⁻¹`).
pub fn clone_closure(
    s: &FiniteInverseSemigroup,
    arity: usize,
    max_cells: usize,
) -> Result<CloneClosure, TermError> {
    assert!(arity >= 1, "clone arity must be positive");
    let order = s.order();
    let points = point_count(order, arity)
        .filter(|&p| p <= max_cells)
        .ok_or_else(|| TermError::TooLarge {
            cells: (order as u128).saturating_pow(arity.min(u32::MAX as usize) as u32),
            limit: max_cells,
        })?;
    let max_functions = max_cells / points;

    let mut generators: Vec<Literal> = (0..arity).map(|index| Literal::Var { index, inverted: false }).collect();
    generators.extend((0..order).map(Literal::Const));
    generators.extend((0..arity).map(|index| Literal::Var { index, inverted: true }));
    let gen_tables: Vec<Vec<Elem>> = generators
        .iter()
        .map(|l| (0..points).map(|i| l.value(&point_at(i, arity, order), s)).collect())
        .collect();

    let mut seen: HashMap<Vec<Elem>, usize> = HashMap::new();
    let mut functions = Vec::new();
    let mut origins = Vec::new();
    let mut complete = true;

    let mut admit = |values: Vec<Elem>, origin: Origin, functions: &mut Vec<TermFunction>| -> bool {
        match seen.entry(values) {
            Entry::Occupied(_) => true,
            Entry::Vacant(v) => {
                if functions.len() >= max_functions {
                    return false;
                }
                functions.push(TermFunction { arity, values: v.key().clone() });
                origins.push(origin);
                v.insert(functions.len() - 1);
                true
            }
        }
    };

    for (lit, table) in generators.iter().zip(&gen_tables) {
        if !admit(table.clone(), Origin::Generator(*lit), &mut functions) {
            complete = false;
            break;
        }
    }
    let mut next = 0;
    'walk: while complete && next < functions.len() {
        for (lit, table) in generators.iter().zip(&gen_tables) {
            let values: Vec<Elem> =
                functions[next].values.iter().zip(table).map(|(&a, &b)| s.mul(a, b)).collect();
            if !admit(values, Origin::Extend(next, *lit), &mut functions) {
                complete = false;
                break 'walk;
            }
        }
        next += 1;
    }
    Ok(CloneClosure { arity, functions, origins, complete })
}
