//! Equation solving and algebraic-set geometry over finite inverse
//! semigroups.
//!
//! The crate is layered bottom-up:
//!
//! - [`partialmap`]: partial injections, the concrete model of an inverse
//!   semigroup;
//! - [`semigroup`]: Cayley-table semigroups, validation, the idempotent
//!   order, the Wagner–Preston representation and a catalog of instances;
//! - [`term`]: the term language with constants and inversion, its flat
//!   normal form, and enumeration of all n-ary term functions;
//! - [`goodterm`]: conjugator normal forms of terms evaluated at
//!   idempotents;
//! - [`eqgeo`]: equations, solution sets, algebraic closure of point sets
//!   and recheckable certificates that a non-group inverse semigroup is not
//!   an equational domain;
//! - [`cli`]: the `invsemi` command-line front end.

pub mod cli;
pub mod eqgeo;
pub mod goodterm;
pub mod partialmap;
pub mod semigroup;
pub mod term;
