use std::fmt::Write as _;

use super::FiniteInverseSemigroup;

/// DOT source for the Hasse diagram of the idempotents, drawn bottom-up:
/// every edge runs from a lower idempotent to one covering it.
pub fn hasse_dot(s: &FiniteInverseSemigroup) -> String {
    let order = s.natural_order();
    let mut out = String::from("digraph idempotents {\n  rankdir=BT;\n");
    for &e in order.elements() {
        writeln!(out, "  \"{}\";", s.name(e)).unwrap();
    }
    for (lo, hi) in order.covers() {
        writeln!(out, "  \"{}\" -> \"{}\";", s.name(lo), s.name(hi)).unwrap();
    }
    out.push_str("}\n");
    out
}
