//! Algebraic identities of ornated graphs, checked on concrete instances.
//!
//! Associative and summation laws split a string into single-entry pieces
//! that keep their original positions. The partial-commutative law swaps
//! entries within a parity class; the redundancy law drops zeros and only
//! claims equality of the underlying (symmetrized) matrices.

use serde::Serialize;

use crate::error::Result;
use crate::graph::OrnatedGraph;
use crate::ostring::OrderedString;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub holds: bool,
}

/// `s` with every entry except position `keep` (0-based) set to zero.
pub fn isolate(s: &OrderedString, keep: usize) -> OrderedString {
    let entries = s.entries().iter().enumerate().map(|(i, &a)| if i == keep { a } else { 0 }).collect();
    OrderedString::new(entries)
}

/// `s` with position `drop` (0-based) set to zero.
pub fn knock_out(s: &OrderedString, drop: usize) -> OrderedString {
    let mut entries = s.entries().to_vec();
    entries[drop] = 0;
    OrderedString::new(entries)
}

/// The four orderings `(a1,a2,a3,a4)`, `(a3,a2,a1,a4)`, `(a1,a4,a3,a2)`,
/// `(a3,a4,a1,a2)` applied to the first four positions.
pub const PARTIAL_COMMUTATIONS: [[usize; 4]; 4] = [[0, 1, 2, 3], [2, 1, 0, 3], [0, 3, 2, 1], [2, 3, 0, 1]];

pub fn permute_prefix(s: &OrderedString, perm: &[usize; 4]) -> OrderedString {
    let mut entries = s.entries().to_vec();
    for (slot, &from) in perm.iter().enumerate() {
        entries[slot] = s.entries()[from];
    }
    OrderedString::new(entries)
}

pub fn check_laws(n: usize, s: &OrderedString) -> Result<Vec<LawCheck>> {
    let whole = OrnatedGraph::build(n, s)?;
    let mut checks = Vec::new();

    for j in 0..s.len() {
        let split =
            OrnatedGraph::build(n, &isolate(s, j))?.graph_sum(&OrnatedGraph::build(n, &knock_out(s, j))?)?;
        checks
            .push(LawCheck { law: format!("associative(a_{})", j + 1), holds: split.arcs() == whole.arcs() });
    }

    let mut summed = OrnatedGraph::arcless(n)?;
    for j in 0..s.len() {
        summed = summed.graph_sum(&OrnatedGraph::build(n, &isolate(s, j))?)?;
    }
    checks.push(LawCheck { law: "summation".into(), holds: summed.arcs() == whole.arcs() });

    if s.len() >= 4 {
        for perm in &PARTIAL_COMMUTATIONS[1..] {
            let g = OrnatedGraph::build(n, &permute_prefix(s, perm))?;
            let label: Vec<String> = perm.iter().map(|p| format!("a_{}", p + 1)).collect();
            checks.push(LawCheck {
                law: format!("partial_commutative({})", label.join(",")),
                holds: g.arcs() == whole.arcs(),
            });
        }
    }

    let reduced = OrnatedGraph::build(n, &s.reduce_zeros())?;
    checks.push(LawCheck {
        law: "redundancy".into(),
        holds: reduced.underlying_matrix() == whole.underlying_matrix(),
    });
    Ok(checks)
}
