//! Recovering the defining string of an ornated graph from its arc matrix.
//!
//! Row 1 of `O_m(s)` only holds forward arcs and column 1 only backward
//! arcs. The value at offset `d` (column or row `1 + d`) counts the entries
//! of that parity class with reach at least `d`, so both lines are
//! non-increasing staircases whose conjugate partitions are the forward and
//! backward multisets. Peeling reads the conjugate off by repeatedly
//! counting the positive cells and decrementing them.

use serde::Serialize;

use crate::error::{OrnatedError, Result};
use crate::graph::{ArcMatrix, OrnatedGraph};
use crate::ostring::{canonical_interleave, OrderedString};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecoveryResult {
    /// Odd-indexed entries, largest first.
    pub forward: Vec<usize>,
    /// Even-indexed entries, largest first.
    pub backward: Vec<usize>,
    pub canonical: OrderedString,
    pub string_length: usize,
    pub kyle: bool,
}

impl RecoveryResult {
    /// Largest recovered entry, 0 when nothing was recovered.
    pub fn max_entry(&self) -> usize {
        self.forward.iter().chain(&self.backward).copied().max().unwrap_or(0)
    }
}

/// Number of positive entries in the defining string: `e_12 + e_21`.
pub fn string_length_from_matrix(m: &ArcMatrix) -> Result<usize> {
    if m.order() < 2 {
        return Err(OrnatedError::OrderTooSmall(m.order()));
    }
    Ok(m.get(1, 2) + m.get(2, 1))
}

/// Count-and-decrement over a line of cells: each round records how many
/// cells are still positive, then lowers each of them by one. Total on any
/// input; on a staircase the rounds produce its conjugate partition.
pub fn peel(cells: &[usize]) -> Vec<usize> {
    let mut deviated = cells.to_vec();
    let mut parts = Vec::new();
    loop {
        let positive = deviated.iter().filter(|&&e| e >= 1).count();
        if positive == 0 {
            break;
        }
        parts.push(positive);
        for e in deviated.iter_mut().filter(|e| **e >= 1) {
            *e -= 1;
        }
    }
    parts
}

fn is_staircase(cells: &[usize]) -> bool {
    cells.windows(2).all(|w| w[0] >= w[1])
}

/// Off-diagonal cells of row 1, `e_12 .. e_1m`.
pub(crate) fn first_row_tail(m: &ArcMatrix) -> Vec<usize> {
    m.row(1)[1..].to_vec()
}

/// Off-diagonal cells of column 1, `e_21 .. e_m1`.
pub(crate) fn first_column_tail(m: &ArcMatrix) -> Vec<usize> {
    m.column(1)[1..].to_vec()
}

pub fn recover(m: &ArcMatrix) -> Result<RecoveryResult> {
    let order = m.order();
    if order == 0 {
        return Err(OrnatedError::ZeroOrder);
    }
    if let Some(i) = (1..=order).find(|&i| m.get(i, i) != 0) {
        return Err(OrnatedError::NotOrnated(format!("loop at v{i}")));
    }
    let row = first_row_tail(m);
    let column = first_column_tail(m);
    if !is_staircase(&row) {
        return Err(OrnatedError::NotOrnated("row 1 is not a non-increasing staircase".into()));
    }
    if !is_staircase(&column) {
        return Err(OrnatedError::NotOrnated("column 1 is not a non-increasing staircase".into()));
    }
    let forward = peel(&row);
    let backward = peel(&column);
    let canonical = canonical_interleave(&forward, &backward);
    let rebuilt = OrnatedGraph::build(order, &canonical)?;
    if rebuilt.arcs() != m {
        return Err(OrnatedError::NotOrnated(format!(
            "rebuilding O_{order}({canonical}) does not reproduce the matrix"
        )));
    }
    let string_length = forward.len() + backward.len();
    let mut result = RecoveryResult { forward, backward, canonical, string_length, kyle: false };
    result.kyle = order == 2 * result.max_entry() + 1;
    Ok(result)
}

/// Whether the matrix is the Kyle graph of some string.
pub fn is_kyle(m: &ArcMatrix) -> bool {
    recover(m).map(|r| r.kyle).unwrap_or(false)
}
