//! Kyle graphs, extremal degrees, central clusters and degree profiles.

use serde::Serialize;

use crate::error::{OrnatedError, Result};
use crate::graph::{entry_degree, OrnatedGraph};
use crate::ostring::OrderedString;

/// Order of the Kyle graph of `s`: `2k + 1` with `k` the largest entry.
pub fn kyle_order(s: &OrderedString) -> usize {
    2 * s.max_entry() + 1
}

/// The Kyle graph `O_{2k+1}(s)`. An all-zero or empty string gives the
/// single arcless vertex.
pub fn kyle(s: &OrderedString) -> OrnatedGraph {
    OrnatedGraph::build(kyle_order(s), s).expect("Kyle order is at least 1")
}

/// `Δ = 2 Σ a_j`, the degree of every central-cluster vertex.
pub fn max_degree(s: &OrderedString) -> usize {
    2 * s.sum()
}

/// `δ = Σ a_j`, attained at `v_1` and `v_n` once `n >= 2k + 1`.
pub fn min_degree(s: &OrderedString, n: usize) -> Result<usize> {
    let kyle_order = kyle_order(s);
    if n < kyle_order {
        return Err(OrnatedError::BelowKyleOrder { n, kyle_order });
    }
    Ok(s.sum())
}

/// Vertices of maximum possible degree in a graph built from strings.
///
/// The strings are taken from the graph's provenance; with several strings
/// the target degree is the sum of their individual maxima and `k` is the
/// largest entry across all of them.
pub fn central_cluster(g: &OrnatedGraph) -> Result<Vec<usize>> {
    let strings = g.provenance();
    if strings.is_empty() {
        return Err(OrnatedError::NoProvenance);
    }
    let k = strings.iter().map(OrderedString::max_entry).max().unwrap_or(0);
    let n = g.order();
    if n < 2 * k + 1 {
        return Err(OrnatedError::BelowKyleOrder { n, kyle_order: 2 * k + 1 });
    }
    let target: usize = strings.iter().map(max_degree).sum();
    Ok(g.degree_sequence()
        .into_iter()
        .enumerate()
        .filter(|&(_, d)| d == target)
        .map(|(i, _)| i + 1)
        .collect())
}

/// Degree sequence of `O_n(s)` together with the contribution of each
/// entry taken alone (the graph `O_n(0, .., a_j, .., 0)`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub n: usize,
    pub string: OrderedString,
    pub totals: Vec<usize>,
    /// `per_entry[i][j]`: degree of `v_{i+1}` due to entry `a_{j+1}`.
    pub per_entry: Vec<Vec<usize>>,
    pub delta_min: usize,
    pub delta_max: usize,
    /// 1-based vertices attaining `delta_max`.
    pub cluster: Vec<usize>,
}

pub fn degree_sequence(n: usize, s: &OrderedString) -> Result<DegreeProfile> {
    if n == 0 {
        return Err(OrnatedError::ZeroOrder);
    }
    let per_entry: Vec<Vec<usize>> =
        (1..=n).map(|i| s.entries().iter().map(|&a| entry_degree(n, a, i)).collect()).collect();
    let totals: Vec<usize> = per_entry.iter().map(|row| row.iter().sum()).collect();
    let delta_min = *totals.iter().min().expect("n >= 1");
    let delta_max = *totals.iter().max().expect("n >= 1");
    let cluster = totals.iter().enumerate().filter(|&(_, &d)| d == delta_max).map(|(i, _)| i + 1).collect();
    Ok(DegreeProfile { n, string: s.clone(), totals, per_entry, delta_min, delta_max, cluster })
}

/// The generalised Kyle graph: all strings applied to `2 max k_i + 1`
/// vertices.
pub fn generalized_kyle(strings: &[OrderedString]) -> Result<OrnatedGraph> {
    if strings.is_empty() {
        return Err(OrnatedError::EmptyStringList);
    }
    let k = strings.iter().map(OrderedString::max_entry).max().unwrap_or(0);
    OrnatedGraph::build_generalized(2 * k + 1, strings).map(|g| g.with_provenance(strings.to_vec()))
}
