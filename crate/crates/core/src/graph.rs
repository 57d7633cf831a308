//! Ornated multidigraphs and their degree primitives.
//!
//! Vertices are `v_1 ..= v_n`; every public index argument is 1-based.
//! Arcs never wrap around: an odd-indexed entry `a` joins `v_i` to each
//! `v_j` with `i < j <= min(i + a, n)`, an even-indexed entry joins `v_i`
//! to each `v_j` with `max(i - a, 1) <= j < i`.

use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{OrnatedError, Result};
use crate::ostring::{OrderedString, Reach};

/// Square matrix of arc multiplicities, `e_ij` = number of arcs `(v_i, v_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcMatrix {
    n: usize,
    data: Vec<usize>,
}

impl ArcMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0; n * n] }
    }

    /// Builds a matrix from rows, rejecting ragged input.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(OrnatedError::NonSquare { row: r + 1, len: row.len(), expected: n });
            }
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `e_ij` with 1-based indices. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.data[self.offset(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: usize) {
        let at = self.offset(i, j);
        self.data[at] = value;
    }

    fn bump(&mut self, i: usize, j: usize) {
        let at = self.offset(i, j);
        self.data[at] += 1;
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "({i}, {j}) outside a {0}x{0} matrix",
            self.n
        );
        (i - 1) * self.n + (j - 1)
    }

    /// Row `i` (1-based) as a slice; element 0 is `e_i1`.
    pub fn row(&self, i: usize) -> &[usize] {
        let start = (i - 1) * self.n;
        &self.data[start..start + self.n]
    }

    /// Column `j` (1-based) collected top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        (1..=self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn row_sum(&self, i: usize) -> usize {
        self.row(i).iter().sum()
    }

    pub fn column_sum(&self, j: usize) -> usize {
        (1..=self.n).map(|i| self.get(i, j)).sum()
    }

    /// Out-degrees `d+(v_1) .. d+(v_n)`.
    pub fn out_degrees(&self) -> Vec<usize> {
        (1..=self.n).map(|i| self.row_sum(i)).collect()
    }

    /// In-degrees `d-(v_1) .. d-(v_n)`.
    pub fn in_degrees(&self) -> Vec<usize> {
        (1..=self.n).map(|j| self.column_sum(j)).collect()
    }

    pub fn total(&self) -> usize {
        self.data.iter().sum()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (1..=self.n).all(|i| self.get(i, i) == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    /// `u_ij = e_ij + e_ji`.
    pub fn symmetrized(&self) -> ArcMatrix {
        let mut out = ArcMatrix::zeros(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                out.set(i, j, self.get(i, j) + self.get(j, i));
            }
        }
        out
    }

    fn checked_add(&self, other: &ArcMatrix) -> Result<ArcMatrix> {
        if self.n != other.n {
            return Err(OrnatedError::DimensionMismatch { left: self.n, right: other.n });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(ArcMatrix { n: self.n, data })
    }
}

/// Total degree of `v_i` read straight off a matrix: row sum plus column sum.
pub fn degree_from_matrix(m: &ArcMatrix, i: usize) -> Result<usize> {
    check_vertex(m.order(), i)?;
    Ok(m.row_sum(i) + m.column_sum(i))
}

fn check_vertex(n: usize, i: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(OrnatedError::VertexOutOfRange { index: i, max: n })
    }
}

/// Out-, in- and total degree of one vertex, multiplicities counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degrees {
    pub out: usize,
    #[serde(rename = "in")]
    pub inn: usize,
    pub total: usize,
}

/// A directed multigraph on `v_1 ..= v_n`.
///
/// `provenance` lists the strings whose arcs were summed to produce the
/// matrix. It is empty for matrices loaded from elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrnatedGraph {
    arcs: ArcMatrix,
    provenance: Vec<OrderedString>,
}

impl OrnatedGraph {
    /// `O_n(s)`.
    pub fn build(n: usize, s: &OrderedString) -> Result<Self> {
        if n == 0 {
            return Err(OrnatedError::ZeroOrder);
        }
        let mut arcs = ArcMatrix::zeros(n);
        for (reach, a) in s.reaches() {
            add_entry_arcs(&mut arcs, reach, a);
        }
        Ok(Self { arcs, provenance: vec![s.clone()] })
    }

    /// `O_n(s_1, ..., s_t)`: the sum of the individual builds on `n` vertices.
    pub fn build_generalized(n: usize, strings: &[OrderedString]) -> Result<Self> {
        let mut acc = Self::arcless(n)?;
        for s in strings {
            acc = acc.graph_sum(&Self::build(n, s)?)?;
        }
        Ok(acc)
    }

    pub fn arcless(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(OrnatedError::ZeroOrder);
        }
        Ok(Self { arcs: ArcMatrix::zeros(n), provenance: Vec::new() })
    }

    /// Wraps an externally supplied matrix. Loops are rejected.
    pub fn from_matrix(arcs: ArcMatrix) -> Result<Self> {
        if arcs.order() == 0 {
            return Err(OrnatedError::ZeroOrder);
        }
        if let Some(i) = (1..=arcs.order()).find(|&i| arcs.get(i, i) != 0) {
            return Err(OrnatedError::Loop(i));
        }
        Ok(Self { arcs, provenance: Vec::new() })
    }

    pub(crate) fn with_provenance(mut self, provenance: Vec<OrderedString>) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn order(&self) -> usize {
        self.arcs.order()
    }

    pub fn arcs(&self) -> &ArcMatrix {
        &self.arcs
    }

    pub fn into_arcs(self) -> ArcMatrix {
        self.arcs
    }

    pub fn provenance(&self) -> &[OrderedString] {
        &self.provenance
    }

    /// Entrywise sum of the arc matrices, provenance concatenated.
    pub fn graph_sum(&self, other: &OrnatedGraph) -> Result<OrnatedGraph> {
        let arcs = self.arcs.checked_add(&other.arcs)?;
        let provenance = self.provenance.iter().chain(&other.provenance).cloned().collect();
        Ok(OrnatedGraph { arcs, provenance })
    }

    pub fn degrees(&self, i: usize) -> Result<Degrees> {
        check_vertex(self.order(), i)?;
        let out = self.arcs.row_sum(i);
        let inn = self.arcs.column_sum(i);
        Ok(Degrees { out, inn, total: out + inn })
    }

    /// Total degrees of all vertices in index order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let outs = self.arcs.out_degrees();
        let ins = self.arcs.in_degrees();
        outs.into_iter().zip(ins).map(|(o, i)| o + i).collect()
    }

    /// `(d_r^-(v_i), d_r^+(v_i))`: multiplicities of `(v_{i+1}, v_i)` and
    /// `(v_i, v_{i+1})`.
    pub fn relative_degrees(&self, i: usize) -> Result<(usize, usize)> {
        let n = self.order();
        if i == 0 || i >= n {
            return Err(OrnatedError::VertexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        Ok((self.arcs.get(i + 1, i), self.arcs.get(i, i + 1)))
    }

    /// Matrix of the underlying undirected multigraph.
    pub fn underlying_matrix(&self) -> ArcMatrix {
        self.arcs.symmetrized()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.total()
    }
}

impl Add for &OrnatedGraph {
    type Output = Result<OrnatedGraph>;

    fn add(self, rhs: &OrnatedGraph) -> Self::Output {
        self.graph_sum(rhs)
    }
}

fn add_entry_arcs(arcs: &mut ArcMatrix, reach: Reach, a: usize) {
    let n = arcs.order();
    for i in 1..=n {
        match reach {
            Reach::Forward => {
                for j in (i + 1)..=(i.saturating_add(a)).min(n) {
                    arcs.bump(i, j);
                }
            }
            Reach::Backward => {
                for j in i.saturating_sub(a).max(1)..i {
                    arcs.bump(i, j);
                }
            }
        }
    }
}

/// Closed-form total degree of `v_i` in `O_n(s)`:
/// `sum_j min(a_j, n - i) + min(a_j, i - 1)`.
///
/// Each entry contributes the same amount whatever its parity, since a
/// forward entry covers `min(a, n - i)` successors plus `min(a, i - 1)`
/// predecessors and a backward entry covers the mirror image.
pub fn closed_form_degree(n: usize, s: &OrderedString, i: usize) -> usize {
    s.entries().iter().map(|&a| entry_degree(n, a, i)).sum()
}

/// Degree contribution of a single entry `a` at `v_i` on `n` vertices.
pub fn entry_degree(n: usize, a: usize, i: usize) -> usize {
    a.min(n - i) + a.min(i - 1)
}
