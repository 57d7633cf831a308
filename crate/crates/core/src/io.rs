//! File formats: the JSON graph document, the per-entry CSV degree table
//! and DOT export.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{OrnatedError, Result};
use crate::graph::{ArcMatrix, OrnatedGraph};
use crate::kyle::DegreeProfile;
use crate::ostring::OrderedString;

/// `{"n": .., "matrix": [[..], ..], "strings": [[..], ..]}`; `strings` is
/// optional and omitted for graphs without provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub matrix: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strings: Vec<Vec<usize>>,
}

impl GraphDocument {
    pub fn from_graph(g: &OrnatedGraph) -> Self {
        Self {
            n: g.order(),
            matrix: g.arcs().rows(),
            strings: g.provenance().iter().map(|s| s.entries().to_vec()).collect(),
        }
    }

    /// The raw matrix, checked only for shape.
    pub fn to_matrix(&self) -> Result<ArcMatrix> {
        if self.matrix.len() != self.n {
            return Err(OrnatedError::Format(format!(
                "\"n\" is {} but \"matrix\" has {} rows",
                self.n,
                self.matrix.len()
            )));
        }
        ArcMatrix::from_rows(self.matrix.clone())
    }

    /// A graph with provenance restored. When strings are present the
    /// matrix must equal the sum of their builds.
    pub fn to_graph(&self) -> Result<OrnatedGraph> {
        let matrix = self.to_matrix()?;
        if self.strings.is_empty() {
            return OrnatedGraph::from_matrix(matrix);
        }
        let strings: Vec<OrderedString> = self.strings.iter().cloned().map(OrderedString::new).collect();
        let g = OrnatedGraph::build_generalized(self.n, &strings)?;
        if g.arcs() != &matrix {
            return Err(OrnatedError::Format("matrix does not match the listed strings".into()));
        }
        Ok(g)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Degree table with one row per vertex: label, per-entry contributions,
/// total.
pub fn degree_table_csv(profile: &DegreeProfile) -> String {
    let mut out = String::from("v_i");
    for j in 1..=profile.string.len() {
        let _ = write!(out, ",a_{j}");
    }
    out.push_str(",d(v_i)\n");
    for (i, (row, total)) in profile.per_entry.iter().zip(&profile.totals).enumerate() {
        let _ = write!(out, "v{}", i + 1);
        for d in row {
            let _ = write!(out, ",{d}");
        }
        let _ = writeln!(out, ",{total}");
    }
    out
}

/// DOT digraph named `ornated`. Each arc gets its own edge statement unless
/// `collapse` is set, in which case parallel arcs become one edge labelled
/// with the multiplicity.
pub fn to_dot(m: &ArcMatrix, collapse: bool) -> String {
    let n = m.order();
    let mut out = String::from("digraph ornated {\n");
    for i in 1..=n {
        let _ = writeln!(out, "  v{i};");
    }
    for i in 1..=n {
        for j in 1..=n {
            let e = m.get(i, j);
            if e == 0 {
                continue;
            }
            if collapse {
                let _ = writeln!(out, "  v{i} -> v{j} [label=\"{e}\"];");
            } else {
                for _ in 0..e {
                    let _ = writeln!(out, "  v{i} -> v{j};");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
