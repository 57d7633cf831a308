//! Ornated graphs: directed multigraphs generated by ordered strings of
//! non-negative integers.
//!
//! An odd-indexed entry `a` joins every vertex to the next `a` vertices;
//! an even-indexed entry joins every vertex to the previous `a`. The crate
//! builds these graphs, computes their degree theory (Kyle graphs, central
//! clusters, per-entry degree tables), recovers defining strings from arc
//! matrices and runs empirical checks of a conjectured characterisation of
//! Kyle graphs.

pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod kyle;
pub mod lab;
pub mod laws;
pub mod ostring;
pub mod ratanang;

pub use error::{OrnatedError, Result};
pub use graph::{degree_from_matrix, ArcMatrix, Degrees, OrnatedGraph};
pub use kyle::{
    central_cluster, degree_sequence, generalized_kyle, kyle, max_degree, min_degree, DegreeProfile,
};
pub use lab::{check_conjecture_conditions, is_symmetric_digraph, ConjectureReport};
pub use ostring::{canonical_interleave, OrderedString, ParitySplit};
pub use ratanang::{is_kyle, recover, string_length_from_matrix, RecoveryResult};
