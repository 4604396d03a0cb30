//! Ribbon graphs given as permutation triples, their quasi-trees, and the
//! three-variable topological Tutte polynomial `C(Γ; X, Y, Z)`.
//!
//! Half-edges are numbered from 1 in every user-facing form (cycle lists,
//! JSON, bitstrings) and from 0 internally.

pub mod activity;
pub mod cli;
pub mod edgeset;
pub mod error;
pub mod expansions;
pub mod generate;
pub mod io;
pub mod multigraph;
pub mod perm;
pub mod poly;
pub mod quasitree;
pub mod report;
pub mod ribbon;

pub use activity::Activity;
pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use expansions::{
    compute, duality_check, recursive, spanning_tree_expansion, state_sum, verify_all, BrtResult,
    DualityReport, Method, VerifyReport, DEFAULT_SIZE_CAP,
};
pub use multigraph::MultiGraph;
pub use perm::Perm;
pub use poly::{MPoly, Var};
pub use quasitree::{
    enumerate_quasi_trees, genus_histogram, PartialResolution, QuasiTree, ResolutionTree,
};
pub use ribbon::{Counts, EdgeOrder, RibbonGraph};
