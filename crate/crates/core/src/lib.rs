//! Exact computations around edge ideals of small graphs: squarefree parts
//! of ordinary and symbolic powers, graded Betti numbers and regularity via
//! Hochster's formula over exact fields, and a suite of named checks that
//! verifies identities and bounds over exhaustive small-graph corpora.

pub mod betti;
pub mod corpus;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod homology;
pub mod ideal;
mod linalg;
pub mod varset;
pub mod verify;

pub use betti::{betti_table, regularity, BettiTable};
pub use error::{Error, Result};
pub use graph::{Graph, GraphFamily, InvariantReport};
pub use homology::{reduced_betti, stanley_reisner, FieldSpec, SimplicialComplex};
pub use ideal::{edge_ideal, sqf_power, sqf_symbolic, symbolic_member, Monomial, SqfIdeal, SqfMonomial};
pub use varset::VarSet;
pub use verify::{explore_conjecture, run_check, run_suite, CheckId, CheckResult, CheckStatus, Report, RunParams};
