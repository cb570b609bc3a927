//! Exact combinatorial toolkit for connected-domination-critical graphs:
//! gamma_c solvers, criticality testing, cut-vertex and block analysis,
//! matchings and factor-criticality, parameterized graph-family generators,
//! structural membership checkers, and a small-graph census for exhaustive
//! verification.

pub mod bitset;
pub mod canon;
pub mod census;
pub mod critical;
pub mod decompose;
pub mod error;
pub mod families;
pub mod gamma;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod structure;
pub mod suites;

pub use bitset::VertexSet;
pub use critical::{CriticalityReport, LemmaCheck, NonEdgeRecord};
pub use decompose::BlockDecomposition;
pub use error::{Error, Result};
pub use families::{B22Params, EndBlock, FamilyClaims, FamilyInstance, FamilySpec};
pub use gamma::GammaCResult;
pub use graph::{Graph, GraphAssembler, JoinExpr, JoinMode, JoinOperand};
pub use matching::{FactorCriticalityVerdict, MatchingResult};
pub use structure::StructureVerdict;
pub use suites::{Manifest, SuiteReport};

/// JSON schema tag stamped on every report this crate emits.
pub const SCHEMA: &str = "cdcrit/1";
