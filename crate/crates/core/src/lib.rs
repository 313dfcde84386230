//! Collapsible and supereulerian graphs: exact oracles, the reduction,
//! degree invariants, and a harness that checks graph-theoretic statements
//! over finite corpora.

pub mod blowup;
pub mod edgeset;
pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod limits;
pub mod named;
pub mod oracle;
pub mod reduction;

pub use edgeset::EdgeSubset;
pub use error::{Error, Result};
pub use invariants::{DegreeProfile, Extended, MatchingCertificate};
pub use harness::{verify_statement, Corpus, VerificationReport};
pub use graph::{ContractionMap, MultiGraph, Vertex};
pub use limits::Limits;
pub use named::NamedGraph;
pub use oracle::{OracleVerdict, Witness};
pub use reduction::{ReductionResult, ReductionStep};
