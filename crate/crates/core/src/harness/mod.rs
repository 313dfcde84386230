//! Checking graph statements over finite corpora: enumeration, corpus
//! ingestion, a statement registry, and reports.

pub mod canonical;
pub mod corpus;
pub mod enumerate;
pub mod report;
pub mod statements;
pub mod subject;

pub use canonical::{validate_canonical, CanonicalValidation};
pub use corpus::{ingest_corpus, Corpus, CorpusDefect, CorpusEntry, CorpusItem};
pub use enumerate::{enumerate_small_graphs, enumerate_up_to, EnumerationFilter};
pub use report::{scan_conjecture, verify_statement, VerificationReport};
pub use statements::{lookup, registry, registry_ids, Statement, StatementKind};
