//! Whole-library checks over a fixed corpus of small quandles, plus an
//! independent dense reference implementation.

mod corpus;
mod criteria;
mod oracle;

pub use corpus::{default_corpus, Corpus, CorpusEntry, DEFAULT_MAX_DEGREE};
pub use criteria::*;
pub use oracle::{oracle_homology, OracleGroups};
