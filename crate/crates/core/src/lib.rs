//! A desk-scale model of a search engine: a positional inverted index over a
//! document corpus, singleton/doubleton/proximity event spaces with exact
//! cardinalities, hit-count Jaccard similarity and co-occurrence network
//! extraction, and a verifier that machine-checks the model's set-algebra
//! properties.
//!
//! The crate is organized around four modules:
//!
//! - [`corpus`] — tokenization, query terms, document ingestion.
//! - [`engine`] — the inverted index and event-space operations, plus the
//!   independent linear-scan oracle they are checked against.
//! - [`similarity`] — Jaccard over hit counts, pairwise matrices, network
//!   extraction.
//! - [`verifier`] — invariant- and hypothesis-class checks bundled into a
//!   reproducible report.
//!
//! [`synth`] provides seeded corpus generators for the verifier's constructed
//! fixtures.

pub mod corpus;
pub mod engine;
pub mod similarity;
pub mod synth;
pub mod verifier;

pub use corpus::{tokenize, Corpus, CorpusError, Document, Term, TokenizerConfig, Vocabulary};
pub use engine::{
    brute_force_doubleton_count, build_index, word_overlap, EngineError, EventSpace, Index,
    Semantics, TermCatalog,
};
pub use similarity::{
    edges_to_csv, extract_network, jaccard, pairwise_matrix, Measure, NetworkEdge,
    SimilarityError, SimilarityMatrix, SimilarityValue,
};
pub use verifier::{
    run_suite, CheckResult, VerificationReport, Verdict, VerifierError, Witness,
};
