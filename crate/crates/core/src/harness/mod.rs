//! Corpus runner: manifests, per-group analysis and consequence checks.

pub mod analysis;
pub mod checks;
pub mod manifest;
pub mod report;

pub use analysis::{witness_search, Corpus, GroupAnalysis};
pub use checks::{registry, run_check, run_checks, CheckResult, Status};
pub use manifest::{CorpusEntry, Manifest, Source};
