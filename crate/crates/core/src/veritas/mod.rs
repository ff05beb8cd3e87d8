//! Checks each claimed identity about the graphs against brute force on
//! enumerated spaces, and reports verdicts as JSON Lines.

pub mod checks;
pub mod context;
pub mod hom;
mod outcome;
pub mod registry;
mod report;
pub mod run;

pub use context::{compute_dg_report, DgReportFn};
pub use hom::{HomPart, HomTrials};
pub use outcome::{Mismatch, Outcome, Tally, Tier, Verdict};
pub use registry::{claims, claims_markdown, lookup, select, Check, Claim, GraphKind, Scope};
pub use report::{findings_table, summary_table, to_jsonl, TheoremReport, Witness, SCHEMA};
pub use run::{canonical_spaces, run_suite, search_counterexample, Mode, RunOptions, RunResult, Suite};

use crate::TopoError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VeritasError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error(transparent)]
    Topo(#[from] TopoError),
}
