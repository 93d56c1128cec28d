//! Rule-set precision against gold labels, rule selection and rule induction.

mod evaluate;
mod gold;
mod induce;
mod metrics;
mod report;
mod select;

use thiserror::Error;

pub use evaluate::{evaluate_rule_set, retrieved_sentences};
pub use gold::{GoldLabel, GoldSet};
pub use induce::{induce_rule_statistics, InductionReport, MIN_INDUCTION_ENTRIES};
pub use metrics::{weighted_precision, EvaluationSummary, RuleEvaluation};
pub use report::table_report;
pub use select::{rank_and_select, Candidate, Selection, DEFAULT_PRECISION_FLOOR};

#[derive(Debug, Error)]
pub enum EvaluationError {
    #[error("no observations to evaluate")]
    NoObservations,
    #[error("nothing was retrieved, so precision is undefined")]
    NothingRetrieved,
    #[error("{observation}: relevant ({relevant}) exceeds retrieved ({retrieved})")]
    CountMismatch {
        observation: String,
        retrieved: usize,
        relevant: usize,
    },
    #[error("retrieved sentences without a gold label: {}", .0.join(" | "))]
    MissingLabels(Vec<String>),
    #[error("gold line {line}: duplicate fingerprint {fingerprint:?}")]
    DuplicateFingerprint { line: usize, fingerprint: String },
    #[error("gold line {line}: relevant must be 0 or 1, found {value:?}")]
    BadLabel { line: usize, value: String },
    #[error("line {line}: {reason}")]
    Csv { line: usize, reason: String },
    #[error("rule set {0:?} was evaluated on different observations")]
    MismatchedObservations(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
