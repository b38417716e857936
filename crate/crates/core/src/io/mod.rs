//! Text formats: scenario documents (JSON), sensor series (CSV), and the
//! rendered lattice, report and conflict-series outputs.

mod render;
mod scenario;
mod series;

use thiserror::Error;

use crate::evidence::EvidenceError;
use crate::stream::StreamError;

pub use render::{emit_conflict_series, emit_identify, emit_lattice, emit_summary, round6, LatticeFormat};
pub use scenario::{emit_scenario, parse_scenario, Scenario};
pub use series::{emit_series, parse_series};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid evidence: {0}")]
    Validation(#[from] EvidenceError),
    #[error("line {line}: time does not increase")]
    NonIncreasingTime { line: usize },
    #[error("line {line}: expected {expected} fields, found {got}")]
    RaggedRow { line: usize, expected: usize, got: usize },
    #[error("line {line}, column {column}: value is not finite")]
    NonFiniteValue { line: usize, column: usize },
    #[error("invalid series: {0}")]
    Series(#[from] StreamError),
}
