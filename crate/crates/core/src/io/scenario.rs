use serde::{Deserialize, Serialize};

use super::FormatError;
use crate::evidence::{validate_evidence, EvidenceSet};

/// A named evidence set as stored on disk.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub evidence: EvidenceSet,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioDoc {
    name: String,
    sources: Vec<SourceDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SourceDoc {
    id: u32,
    lo: f64,
    hi: f64,
}

/// Parses a JSON scenario document:
///
/// ```json
/// { "name": "example1", "sources": [ { "id": 1, "lo": 0.0, "hi": 12.0 } ] }
/// ```
pub fn parse_scenario(text: &str) -> Result<Scenario, FormatError> {
    let doc: ScenarioDoc = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let raw: Vec<_> = doc.sources.iter().map(|s| (s.id, s.lo, s.hi)).collect();
    let evidence = validate_evidence(&raw)?;
    Ok(Scenario { name: doc.name, evidence })
}

/// Pretty-printed JSON, sources in evidence order, full float precision.
pub fn emit_scenario(scenario: &Scenario) -> String {
    let doc = ScenarioDoc {
        name: scenario.name.clone(),
        sources: scenario
            .evidence
            .sources()
            .iter()
            .map(|(id, iv)| SourceDoc { id: id.0, lo: iv.lo(), hi: iv.hi() })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("scenario documents always serialize");
    out.push('\n');
    out
}
