use std::fmt::Write;

use serde::Serialize;

use crate::lattice::{ConflictLattice, DeltaReport, MonotonicityReport, NormalReport};
use crate::stream::{ConflictSeries, Summary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LatticeFormat {
    /// `subset,size,cf` rows.
    #[default]
    Table,
    /// JSON document.
    Structured,
}

/// Six decimal places, ties to even.
pub fn round6(v: f64) -> String {
    format!("{v:.6}")
}

#[derive(Serialize)]
struct LatticeDoc {
    sources: usize,
    entries: Vec<LatticeEntry>,
}

#[derive(Serialize)]
struct LatticeEntry {
    subset: String,
    members: Vec<u32>,
    size: usize,
    cf: f64,
}

/// One row per non-empty subset, ordered by size then members.
pub fn emit_lattice(lat: &ConflictLattice, format: LatticeFormat) -> String {
    let entries = lat.entries();
    match format {
        LatticeFormat::Table => {
            let mut out = String::from("subset,size,cf\n");
            for (sub, v) in &entries {
                writeln!(out, "{sub},{},{}", sub.len(), round6(*v)).unwrap();
            }
            out
        }
        LatticeFormat::Structured => {
            let doc = LatticeDoc {
                sources: lat.sources(),
                entries: entries
                    .iter()
                    .map(|(sub, v)| LatticeEntry {
                        subset: sub.to_string(),
                        members: sub.members().iter().map(|id| id.0).collect(),
                        size: sub.len(),
                        cf: round6(*v).parse().expect("formatted float parses"),
                    })
                    .collect(),
            };
            let mut out = serde_json::to_string_pretty(&doc).expect("lattice documents always serialize");
            out.push('\n');
            out
        }
    }
}

/// Leave-one-out deltas followed by the normal/fuzzy measure checks.
pub fn emit_identify(deltas: &DeltaReport, normal: &NormalReport, monotone: &MonotonicityReport) -> String {
    let mut out = String::from("source,delta\n");
    for (id, d) in &deltas.deltas {
        writeln!(out, "{id},{}", round6(*d)).unwrap();
    }
    let argmax: Vec<String> = deltas.argmax.iter().map(ToString::to_string).collect();
    writeln!(out, "argmax: {}", argmax.join(",")).unwrap();
    writeln!(
        out,
        "normal: minimal_ok={} max_value={} attains_one={}",
        normal.minimal_ok,
        round6(normal.max_value),
        normal.attains_one
    )
    .unwrap();
    writeln!(out, "monotone: {} ({} violations)", monotone.is_monotone, monotone.violations.len()).unwrap();
    for v in &monotone.violations {
        writeln!(
            out,
            "violation: {} ({}) > {} ({})",
            v.subset,
            round6(v.subset_value),
            v.superset,
            round6(v.superset_value)
        )
        .unwrap();
    }
    out
}

/// `time,cf` rows.
pub fn emit_conflict_series(cs: &ConflictSeries) -> String {
    let mut out = String::from("time,cf\n");
    for (t, v) in &cs.points {
        writeln!(out, "{t},{}", round6(*v)).unwrap();
    }
    out
}

/// Summary as `#`-prefixed lines so the output stays loadable as CSV.
pub fn emit_summary(s: &Summary) -> String {
    format!(
        "# mean={}\n# variance={}\n# max={}\n# argmax_time={}\n",
        round6(s.mean),
        round6(s.variance),
        round6(s.max),
        s.argmax_time
    )
}
