//! The measure of conflict `g^CF` over a subset of sources.
//!
//! For a subset of `i >= 2` sources, the span `[min lo, max hi]` is cut at every
//! endpoint. Each cell contributes its length weighted by the fraction of the
//! subset that does *not* cover it, so a cell nobody covers weighs 1 and a
//! cell everybody covers weighs 0. The weighted sum is normalised by the span
//! length. Singletons have conflict 0.

use crate::evidence::{EvidenceSet, Interval};
use crate::partition::Partition;
use crate::subset::{SourceSubset, SubsetError};

/// Unnormalised weighted sum over the induced partition.
pub fn conflict_raw(ev: &EvidenceSet, sub: &SourceSubset) -> Result<f64, SubsetError> {
    match sub.len() {
        0 => Err(SubsetError::EmptySubset),
        1 => Err(SubsetError::SingletonSubset),
        _ => Ok(raw_of(&sub.intervals(ev)?)),
    }
}

/// Normalised conflict in `[0, 1]`.
///
/// The empty subset and singletons yield exactly 0, as does a subset whose
/// intervals are all the same point (zero-length span).
pub fn conflict(ev: &EvidenceSet, sub: &SourceSubset) -> Result<f64, SubsetError> {
    let intervals = sub.intervals(ev)?;
    Ok(conflict_of(&intervals))
}

/// Conflict of an explicit list of intervals; see [`conflict`].
pub fn conflict_of(intervals: &[Interval]) -> f64 {
    if intervals.len() < 2 {
        return 0.0;
    }
    let Some(p) = Partition::of_intervals(intervals) else {
        return 0.0;
    };
    let span = p.span_len();
    if span > 0.0 {
        p.weighted_uncovered_length() / span
    } else {
        0.0
    }
}

fn raw_of(intervals: &[Interval]) -> f64 {
    Partition::of_intervals(intervals).map_or(0.0, |p| p.weighted_uncovered_length())
}
