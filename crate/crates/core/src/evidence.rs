//! Interval-valued evidence: one closed interval per source.

use std::fmt;

use thiserror::Error;

/// 1-based source label, rendered as `x<id>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourceId(pub u32);

impl SourceId {
    /// Zero-based position of this id within a contiguous `1..=n` labelling.
    pub fn index(self) -> usize {
        (self.0 as usize).wrapping_sub(1)
    }

    pub fn from_index(index: usize) -> Self {
        SourceId(index as u32 + 1)
    }
}

impl fmt::Display for SourceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// Closed interval `[lo, hi]` with finite endpoints and `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// Returns `None` unless both endpoints are finite and `lo <= hi`.
    pub fn new(lo: f64, hi: f64) -> Option<Self> {
        (lo.is_finite() && hi.is_finite() && lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn point(x: f64) -> Option<Self> {
        Self::new(x, x)
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    #[inline]
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    #[inline]
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Closed containment of `[lo, hi]`.
    #[inline]
    pub fn covers(&self, lo: f64, hi: f64) -> bool {
        self.lo <= lo && hi <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvidenceError {
    #[error("no sources given")]
    EmptyInput,
    #[error("source {id}: invalid interval [{lo}, {hi}] (need finite endpoints with lo <= hi)")]
    InvalidInterval { id: u32, lo: f64, hi: f64 },
    #[error("source id {0} appears more than once")]
    DuplicateId(u32),
    #[error("source ids must be exactly 1..={n}; found id {id}")]
    NonContiguousIds { id: u32, n: usize },
}

/// The source set `X`: `n >= 1` labelled intervals with ids exactly `1..=n`,
/// kept in the order they were supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct EvidenceSet {
    sources: Vec<(SourceId, Interval)>,
    // position in `sources` of id `k + 1`
    slot: Vec<usize>,
}

impl EvidenceSet {
    /// Builds an evidence set from intervals labelled `x1..xn` in order.
    pub fn from_intervals(intervals: impl IntoIterator<Item = Interval>) -> Result<Self, EvidenceError> {
        let sources: Vec<_> = intervals.into_iter().enumerate().map(|(k, iv)| (SourceId::from_index(k), iv)).collect();
        if sources.is_empty() {
            return Err(EvidenceError::EmptyInput);
        }
        let slot = (0..sources.len()).collect();
        Ok(EvidenceSet { sources, slot })
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    /// Sources in input order.
    pub fn sources(&self) -> &[(SourceId, Interval)] {
        &self.sources
    }

    pub fn interval(&self, id: SourceId) -> Option<&Interval> {
        self.slot.get(id.index()).map(|&k| &self.sources[k].1)
    }

    /// Intervals indexed by `id - 1`, independent of input order.
    pub fn intervals_by_id(&self) -> Vec<Interval> {
        self.slot.iter().map(|&k| self.sources[k].1).collect()
    }

    pub fn ids(&self) -> impl Iterator<Item = SourceId> + '_ {
        self.sources.iter().map(|(id, _)| *id)
    }

    /// Applies `f` to every interval. `f` must keep intervals valid.
    pub fn map_intervals(&self, mut f: impl FnMut(&Interval) -> Interval) -> Self {
        EvidenceSet { sources: self.sources.iter().map(|(id, iv)| (*id, f(iv))).collect(), slot: self.slot.clone() }
    }
}

/// Validates raw `(id, lo, hi)` triples into an [`EvidenceSet`], preserving order.
pub fn validate_evidence(raw: &[(u32, f64, f64)]) -> Result<EvidenceSet, EvidenceError> {
    if raw.is_empty() {
        return Err(EvidenceError::EmptyInput);
    }
    let n = raw.len();
    let mut slot = vec![usize::MAX; n];
    let mut sources = Vec::with_capacity(n);
    for (k, &(id, lo, hi)) in raw.iter().enumerate() {
        let interval = Interval::new(lo, hi).ok_or(EvidenceError::InvalidInterval { id, lo, hi })?;
        if id == 0 || id as usize > n {
            return Err(EvidenceError::NonContiguousIds { id, n });
        }
        let pos = &mut slot[id as usize - 1];
        if *pos != usize::MAX {
            return Err(EvidenceError::DuplicateId(id));
        }
        *pos = k;
        sources.push((SourceId(id), interval));
    }
    Ok(EvidenceSet { sources, slot })
}
