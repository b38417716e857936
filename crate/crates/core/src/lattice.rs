//! The lattice of conflict values over every subset of sources, plus the
//! normal-measure and fuzzy-measure (monotonicity) checks and the
//! leave-one-out identification of the most conflicting source.

use rayon::prelude::*;
use thiserror::Error;

use crate::conflict::conflict_of;
use crate::evidence::{EvidenceSet, Interval, SourceId};
use crate::subset::SourceSubset;

/// Largest source count for which the full lattice is enumerated.
pub const MAX_LATTICE_SOURCES: usize = 24;

/// Default tolerance for [`check_normal`] and [`check_monotone`].
pub const DEFAULT_TOL: f64 = 1e-9;

// Deltas closer than this to the maximum count as tied.
const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("{0} sources exceed the lattice limit of {MAX_LATTICE_SOURCES}")]
    TooManySources(usize),
    #[error("leave-one-out needs at least two sources, got {0}")]
    TooFewSources(usize),
}

/// Conflict value of every subset of `n` sources, keyed by bitmask
/// (bit `k` selects `x(k+1)`). The empty subset is stored as 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ConflictLattice {
    n: usize,
    values: Vec<f64>,
}

impl ConflictLattice {
    pub fn sources(&self) -> usize {
        self.n
    }

    /// Number of non-empty subsets, `2^n - 1`.
    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn value_by_mask(&self, mask: u64) -> Option<f64> {
        self.values.get(mask as usize).copied()
    }

    pub fn value(&self, sub: &SourceSubset) -> Option<f64> {
        sub.to_mask().and_then(|m| self.value_by_mask(m))
    }

    /// Non-empty subsets ordered by size, then lexicographically by members.
    pub fn entries(&self) -> Vec<(SourceSubset, f64)> {
        let mut masks: Vec<u64> = (1..self.values.len() as u64).collect();
        masks.sort_by_key(|&m| (m.count_ones(), lex_key(m)));
        masks.into_iter().map(|m| (SourceSubset::from_mask(m), self.values[m as usize])).collect()
    }
}

// For equal sizes, a larger bit-reversed mask means a lexicographically
// smaller ascending member list ({1,2} < {1,3} < {2,3}).
fn lex_key(mask: u64) -> std::cmp::Reverse<u64> {
    std::cmp::Reverse(mask.reverse_bits())
}

/// Evaluates the conflict measure on every non-empty subset of `ev`.
pub fn full_lattice(ev: &EvidenceSet) -> Result<ConflictLattice, LatticeError> {
    let n = ev.len();
    if n > MAX_LATTICE_SOURCES {
        return Err(LatticeError::TooManySources(n));
    }
    let by_id = ev.intervals_by_id();
    let values: Vec<f64> = (0..1u64 << n)
        .into_par_iter()
        .map_init(Vec::new, |buf: &mut Vec<Interval>, mask| {
            buf.clear();
            buf.extend((0..n).filter(|k| mask >> k & 1 == 1).map(|k| by_id[k]));
            conflict_of(buf)
        })
        .collect();
    Ok(ConflictLattice { n, values })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaReport {
    /// `(j, g(X) − g(X \ {j}))` in ascending id order.
    pub deltas: Vec<(SourceId, f64)>,
    /// Every source attaining the largest delta, ascending.
    pub argmax: Vec<SourceId>,
}

impl DeltaReport {
    pub fn delta(&self, id: SourceId) -> Option<f64> {
        self.deltas.iter().find(|(j, _)| *j == id).map(|(_, d)| *d)
    }
}

/// How much the full-set conflict drops when each source is left out.
pub fn leave_one_out(lat: &ConflictLattice) -> Result<DeltaReport, LatticeError> {
    if lat.n < 2 {
        return Err(LatticeError::TooFewSources(lat.n));
    }
    let full = lat.full_mask();
    let top = lat.values[full as usize];
    let deltas: Vec<(SourceId, f64)> =
        (0..lat.n).map(|k| (SourceId::from_index(k), top - lat.values[(full & !(1 << k)) as usize])).collect();
    let best = deltas.iter().map(|(_, d)| *d).fold(f64::NEG_INFINITY, f64::max);
    let argmax = deltas.iter().filter(|(_, d)| *d >= best - TIE_TOL).map(|(j, _)| *j).collect();
    Ok(DeltaReport { deltas, argmax })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalReport {
    /// The empty set and all singletons are at most `tol`.
    pub minimal_ok: bool,
    pub max_value: f64,
    /// Some subset reaches `1 − tol`.
    pub attains_one: bool,
}

/// Checks the normal-measure boundary conditions: a minimal set valued 0 and
/// whether any set reaches 1.
pub fn check_normal(lat: &ConflictLattice, tol: f64) -> NormalReport {
    let minimal_ok = lat.values[0] <= tol && (0..lat.n).all(|k| lat.values[1 << k] <= tol);
    let max_value = lat.values.iter().copied().fold(0.0, f64::max);
    NormalReport { minimal_ok, max_value, attains_one: max_value >= 1.0 - tol }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub subset: SourceSubset,
    pub superset: SourceSubset,
    pub subset_value: f64,
    pub superset_value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityReport {
    pub is_monotone: bool,
    pub violations: Vec<Violation>,
}

/// Looks for pairs `A ⊂ B` with `g(A) > g(B) + tol`.
///
/// Only covering pairs (`|B| = |A| + 1`) are examined; any violating chain
/// contains a violating covering pair.
pub fn check_monotone(lat: &ConflictLattice, tol: f64) -> MonotonicityReport {
    let mut violations = Vec::new();
    for sup in 1..lat.values.len() as u64 {
        let sup_value = lat.values[sup as usize];
        for k in (0..lat.n).filter(|k| sup >> k & 1 == 1) {
            let sub = sup & !(1 << k);
            let sub_value = lat.values[sub as usize];
            if sub_value > sup_value + tol {
                violations.push(Violation {
                    subset: SourceSubset::from_mask(sub),
                    superset: SourceSubset::from_mask(sup),
                    subset_value: sub_value,
                    superset_value: sup_value,
                });
            }
        }
    }
    MonotonicityReport { is_monotone: violations.is_empty(), violations }
}
