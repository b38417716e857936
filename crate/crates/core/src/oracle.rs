//! Brute-force grid approximation of the conflict measure.
//!
//! Slices the subset span uniformly and counts, at each slice midpoint, how
//! many sources contain it. No partition or endpoint sorting is involved, so
//! this serves as an independent check on [`crate::conflict`].

use crate::evidence::EvidenceSet;
use crate::subset::{SourceSubset, SubsetError};

pub fn grid_oracle(ev: &EvidenceSet, sub: &SourceSubset, cells: usize) -> Result<f64, SubsetError> {
    match sub.len() {
        0 => return Err(SubsetError::EmptySubset),
        1 => return Err(SubsetError::SingletonSubset),
        _ => {}
    }
    let intervals = sub.intervals(ev)?;
    let lo = intervals.iter().map(|iv| iv.lo()).fold(f64::INFINITY, f64::min);
    let hi = intervals.iter().map(|iv| iv.hi()).fold(f64::NEG_INFINITY, f64::max);
    let span = hi - lo;
    let cells = cells.max(1);
    if span <= 0.0 {
        return Ok(0.0);
    }

    let i = intervals.len();
    let bounds: Vec<(f64, f64)> = intervals.iter().map(|iv| (iv.lo(), iv.hi())).collect();
    let width = span / cells as f64;
    // Uniform slices: accumulate uncovered counts and scale once at the end.
    let mut uncovered: u64 = 0;
    for k in 0..cells {
        let mid = lo + (k as f64 + 0.5) * width;
        let covering = bounds.iter().filter(|&&(a, b)| a <= mid && mid <= b).count();
        uncovered += (i - covering) as u64;
    }
    Ok(uncovered as f64 * width / i as f64 / span)
}
