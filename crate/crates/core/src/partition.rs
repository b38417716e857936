//! Endpoint-induced partition of a subset's span into cells with overlap counts.

use crate::evidence::{EvidenceSet, Interval};
use crate::subset::{SourceSubset, SubsetError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionCell {
    pub lo: f64,
    pub hi: f64,
    /// Number of subset sources whose closed interval contains `[lo, hi]`.
    pub overlap_count: usize,
}

impl PartitionCell {
    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Contiguous positive-length cells covering `[span_lo, span_hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    cells: Vec<PartitionCell>,
    span_lo: f64,
    span_hi: f64,
    sources: usize,
}

impl Partition {
    /// Partitions the span of `intervals` at their endpoints.
    ///
    /// Returns `None` for an empty slice.
    pub fn of_intervals(intervals: &[Interval]) -> Option<Self> {
        Self::with_cuts(intervals, std::iter::empty())
    }

    /// Like [`of_intervals`](Self::of_intervals) but also splits at every cut
    /// point strictly inside the span. Cuts outside the span are ignored.
    pub fn with_cuts(intervals: &[Interval], cuts: impl IntoIterator<Item = f64>) -> Option<Self> {
        let span_lo = intervals.iter().map(Interval::lo).min_by(f64::total_cmp)?;
        let span_hi = intervals.iter().map(Interval::hi).max_by(f64::total_cmp)?;

        let mut bounds: Vec<f64> = intervals
            .iter()
            .flat_map(|iv| [iv.lo(), iv.hi()])
            .chain(cuts.into_iter().filter(|c| c.is_finite() && span_lo < *c && *c < span_hi))
            .collect();
        bounds.sort_by(f64::total_cmp);
        bounds.dedup();

        let mut los: Vec<f64> = intervals.iter().map(Interval::lo).collect();
        let mut his: Vec<f64> = intervals.iter().map(Interval::hi).collect();
        los.sort_by(f64::total_cmp);
        his.sort_by(f64::total_cmp);

        // Every endpoint is a bound, so no endpoint lies strictly inside a cell
        // [a, b]: a source covers it iff lo <= a and hi > a.
        let (mut started, mut ended) = (0usize, 0usize);
        let cells = bounds
            .windows(2)
            .map(|w| {
                let (a, b) = (w[0], w[1]);
                while started < los.len() && los[started] <= a {
                    started += 1;
                }
                while ended < his.len() && his[ended] <= a {
                    ended += 1;
                }
                PartitionCell { lo: a, hi: b, overlap_count: started - ended }
            })
            .collect();

        Some(Partition { cells, span_lo, span_hi, sources: intervals.len() })
    }

    pub fn cells(&self) -> &[PartitionCell] {
        &self.cells
    }

    pub fn span(&self) -> (f64, f64) {
        (self.span_lo, self.span_hi)
    }

    pub fn span_len(&self) -> f64 {
        self.span_hi - self.span_lo
    }

    /// Subset size `i` the counts refer to.
    pub fn sources(&self) -> usize {
        self.sources
    }

    /// `Σ |cell| · (i − O(cell)) / i`.
    pub fn weighted_uncovered_length(&self) -> f64 {
        let i = self.sources as f64;
        let total: f64 = self.cells.iter().map(|c| c.len() * (self.sources - c.overlap_count) as f64).sum();
        total / i
    }
}

/// Partition of the span of `sub`, built from the subset's own endpoints.
pub fn induced_partition(ev: &EvidenceSet, sub: &SourceSubset) -> Result<Partition, SubsetError> {
    let intervals = sub.intervals(ev)?;
    Partition::of_intervals(&intervals).ok_or(SubsetError::EmptySubset)
}

/// Partition of the span of `sub` using the endpoints of every source in `ev`
/// (clipped to the subset span), with overlap counts taken over `sub` only.
pub fn induced_partition_all_endpoints(ev: &EvidenceSet, sub: &SourceSubset) -> Result<Partition, SubsetError> {
    let intervals = sub.intervals(ev)?;
    let cuts = ev.sources().iter().flat_map(|(_, iv)| [iv.lo(), iv.hi()]);
    Partition::with_cuts(&intervals, cuts).ok_or(SubsetError::EmptySubset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evidence::SourceId;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    fn shape(p: &Partition) -> Vec<(f64, f64, usize)> {
        p.cells().iter().map(|c| (c.lo, c.hi, c.overlap_count)).collect()
    }

    #[test]
    fn example_one_first_three_sources() {
        let ev = EvidenceSet::from_intervals([iv(0., 12.), iv(0., 4.), iv(0., 3.), iv(0., 2.)]).unwrap();
        let sub = SourceSubset::new([SourceId(1), SourceId(2), SourceId(3)]);
        let p = induced_partition(&ev, &sub).unwrap();
        assert_eq!(shape(&p), vec![(0., 3., 3), (3., 4., 2), (4., 12., 1)]);
        assert_eq!(p.span(), (0., 12.));
    }

    #[test]
    fn single_source_is_one_cell() {
        let p = Partition::of_intervals(&[iv(2., 7.)]).unwrap();
        assert_eq!(shape(&p), vec![(2., 7., 1)]);
    }

    #[test]
    fn disjoint_pair_has_zero_gap_cell() {
        let p = Partition::of_intervals(&[iv(0., 2.), iv(4., 6.)]).unwrap();
        assert_eq!(shape(&p), vec![(0., 2., 1), (2., 4., 0), (4., 6., 1)]);
    }

    #[test]
    fn touching_intervals_do_not_share_a_cell() {
        let p = Partition::of_intervals(&[iv(2., 4.), iv(4., 7.)]).unwrap();
        assert_eq!(shape(&p), vec![(2., 4., 1), (4., 7., 1)]);
    }

    #[test]
    fn point_intervals_cover_nothing() {
        let p = Partition::of_intervals(&[iv(0., 4.), iv(2., 2.), iv(4., 4.)]).unwrap();
        assert_eq!(shape(&p), vec![(0., 2., 1), (2., 4., 1)]);
        let all_points = Partition::of_intervals(&[iv(3., 3.), iv(3., 3.)]).unwrap();
        assert!(all_points.cells().is_empty());
        assert_eq!(all_points.span_len(), 0.0);
    }

    #[test]
    fn cuts_split_cells_without_changing_counts() {
        let p = Partition::with_cuts(&[iv(0., 2.), iv(1., 3.)], [0.5, 2.5, -1.0, 9.0]).unwrap();
        assert_eq!(shape(&p), vec![(0., 0.5, 1), (0.5, 1., 1), (1., 2., 2), (2., 2.5, 1), (2.5, 3., 1)]);
    }

    #[test]
    fn empty_subset_is_an_error() {
        let ev = EvidenceSet::from_intervals([iv(0., 1.)]).unwrap();
        assert_eq!(induced_partition(&ev, &SourceSubset::empty()), Err(SubsetError::EmptySubset));
    }
}
