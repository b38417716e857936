//! Sliding-window conflict over multi-sensor time series.
//!
//! Each window turns every sensor's readings into the interval
//! `[min, max]` over the window; the conflict of the chosen subset is then
//! evaluated per window and labelled with the timestamp of the window's last
//! sample.

use thiserror::Error;

use crate::conflict::conflict;
use crate::evidence::{validate_evidence, EvidenceSet, SourceId};
use crate::subset::SourceSubset;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StreamError {
    #[error("series has no samples")]
    EmptySeries,
    #[error("timestamps must be strictly increasing (sample {index})")]
    NonIncreasingTime { index: usize },
    #[error("sensor {sensor} has {got} readings, expected {expected}")]
    RaggedSeries { sensor: SourceId, got: usize, expected: usize },
    #[error("non-finite value for sensor {sensor} at sample {index}")]
    NonFiniteValue { sensor: SourceId, index: usize },
    #[error("sensor ids must be exactly 1..=n without repeats")]
    InvalidSourceIds,
    #[error("window of {window} samples exceeds the series length {len}")]
    WindowTooLong { window: usize, len: usize },
    #[error("window length and stride must both be at least 1")]
    InvalidWindow,
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset names {0}, which is not in the series")]
    UnknownSourceInSubset(SourceId),
}

/// Rectangular, gap-free readings from `n` sensors on a shared time axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SensorSeries {
    timestamps: Vec<f64>,
    source_ids: Vec<SourceId>,
    readings: Vec<Vec<f64>>,
}

impl SensorSeries {
    /// `readings[k]` holds the samples of `source_ids[k]`.
    pub fn new(timestamps: Vec<f64>, source_ids: Vec<SourceId>, readings: Vec<Vec<f64>>) -> Result<Self, StreamError> {
        if timestamps.is_empty() {
            return Err(StreamError::EmptySeries);
        }
        if let Some(index) = timestamps.iter().position(|t| !t.is_finite()) {
            return Err(StreamError::NonIncreasingTime { index });
        }
        if let Some(w) = timestamps.windows(2).position(|w| w[0] >= w[1]) {
            return Err(StreamError::NonIncreasingTime { index: w + 1 });
        }
        let n = source_ids.len();
        let mut seen = vec![false; n];
        for id in &source_ids {
            match seen.get_mut(id.index()) {
                Some(s) if !*s => *s = true,
                _ => return Err(StreamError::InvalidSourceIds),
            }
        }
        if n == 0 || readings.len() != n {
            return Err(StreamError::InvalidSourceIds);
        }
        for (&source, column) in source_ids.iter().zip(&readings) {
            if column.len() != timestamps.len() {
                return Err(StreamError::RaggedSeries {
                    sensor: source,
                    got: column.len(),
                    expected: timestamps.len(),
                });
            }
            if let Some(index) = column.iter().position(|v| !v.is_finite()) {
                return Err(StreamError::NonFiniteValue { sensor: source, index });
            }
        }
        Ok(SensorSeries { timestamps, source_ids, readings })
    }

    pub fn len(&self) -> usize {
        self.timestamps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.timestamps.is_empty()
    }

    pub fn timestamps(&self) -> &[f64] {
        &self.timestamps
    }

    /// Sensor ids in column order.
    pub fn source_ids(&self) -> &[SourceId] {
        &self.source_ids
    }

    pub fn readings(&self, id: SourceId) -> Option<&[f64]> {
        self.source_ids.iter().position(|&s| s == id).map(|k| self.readings[k].as_slice())
    }

    /// Keeps only the sensors in `sub`, relabelled `x1..xk` in ascending
    /// original-id order.
    pub fn restrict(&self, sub: &SourceSubset) -> Result<SensorSeries, StreamError> {
        if sub.is_empty() {
            return Err(StreamError::EmptySubset);
        }
        let readings = sub
            .members()
            .iter()
            .map(|&id| self.readings(id).map(<[f64]>::to_vec).ok_or(StreamError::UnknownSourceInSubset(id)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SensorSeries {
            timestamps: self.timestamps.clone(),
            source_ids: (0..sub.len()).map(SourceId::from_index).collect(),
            readings,
        })
    }

    /// Adds `c` to every reading.
    pub fn shifted(&self, c: f64) -> SensorSeries {
        SensorSeries {
            readings: self.readings.iter().map(|col| col.iter().map(|v| v + c).collect()).collect(),
            ..self.clone()
        }
    }

    /// Median spacing between consecutive timestamps; `None` for one sample.
    pub fn median_interval(&self) -> Option<f64> {
        let mut gaps: Vec<f64> = self.timestamps.windows(2).map(|w| w[1] - w[0]).collect();
        if gaps.is_empty() {
            return None;
        }
        gaps.sort_by(f64::total_cmp);
        let mid = gaps.len() / 2;
        Some(if gaps.len().is_multiple_of(2) { (gaps[mid - 1] + gaps[mid]) / 2.0 } else { gaps[mid] })
    }
}

/// Window length and stride in samples, plus the subset to evaluate.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowConfig {
    pub window_len: usize,
    pub stride: usize,
    pub subset: SourceSubset,
}

impl WindowConfig {
    /// Stride 1.
    pub fn new(window_len: usize, subset: SourceSubset) -> Self {
        WindowConfig { window_len, stride: 1, subset }
    }

    pub fn with_stride(mut self, stride: usize) -> Self {
        self.stride = stride;
        self
    }

    /// Number of windows over `len` samples.
    pub fn window_count(&self, len: usize) -> usize {
        if self.window_len == 0 || self.stride == 0 || self.window_len > len {
            0
        } else {
            (len - self.window_len) / self.stride + 1
        }
    }

    fn check(&self, series: &SensorSeries) -> Result<(), StreamError> {
        if series.is_empty() {
            return Err(StreamError::EmptySeries);
        }
        if self.window_len == 0 || self.stride == 0 {
            return Err(StreamError::InvalidWindow);
        }
        if self.window_len > series.len() {
            return Err(StreamError::WindowTooLong { window: self.window_len, len: series.len() });
        }
        Ok(())
    }
}

/// Iterator over `(end_time, evidence)` for each window position.
pub struct Windows<'a> {
    series: &'a SensorSeries,
    window_len: usize,
    stride: usize,
    start: usize,
}

impl Iterator for Windows<'_> {
    type Item = (f64, EvidenceSet);

    fn next(&mut self) -> Option<Self::Item> {
        let end = self.start + self.window_len;
        if end > self.series.len() {
            return None;
        }
        let raw: Vec<(u32, f64, f64)> = self
            .series
            .source_ids
            .iter()
            .zip(&self.series.readings)
            .map(|(id, col)| {
                let w = &col[self.start..end];
                let lo = w.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                (id.0, lo, hi)
            })
            .collect();
        let ev = validate_evidence(&raw).expect("validated series yields valid windows");
        let t = self.series.timestamps[end - 1];
        self.start += self.stride;
        Some((t, ev))
    }
}

/// Converts each window into interval evidence over all sensors.
pub fn windows<'a>(series: &'a SensorSeries, cfg: &WindowConfig) -> Result<Windows<'a>, StreamError> {
    cfg.check(series)?;
    Ok(Windows { series, window_len: cfg.window_len, stride: cfg.stride, start: 0 })
}

/// Conflict of `cfg.subset` per window, labelled by window end time.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConflictSeries {
    pub points: Vec<(f64, f64)>,
}

impl ConflictSeries {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.1)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn conflict_series(series: &SensorSeries, cfg: &WindowConfig) -> Result<ConflictSeries, StreamError> {
    if cfg.subset.is_empty() {
        return Err(StreamError::EmptySubset);
    }
    if let Some(&id) = cfg.subset.members().iter().find(|&&id| series.readings(id).is_none()) {
        return Err(StreamError::UnknownSourceInSubset(id));
    }
    let points = windows(series, cfg)?
        .map(|(t, ev)| {
            let cf = conflict(&ev, &cfg.subset).expect("subset members checked against the series");
            (t, cf)
        })
        .collect();
    Ok(ConflictSeries { points })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub mean: f64,
    /// Population variance.
    pub variance: f64,
    pub max: f64,
    /// Earliest time at which `max` is attained.
    pub argmax_time: f64,
}

pub fn summarize(cs: &ConflictSeries) -> Result<Summary, StreamError> {
    let (&(t0, v0), rest) = cs.points.split_first().ok_or(StreamError::EmptySeries)?;
    let n = cs.points.len() as f64;
    let mean = cs.values().sum::<f64>() / n;
    let variance = cs.values().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let (argmax_time, max) = rest.iter().fold((t0, v0), |best, &(t, v)| if v > best.1 { (t, v) } else { best });
    Ok(Summary { mean, variance, max, argmax_time })
}
