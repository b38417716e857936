//! Built-in evidence sets and a synthetic multi-sensor drift generator.
//!
//! # Drift generator
//!
//! Sensors `x1..xn` are sampled at timestamps `t = 1, 2, ..., duration`
//! (seconds, 1 Hz). Every reading is
//!
//! ```text
//! baseline + noise_amplitude * (2u - 1) + offset(t)
//! ```
//!
//! where `offset` is non-zero only for the drifting sensor: 0 up to
//! `drift_start`, rising linearly to `drift_magnitude` at `drift_end`, then
//! held. The uniform variate `u` in `[0, 1)` is `(w >> 11) * 2^-53` for the
//! next 64-bit word `w` of a ChaCha8 stream keyed by
//! `ChaCha8Rng::seed_from_u64(seed)` with stream number set to the sensor id.
//! One word is drawn per sample in time order, so a series is reproducible
//! bit-for-bit from `(seed, sensor id)`.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::evidence::{EvidenceSet, Interval, SourceId};
use crate::stream::SensorSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("unknown example {0}; choose 1, 2 or 3")]
    UnknownExample(u32),
    #[error("invalid drift configuration: {0}")]
    InvalidConfig(String),
}

/// The three four-source evidence sets of increasing conflict.
pub fn paper_example(k: u32) -> Result<EvidenceSet, ScenarioError> {
    let bounds: [(f64, f64); 4] = match k {
        1 => [(0., 12.), (0., 4.), (0., 3.), (0., 2.)],
        2 => [(10., 12.), (1., 4.), (1., 3.), (0., 2.)],
        3 => [(10., 12.), (4., 7.), (2., 4.), (0., 2.)],
        _ => return Err(ScenarioError::UnknownExample(k)),
    };
    let intervals = bounds.map(|(lo, hi)| Interval::new(lo, hi).expect("built-in bounds are valid"));
    Ok(EvidenceSet::from_intervals(intervals).expect("four sources"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DriftScenarioConfig {
    pub n_sensors: usize,
    pub duration_samples: usize,
    pub baseline: f64,
    pub noise_amplitude: f64,
    pub drifting_sensor: SourceId,
    /// 1-based sample index where the ramp starts (offset still 0 there).
    pub drift_start: usize,
    /// 1-based sample index where the ramp reaches `drift_magnitude`.
    pub drift_end: usize,
    pub drift_magnitude: f64,
    pub seed: u64,
}

impl Default for DriftScenarioConfig {
    /// Four sensors at 22 ± 0.2 for 90 s; `x1` climbs 8 units over samples 30–70.
    fn default() -> Self {
        DriftScenarioConfig {
            n_sensors: 4,
            duration_samples: 90,
            baseline: 22.0,
            noise_amplitude: 0.2,
            drifting_sensor: SourceId(1),
            drift_start: 30,
            drift_end: 70,
            drift_magnitude: 8.0,
            seed: 42,
        }
    }
}

impl DriftScenarioConfig {
    pub fn validate(&self) -> Result<(), ScenarioError> {
        let bad = |msg: &str| Err(ScenarioError::InvalidConfig(msg.to_string()));
        if self.n_sensors == 0 {
            return bad("need at least one sensor");
        }
        if self.duration_samples == 0 {
            return bad("duration must be at least one sample");
        }
        if self.drifting_sensor.0 == 0 || self.drifting_sensor.index() >= self.n_sensors {
            return bad("drifting sensor must be one of x1..xn");
        }
        if !(self.drift_start < self.drift_end && self.drift_end <= self.duration_samples) {
            return bad("need drift_start < drift_end <= duration");
        }
        if !(self.noise_amplitude.is_finite() && self.noise_amplitude >= 0.0) {
            return bad("noise amplitude must be finite and non-negative");
        }
        if !(self.baseline.is_finite() && self.drift_magnitude.is_finite()) {
            return bad("baseline and drift magnitude must be finite");
        }
        Ok(())
    }

    /// Ramp offset of the drifting sensor at 1-based sample `t`.
    pub fn drift_offset(&self, t: usize) -> f64 {
        if t <= self.drift_start {
            0.0
        } else if t >= self.drift_end {
            self.drift_magnitude
        } else {
            self.drift_magnitude * (t - self.drift_start) as f64 / (self.drift_end - self.drift_start) as f64
        }
    }
}

pub fn gen_drift(cfg: &DriftScenarioConfig) -> Result<SensorSeries, ScenarioError> {
    cfg.validate()?;
    let timestamps: Vec<f64> = (1..=cfg.duration_samples).map(|t| t as f64).collect();
    let ids: Vec<SourceId> = (0..cfg.n_sensors).map(SourceId::from_index).collect();
    let readings = ids
        .iter()
        .map(|&id| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(u64::from(id.0));
            (1..=cfg.duration_samples)
                .map(|t| {
                    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                    let offset = if id == cfg.drifting_sensor { cfg.drift_offset(t) } else { 0.0 };
                    cfg.baseline + cfg.noise_amplitude * (2.0 * u - 1.0) + offset
                })
                .collect()
        })
        .collect();
    Ok(SensorSeries::new(timestamps, ids, readings).expect("generator output is rectangular and finite"))
}
