#![allow(dead_code)]

use conflict_measure::{EvidenceSet, Interval};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let u = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    lo + (hi - lo) * u
}

/// `n` intervals with both endpoints uniform in `[0, 100]`.
pub fn random_evidence(rng: &mut ChaCha8Rng, n: usize) -> EvidenceSet {
    EvidenceSet::from_intervals((0..n).map(|_| {
        let (a, b) = (uniform(rng, 0.0, 100.0), uniform(rng, 0.0, 100.0));
        Interval::new(a.min(b), a.max(b)).unwrap()
    }))
    .unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn evidence(pairs: &[(f64, f64)]) -> EvidenceSet {
    EvidenceSet::from_intervals(pairs.iter().map(|&(a, b)| Interval::new(a, b).unwrap())).unwrap()
}
