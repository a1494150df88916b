//! Seeded, portable randomness.
//!
//! Every trial owns a `ChaCha8` stream keyed by a child seed derived from
//! `(base seed, stream tag, trial index)` with SplitMix64 finalisation.
//! Floats are produced from raw 64-bit words here instead of through a
//! distribution crate, so sample sequences do not change when dependency
//! versions do.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::geometry::{Bounds, Point2};

/// Identifier written into every report.
pub const RNG_ALGORITHM: &str = "chacha8+splitmix64-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// Child seed for one independent, individually re-runnable stream.
    pub fn child(self, tag: u64, index: u64) -> RngSeed {
        let mut h = splitmix64(self.0);
        h = splitmix64(h ^ tag.wrapping_mul(0xA24B_AED4_963E_E407));
        h = splitmix64(h ^ index.wrapping_mul(0x9FB2_1C65_1E98_DF25));
        RngSeed(h)
    }
}

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed(seed)
    }
}

impl std::fmt::Display for RngSeed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-trial generator. Not `Clone`: a stream is never shared.
#[derive(Debug)]
pub struct TrialRng {
    inner: ChaCha8Rng,
}

impl TrialRng {
    pub fn new(seed: RngSeed) -> Self {
        TrialRng {
            inner: ChaCha8Rng::seed_from_u64(seed.0),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`; returns `lo` when the range is empty.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// Uniform index in `0..n`. `n` must be nonzero.
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        // Lemire's multiply-shift; bias is below 2^-32 for any n we use.
        ((self.next_u64() >> 32).wrapping_mul(n as u64) >> 32) as usize
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    pub fn point_in(&mut self, bounds: &Bounds) -> Point2 {
        let x = self.uniform(bounds.min_x, bounds.max_x);
        let y = self.uniform(bounds.min_y, bounds.max_y);
        Point2::new(x, y)
    }
}
