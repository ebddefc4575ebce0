//! Deterministic random-number plumbing.
//!
//! Every stochastic component in this crate draws from a ChaCha8 stream
//! keyed through `seed_from_u64`, so a 64-bit seed reproduces bit-identical
//! results on any platform. Distinct streams (one per annealing trial, one
//! per generated instance) are derived with the SplitMix64 finalizer via
//! [`mix_seed`].

pub use rand_chacha::rand_core::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator used throughout the crate.
pub type Rng = ChaCha8Rng;

/// Seed a fresh deterministic generator.
pub fn new_rng(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}

/// SplitMix64 finalizer (Steele, Lea, Flood's mixing constants).
fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive the seed for one annealing trial from the experiment seed, the
/// index of the penalty weight in the configured list, and the trial index:
///
/// `splitmix64(splitmix64(splitmix64(seed) ^ alpha_index) ^ trial_index)`
///
/// Appending another weight to the list leaves every existing stream
/// untouched.
pub fn mix_seed(seed: u64, alpha_index: u64, trial_index: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(seed) ^ alpha_index) ^ trial_index)
}

/// Uniform double in `[0, 1)` from the top 53 bits of one output word.
pub fn uniform_f64(rng: &mut Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Standard normal variates by the Marsaglia polar method.
///
/// Pairs `(u, v)` are drawn uniformly on `(-1, 1)²` and rejected unless
/// `0 < s = u² + v² < 1`; the accepted pair yields two variates
/// `u·sqrt(-2 ln s / s)` and `v·sqrt(-2 ln s / s)`, returned in that order.
pub struct NormalSource {
    rng: Rng,
    spare: Option<f64>,
}

impl NormalSource {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: new_rng(seed),
            spare: None,
        }
    }

    pub fn next_normal(&mut self) -> f64 {
        if let Some(v) = self.spare.take() {
            return v;
        }
        loop {
            let u = 2.0 * uniform_f64(&mut self.rng) - 1.0;
            let v = 2.0 * uniform_f64(&mut self.rng) - 1.0;
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                let scale = (-2.0 * s.ln() / s).sqrt();
                self.spare = Some(v * scale);
                return u * scale;
            }
        }
    }
}

#[cfg(test)]
pub(crate) fn test_rng(seed: u64) -> Rng {
    new_rng(seed)
}
