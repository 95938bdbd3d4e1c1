//! Deterministic seed plumbing.
//!
//! Every stochastic component (graph generator, each walk chain) derives its
//! own seed from a single master seed through [`derive_seed`]. The function
//! is fixed, so identical `(master_seed, stream)` pairs reproduce identical
//! results across runs and platforms.

use rand::SeedableRng;

pub type Rng = rand_pcg::Pcg64;

/// SplitMix64 output step.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for an independent stream (walk chain c, generator, ...).
pub fn derive_seed(master_seed: u64, stream: u64) -> u64 {
    splitmix64(master_seed ^ splitmix64(stream.wrapping_add(1)))
}

pub fn rng_from_seed(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}
