//! Deterministic per-trial random streams.
//!
//! Every trial draws from its own ChaCha stream keyed by (master seed, trial
//! index), so results do not depend on scheduling or worker count. The same
//! derivation serves the experiment layer for per-row seeds.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Derives an independent 64-bit sub-seed from a master seed and a stream
/// label (trial index, sweep row, bootstrap pass, ...).
pub fn derive_seed(master_seed: u64, stream: u64) -> u64 {
    let mut state = master_seed;
    let key = splitmix64(&mut state);
    let mut mixed = key ^ stream.wrapping_mul(0xD1B54A32D192ED03);
    splitmix64(&mut mixed)
}

/// RNG for one trial. A pure function of its arguments.
pub fn trial_rng(master_seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut state = derive_seed(master_seed, trial_index);
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(seed)
}
