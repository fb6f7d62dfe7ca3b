//! Deterministic, splittable random streams.
//!
//! Every random quantity in a run is drawn from a ChaCha8 stream addressed by
//! `(scenario seed, purpose, function id, slot, index)`. The construction is
//! fully specified so that a port in another language can reproduce the same
//! streams bit for bit:
//!
//! * the 64-bit scenario seed is expanded to a 32-byte ChaCha key with four
//!   rounds of SplitMix64 (output words little-endian);
//! * the 64-bit ChaCha stream number packs the address as
//!   `purpose << 56 | function << 40 | slot << 24 | index`;
//! * uniform doubles are `((x >> 11) + 0.5) * 2^-53` from the next `u64`,
//!   which lands strictly inside (0, 1);
//! * exponential variates use inversion, `-ln(u) / rate`.
//!
//! Arrival generation owns one stream per `(function, slot)`, so editing the
//! rate of one slot can never perturb the draws of another. Service times are
//! keyed per event (`function`, arrival slot, index within slot), which makes
//! the full randomness of an event a pure function of its identity.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Stream family selector, the top byte of the stream address.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Purpose {
    /// Poisson arrival gaps, one stream per (function, slot).
    Arrival = 1,
    /// Function service draws, one stream per event.
    FunctionService = 2,
    /// Gateway service draws, one stream per event.
    GatewayService = 3,
}

/// Largest function id / slot index addressable by the stream layout.
pub const MAX_STREAM_ID: u32 = (1 << 16) - 1;
/// Largest per-slot event index addressable by the stream layout.
pub const MAX_STREAM_INDEX: u32 = (1 << 24) - 1;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn expand_key(seed: u64) -> [u8; 32] {
    let mut state = seed;
    let mut key = [0u8; 32];
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    key
}

/// Opens the stream addressed by `(purpose, function, slot, index)`.
///
/// Panics if an address component exceeds the layout limits; scenario
/// validation keeps real configurations well inside them.
pub fn substream(seed: u64, purpose: Purpose, function: u32, slot: u32, index: u32) -> ChaCha8Rng {
    assert!(function <= MAX_STREAM_ID, "function id exceeds stream layout");
    assert!(slot <= MAX_STREAM_ID, "slot index exceeds stream layout");
    assert!(index <= MAX_STREAM_INDEX, "event index exceeds stream layout");
    let stream = ((purpose as u64) << 56)
        | (u64::from(function) << 40)
        | (u64::from(slot) << 24)
        | u64::from(index);
    let mut rng = ChaCha8Rng::from_seed(expand_key(seed));
    rng.set_stream(stream);
    rng
}

/// Uniform draw strictly inside (0, 1).
pub fn u01(rng: &mut impl RngCore) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

/// Exponential variate with the given rate, strictly positive.
///
/// Returns `f64::INFINITY` for rate 0 (a zero-rate process never fires).
pub fn exp(rng: &mut impl RngCore, rate: f64) -> f64 {
    if rate <= 0.0 {
        return f64::INFINITY;
    }
    -u01(rng).ln() / rate
}
