//! Deterministic, platform-independent randomness derived by hashing.
//!
//! Every random decision in this crate is a pure function of a `u64` seed and
//! an index path, so trials parallelize freely and identical inputs reproduce
//! identical outputs bit for bit. The mixer is the splitmix64 finalizer.

#[inline]
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive a child seed from a parent seed and one index.
#[inline]
pub fn derive(seed: u64, index: u64) -> u64 {
    mix(mix(seed) ^ index.wrapping_mul(0xa076_1d64_78bd_642f))
}

/// Derive a child seed from a parent seed and two indices.
#[inline]
pub fn derive2(seed: u64, a: u64, b: u64) -> u64 {
    derive(derive(seed, a), b)
}

/// Uniform draw in `[0, 1)` from a seed/index pair, with 53-bit resolution.
#[inline]
pub fn unit_f64(seed: u64, index: u64) -> f64 {
    (derive(seed, index) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Small deterministic stream generator for consumers that need a sequence of
/// draws rather than indexed access.
#[derive(Clone, Debug)]
pub struct Stream {
    state: u64,
}

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream { state: mix(seed) }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        mix(self.state)
    }

    /// Uniform index in `0..bound` (`bound > 0`), by 128-bit multiply; the
    /// bias is below 2^-48 for every bound used in this crate.
    #[inline]
    pub fn next_index(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}
