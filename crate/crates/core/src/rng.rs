//! The repository-wide pinned randomness source.
//!
//! Every random quantity is drawn from xoshiro256++ (Blackman & Vigna),
//! seeded through SplitMix64 from a 64-bit replica seed. Replica seeds are
//! derived from a master seed with [`mix`], so a replica's stream never
//! depends on scheduling.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 output function (Stafford variant 13).
#[inline]
pub fn fmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives a child seed: `fmix64(a ^ fmix64(b + golden_gamma))`.
#[inline]
pub fn mix(a: u64, b: u64) -> u64 {
    fmix64(a ^ fmix64(b.wrapping_add(GOLDEN_GAMMA)))
}

/// A master seed together with the replica it is specialised to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Seed {
    pub master: u64,
    pub replica: u64,
}

impl Seed {
    pub fn new(master: u64, replica: u64) -> Self {
        Seed { master, replica }
    }

    /// `mix(master, replica)`.
    pub fn replica_seed(&self) -> u64 {
        mix(self.master, self.replica)
    }

    pub fn rng(&self) -> TreeRng {
        TreeRng::from_seed(self.replica_seed())
    }
}

/// Thin wrapper fixing the generator and the integer/float mappings.
#[derive(Clone, Debug)]
pub struct TreeRng(Xoshiro256PlusPlus);

impl TreeRng {
    pub fn from_seed(seed: u64) -> Self {
        TreeRng(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `[0, bound)` by Lemire's multiply-and-reject
    /// method: the high word of `x * bound` is accepted unless the low word
    /// falls below `2^64 mod bound`, which removes all modulo bias.
    #[inline]
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let mut m = (self.next_u64() as u128) * (bound as u128);
        if (m as u64) < bound {
            let threshold = bound.wrapping_neg() % bound;
            while (m as u64) < threshold {
                m = (self.next_u64() as u128) * (bound as u128);
            }
        }
        (m >> 64) as u64
    }

    /// Uniform double in `[0, 1)` with 53 random bits.
    #[inline]
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal deviate by the Box-Muller transform (one of the pair
    /// is discarded so the stream position is easy to reason about).
    pub fn standard_normal(&mut self) -> f64 {
        let u1 = 1.0 - self.unit_f64(); // (0, 1]
        let u2 = self.unit_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }
}
