//! Deterministic counter-keyed random streams.
//!
//! Every stochastic step of a run draws from a stream derived from the run
//! seed plus a logical coordinate (generation, phase, slot). Streams never
//! depend on which worker thread happens to execute a slot, which is what
//! makes runs bit-identical across thread counts. The generator is
//! splitmix64: fast, platform-stable, statistically solid for simulation
//! work. Not suitable for secrets.

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// splitmix64 finalizer.
#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// One independent random stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreamRng {
    state: u64,
}

impl StreamRng {
    /// Stream derived from a bare seed.
    pub fn new(seed: u64) -> Self {
        Self::keyed(seed, &[])
    }

    /// Stream keyed by a seed and a list of logical coordinates.
    ///
    /// Distinct coordinate lists give decorrelated streams for the same seed.
    pub fn keyed(seed: u64, coords: &[u64]) -> Self {
        let mut state = mix(seed ^ GOLDEN);
        for &c in coords {
            state = mix(state.wrapping_add(GOLDEN) ^ c);
        }
        StreamRng { state }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[0, n)` without modulo bias.
    #[inline]
    pub fn next_below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        // Reject the low sliver so every residue is equally likely.
        let threshold = n.wrapping_neg() % n;
        loop {
            let v = self.next_u64();
            if v >= threshold {
                return v % n;
            }
        }
    }

    /// Bernoulli draw with success probability `p`.
    #[inline]
    pub fn next_bool(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Fair coin.
    #[inline]
    pub fn next_bit(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_key_same_sequence() {
        let mut a = StreamRng::keyed(7, &[1, 2, 3]);
        let mut b = StreamRng::keyed(7, &[1, 2, 3]);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn distinct_keys_decorrelate() {
        let mut a = StreamRng::keyed(7, &[1, 2, 3]);
        let mut b = StreamRng::keyed(7, &[1, 2, 4]);
        let mut c = StreamRng::keyed(8, &[1, 2, 3]);
        let equal_ab = (0..64).filter(|_| a.next_u64() == b.next_u64()).count();
        let equal_ac = (0..64).filter(|_| a.next_u64() == c.next_u64()).count();
        assert_eq!(equal_ab, 0);
        assert_eq!(equal_ac, 0);
    }

    #[test]
    fn f64_in_unit_interval() {
        let mut rng = StreamRng::new(42);
        for _ in 0..10_000 {
            let v = rng.next_f64();
            assert!((0.0..1.0).contains(&v));
        }
    }

    #[test]
    fn below_is_bounded_and_roughly_uniform() {
        let mut rng = StreamRng::new(1);
        let mut counts = [0u32; 7];
        for _ in 0..70_000 {
            counts[rng.next_below(7) as usize] += 1;
        }
        for &c in &counts {
            // 10_000 expected per bucket; 5 sigma is about +-500.
            assert!((9_500..=10_500).contains(&c), "bucket count {c}");
        }
    }

    #[test]
    fn coin_is_fair() {
        let mut rng = StreamRng::new(3);
        let ones = (0..100_000).filter(|_| rng.next_bit()).count();
        assert!((49_000..=51_000).contains(&ones), "ones {ones}");
    }
}
