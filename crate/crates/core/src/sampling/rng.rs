use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

/// Name of the generator recorded in batch metadata.
pub const RNG_ALGORITHM: &str = "xoshiro256++";

/// Seeded xoshiro256++ stream.
///
/// Stream `i` of a seed starts `i` jumps of `2^128` steps after stream 0, so
/// streams never overlap in practice.
#[derive(Debug, Clone)]
pub struct RngState {
    seed: u64,
    stream: u64,
    inner: Xoshiro256PlusPlus,
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        RngState { seed, stream: 0, inner: Xoshiro256PlusPlus::seed_from_u64(seed) }
    }

    /// Stream `index` of `seed`.
    pub fn stream(seed: u64, index: u64) -> Self {
        let mut s = Self::new(seed);
        for _ in 0..index {
            s.inner.jump();
        }
        s.stream = index;
        s
    }

    /// Streams `0..count` of `seed`, computed with one jump each.
    pub fn streams(seed: u64, count: usize) -> alloc::vec::Vec<RngState> {
        let mut out = alloc::vec::Vec::with_capacity(count);
        let mut cur = Self::new(seed);
        for i in 0..count {
            if i > 0 {
                cur.inner.jump();
                cur.stream = i as u64;
            }
            out.push(cur.clone());
        }
        out
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_index(&self) -> u64 {
        self.stream
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on the open interval `(0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard exponential.
    pub fn exponential(&mut self) -> f64 {
        -libm::log(self.uniform())
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Uniform integer in `0..n`, `n > 0`, without modulo bias.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let threshold = n.wrapping_neg() % n;
        loop {
            let m = (self.next_u64() as u128) * (n as u128);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let mut a = RngState::new(42);
        let mut b = RngState::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = RngState::new(43);
        assert_ne!(RngState::new(42).next_u64(), c.next_u64());
    }

    #[test]
    fn streams_match_direct_jumps() {
        let all = RngState::streams(9, 4);
        for (i, s) in all.into_iter().enumerate() {
            let mut a = s;
            let mut b = RngState::stream(9, i as u64);
            assert_eq!(a.stream_index(), i as u64);
            assert_eq!(a.next_u64(), b.next_u64());
        }
        assert_ne!(RngState::stream(9, 0).next_u64(), RngState::stream(9, 1).next_u64());
    }

    #[test]
    fn uniform_is_open() {
        let mut r = RngState::new(1);
        for _ in 0..10_000 {
            let u = r.uniform();
            assert!(u > 0.0 && u < 1.0);
        }
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = RngState::new(5);
        let mut hits = [0usize; 3];
        for _ in 0..3000 {
            hits[r.below(3) as usize] += 1;
        }
        assert!(hits.iter().all(|&h| h > 850));
    }
}
