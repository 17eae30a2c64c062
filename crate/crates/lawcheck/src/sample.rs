use chain_core::{Bounds, Chain};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded element stream. The same seed and bounds give the same sequence
/// for the same algebra.
#[derive(Debug, Clone)]
pub struct SampleStream {
    rng: ChaCha8Rng,
    bounds: Bounds,
}

impl SampleStream {
    pub fn new(seed: u64) -> SampleStream {
        SampleStream::with_bounds(seed, Bounds::default())
    }

    pub fn with_bounds(seed: u64, bounds: Bounds) -> SampleStream {
        SampleStream { rng: ChaCha8Rng::seed_from_u64(seed), bounds }
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn next<C: Chain>(&mut self, a: &C) -> C::Elem {
        a.sample(&mut self.rng, &self.bounds)
    }

    pub fn take<C: Chain>(&mut self, a: &C, n: usize) -> Vec<C::Elem> {
        (0..n).map(|_| self.next(a)).collect()
    }

    /// A uniformly chosen entry of a nonempty slice.
    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.rng.gen_range(0..xs.len())]
    }

    /// True with probability `1/n`.
    pub fn one_in(&mut self, n: u32) -> bool {
        self.rng.gen_ratio(1, n)
    }
}
