#![allow(dead_code)]

use chain_core::{parse_elem, Algebra, Bounds, Chain, Elem};
use plex::parse_algebra;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const A: &str = "II(Z, Q)";
pub const B: &str = "I(Q, idx 1, Q)";
pub const C: &str = "SLII(Z, Q, prodH(full, triv))";
pub const G: &str = "SLII(Z, Q, graphH(1/2))";
pub const E: &str = "I(II(Z, Q), full, Q)";
pub const IV: &str = "IV(Z, idx 2, Q)";
pub const III: &str = "III(Q, idx 1, idx 2, Q)";

pub fn alg(s: &str) -> Algebra {
    parse_algebra(s).unwrap()
}

pub fn el(a: &Algebra, s: &str) -> Elem {
    parse_elem(a, s).unwrap()
}

pub fn composites() -> Vec<(&'static str, Algebra)> {
    [("A", A), ("B", B), ("C", C), ("G", G), ("E", E), ("IV", IV), ("III", III)]
        .into_iter()
        .map(|(n, s)| (n, alg(s)))
        .collect()
}

pub fn samples<C: Chain>(a: &C, n: usize, seed: u64) -> Vec<C::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = Bounds::default();
    (0..n).map(|_| a.sample(&mut rng, &b)).collect()
}
