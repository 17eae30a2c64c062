#![allow(dead_code)]

use chain_core::Algebra;
use plex::{parse_algebra, parse_group};

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

pub fn groups() -> Vec<(&'static str, Algebra)> {
    ["Z", "Q", "Lex(Z, Z)", "Lex(Z, Q)"].into_iter().map(|s| (s, Algebra::group(parse_group(s).unwrap()))).collect()
}

pub fn composites() -> Vec<(&'static str, Algebra)> {
    [("A", A), ("B", B), ("C", C), ("G", G), ("E", E), ("IV", IV), ("III", III)]
        .into_iter()
        .map(|(n, s)| (n, alg(s)))
        .collect()
}

pub fn fixtures() -> Vec<(&'static str, Algebra)> {
    let mut v = groups();
    v.extend(composites());
    v
}

/// Variants whose index-3 subgroups put products on both sides of every
/// split cell.
pub const IV3: &str = "IV(Z, idx 3, Q)";
pub const III3: &str = "III(Q, idx 1, idx 3, Q)";
