mod common;

use std::collections::BTreeMap;

use chain_core::{Algebra, Chain, Elem, Monoid};
use common::*;
use decompose::{group_representation, rebuild, Embedding, LexTarget, RepTree};
use loag::GroupDesc;

fn rep_text(s: &str) -> String {
    group_representation(&alg(s)).unwrap().to_string()
}

#[test]
fn expected_block_sequences() {
    assert_eq!(rep_text(A), "base: Z\nlevel 2: iota=II Z=gr G=Q H=fullH");
    assert_eq!(rep_text(B), "base: Q\nlevel 2: iota=I Z=idx 1 G=Q H=fullH");
    assert_eq!(rep_text(C), "base: Z\nlevel 2: iota=II Z=gr G=1 H=fullH");
    assert_eq!(rep_text(G), "base: Z\nlevel 2: iota=II Z=gr G=1 H=fullH");
    assert_eq!(rep_text(E), "base: Z\nlevel 2: iota=II Z=gr G=Q H=fullH\nlevel 3: iota=I Z=full G=Q H=fullH");
    assert_eq!(rep_text(IV), "base: Z\nlevel 2: iota=II Z=gr G=Q H=prodH(idx 2, full)");
    assert_eq!(rep_text(III), "base: Q\nlevel 2: iota=I Z=idx 1 G=Q H=prodH(idx 2, full)");
    assert_eq!(rep_text("II(Z, Z)"), "base: Z\nlevel 2: iota=II Z=gr G=Q H=prodH(full, idx 1)");
}

#[test]
fn group_leaves_are_indecomposable() {
    for g in [GroupDesc::Int, GroupDesc::Rat, plex::parse_group("Lex(Z, Q)").unwrap()] {
        let t = group_representation(&Algebra::group(g.clone())).unwrap();
        assert!(t.levels.is_empty());
        assert_eq!(t.base, g);
        assert_eq!(rebuild(&t).unwrap(), Algebra::group(g));
    }
}

#[test]
fn text_round_trip() {
    for (name, a) in composites() {
        let t = group_representation(&a).unwrap();
        let back: RepTree = t.to_string().parse().unwrap();
        assert_eq!(back, t, "{name}");
        assert_eq!(back.to_string(), t.to_string());
        assert_eq!(t.group_count(), a.positive_idempotents().len());
    }
    let t = RepTree::parse("base: Q\nlevel 2: iota=I Z=(idx 2) G=Lex(Q, 1) H=prodH(full, (full, triv))").unwrap();
    assert_eq!(RepTree::parse(&t.to_string()).unwrap(), t);
    let err = RepTree::parse("base: Z\nlevel 3: iota=II Z=gr G=Q H=fullH").unwrap_err();
    assert_eq!((err.line, err.col), (2, 7));
    assert!(RepTree::parse("base: Z\nlevel 2: iota=III Z=gr G=Q H=fullH").is_err());
}

#[test]
fn idempotent_counts_drop_by_one_per_level() {
    for (name, a) in composites() {
        let t = group_representation(&a).unwrap();
        let mut prefix = t.clone();
        let mut counts = Vec::new();
        loop {
            counts.push(rebuild(&prefix).unwrap().positive_idempotents().len());
            if prefix.levels.pop().is_none() {
                break;
            }
        }
        let want: Vec<usize> = (1..=t.group_count()).rev().collect();
        assert_eq!(counts, want, "{name}");
    }
}

/// Checks `f` is an injective, order-preserving monoid map that also
/// preserves complements, on the given elements.
fn check_embedding(name: &str, a: &Algebra, r: &Algebra, xs: &[Elem], f: &dyn Fn(&Elem) -> Elem) {
    let mut seen: BTreeMap<Elem, Elem> = BTreeMap::new();
    assert_eq!(f(&a.unit()), r.unit(), "{name}: unit");
    for w in xs.windows(2) {
        let (x, y) = (&w[0], &w[1]);
        let (fx, fy) = (f(x), f(y));
        assert!(r.is_valid(&fx), "{name}: image {fx} of {x} invalid");
        assert_eq!(f(&a.mul(x, y)), r.mul(&fx, &fy), "{name}: product {x} {y}");
        assert_eq!(f(&a.comp(x)), r.comp(&fx), "{name}: complement {x}");
        assert_eq!(x.cmp(y), fx.cmp(&fy), "{name}: order {x} {y}");
        if let Some(prev) = seen.insert(fx.clone(), x.clone()) {
            assert_eq!(&prev, x, "{name}: {x} and {prev} collide");
        }
    }
}

#[test]
fn alpha_embeds_into_the_rebuilt_algebra() {
    for (name, a) in composites() {
        let t = group_representation(&a).unwrap();
        let r = rebuild(&t).unwrap();
        let emb = Embedding::new(&a).unwrap();
        let xs = samples(&a, 1200, 0xa1fa);
        check_embedding(name, &a, &r, &xs, &|x| emb.apply(x).unwrap());
    }
}

#[test]
fn alpha_examples() {
    let a = alg(A);
    let emb = Embedding::new(&a).unwrap();
    let r = rebuild(&group_representation(&a).unwrap()).unwrap();
    assert_eq!(emb.apply(&el(&a, "(3, 5/2)")).unwrap(), el(&r, "(3, 5/2)"));
    assert_eq!(emb.apply(&el(&a, "(3, T)")).unwrap(), el(&r, "(3, T)"));
    let g = alg(G);
    let emb = Embedding::new(&g).unwrap();
    let r = rebuild(&group_representation(&g).unwrap()).unwrap();
    assert_eq!(emb.apply(&el(&g, "(4, 2)")).unwrap(), el(&r, "(4, 0)"));
    assert!(emb.apply(&Elem::mid(Elem::ints(&[4]), Elem::ints(&[1]))).is_err());
}

#[test]
fn lex_embedding_is_a_monoid_order_embedding() {
    for (name, a) in composites() {
        let t = group_representation(&a).unwrap();
        let target = LexTarget::new(&t);
        let emb = Embedding::new(&a).unwrap();
        let f = |x: &Elem| target.flatten(&emb.apply(x).unwrap());
        assert_eq!(f(&a.unit()), target.unit(), "{name}");
        let xs = samples(&a, 1000, 0x1e);
        for w in xs.windows(2) {
            let (x, y) = (&w[0], &w[1]);
            assert_eq!(f(&a.mul(x, y)), target.mul(&f(x), &f(y)), "{name}: {x} {y}");
            assert_eq!(x.cmp(y), f(x).cmp(&f(y)), "{name}: {x} {y}");
        }
    }
    assert_eq!(LexTarget::new(&group_representation(&alg(A)).unwrap()).to_string(), "Z lex Q^TB");
    assert_eq!(group_representation(&alg(E)).unwrap().lex_target(), "Z lex Q^TB lex Q^TB");
}
