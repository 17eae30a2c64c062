mod common;

use chain_core::{Algebra, Chain, Elem, Monoid};
use common::*;
use decompose::{group_representation, rebuild, BetaView, Embedding, LexTarget};
use lawcheck::{check_hom, check_law, render, self_test, Claims, Format, Mutant, Mutation, SampleStream, ALL_LAWS};

#[test]
fn same_seed_same_reports() {
    for f in [A, B, IV] {
        let a = alg(f);
        for id in ALL_LAWS {
            let (r1, r2) = (check_law(&a, id, 60, 42), check_law(&a, id, 60, 42));
            assert_eq!(r1, r2, "{f}: {id}");
            if let (Ok(x), Ok(y)) = (r1, r2) {
                assert_eq!(
                    render(std::slice::from_ref(&x), Format::Tsv),
                    render(std::slice::from_ref(&y), Format::Tsv)
                );
                assert_eq!(render(&[x], Format::Text), render(&[y], Format::Text));
            }
        }
    }
}

#[test]
fn seeds_change_the_samples() {
    let a = alg(A);
    let mut s1 = SampleStream::new(1);
    let mut s2 = SampleStream::new(2);
    assert_ne!(s1.take(&a, 20), s2.take(&a, 20));
}

#[test]
fn every_mutation_is_caught_by_its_law() {
    let out = self_test(500, 3);
    assert_eq!(out.len(), Mutation::ALL.len());
    for (m, r) in out {
        assert_eq!(r.law, m.law());
        assert!(!r.passed(), "{m:?} survived");
        assert!(!r.violations.is_empty());
        assert!(r.line().starts_with(&format!("LAW {} FAIL", m.law())));
        assert!(r.line().contains("\n  witness ["), "{}", r.line());
    }
}

#[test]
fn mutations_leave_unrelated_laws_alone() {
    let z = groups().remove(0).1;
    for (m, id) in [
        (Mutation::Adjointness, "commutativity"),
        (Mutation::IdempotentSquares, "involution"),
        (Mutation::Oddness, "associativity"),
    ] {
        let r = check_law(&Mutant::new(&z, m), id, 300, 1).unwrap();
        assert!(r.passed(), "{m:?}: {}", r.line());
    }
}

#[test]
fn identity_is_an_embedding() {
    for (name, a) in fixtures() {
        let r = check_hom(
            "id",
            &a,
            &a,
            |x: &Elem| Ok(x.clone()),
            Claims { comp: Some(&|x: &Elem| a.comp(x)), injective: true },
            300,
            1,
        );
        assert!(r.passed(), "{name}: {}", r.line());
    }
}

#[test]
fn broken_maps_are_caught() {
    let a = alg(A);
    let r = check_hom("comp", &a, &a, |x: &Elem| Ok(a.comp(x)), Claims::embedding(), 200, 1);
    assert!(!r.passed());
    assert!(r.violations.iter().any(|v| v.context == "order"));
    let r = check_hom("const", &a, &a, |_: &Elem| Ok(a.unit()), Claims::embedding(), 200, 1);
    assert!(r.violations.iter().any(|v| v.context == "injective"));
    let r = check_hom("err", &a, &a, |_: &Elem| Err::<Elem, _>("no".to_string()), Claims::embedding(), 20, 1);
    assert!(r.violations.iter().all(|v| v.context == "defined"));
}

#[test]
fn beta_is_a_surjective_homomorphism() {
    for f in [A, B, C, G, E] {
        let a = alg(f);
        let bv = BetaView::new(&a).unwrap();
        let comp = |x: &Elem| bv.comp(x);
        let claims = Claims { comp: Some(&comp), injective: false };
        let r = check_hom("beta", &a, &bv, |x: &Elem| Ok(bv.canon(x)), claims, 800, 2);
        assert!(r.passed(), "{f}: {}", r.line());
    }
    for f in [A, B] {
        let a = alg(f);
        let bv = BetaView::new(&a).unwrap();
        let strict = check_hom("beta", &a, &bv, |x: &Elem| Ok(bv.canon(x)), Claims::embedding(), 800, 2);
        assert!(strict.violations.iter().any(|v| v.context == "injective"), "{f}: beta collapses components");
    }
}

fn alpha_report(a: &Algebra, budget: usize) -> lawcheck::Report {
    let r = rebuild(&group_representation(a).unwrap()).unwrap();
    let emb = Embedding::new(a).unwrap();
    let comp = |x: &Elem| r.comp(x);
    let claims = Claims { comp: Some(&comp), injective: true };
    check_hom("alpha", a, &r, |x: &Elem| emb.apply(x).map_err(|e| e.to_string()), claims, budget, 3)
}

#[test]
fn alpha_embeds_into_the_rebuilt_algebra() {
    for (name, a) in composites() {
        let r = alpha_report(&a, 800);
        assert!(r.passed(), "{name}: {}", r.line());
    }
}

#[test]
fn lex_embedding_preserves_products_and_order() {
    for f in [A, E, IV, III] {
        let a = alg(f);
        let t = group_representation(&a).unwrap();
        let target = LexTarget::new(&t);
        let emb = Embedding::new(&a).unwrap();
        let map = |x: &Elem| emb.apply(x).map(|y| target.flatten(&y)).map_err(|e| e.to_string());
        let r = check_hom("lex", &a, &target, map, Claims::embedding(), 800, 4);
        assert!(r.passed(), "{f}: {}", r.line());
    }
}
