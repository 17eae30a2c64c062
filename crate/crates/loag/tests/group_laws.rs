use std::cmp::Ordering;

use loag::{
    divisible_hull, g_add, g_cmp, g_neg, lemma_a_embed, rat, ConvexTail, Coord, GroupDesc, GroupElem, Rational,
};
use proptest::prelude::*;

fn coord_value(c: Coord) -> BoxedStrategy<Rational> {
    match c {
        Coord::Int => (-50i64..50).prop_map(|n| rat(n, 1)).boxed(),
        Coord::Rat => (-200i64..200, 1i64..9).prop_map(|(n, d)| rat(n, d)).boxed(),
        Coord::Triv => Just(rat(0, 1)).boxed(),
    }
}

fn desc() -> impl Strategy<Value = GroupDesc> {
    prop_oneof![
        Just(GroupDesc::Int),
        Just(GroupDesc::Rat),
        Just(GroupDesc::Triv),
        Just(GroupDesc::Lex(vec![Coord::Int, Coord::Int])),
        Just(GroupDesc::Lex(vec![Coord::Int, Coord::Rat])),
        Just(GroupDesc::Lex(vec![Coord::Rat, Coord::Triv, Coord::Int])),
    ]
}

fn elem(g: &GroupDesc) -> BoxedStrategy<GroupElem> {
    g.coords().into_iter().map(coord_value).collect::<Vec<_>>().prop_map(GroupElem::new).boxed()
}

fn group_and_three() -> impl Strategy<Value = (GroupDesc, GroupElem, GroupElem, GroupElem)> {
    desc().prop_flat_map(|g| {
        let e = elem(&g);
        (Just(g), e.clone(), e.clone(), e)
    })
}

proptest! {
    #[test]
    fn abelian_group_axioms((g, a, b, c) in group_and_three()) {
        let ab = g_add(&g, &a, &b).unwrap();
        prop_assert_eq!(g_add(&g, &ab, &c).unwrap(), g_add(&g, &a, &g_add(&g, &b, &c).unwrap()).unwrap());
        prop_assert_eq!(&ab, &g_add(&g, &b, &a).unwrap());
        prop_assert_eq!(g_add(&g, &a, &g.zero()).unwrap(), a.clone());
        prop_assert!(g_add(&g, &a, &g_neg(&g, &a).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn order_is_total_and_translation_invariant((g, a, b, c) in group_and_three()) {
        let ab = g_cmp(&g, &a, &b).unwrap();
        prop_assert_eq!(ab.reverse(), g_cmp(&g, &b, &a).unwrap());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let ac = g_add(&g, &a, &c).unwrap();
        let bc = g_add(&g, &b, &c).unwrap();
        prop_assert_eq!(g_cmp(&g, &ac, &bc).unwrap(), ab);
    }

    #[test]
    fn tail_split_preserves_sum_and_order((g, a, b, _c) in group_and_three(), k in 0usize..4) {
        let k = k.min(g.dims());
        let s = lemma_a_embed(&g, ConvexTail { k }).unwrap();
        let sum = s.embed(&g_add(&g, &a, &b).unwrap());
        prop_assert_eq!(sum, s.add(&s.embed(&a), &s.embed(&b)));
        prop_assert_eq!(s.cmp(&s.embed(&a), &s.embed(&b)), g_cmp(&g, &a, &b).unwrap());
    }

    #[test]
    fn hull_embedding_is_an_order_embedding((g, a, b, _c) in group_and_three()) {
        let (h, e) = divisible_hull(&g);
        prop_assert!(h.is_valid(&e(&a)));
        prop_assert_eq!(g_cmp(&h, &e(&a), &e(&b)).unwrap(), g_cmp(&g, &a, &b).unwrap());
        prop_assert_eq!(e(&a) == e(&b), a == b);
    }
}

#[test]
fn tail_projection_is_onto_the_quotient() {
    let g = GroupDesc::Lex(vec![Coord::Int, Coord::Int]);
    let s = lemma_a_embed(&g, ConvexTail { k: 1 }).unwrap();
    for n in -3..=3 {
        let target = GroupElem::from_ints(&[n]);
        let hit = (-3..=3).any(|m| s.project(&GroupElem::from_ints(&[n, m])) == target);
        assert!(hit);
    }
}
