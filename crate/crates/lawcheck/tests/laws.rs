mod common;

use chain_core::{Chain, Monoid};
use common::*;
use decompose::{Branch, DecomposeError};
use lawcheck::{check_fle_laws, check_law, check_named, LawError, ALL_LAWS, FLE_LAWS, NAMED_LAWS, TABLE_LAWS};

/// Laws that need a positive idempotent to decompose around.
const STEPPED: [&str; 10] = [
    "prop7.2.eqs",
    "prop8.2.1",
    "prop8.2.2",
    "prop8.2.3",
    "prop8.2.4",
    "prop8.2.5",
    "prop8.2.6",
    "prop9.2",
    "prop10.1.3",
    "remark11.4",
];

fn branch_of(a: &chain_core::Algebra) -> Branch {
    let u = a.positive_idempotents()[1].clone();
    if a.mul(&a.comp(&u), &a.comp(&u)) == a.comp(&u) {
        Branch::Idem
    } else {
        Branch::NonIdem
    }
}

#[test]
fn law_lists_are_consistent() {
    assert_eq!(ALL_LAWS.len(), FLE_LAWS.len() + NAMED_LAWS.len() + TABLE_LAWS.len());
    for id in FLE_LAWS.iter().chain(&NAMED_LAWS).chain(&TABLE_LAWS) {
        assert!(ALL_LAWS.contains(id), "{id}");
    }
}

#[test]
fn fle_laws_hold_on_every_fixture() {
    for (name, a) in fixtures() {
        let rs = check_fle_laws(&a, 1500, 11);
        assert_eq!(rs.len(), FLE_LAWS.len());
        for (r, id) in rs.iter().zip(FLE_LAWS) {
            assert_eq!(r.law, id);
            assert!(r.passed(), "{name}: {}", r.line());
            assert!(r.samples >= 1, "{name}: {id}");
        }
    }
}

#[test]
fn named_laws_on_groups_stop_at_the_missing_idempotent() {
    for (name, a) in groups() {
        for id in NAMED_LAWS {
            let out = check_named(&a, id, 300, 5);
            if STEPPED.contains(&id) {
                assert_eq!(out, Err(LawError::Decompose(DecomposeError::OnlyUnitIdempotent)), "{name}: {id}");
            } else {
                let r = out.unwrap();
                assert!(r.passed(), "{name}: {}", r.line());
            }
        }
    }
}

#[test]
fn named_laws_hold_where_applicable() {
    let mut fx = composites();
    fx.push(("IV3", alg(IV3)));
    fx.push(("III3", alg(III3)));
    for (name, a) in fx {
        let b = branch_of(&a);
        for id in NAMED_LAWS {
            let out = check_named(&a, id, 400, 7);
            match (id, b) {
                ("prop9.2", Branch::NonIdem) => assert_eq!(out, Err(LawError::WrongBranch(Branch::Idem)), "{name}"),
                ("prop10.1.3", Branch::Idem) => assert_eq!(out, Err(LawError::WrongBranch(Branch::NonIdem)), "{name}"),
                _ => {
                    let r = out.unwrap_or_else(|e| panic!("{name}: {id}: {e}"));
                    assert!(r.passed(), "{name}: {}", r.line());
                }
            }
        }
    }
}

#[test]
fn missing_top_pseudo_extremals_are_reported_vacuous() {
    for f in [A, B, C, G, E] {
        let r = check_named(&alg(f), "prop8.2.4", 200, 1).unwrap();
        assert_eq!(r.samples, 0, "{f}");
        assert_eq!(r.vacuous, ["TopPs"], "{f}");
        assert!(r.line().ends_with("vacuous=TopPs"), "{}", r.line());
    }
    for f in [IV, III] {
        let r = check_named(&alg(f), "prop8.2.4", 200, 1).unwrap();
        assert!(r.samples > 0 && r.vacuous.is_empty(), "{f}: {}", r.line());
    }
}

#[test]
fn unknown_laws_are_rejected() {
    let a = alg(A);
    assert_eq!(check_law(&a, "eq9.9", 10, 0), Err(LawError::UnknownLaw("eq9.9".into())));
    assert!(matches!(check_named(&a, "commutativity", 10, 0), Err(LawError::UnknownLaw(_))));
    assert!(check_law(&a, "table5", 10, 0).is_err());
}

#[test]
fn budget_bounds_the_sample_count() {
    let a = alg(B);
    for id in ["commutativity", "eq2.2", "prop5.3"] {
        let r = check_law(&a, id, 250, 3).unwrap();
        assert_eq!(r.samples, 250, "{id}");
    }
}
