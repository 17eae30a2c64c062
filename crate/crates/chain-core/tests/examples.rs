mod common;

use chain_core::{ops, parse_elem, Algebra, ChainError, Elem};
use common::*;
use loag::GroupDesc;

#[test]
fn validate_elem_examples() {
    assert!(ops::validate_elem(&fixture_a(), &mid(i(3), r(1, 2))));
    assert!(!ops::validate_elem(&fixture_b(), &mid(r(1, 2), i(0))));
    assert!(!ops::validate_elem(&fixture_c(), &mid(i(2), r(1, 3))));
    assert!(ops::validate_elem(&fixture_c(), &mid(i(2), i(0))));
    assert!(!ops::validate_elem(&fixture_a(), &bot(i(2))));
    assert!(ops::validate_elem(&fixture_b(), &bot(r(1, 2))));
    assert!(!ops::validate_elem(&fixture_b(), &top(r(1, 2))));
}

#[test]
fn le_examples() {
    let a = fixture_a();
    assert!(ops::le(&a, &mid(i(1), i(99)), &top(i(1))).unwrap());
    assert!(ops::le(&fixture_b(), &bot(r(1, 2)), &bot(i(1))).unwrap());
    assert!(matches!(ops::le(&a, &bot(i(2)), &top(i(2))), Err(ChainError::InvalidElement(_))));
}

#[test]
fn mul_examples() {
    let a = fixture_a();
    assert_eq!(ops::mul(&a, &mid(i(1), r(1, 4)), &mid(i(2), r(1, 2))).unwrap(), mid(i(3), r(3, 4)));
    assert_eq!(ops::mul(&a, &top(i(1)), &mid(i(2), r(1, 2))).unwrap(), top(i(3)));
    let b = fixture_b();
    assert_eq!(ops::mul(&b, &bot(r(1, 2)), &bot(r(1, 2))).unwrap(), bot(i(1)));
}

#[test]
fn comp_examples() {
    let a = fixture_a();
    assert_eq!(ops::comp(&a, &top(i(0))).unwrap(), top(i(-1)));
    assert_eq!(ops::comp(&fixture_b(), &top(i(0))).unwrap(), bot(i(0)));
    assert_eq!(ops::comp(&a, &mid(i(0), r(1, 3))).unwrap(), mid(i(0), r(-1, 3)));
}

#[test]
fn worked_example_values() {
    let a = fixture_a();
    let m1 = top(i(-1));
    assert_eq!(ops::mul(&a, &m1, &m1).unwrap(), top(i(-2)));
    let b = fixture_b();
    assert_eq!(ops::mul(&b, &bot(i(0)), &bot(i(0))).unwrap(), bot(i(0)));
}

#[test]
fn res_and_tau_examples() {
    let z = Algebra::group(GroupDesc::Int);
    assert_eq!(ops::res(&z, &i(3), &i(5)).unwrap(), i(2));
    let a = fixture_a();
    assert_eq!(ops::res(&a, &top(i(5)), &top(i(5))).unwrap(), top(i(0)));
    let b = fixture_b();
    assert_eq!(ops::res(&b, &top(i(0)), &mid(i(0), i(0))).unwrap(), bot(i(0)));
    assert_eq!(ops::tau(&z, &i(17)).unwrap(), i(0));
    assert_eq!(ops::tau(&a, &top(i(5))).unwrap(), top(i(0)));
    assert_eq!(ops::tau(&a, &mid(i(5), r(1, 3))).unwrap(), mid(i(0), i(0)));
}

#[test]
fn unit_examples() {
    assert_eq!(ops::unit(&Algebra::group(GroupDesc::Int)), i(0));
    assert_eq!(ops::unit(&fixture_a()), mid(i(0), i(0)));
    assert_eq!(ops::unit(&fixture_b()), mid(i(0), i(0)));
    for (_, a) in all_fixtures() {
        assert_eq!(ops::fconst(&a), ops::unit(&a));
    }
}

#[test]
fn cover_examples() {
    let z = Algebra::group(GroupDesc::Int);
    assert_eq!(ops::x_down(&z, &i(5)).unwrap(), i(4));
    let q = Algebra::group(GroupDesc::Rat);
    assert_eq!(ops::x_down(&q, &r(1, 2)).unwrap(), r(1, 2));
    let c = fixture_c();
    assert_eq!(ops::x_down(&c, &top(i(3))).unwrap(), mid(i(3), i(0)));
    assert_eq!(ops::x_down(&c, &mid(i(3), i(0))).unwrap(), top(i(2)));
    assert_eq!(ops::x_up(&c, &mid(i(3), i(0))).unwrap(), top(i(3)));
    let a = fixture_a();
    assert_eq!(ops::x_down(&a, &top(i(3))).unwrap(), top(i(3)));
    assert_eq!(ops::x_down(&a, &mid(i(3), r(1, 2))).unwrap(), mid(i(3), r(1, 2)));
}

#[test]
fn invertibility_examples() {
    let z = Algebra::group(GroupDesc::Int);
    assert!(ops::is_invertible(&z, &i(-4)).unwrap());
    let a = fixture_a();
    assert!(!ops::is_invertible(&a, &top(i(1))).unwrap());
    assert!(ops::is_invertible(&a, &mid(i(1), r(2, 3))).unwrap());
}

#[test]
fn idempotent_examples() {
    assert_eq!(ops::positive_idempotents(&Algebra::group(GroupDesc::Int)), vec![i(0)]);
    assert_eq!(ops::positive_idempotents(&fixture_a()), vec![mid(i(0), i(0)), top(i(0))]);
    let t = mid(i(0), i(0));
    assert_eq!(ops::positive_idempotents(&fixture_e()), vec![mid(t.clone(), i(0)), top(t), bot(top(i(0)))]);
}

#[test]
fn literals_round_trip() {
    let a = fixture_a();
    for s in ["(3, 1/2)", "(3, T)", "(-1, -7/3)"] {
        assert_eq!(parse_elem(&a, s).unwrap().to_string(), s);
    }
    assert_eq!(parse_elem(&a, " ( 3 ,T ) ").unwrap(), top(i(3)));
    let b = fixture_b();
    assert_eq!(parse_elem(&b, "(1/2, B)").unwrap(), bot(r(1, 2)));
    let e = fixture_e();
    assert_eq!(parse_elem(&e, "((0,T), B)").unwrap(), bot(top(i(0))));
    assert!(parse_elem(&a, "(3, B)").is_err());
    assert!(parse_elem(&a, "(3, 1/2").is_err());
    assert!(parse_elem(&b, "(1/2, 0)").is_err());
    let zz = Algebra::group(GroupDesc::Lex(vec![loag::Coord::Int, loag::Coord::Int]));
    assert_eq!(parse_elem(&zz, "(1, -2)").unwrap(), Elem::ints(&[1, -2]));
}
