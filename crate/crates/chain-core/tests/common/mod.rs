#![allow(dead_code)]

use std::sync::Arc;

use chain_core::{Algebra, Elem, HDesc, Node};
use loag::{rat, GroupDesc, GroupElem, Rational, SubSpec, SubgroupDesc};

pub fn z() -> Arc<Algebra> {
    Arc::new(Algebra::group(GroupDesc::Int))
}

pub fn q() -> Arc<Algebra> {
    Arc::new(Algebra::group(GroupDesc::Rat))
}

pub fn idx(m: u64) -> SubgroupDesc {
    SubgroupDesc::Scalar(SubSpec::Index(m))
}

pub fn full() -> SubgroupDesc {
    SubgroupDesc::full()
}

pub fn triv() -> SubgroupDesc {
    SubgroupDesc::trivial()
}

pub fn fixture_a() -> Algebra {
    Algebra::new(Node::TypeII { x: z(), y: q() }).unwrap()
}

pub fn fixture_b() -> Algebra {
    Algebra::new(Node::TypeI { x: q(), z: idx(1), y: q() }).unwrap()
}

pub fn fixture_c() -> Algebra {
    Algebra::new(Node::SublexII { x: z(), y: q(), h: HDesc::ProdH(full(), triv()) }).unwrap()
}

pub fn fixture_g() -> Algebra {
    Algebra::new(Node::SublexII { x: z(), y: q(), h: HDesc::GraphH(rat(1, 2)) }).unwrap()
}

pub fn fixture_e() -> Algebra {
    Algebra::new(Node::TypeI { x: Arc::new(fixture_a()), z: full(), y: q() }).unwrap()
}

pub fn fixture_iv() -> Algebra {
    Algebra::new(Node::TypeIV { x: z(), v: idx(2), y: q() }).unwrap()
}

pub fn fixture_iii() -> Algebra {
    Algebra::new(Node::TypeIII { x: q(), z: idx(1), v: idx(2), y: q() }).unwrap()
}

pub fn all_fixtures() -> Vec<(&'static str, Algebra)> {
    vec![
        ("Z", Algebra::group(GroupDesc::Int)),
        ("Q", Algebra::group(GroupDesc::Rat)),
        ("A", fixture_a()),
        ("B", fixture_b()),
        ("C", fixture_c()),
        ("G", fixture_g()),
        ("E", fixture_e()),
        ("IV", fixture_iv()),
        ("III", fixture_iii()),
    ]
}

pub fn r(n: i64, d: i64) -> Elem {
    Elem::Leaf(GroupElem::new(vec![rat(n, d)]))
}

pub fn i(n: i64) -> Elem {
    Elem::ints(&[n])
}

pub fn mid(x: Elem, y: Elem) -> Elem {
    Elem::mid(x, y)
}

pub fn top(x: Elem) -> Elem {
    Elem::top(x)
}

pub fn bot(x: Elem) -> Elem {
    Elem::bot(x)
}

pub fn leaf_value(e: &Elem) -> Rational {
    e.as_leaf().expect("leaf").coords[0].clone()
}
