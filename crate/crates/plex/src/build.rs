use std::fmt;
use std::sync::Arc;

use chain_core::{Algebra, Bounds, Chain, ChainError, Elem, HDesc, Node};
use loag::{GroupDesc, GroupElem, SubSpec, SubgroupDesc};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::PlexError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeKind {
    I,
    II,
    III,
    IV,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SublexKind {
    I,
    II,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    /// The group part of the first factor is not discretely embedded.
    DiscretenessViolated(String),
    /// `V <= Z <= X_gr` (or `H <= Z lex Y`) fails.
    SubgroupChainViolated(String),
    /// A subgroup argument required by the kind is missing.
    MissingSubgroup(&'static str),
    /// The structural cover rules disagree with the order on a sampled element.
    CoverMismatch(String),
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::DiscretenessViolated(s) => write!(f, "DiscretenessViolated: {s}"),
            Precondition::SubgroupChainViolated(s) => write!(f, "SubgroupChainViolated: {s}"),
            Precondition::MissingSubgroup(s) => write!(f, "MissingSubgroup: {s}"),
            Precondition::CoverMismatch(s) => write!(f, "CoverMismatch: {s}"),
        }
    }
}

fn fail(p: Precondition) -> PlexError {
    PlexError::PreconditionFailed(p)
}

const SEED: u64 = 0x5eed;

/// `s <= X_gr`, decided per coordinate when the group part has product form
/// and on the window of `s` otherwise.
fn sub_in_gr(x: &Algebra, s: &SubgroupDesc) -> bool {
    match x.gr_sub() {
        Some(g) => s.le(g, x.gr_desc()),
        None => window_points(x.gr_desc(), s).iter().all(|c| x.gr_elem(c).is_some()),
    }
}

fn window_points(g: &GroupDesc, s: &SubgroupDesc) -> Vec<GroupElem> {
    let leaf = Algebra::group(g.clone());
    leaf.window(&Bounds::window()).into_iter().filter_map(|e| e.as_leaf().cloned()).filter(|c| s.member(g, c)).collect()
}

fn chain_check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), PlexError> {
    if cond {
        Ok(())
    } else {
        Err(fail(Precondition::SubgroupChainViolated(msg())))
    }
}

fn require_discrete(x: &Algebra) -> Result<(), PlexError> {
    if discretely_embedded(x) {
        Ok(())
    } else {
        Err(fail(Precondition::DiscretenessViolated(format!("the group part of {x} is not discretely embedded"))))
    }
}

/// Build a type I, II, III or IV partial lexicographic product. `z` is used by
/// I and III, `v` by III and IV.
pub fn build_type(
    kind: TypeKind,
    x: Arc<Algebra>,
    z: Option<SubgroupDesc>,
    v: Option<SubgroupDesc>,
    y: Arc<Algebra>,
) -> Result<Algebra, PlexError> {
    let xg = x.gr_desc().clone();
    for s in z.iter().chain(v.iter()) {
        s.check(&xg).map_err(ChainError::from)?;
    }
    let node = match kind {
        TypeKind::I => {
            let z = z.ok_or(fail(Precondition::MissingSubgroup("Z")))?;
            chain_check(sub_in_gr(&x, &z), || format!("{z} is not inside the group part of {x}"))?;
            Node::TypeI { x, z, y }
        }
        TypeKind::III => {
            let z = z.ok_or(fail(Precondition::MissingSubgroup("Z")))?;
            let v = v.ok_or(fail(Precondition::MissingSubgroup("V")))?;
            chain_check(sub_in_gr(&x, &z), || format!("{z} is not inside the group part of {x}"))?;
            chain_check(v.le(&z, &xg), || format!("{v} is not inside {z}"))?;
            Node::TypeIII { x, z, v, y }
        }
        TypeKind::II => {
            require_discrete(&x)?;
            Node::TypeII { x, y }
        }
        TypeKind::IV => {
            let v = v.ok_or(fail(Precondition::MissingSubgroup("V")))?;
            chain_check(sub_in_gr(&x, &v), || format!("{v} is not inside the group part of {x}"))?;
            require_discrete(&x)?;
            Node::TypeIV { x, v, y }
        }
    };
    finish(node)
}

/// Build a type I or II partial sublex product over a group `y`, with the
/// group part restricted to `h`.
pub fn build_sublex(
    kind: SublexKind,
    x: Arc<Algebra>,
    z: Option<SubgroupDesc>,
    y: Arc<Algebra>,
    h: HDesc,
) -> Result<Algebra, PlexError> {
    let xg = x.gr_desc().clone();
    let side = match kind {
        SublexKind::I => {
            let z = z.clone().ok_or(fail(Precondition::MissingSubgroup("Z")))?;
            z.check(&xg).map_err(ChainError::from)?;
            chain_check(sub_in_gr(&x, &z), || format!("{z} is not inside the group part of {x}"))?;
            z
        }
        SublexKind::II => {
            require_discrete(&x)?;
            SubgroupDesc::full()
        }
    };
    match &h {
        HDesc::FullH => {}
        HDesc::ProdH(zp, _) => {
            zp.check(&xg).map_err(ChainError::from)?;
            chain_check(zp.le(&side, &xg) && sub_in_gr(&x, zp), || format!("{h} is not inside {side} lex {y}"))?;
        }
        HDesc::GraphH(_) => {
            let ints = SubgroupDesc::Scalar(SubSpec::Index(1));
            chain_check(xg.dims() == 1 && ints.le(&side, &xg) && sub_in_gr(&x, &ints), || {
                format!("{h} needs the integers inside {side}")
            })?;
        }
    }
    let node = match kind {
        SublexKind::I => Node::SublexI { x, z: side, y, h },
        SublexKind::II => Node::SublexII { x, y, h },
    };
    finish(node)
}

fn finish(node: Node) -> Result<Algebra, PlexError> {
    let a = Algebra::new(node)?;
    verify_covers(&a, 16)?;
    Ok(a)
}

/// Check the structural cover rules against the order on `n` sampled
/// elements: nothing sampled lies strictly between `x_down(x)` and `x`, or
/// between `x` and `x_up(x)`.
pub fn verify_covers(a: &Algebra, n: usize) -> Result<(), PlexError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let b = Bounds::default();
    let xs: Vec<Elem> = (0..n).map(|_| a.sample(&mut rng, &b)).collect();
    let mut probes: Vec<Elem> = (0..4 * n).map(|_| a.sample(&mut rng, &b)).collect();
    for x in &xs {
        probes.extend([a.x_down(&a.x_down(x)), a.x_up(&a.x_up(x))]);
    }
    for x in &xs {
        let (d, u) = (a.x_down(x), a.x_up(x));
        let bad = |lo: &Elem, hi: &Elem| probes.iter().find(|p| lo < *p && *p < hi).cloned();
        if !a.is_valid(&d) || !a.is_valid(&u) || d > *x || u < *x {
            return Err(fail(Precondition::CoverMismatch(format!("covers of {x} are {d} and {u}"))));
        }
        if let Some(p) = (d < *x).then(|| bad(&d, x)).flatten() {
            return Err(fail(Precondition::CoverMismatch(format!("{p} lies between {d} and {x}"))));
        }
        if let Some(p) = (u > *x).then(|| bad(x, &u)).flatten() {
            return Err(fail(Precondition::CoverMismatch(format!("{p} lies between {x} and {u}"))));
        }
    }
    Ok(())
}

/// Whether every invertible element has both covers and they are invertible.
/// Decided at the unit, which suffices since multiplying by an invertible
/// element is an order automorphism preserving invertibility, then checked on
/// 100 sampled invertible elements.
pub fn discretely_embedded(a: &Algebra) -> bool {
    let ok = |g: &Elem| {
        let (u, d) = (a.x_up(g), a.x_down(g));
        u != *g && d != *g && a.is_gr(&u) && a.is_gr(&d)
    };
    if !ok(a.unit_ref()) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let b = Bounds::default();
    (0..100).all(|_| ok(&a.sample_gr(&mut rng, &b, &SubgroupDesc::full())))
}

/// Whether the first-coordinate projection of `h` covers all of `z`, a
/// subgroup of `zside`.
pub fn nu_onto(h: &HDesc, zside: &GroupDesc, z: &SubgroupDesc) -> bool {
    match h {
        HDesc::FullH => true,
        HDesc::ProdH(zp, _) => z.le(zp, zside),
        HDesc::GraphH(_) => z.le(&SubgroupDesc::Scalar(SubSpec::Index(1)), zside),
    }
}
