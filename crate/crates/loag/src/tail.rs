use std::cmp::Ordering;

use crate::{Coord, GroupDesc, GroupElem, GroupError};

/// The convex subgroup formed by the last `k` coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConvexTail {
    pub k: usize,
}

impl ConvexTail {
    pub fn check(self, g: &GroupDesc) -> Result<(), GroupError> {
        if self.k > g.dims() {
            return Err(GroupError::TailOutOfRange { k: self.k, dims: g.dims() });
        }
        Ok(())
    }
}

/// `G / C` for a convex tail `C`: the last `k` coordinates are dropped.
pub fn quotient_by_tail(g: &GroupDesc, c: ConvexTail) -> Result<GroupDesc, GroupError> {
    c.check(g)?;
    let cs = g.coords();
    Ok(GroupDesc::from_coords(cs[..cs.len() - c.k].to_vec()))
}

/// Minimal divisible extension; coordinates embed unchanged.
pub fn divisible_hull(g: &GroupDesc) -> (GroupDesc, fn(&GroupElem) -> GroupElem) {
    let hull = match g {
        GroupDesc::Lex(cs) => GroupDesc::Lex(cs.iter().map(|c| c.hull()).collect()),
        other => GroupDesc::from_coords(other.coords().into_iter().map(Coord::hull).collect()),
    };
    (hull, GroupElem::clone)
}

/// `G` split as `G/C` lex the hull of `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailSplit {
    pub quotient: GroupDesc,
    pub tail_hull: GroupDesc,
    head_len: usize,
}

impl TailSplit {
    pub fn embed(&self, a: &GroupElem) -> (GroupElem, GroupElem) {
        a.split_at(self.head_len)
    }

    /// Projection onto the quotient.
    pub fn project(&self, a: &GroupElem) -> GroupElem {
        self.embed(a).0
    }

    pub fn add(&self, a: &(GroupElem, GroupElem), b: &(GroupElem, GroupElem)) -> (GroupElem, GroupElem) {
        let sum =
            |x: &GroupElem, y: &GroupElem| GroupElem::new(x.coords.iter().zip(&y.coords).map(|(p, q)| p + q).collect());
        (sum(&a.0, &b.0), sum(&a.1, &b.1))
    }

    pub fn cmp(&self, a: &(GroupElem, GroupElem), b: &(GroupElem, GroupElem)) -> Ordering {
        a.0.coords.cmp(&b.0.coords).then_with(|| a.1.coords.cmp(&b.1.coords))
    }
}

/// The embedding `G -> G/C lex hull(C)` for a tail `C`. With tails the
/// complement of `C` is the span of the leading coordinates, so the split is
/// the coordinate split.
pub fn lemma_a_embed(g: &GroupDesc, c: ConvexTail) -> Result<TailSplit, GroupError> {
    c.check(g)?;
    let cs = g.coords();
    let head_len = cs.len() - c.k;
    let tail: Vec<Coord> = cs[head_len..].iter().map(|c| c.hull()).collect();
    Ok(TailSplit {
        quotient: GroupDesc::from_coords(cs[..head_len].to_vec()),
        tail_hull: GroupDesc::from_coords(tail),
        head_len,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz() -> GroupDesc {
        GroupDesc::Lex(vec![Coord::Int, Coord::Int])
    }

    #[test]
    fn quotients() {
        assert_eq!(quotient_by_tail(&zz(), ConvexTail { k: 1 }).unwrap(), GroupDesc::Int);
        let zq = GroupDesc::Lex(vec![Coord::Int, Coord::Rat]);
        assert_eq!(quotient_by_tail(&zq, ConvexTail { k: 0 }).unwrap(), zq);
        assert_eq!(quotient_by_tail(&GroupDesc::Rat, ConvexTail { k: 1 }).unwrap(), GroupDesc::Triv);
        assert!(quotient_by_tail(&GroupDesc::Rat, ConvexTail { k: 2 }).is_err());
    }

    #[test]
    fn hulls() {
        let (h, e) = divisible_hull(&GroupDesc::Int);
        assert_eq!(h, GroupDesc::Rat);
        assert_eq!(e(&GroupElem::from_ints(&[5])), GroupElem::from_ints(&[5]));
        assert_eq!(divisible_hull(&zz()).0, GroupDesc::Lex(vec![Coord::Rat, Coord::Rat]));
        assert_eq!(divisible_hull(&GroupDesc::Triv).0, GroupDesc::Triv);
    }

    #[test]
    fn split_examples() {
        let s = lemma_a_embed(&zz(), ConvexTail { k: 1 }).unwrap();
        assert_eq!(s.tail_hull, GroupDesc::Rat);
        let (h, t) = s.embed(&GroupElem::from_ints(&[3, -2]));
        assert_eq!((h, t), (GroupElem::from_ints(&[3]), GroupElem::from_ints(&[-2])));
        let a = s.embed(&GroupElem::from_ints(&[1, 99]));
        let b = s.embed(&GroupElem::from_ints(&[2, -99]));
        assert_eq!(s.cmp(&a, &b), Ordering::Less);
        let z = lemma_a_embed(&GroupDesc::Int, ConvexTail { k: 0 }).unwrap();
        let (h, t) = z.embed(&GroupElem::from_ints(&[7]));
        assert_eq!(h, GroupElem::from_ints(&[7]));
        assert!(t.coords.is_empty());
    }
}
