use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::{GroupError, Rational};

/// One lexicographic coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coord {
    Int,
    Rat,
    Triv,
}

impl Coord {
    pub fn admits(self, r: &Rational) -> bool {
        match self {
            Coord::Int => r.is_integer(),
            Coord::Rat => true,
            Coord::Triv => r.is_zero(),
        }
    }

    pub fn hull(self) -> Coord {
        match self {
            Coord::Int | Coord::Rat => Coord::Rat,
            Coord::Triv => Coord::Triv,
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coord::Int => "Z",
            Coord::Rat => "Q",
            Coord::Triv => "1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupDesc {
    Int,
    Rat,
    Triv,
    /// Flat lexicographic product, first coordinate most significant.
    Lex(Vec<Coord>),
}

impl GroupDesc {
    pub fn lex(coords: Vec<Coord>) -> Result<GroupDesc, GroupError> {
        if coords.is_empty() {
            return Err(GroupError::InvalidSubgroup("empty lexicographic product".into()));
        }
        Ok(GroupDesc::Lex(coords))
    }

    /// Single coordinates collapse to the scalar forms.
    pub fn from_coords(coords: Vec<Coord>) -> GroupDesc {
        match coords.as_slice() {
            [] => GroupDesc::Triv,
            [Coord::Int] => GroupDesc::Int,
            [Coord::Rat] => GroupDesc::Rat,
            [Coord::Triv] => GroupDesc::Triv,
            _ => GroupDesc::Lex(coords),
        }
    }

    pub fn coords(&self) -> Vec<Coord> {
        match self {
            GroupDesc::Int => vec![Coord::Int],
            GroupDesc::Rat => vec![Coord::Rat],
            GroupDesc::Triv => vec![Coord::Triv],
            GroupDesc::Lex(cs) => cs.clone(),
        }
    }

    pub fn dims(&self) -> usize {
        match self {
            GroupDesc::Lex(cs) => cs.len(),
            _ => 1,
        }
    }

    pub fn zero(&self) -> GroupElem {
        GroupElem::new(vec![Rational::zero(); self.dims()])
    }

    pub fn is_trivial(&self) -> bool {
        self.coords().iter().all(|c| *c == Coord::Triv)
    }

    /// True iff every element has an immediate successor and predecessor.
    pub fn is_discrete(&self) -> bool {
        self.coords().iter().rev().find(|c| **c != Coord::Triv) == Some(&Coord::Int)
    }

    pub fn validate(&self, a: &GroupElem) -> Result<(), GroupError> {
        let cs = self.coords();
        if cs.len() != a.coords.len() {
            return Err(GroupError::InvalidElement(format!(
                "{a} has {} coordinates, {self} needs {}",
                a.coords.len(),
                cs.len()
            )));
        }
        for (c, r) in cs.iter().zip(&a.coords) {
            if !c.admits(r) {
                return Err(GroupError::InvalidElement(format!("{r} is not a coordinate of {c}")));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, a: &GroupElem) -> bool {
        self.validate(a).is_ok()
    }

    /// Immediate predecessor, or `None` when the order is dense (or trivial) below `a`.
    pub fn pred(&self, a: &GroupElem) -> Option<GroupElem> {
        self.step(a, -1)
    }

    pub fn succ(&self, a: &GroupElem) -> Option<GroupElem> {
        self.step(a, 1)
    }

    fn step(&self, a: &GroupElem, dir: i64) -> Option<GroupElem> {
        if !self.is_discrete() {
            return None;
        }
        let cs = self.coords();
        let i = cs.iter().rposition(|c| *c != Coord::Triv)?;
        let mut out = a.clone();
        out.coords[i] += Rational::from_integer(dir.into());
        Some(out)
    }
}

impl fmt::Display for GroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDesc::Int => f.write_str("Z"),
            GroupDesc::Rat => f.write_str("Q"),
            GroupDesc::Triv => f.write_str("1"),
            GroupDesc::Lex(cs) => {
                f.write_str("Lex(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem {
    pub coords: Vec<Rational>,
}

impl GroupElem {
    pub fn new(coords: Vec<Rational>) -> GroupElem {
        GroupElem { coords }
    }

    pub fn from_ints(xs: &[i64]) -> GroupElem {
        GroupElem::new(xs.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn split_at(&self, n: usize) -> (GroupElem, GroupElem) {
        let (h, t) = self.coords.split_at(n);
        (GroupElem::new(h.to_vec()), GroupElem::new(t.to_vec()))
    }

    pub fn concat(&self, other: &GroupElem) -> GroupElem {
        let mut c = self.coords.clone();
        c.extend(other.coords.iter().cloned());
        GroupElem::new(c)
    }

    /// Coordinatewise multiple `k * self`.
    pub fn scale(&self, k: &Rational) -> GroupElem {
        GroupElem::new(self.coords.iter().map(|c| c * k).collect())
    }

    pub fn unit_vector(dims: usize, i: usize, v: Rational) -> GroupElem {
        let mut c = vec![Rational::zero(); dims];
        c[i] = v;
        GroupElem::new(c)
    }

    pub fn one_at(dims: usize, i: usize) -> GroupElem {
        GroupElem::unit_vector(dims, i, Rational::one())
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

fn check_pair(g: &GroupDesc, a: &GroupElem, b: &GroupElem) -> Result<(), GroupError> {
    g.validate(a)?;
    g.validate(b)
}

pub fn g_add(g: &GroupDesc, a: &GroupElem, b: &GroupElem) -> Result<GroupElem, GroupError> {
    check_pair(g, a, b)?;
    Ok(GroupElem::new(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect()))
}

pub fn g_sub(g: &GroupDesc, a: &GroupElem, b: &GroupElem) -> Result<GroupElem, GroupError> {
    check_pair(g, a, b)?;
    Ok(GroupElem::new(a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect()))
}

pub fn g_neg(g: &GroupDesc, a: &GroupElem) -> Result<GroupElem, GroupError> {
    g.validate(a)?;
    Ok(GroupElem::new(a.coords.iter().map(|x| -x).collect()))
}

/// Lexicographic comparison.
pub fn g_cmp(g: &GroupDesc, a: &GroupElem, b: &GroupElem) -> Result<Ordering, GroupError> {
    check_pair(g, a, b)?;
    Ok(a.coords.cmp(&b.coords))
}
