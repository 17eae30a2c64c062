use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::{Coord, GroupDesc, GroupElem, GroupError, Rational};

/// Subgroup of a single coordinate. `Index(m)` is `mZ`, also inside `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubSpec {
    Full,
    Trivial,
    Index(u64),
}

impl SubSpec {
    fn normalize(self, c: Coord) -> SubSpec {
        match (c, self) {
            (Coord::Triv, _) => SubSpec::Trivial,
            (Coord::Int, SubSpec::Index(1)) => SubSpec::Full,
            (_, s) => s,
        }
    }

    fn admits(self, r: &Rational) -> bool {
        match self {
            SubSpec::Full => true,
            SubSpec::Trivial => r.is_zero(),
            SubSpec::Index(m) => (r / Rational::from_integer(m.into())).is_integer(),
        }
    }

    fn le(self, other: SubSpec) -> bool {
        match (self, other) {
            (SubSpec::Trivial, _) => true,
            (_, SubSpec::Full) => true,
            (SubSpec::Index(m), SubSpec::Index(n)) => m % n == 0,
            _ => false,
        }
    }

    fn meet(self, other: SubSpec) -> SubSpec {
        match (self, other) {
            (SubSpec::Trivial, _) | (_, SubSpec::Trivial) => SubSpec::Trivial,
            (SubSpec::Full, s) | (s, SubSpec::Full) => s,
            (SubSpec::Index(m), SubSpec::Index(n)) => SubSpec::Index(m.lcm(&n)),
        }
    }
}

impl fmt::Display for SubSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubSpec::Full => f.write_str("full"),
            SubSpec::Trivial => f.write_str("triv"),
            SubSpec::Index(m) => write!(f, "idx {m}"),
        }
    }
}

/// Per-coordinate subgroup. A scalar spec applies to every coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SubgroupDesc {
    Scalar(SubSpec),
    Coords(Vec<SubSpec>),
}

/// Where the next element of a coset lies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CosetStep {
    /// The coset is a single point.
    Single,
    /// No immediate neighbours.
    Dense,
    /// Neighbours differ by `step` in coordinate `index`.
    Discrete { index: usize, step: Rational },
}

impl SubgroupDesc {
    pub fn full() -> SubgroupDesc {
        SubgroupDesc::Scalar(SubSpec::Full)
    }

    pub fn trivial() -> SubgroupDesc {
        SubgroupDesc::Scalar(SubSpec::Trivial)
    }

    pub fn spec_at(&self, i: usize) -> SubSpec {
        match self {
            SubgroupDesc::Scalar(s) => *s,
            SubgroupDesc::Coords(v) => v[i],
        }
    }

    pub fn check(&self, g: &GroupDesc) -> Result<(), GroupError> {
        let specs: Vec<SubSpec> = match self {
            SubgroupDesc::Scalar(s) => vec![*s],
            SubgroupDesc::Coords(v) => {
                if v.len() != g.dims() {
                    return Err(GroupError::InvalidSubgroup(format!(
                        "{self} has {} coordinates, {g} has {}",
                        v.len(),
                        g.dims()
                    )));
                }
                v.clone()
            }
        };
        if specs.contains(&SubSpec::Index(0)) {
            return Err(GroupError::InvalidSubgroup("idx 0".into()));
        }
        Ok(())
    }

    /// Explicit per-coordinate form with the scalar broadcast resolved and
    /// equivalent specs identified (`idx 1` on `Z` is `full`, anything on `1` is `triv`).
    pub fn normalize(&self, g: &GroupDesc) -> Vec<SubSpec> {
        g.coords().iter().enumerate().map(|(i, c)| self.spec_at(i).normalize(*c)).collect()
    }

    pub fn member(&self, g: &GroupDesc, a: &GroupElem) -> bool {
        a.coords.len() == g.dims() && a.coords.iter().enumerate().all(|(i, r)| self.spec_at(i).admits(r))
    }

    pub fn le(&self, other: &SubgroupDesc, g: &GroupDesc) -> bool {
        self.normalize(g).iter().zip(other.normalize(g)).all(|(a, b)| a.le(b))
    }

    pub fn same(&self, other: &SubgroupDesc, g: &GroupDesc) -> bool {
        self.normalize(g) == other.normalize(g)
    }

    pub fn meet(&self, other: &SubgroupDesc, g: &GroupDesc) -> SubgroupDesc {
        let v = self.normalize(g).into_iter().zip(other.normalize(g)).map(|(a, b)| a.meet(b)).collect();
        SubgroupDesc::Coords(v).compact()
    }

    pub fn is_trivial(&self, g: &GroupDesc) -> bool {
        self.normalize(g).iter().all(|s| *s == SubSpec::Trivial)
    }

    pub fn is_full(&self, g: &GroupDesc) -> bool {
        self.same(&SubgroupDesc::full(), g)
    }

    /// Split into the specs of the first `n` coordinates and the rest.
    pub fn split(&self, n: usize) -> (SubgroupDesc, SubgroupDesc) {
        match self {
            SubgroupDesc::Scalar(s) => (SubgroupDesc::Scalar(*s), SubgroupDesc::Scalar(*s)),
            SubgroupDesc::Coords(v) => {
                let (h, t) = v.split_at(n);
                (SubgroupDesc::Coords(h.to_vec()).compact(), SubgroupDesc::Coords(t.to_vec()).compact())
            }
        }
    }

    pub fn concat(a: &SubgroupDesc, ga: &GroupDesc, b: &SubgroupDesc, gb: &GroupDesc) -> SubgroupDesc {
        let mut v = a.normalize(ga);
        v.extend(b.normalize(gb));
        SubgroupDesc::Coords(v).compact()
    }

    /// Collapse a per-coordinate list whose entries all agree into the scalar form.
    pub fn compact(self) -> SubgroupDesc {
        match self {
            SubgroupDesc::Coords(v) if !v.is_empty() && v.iter().all(|s| *s == v[0]) => SubgroupDesc::Scalar(v[0]),
            other => other,
        }
    }

    /// Neighbour structure of a coset `y + S` inside `g`.
    pub fn coset_step(&self, g: &GroupDesc) -> CosetStep {
        let specs = self.normalize(g);
        let kinds = g.coords();
        let Some(i) = specs.iter().rposition(|s| *s != SubSpec::Trivial) else {
            return CosetStep::Single;
        };
        match (kinds[i], specs[i]) {
            (Coord::Int, SubSpec::Full) => CosetStep::Discrete { index: i, step: Rational::from_integer(1.into()) },
            (_, SubSpec::Index(m)) => CosetStep::Discrete { index: i, step: Rational::from_integer(m.into()) },
            _ => CosetStep::Dense,
        }
    }
}

impl fmt::Display for SubgroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupDesc::Scalar(s) => write!(f, "{s}"),
            SubgroupDesc::Coords(v) => {
                f.write_str("(")?;
                for (i, s) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Membership of `a` in the subgroup `s` of `g`.
pub fn g_member(g: &GroupDesc, s: &SubgroupDesc, a: &GroupElem) -> Result<bool, GroupError> {
    s.check(g)?;
    g.validate(a)?;
    Ok(s.member(g, a))
}
