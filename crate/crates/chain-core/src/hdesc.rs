use std::fmt;

use loag::{GroupDesc, GroupElem, Rational, SubgroupDesc};

/// Subgroup `H` of `Z lex Y` restricting the group part of a sublex product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HDesc {
    FullH,
    /// `z_part x y_part`.
    ProdH(SubgroupDesc, SubgroupDesc),
    /// `{(n, n*c) : n integer}`.
    GraphH(Rational),
}

/// The set `{y : (x, y) in H}` for a fixed `x`, as a coset of a subgroup of `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HSlice {
    Empty,
    Coset { base: GroupElem, sub: SubgroupDesc },
}

impl HDesc {
    /// Slice over `x`, given `x`'s coordinates in the `Z` side (already known to lie in `Z`).
    pub fn slice(&self, zdesc: &GroupDesc, x: &GroupElem, ydesc: &GroupDesc) -> HSlice {
        match self {
            HDesc::FullH => HSlice::Coset { base: ydesc.zero(), sub: SubgroupDesc::full() },
            HDesc::ProdH(zp, yp) => {
                if zp.member(zdesc, x) {
                    HSlice::Coset { base: ydesc.zero(), sub: yp.clone() }
                } else {
                    HSlice::Empty
                }
            }
            HDesc::GraphH(c) => {
                let n = &x.coords[0];
                if x.coords.len() == 1 && n.is_integer() {
                    HSlice::Coset { base: GroupElem::new(vec![n * c]), sub: SubgroupDesc::trivial() }
                } else {
                    HSlice::Empty
                }
            }
        }
    }

    pub fn contains(&self, zdesc: &GroupDesc, x: &GroupElem, ydesc: &GroupDesc, y: &GroupElem) -> bool {
        match self.slice(zdesc, x, ydesc) {
            HSlice::Empty => false,
            HSlice::Coset { base, sub } => {
                let d = GroupElem::new(y.coords.iter().zip(&base.coords).map(|(a, b)| a - b).collect());
                sub.member(ydesc, &d)
            }
        }
    }
}

impl fmt::Display for HDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HDesc::FullH => f.write_str("fullH"),
            HDesc::ProdH(z, y) => write!(f, "prodH({z}, {y})"),
            HDesc::GraphH(c) => write!(f, "graphH({c})"),
        }
    }
}
