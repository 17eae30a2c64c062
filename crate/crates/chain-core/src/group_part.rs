use loag::{GroupElem, SubgroupDesc};

use crate::{Algebra, Elem, Ext, HDesc, MidSlice, Node};

impl Algebra {
    /// Coordinates of an invertible element in `gr_desc`; `None` when `e` is
    /// not invertible.
    pub fn gr_coords(&self, e: &Elem) -> Option<GroupElem> {
        match (self.node(), e) {
            (Node::GroupLeaf(g), Elem::Leaf(c)) if g.is_valid(c) => Some(c.clone()),
            (Node::GroupLeaf(_), _) => None,
            (_, Elem::Pair(x, Ext::Mid(y))) => {
                let (a, b) = self.parts();
                Some(a.gr_coords(x)?.concat(&b.gr_coords(y)?))
            }
            _ => None,
        }
    }

    pub fn is_gr(&self, e: &Elem) -> bool {
        self.gr_coords(e).is_some()
    }

    /// Membership of `e` in a subgroup of the group part, given in `gr_desc` coordinates.
    pub fn in_sub(&self, e: &Elem, s: &SubgroupDesc) -> bool {
        self.gr_coords(e).is_some_and(|c| s.member(self.gr_desc(), &c))
    }

    /// Inverse of [`Algebra::gr_coords`].
    pub fn gr_elem(&self, c: &GroupElem) -> Option<Elem> {
        if c.coords.len() != self.gr_desc().dims() {
            return None;
        }
        match self.node() {
            Node::GroupLeaf(g) => g.is_valid(c).then(|| Elem::Leaf(c.clone())),
            _ => {
                let (a, b) = self.parts();
                let (h, t) = c.split_at(a.gr_desc().dims());
                let e = Elem::mid(a.gr_elem(&h)?, b.gr_elem(&t)?);
                self.is_valid_elem(&e).then_some(e)
            }
        }
    }

    pub(crate) fn compute_gr_sub(&self) -> Option<SubgroupDesc> {
        let (a, b) = self.parts();
        let xg = a.gr_desc();
        let xs = a.gr_sub()?;
        let ys = b.gr_sub()?;
        let head = |s: &SubgroupDesc| s.meet(xs, xg);
        let (h, t) = match self.node() {
            Node::TypeI { z, .. } | Node::TypeIII { v: z, .. } | Node::TypeIV { v: z, .. } => (head(z), ys.clone()),
            Node::TypeII { .. } => (xs.clone(), ys.clone()),
            Node::SublexI { z, h, .. } => match h {
                HDesc::FullH => (head(z), ys.clone()),
                HDesc::ProdH(zp, yp) => (head(z).meet(zp, xg), yp.meet(ys, b.gr_desc())),
                HDesc::GraphH(_) => return None,
            },
            Node::SublexII { h, .. } => match h {
                HDesc::FullH => (xs.clone(), ys.clone()),
                HDesc::ProdH(zp, yp) => (head(zp), yp.meet(ys, b.gr_desc())),
                HDesc::GraphH(_) => return None,
            },
            Node::GroupLeaf(_) => unreachable!(),
        };
        Some(SubgroupDesc::concat(&h, xg, &t, b.gr_desc()))
    }

    /// Canonical point of the component of an invertible element: the same
    /// first coordinate with the second coordinate moved to the base of its
    /// slice (`0`, or `n*c` for a graph subgroup). Defined when the second
    /// factor is a group.
    pub fn canonical_rep(&self, e: &Elem) -> Option<Elem> {
        let Elem::Pair(x, Ext::Mid(_)) = e else {
            return None;
        };
        let (_, b) = self.factors()?;
        let g = b.leaf_desc()?;
        if !self.is_valid_elem(e) {
            return None;
        }
        let base = match self.mid_slice(x) {
            MidSlice::Whole => g.zero(),
            MidSlice::Coset { base, .. } => base,
            MidSlice::Empty => return None,
        };
        Some(Elem::mid((**x).clone(), Elem::Leaf(base)))
    }
}
