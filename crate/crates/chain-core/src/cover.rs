use loag::GroupElem;

use crate::{Algebra, Elem, Ext, MidSlice, Node};

/// Neighbour of an element inside the fibre over its first coordinate.
enum Step {
    Found(Ext),
    /// Nothing further inside the fibre; continue in the next fibre.
    Edge,
    /// Elements further inside the fibre but no immediate one.
    Dense,
}

/// Extreme point of a `Mid` slice.
enum Bound {
    At(Elem),
    Unbounded,
    Empty,
}

fn shift(c: &GroupElem, index: usize, step: &loag::Rational, dir: i64) -> GroupElem {
    let mut out = c.clone();
    out.coords[index] += step * loag::Rational::from_integer(dir.into());
    out
}

impl Algebra {
    /// Greatest element, if any. Only trivial group blocks are bounded.
    pub fn max_elem(&self) -> Option<Elem> {
        match self.node() {
            Node::GroupLeaf(g) => g.is_trivial().then(|| Elem::Leaf(g.zero())),
            _ => {
                let m = self.parts().0.max_elem()?;
                let e = self.fibre_max(&m)?;
                Some(Elem::Pair(Box::new(m), e))
            }
        }
    }

    pub fn min_elem(&self) -> Option<Elem> {
        match self.node() {
            Node::GroupLeaf(g) => g.is_trivial().then(|| Elem::Leaf(g.zero())),
            _ => {
                let m = self.parts().0.min_elem()?;
                let e = self.fibre_min(&m)?;
                Some(Elem::Pair(Box::new(m), e))
            }
        }
    }

    fn mid_max(&self, x: &Elem) -> Bound {
        match self.mid_slice(x) {
            MidSlice::Empty => Bound::Empty,
            MidSlice::Whole => self.parts().1.max_elem().map_or(Bound::Unbounded, Bound::At),
            MidSlice::Coset { base, sub } => coset_point(self, base, &sub),
        }
    }

    fn mid_min(&self, x: &Elem) -> Bound {
        match self.mid_slice(x) {
            MidSlice::Empty => Bound::Empty,
            MidSlice::Whole => self.parts().1.min_elem().map_or(Bound::Unbounded, Bound::At),
            MidSlice::Coset { base, sub } => coset_point(self, base, &sub),
        }
    }

    fn fibre_max(&self, x: &Elem) -> Option<Ext> {
        if self.top_allowed(x) {
            return Some(Ext::Top);
        }
        match self.mid_max(x) {
            Bound::At(m) => Some(Ext::mid(m)),
            Bound::Unbounded => None,
            Bound::Empty => self.bot_allowed().then_some(Ext::Bot),
        }
    }

    fn fibre_min(&self, x: &Elem) -> Option<Ext> {
        if self.bot_allowed() {
            return Some(Ext::Bot);
        }
        match self.mid_min(x) {
            Bound::At(m) => Some(Ext::mid(m)),
            Bound::Unbounded => None,
            Bound::Empty => self.top_allowed(x).then_some(Ext::Top),
        }
    }

    fn below_mid(&self) -> Step {
        if self.bot_allowed() {
            Step::Found(Ext::Bot)
        } else {
            Step::Edge
        }
    }

    fn above_mid(&self, x: &Elem) -> Step {
        if self.top_allowed(x) {
            Step::Found(Ext::Top)
        } else {
            Step::Edge
        }
    }

    fn fibre_pred(&self, x: &Elem, e: &Ext) -> Step {
        let b = self.parts().1;
        match e {
            Ext::Bot => Step::Edge,
            Ext::Top => match self.mid_max(x) {
                Bound::At(m) => Step::Found(Ext::mid(m)),
                Bound::Unbounded => Step::Dense,
                Bound::Empty => self.below_mid(),
            },
            Ext::Mid(y) => match self.mid_slice(x) {
                MidSlice::Coset { sub, .. } => match (sub.coset_step(b.leaf_desc().unwrap()), &**y) {
                    (loag::CosetStep::Discrete { index, step }, Elem::Leaf(c)) => {
                        Step::Found(Ext::mid(Elem::Leaf(shift(c, index, &step, -1))))
                    }
                    (loag::CosetStep::Single, _) => self.below_mid(),
                    _ => Step::Dense,
                },
                _ => {
                    let yd = b.x_down_raw(y);
                    if yd < **y {
                        Step::Found(Ext::mid(yd))
                    } else if b.min_elem().as_ref() == Some(&**y) {
                        self.below_mid()
                    } else {
                        Step::Dense
                    }
                }
            },
        }
    }

    fn fibre_succ(&self, x: &Elem, e: &Ext) -> Step {
        let b = self.parts().1;
        match e {
            Ext::Top => Step::Edge,
            Ext::Bot => match self.mid_min(x) {
                Bound::At(m) => Step::Found(Ext::mid(m)),
                Bound::Unbounded => Step::Dense,
                Bound::Empty => self.above_mid(x),
            },
            Ext::Mid(y) => match self.mid_slice(x) {
                MidSlice::Coset { sub, .. } => match (sub.coset_step(b.leaf_desc().unwrap()), &**y) {
                    (loag::CosetStep::Discrete { index, step }, Elem::Leaf(c)) => {
                        Step::Found(Ext::mid(Elem::Leaf(shift(c, index, &step, 1))))
                    }
                    (loag::CosetStep::Single, _) => self.above_mid(x),
                    _ => Step::Dense,
                },
                _ => {
                    let yu = b.x_up_raw(y);
                    if yu > **y {
                        Step::Found(Ext::mid(yu))
                    } else if b.max_elem().as_ref() == Some(&**y) {
                        self.above_mid(x)
                    } else {
                        Step::Dense
                    }
                }
            },
        }
    }

    /// The element covered by `p`, or `p` itself when there is none.
    pub(crate) fn x_down_raw(&self, p: &Elem) -> Elem {
        match (self.node(), p) {
            (Node::GroupLeaf(g), Elem::Leaf(c)) => Elem::Leaf(g.pred(c).unwrap_or_else(|| c.clone())),
            (_, Elem::Pair(x, e)) => match self.fibre_pred(x, e) {
                Step::Found(e) => Elem::Pair(x.clone(), e),
                Step::Dense => p.clone(),
                Step::Edge => {
                    let xd = self.parts().0.x_down_raw(x);
                    if xd < **x {
                        if let Some(e) = self.fibre_max(&xd) {
                            return Elem::Pair(Box::new(xd), e);
                        }
                    }
                    p.clone()
                }
            },
            _ => panic!("element {p} does not fit {self}"),
        }
    }

    /// The element covering `p`, or `p` itself when there is none.
    pub(crate) fn x_up_raw(&self, p: &Elem) -> Elem {
        match (self.node(), p) {
            (Node::GroupLeaf(g), Elem::Leaf(c)) => Elem::Leaf(g.succ(c).unwrap_or_else(|| c.clone())),
            (_, Elem::Pair(x, e)) => match self.fibre_succ(x, e) {
                Step::Found(e) => Elem::Pair(x.clone(), e),
                Step::Dense => p.clone(),
                Step::Edge => {
                    let xu = self.parts().0.x_up_raw(x);
                    if xu > **x {
                        if let Some(e) = self.fibre_min(&xu) {
                            return Elem::Pair(Box::new(xu), e);
                        }
                    }
                    p.clone()
                }
            },
            _ => panic!("element {p} does not fit {self}"),
        }
    }
}

fn coset_point(a: &Algebra, base: GroupElem, sub: &loag::SubgroupDesc) -> Bound {
    match sub.coset_step(a.parts().1.leaf_desc().unwrap()) {
        loag::CosetStep::Single => Bound::At(Elem::Leaf(base)),
        _ => Bound::Unbounded,
    }
}
