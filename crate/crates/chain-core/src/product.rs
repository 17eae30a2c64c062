use loag::{GroupElem, Rational};

use crate::{Algebra, Elem, Ext, Family, Node};

fn add(a: &GroupElem, b: &GroupElem) -> GroupElem {
    GroupElem::new(a.coords.iter().zip(&b.coords).map(|(p, q)| p + q).collect())
}

fn neg(a: &GroupElem) -> GroupElem {
    GroupElem::new(a.coords.iter().map(|p| -p).collect::<Vec<Rational>>())
}

impl Algebra {
    /// `x * y` for valid arguments; no validation.
    pub(crate) fn mul_raw(&self, p: &Elem, q: &Elem) -> Elem {
        match (self.node(), p, q) {
            (Node::GroupLeaf(_), Elem::Leaf(a), Elem::Leaf(b)) => Elem::Leaf(add(a, b)),
            (_, Elem::Pair(x1, e1), Elem::Pair(x2, e2)) => {
                let (a, b) = self.parts();
                let x = a.mul_raw(x1, x2);
                let both = self.mul_cond(x1) && self.mul_cond(x2);
                let e = match self.family() {
                    Some(Family::I) if !both => Ext::Bot,
                    Some(Family::II) if !both => Ext::Top,
                    _ => match (e1, e2) {
                        (Ext::Bot, _) | (_, Ext::Bot) => Ext::Bot,
                        (Ext::Top, _) | (_, Ext::Top) => Ext::Top,
                        (Ext::Mid(y1), Ext::Mid(y2)) => Ext::mid(b.mul_raw(y1, y2)),
                    },
                };
                Elem::Pair(Box::new(x), e)
            }
            _ => panic!("mismatched element shapes {p} and {q} in {self}"),
        }
    }

    /// Residual complement for a valid argument; no validation.
    pub(crate) fn comp_raw(&self, p: &Elem) -> Elem {
        match (self.node(), p) {
            (Node::GroupLeaf(_), Elem::Leaf(a)) => Elem::Leaf(neg(a)),
            (_, Elem::Pair(x, e)) => {
                let (a, b) = self.parts();
                let nx = a.comp_raw(x);
                let flip = |e: &Ext| match e {
                    Ext::Bot => Ext::Top,
                    Ext::Top => Ext::Bot,
                    Ext::Mid(y) => Ext::mid(b.comp_raw(y)),
                };
                match self.family() {
                    Some(Family::I) if self.mul_cond(x) => Elem::Pair(Box::new(nx), flip(e)),
                    Some(Family::I) => Elem::bot(nx),
                    _ => match e {
                        Ext::Top if a.is_gr(x) => Elem::top(a.x_down_raw(&nx)),
                        _ => Elem::Pair(Box::new(nx), flip(e)),
                    },
                }
            }
            _ => panic!("element {p} does not fit {self}"),
        }
    }
}
