use std::fmt;
use std::sync::Arc;

use loag::{GroupDesc, GroupElem, SubgroupDesc};

use crate::{ChainError, Elem, Ext, HDesc, HSlice};

/// A construction-tree node. Subgroups `Z` and `V` are given in the
/// coordinates of the group part of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    GroupLeaf(GroupDesc),
    TypeI { x: Arc<Algebra>, z: SubgroupDesc, y: Arc<Algebra> },
    TypeII { x: Arc<Algebra>, y: Arc<Algebra> },
    TypeIII { x: Arc<Algebra>, z: SubgroupDesc, v: SubgroupDesc, y: Arc<Algebra> },
    TypeIV { x: Arc<Algebra>, v: SubgroupDesc, y: Arc<Algebra> },
    SublexI { x: Arc<Algebra>, z: SubgroupDesc, y: Arc<Algebra>, h: HDesc },
    SublexII { x: Arc<Algebra>, y: Arc<Algebra>, h: HDesc },
}

/// Product nodes come in two shapes: those with a bottom marker below every
/// first coordinate (types I, III, sublex I) and those with a top marker above
/// every first coordinate (types II, IV, sublex II).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    I,
    II,
}

/// The second coordinates `y` with `(x, Mid y)` in the universe, for a fixed `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MidSlice {
    Empty,
    /// Every element of `Y`.
    Whole,
    /// `base + sub` inside a group leaf `Y`.
    Coset {
        base: GroupElem,
        sub: SubgroupDesc,
    },
}

#[derive(Debug, Clone)]
pub struct Algebra {
    node: Node,
    unit: Elem,
    idems: Vec<Elem>,
    gr_desc: GroupDesc,
    gr_sub: Option<SubgroupDesc>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn group(g: GroupDesc) -> Algebra {
        Algebra {
            unit: Elem::Leaf(g.zero()),
            idems: vec![Elem::Leaf(g.zero())],
            gr_sub: Some(SubgroupDesc::full()),
            gr_desc: g.clone(),
            node: Node::GroupLeaf(g),
        }
    }

    /// Assemble a node, checking arities and the positive-idempotent list.
    /// Order-theoretic preconditions (subgroup chains, discreteness) are the
    /// builder's business.
    pub fn new(node: Node) -> Result<Algebra, ChainError> {
        let (x, y) = match &node {
            Node::GroupLeaf(g) => return Ok(Algebra::group(g.clone())),
            Node::TypeI { x, y, .. }
            | Node::TypeII { x, y }
            | Node::TypeIII { x, y, .. }
            | Node::TypeIV { x, y, .. }
            | Node::SublexI { x, y, .. }
            | Node::SublexII { x, y, .. } => (x.clone(), y.clone()),
        };
        let xg = x.gr_desc();
        for s in node_subgroups(&node) {
            s.check(xg)?;
        }
        if let Some(h) = node_h(&node) {
            let Some(yg) = y.leaf_desc() else {
                return Err(ChainError::StructuralMismatch(format!("sublex factor {y} is not a group")));
            };
            match h {
                HDesc::FullH => {}
                HDesc::ProdH(zp, yp) => {
                    zp.check(xg)?;
                    yp.check(yg)?;
                }
                HDesc::GraphH(_) => {
                    if xg.dims() != 1 || *yg != GroupDesc::Rat {
                        return Err(ChainError::StructuralMismatch(format!(
                            "graph subgroup needs a one-coordinate group part and Q, got {xg} and {yg}"
                        )));
                    }
                }
            }
        }
        let gr_desc = GroupDesc::from_coords(xg.coords().into_iter().chain(y.gr_desc().coords()).collect());
        let mut a = Algebra {
            node,
            unit: Elem::mid(x.unit_ref().clone(), y.unit_ref().clone()),
            idems: Vec::new(),
            gr_desc,
            gr_sub: None,
        };
        a.gr_sub = a.compute_gr_sub();
        if !a.is_valid_elem(&a.unit) {
            return Err(ChainError::StructuralMismatch(format!("unit {} is outside {a}", a.unit)));
        }
        a.idems = a.compute_idempotents()?;
        Ok(a)
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    pub fn unit_ref(&self) -> &Elem {
        &self.unit
    }

    /// Ascending list of idempotents `>= t`.
    pub fn idempotents(&self) -> &[Elem] {
        &self.idems
    }

    /// Ambient group of the group part; the group part is `gr_sub` inside it.
    pub fn gr_desc(&self) -> &GroupDesc {
        &self.gr_desc
    }

    /// The group part as a per-coordinate subgroup of `gr_desc`, when it has that form.
    pub fn gr_sub(&self) -> Option<&SubgroupDesc> {
        self.gr_sub.as_ref()
    }

    pub fn leaf_desc(&self) -> Option<&GroupDesc> {
        match &self.node {
            Node::GroupLeaf(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_group(&self) -> bool {
        self.leaf_desc().is_some()
    }

    pub fn family(&self) -> Option<Family> {
        match &self.node {
            Node::GroupLeaf(_) => None,
            Node::TypeI { .. } | Node::TypeIII { .. } | Node::SublexI { .. } => Some(Family::I),
            Node::TypeII { .. } | Node::TypeIV { .. } | Node::SublexII { .. } => Some(Family::II),
        }
    }

    /// The two factors of a product node.
    pub fn factors(&self) -> Option<(&Algebra, &Algebra)> {
        match &self.node {
            Node::GroupLeaf(_) => None,
            Node::TypeI { x, y, .. }
            | Node::TypeII { x, y }
            | Node::TypeIII { x, y, .. }
            | Node::TypeIV { x, y, .. }
            | Node::SublexI { x, y, .. }
            | Node::SublexII { x, y, .. } => Some((x, y)),
        }
    }

    pub(crate) fn parts(&self) -> (&Algebra, &Algebra) {
        self.factors().expect("product node")
    }

    pub fn h(&self) -> Option<&HDesc> {
        node_h(&self.node)
    }

    /// `Z` of a type I / III / sublex I node.
    pub fn z(&self) -> Option<&SubgroupDesc> {
        match &self.node {
            Node::TypeI { z, .. } | Node::TypeIII { z, .. } | Node::SublexI { z, .. } => Some(z),
            _ => None,
        }
    }

    /// Membership of a first coordinate in the subgroup controlling `*`:
    /// `Z` for the first family, `V` (or the whole group part) for the second.
    pub(crate) fn mul_cond(&self, x: &Elem) -> bool {
        let (a, _) = self.parts();
        match &self.node {
            Node::TypeI { z, .. } | Node::TypeIII { z, .. } | Node::SublexI { z, .. } => a.in_sub(x, z),
            Node::TypeIV { v, .. } => a.in_sub(x, v),
            Node::TypeII { .. } | Node::SublexII { .. } => a.is_gr(x),
            Node::GroupLeaf(_) => unreachable!(),
        }
    }

    pub(crate) fn bot_allowed(&self) -> bool {
        self.family() == Some(Family::I)
    }

    pub(crate) fn top_allowed(&self, x: &Elem) -> bool {
        match self.family() {
            Some(Family::I) => self.mul_cond(x),
            _ => true,
        }
    }

    pub fn mid_slice(&self, x: &Elem) -> MidSlice {
        let (a, b) = self.parts();
        let whole_if = |c: bool| if c { MidSlice::Whole } else { MidSlice::Empty };
        match &self.node {
            Node::TypeI { z, .. } => whole_if(a.in_sub(x, z)),
            Node::TypeIII { v, .. } | Node::TypeIV { v, .. } => whole_if(a.in_sub(x, v)),
            Node::TypeII { .. } => whole_if(a.is_gr(x)),
            Node::SublexI { z, h, .. } => {
                if a.in_sub(x, z) {
                    h_slice(a, b, x, h)
                } else {
                    MidSlice::Empty
                }
            }
            Node::SublexII { h, .. } => {
                if a.is_gr(x) {
                    h_slice(a, b, x, h)
                } else {
                    MidSlice::Empty
                }
            }
            Node::GroupLeaf(_) => unreachable!(),
        }
    }

    pub(crate) fn ext_allowed(&self, x: &Elem, e: &Ext) -> bool {
        match e {
            Ext::Bot => self.bot_allowed(),
            Ext::Top => self.top_allowed(x),
            Ext::Mid(y) => {
                let (_, b) = self.parts();
                b.is_valid_elem(y) && slice_contains(b, &self.mid_slice(x), y)
            }
        }
    }

    pub fn is_valid_elem(&self, e: &Elem) -> bool {
        match (&self.node, e) {
            (Node::GroupLeaf(g), Elem::Leaf(c)) => g.is_valid(c),
            (Node::GroupLeaf(_), _) | (_, Elem::Leaf(_)) => false,
            (_, Elem::Pair(x, ext)) => self.parts().0.is_valid_elem(x) && self.ext_allowed(x, ext),
        }
    }

    fn compute_idempotents(&self) -> Result<Vec<Elem>, ChainError> {
        let (a, b) = self.parts();
        let ta = a.unit_ref().clone();
        let mut out: Vec<Elem> = b.idempotents().iter().map(|e| Elem::mid(ta.clone(), e.clone())).collect();
        out.push(Elem::top(ta));
        for e in &a.idempotents()[1..] {
            let lifted = match self.family() {
                Some(Family::I) => Elem::bot(e.clone()),
                _ => Elem::top(e.clone()),
            };
            out.push(lifted);
        }
        for (i, e) in out.iter().enumerate() {
            if !self.is_valid_elem(e) || self.mul_raw(e, e) != *e || (i > 0 && out[i - 1] >= *e) {
                return Err(ChainError::StructuralMismatch(format!("{e} is not a positive idempotent of {self}")));
            }
        }
        Ok(out)
    }
}

fn node_subgroups(node: &Node) -> Vec<&SubgroupDesc> {
    match node {
        Node::TypeI { z, .. } | Node::SublexI { z, .. } => vec![z],
        Node::TypeIII { z, v, .. } => vec![z, v],
        Node::TypeIV { v, .. } => vec![v],
        _ => vec![],
    }
}

fn node_h(node: &Node) -> Option<&HDesc> {
    match node {
        Node::SublexI { h, .. } | Node::SublexII { h, .. } => Some(h),
        _ => None,
    }
}

fn h_slice(a: &Algebra, b: &Algebra, x: &Elem, h: &HDesc) -> MidSlice {
    if *h == HDesc::FullH {
        return MidSlice::Whole;
    }
    let (Some(c), Some(yg)) = (a.gr_coords(x), b.leaf_desc()) else {
        return MidSlice::Empty;
    };
    match h.slice(a.gr_desc(), &c, yg) {
        HSlice::Empty => MidSlice::Empty,
        HSlice::Coset { base, sub } => MidSlice::Coset { base, sub },
    }
}

pub(crate) fn slice_contains(b: &Algebra, s: &MidSlice, y: &Elem) -> bool {
    match s {
        MidSlice::Empty => false,
        MidSlice::Whole => true,
        MidSlice::Coset { base, sub } => match (b.leaf_desc(), y) {
            (Some(g), Elem::Leaf(c)) => {
                let d = GroupElem::new(c.coords.iter().zip(&base.coords).map(|(p, q)| p - q).collect());
                sub.member(g, &d)
            }
            _ => false,
        },
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::GroupLeaf(g) => write!(f, "{g}"),
            Node::TypeI { x, z, y } => write!(f, "I({x}, {z}, {y})"),
            Node::TypeII { x, y } => write!(f, "II({x}, {y})"),
            Node::TypeIII { x, z, v, y } => write!(f, "III({x}, {z}, {v}, {y})"),
            Node::TypeIV { x, v, y } => write!(f, "IV({x}, {v}, {y})"),
            Node::SublexI { x, z, y, h } => write!(f, "SLI({x}, {z}, {y}, {h})"),
            Node::SublexII { x, y, h } => write!(f, "SLII({x}, {y}, {h})"),
        }
    }
}
