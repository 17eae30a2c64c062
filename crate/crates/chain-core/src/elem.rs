use std::fmt;

use loag::GroupElem;

/// Element term mirroring the construction tree. The derived order is the
/// lexicographic order of any algebra the term is valid in.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Leaf(GroupElem),
    Pair(Box<Elem>, Ext),
}

/// Second coordinate of a product element: `Bot < Mid(_) < Top`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    Bot,
    Mid(Box<Elem>),
    Top,
}

impl Elem {
    pub fn pair(first: Elem, second: Ext) -> Elem {
        Elem::Pair(Box::new(first), second)
    }

    pub fn mid(first: Elem, second: Elem) -> Elem {
        Elem::Pair(Box::new(first), Ext::Mid(Box::new(second)))
    }

    pub fn top(first: Elem) -> Elem {
        Elem::Pair(Box::new(first), Ext::Top)
    }

    pub fn bot(first: Elem) -> Elem {
        Elem::Pair(Box::new(first), Ext::Bot)
    }

    pub fn ints(xs: &[i64]) -> Elem {
        Elem::Leaf(GroupElem::from_ints(xs))
    }

    pub fn first(&self) -> Option<&Elem> {
        match self {
            Elem::Pair(x, _) => Some(x),
            Elem::Leaf(_) => None,
        }
    }

    pub fn second(&self) -> Option<&Ext> {
        match self {
            Elem::Pair(_, e) => Some(e),
            Elem::Leaf(_) => None,
        }
    }

    pub fn as_leaf(&self) -> Option<&GroupElem> {
        match self {
            Elem::Leaf(g) => Some(g),
            Elem::Pair(..) => None,
        }
    }
}

impl Ext {
    pub fn mid(e: Elem) -> Ext {
        Ext::Mid(Box::new(e))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Leaf(g) => write!(f, "{g}"),
            Elem::Pair(x, e) => write!(f, "({x}, {e})"),
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Bot => f.write_str("B"),
            Ext::Top => f.write_str("T"),
            Ext::Mid(y) => write!(f, "{y}"),
        }
    }
}
