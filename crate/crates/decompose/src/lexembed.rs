use std::fmt;

use chain_core::{Elem, Ext, Monoid};
use loag::{GroupDesc, GroupElem};

use crate::RepTree;

/// One coordinate above the base: a group element or an adjoined bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LexEntry {
    Bot,
    Mid(GroupElem),
    Top,
}

/// An element of `H1 lex G2^TB lex ... lex Gn^TB`, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexTuple {
    pub base: GroupElem,
    pub entries: Vec<LexEntry>,
}

impl fmt::Display for LexEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexEntry::Bot => f.write_str("B"),
            LexEntry::Top => f.write_str("T"),
            LexEntry::Mid(g) => write!(f, "{g}"),
        }
    }
}

impl fmt::Display for LexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.base)?;
        for e in &self.entries {
            write!(f, "; {e}")?;
        }
        f.write_str("]")
    }
}

/// The full lex product with adjoined bounds, as a monoid: coordinates
/// multiply independently, with `B` absorbing everything and `T` absorbing
/// group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexTarget {
    base: GroupDesc,
    groups: Vec<GroupDesc>,
}

impl LexTarget {
    pub fn new(t: &RepTree) -> LexTarget {
        LexTarget { base: t.base.clone(), groups: t.levels.iter().map(|l| l.g.clone()).collect() }
    }

    /// Flatten an element of the algebra rebuilt from the same tree.
    pub fn flatten(&self, x: &Elem) -> LexTuple {
        match x {
            Elem::Leaf(g) => LexTuple { base: g.clone(), entries: Vec::new() },
            Elem::Pair(a, e) => {
                let mut t = self.flatten(a);
                t.entries.push(match e {
                    Ext::Bot => LexEntry::Bot,
                    Ext::Top => LexEntry::Top,
                    Ext::Mid(y) => LexEntry::Mid(y.as_leaf().cloned().unwrap_or_else(|| GroupElem::new(Vec::new()))),
                });
                t
            }
        }
    }
}

impl fmt::Display for LexTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for g in &self.groups {
            write!(f, " lex {g}^TB")?;
        }
        Ok(())
    }
}

fn add(a: &GroupElem, b: &GroupElem) -> GroupElem {
    GroupElem::new(a.coords.iter().zip(&b.coords).map(|(p, q)| p + q).collect())
}

impl Monoid for LexTarget {
    type Elem = LexTuple;

    fn unit(&self) -> LexTuple {
        LexTuple { base: self.base.zero(), entries: self.groups.iter().map(|g| LexEntry::Mid(g.zero())).collect() }
    }

    fn mul(&self, x: &LexTuple, y: &LexTuple) -> LexTuple {
        let entries = x
            .entries
            .iter()
            .zip(&y.entries)
            .map(|(a, b)| match (a, b) {
                (LexEntry::Bot, _) | (_, LexEntry::Bot) => LexEntry::Bot,
                (LexEntry::Top, _) | (_, LexEntry::Top) => LexEntry::Top,
                (LexEntry::Mid(p), LexEntry::Mid(q)) => LexEntry::Mid(add(p, q)),
            })
            .collect();
        LexTuple { base: add(&x.base, &y.base), entries }
    }
}
