//! Linearly ordered abelian groups with exact rational coordinates.
//!
//! A group is a flat lexicographic list of coordinates, each one of
//! `Z`, `Q` or the trivial group `1`. Subgroups are given per coordinate
//! (`full`, `triv`, `idx m`), convex subgroups are coordinate tails.

mod group;
mod rational;
mod subgroup;
mod tail;

pub use group::{g_add, g_cmp, g_neg, g_sub, Coord, GroupDesc, GroupElem};
pub use rational::{parse_rational, rat, Rational};
pub use subgroup::{g_member, CosetStep, SubSpec, SubgroupDesc};
pub use tail::{divisible_hull, lemma_a_embed, quotient_by_tail, ConvexTail, TailSplit};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("convex tail of length {k} out of range for {dims} coordinates")]
    TailOutOfRange { k: usize, dims: usize },
}
