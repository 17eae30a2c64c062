//! Odd involutive FLe-chains presented as construction trees over ordered
//! abelian groups.
//!
//! An [`Algebra`] is a group leaf or a partial (sub)lexicographic product
//! node. Elements are plain terms ([`Elem`]) that carry no reference to their
//! algebra. The [`Chain`] trait gives the unchecked operations used by the
//! law checker and the decomposition; [`ops`] gives the validating versions.

mod algebra;
mod chain;
mod cover;
mod elem;
mod group_part;
mod hdesc;
mod literal;
mod product;
mod sample;

pub mod ops;

pub use algebra::{Algebra, Family, MidSlice, Node};
pub use chain::{Chain, Monoid};
pub use elem::{Elem, Ext};
pub use hdesc::{HDesc, HSlice};
pub use literal::{parse_elem, parse_elem_prefix, LiteralError};
pub use sample::Bounds;

use loag::GroupError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("structural mismatch: {0}")]
    StructuralMismatch(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
