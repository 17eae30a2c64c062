//! Decomposition of odd involutive FLe-chains with finitely many positive
//! idempotents.
//!
//! A [`Step`] fixes the smallest strictly positive idempotent `u` and
//! classifies elements against it. The quotient views ([`BetaView`],
//! [`GammaView`], [`TauGeU`]) are chains in their own right. Iterating the
//! step gives a [`RepTree`], which [`rebuild`] turns back into an algebra
//! that the original embeds into via [`Embedding`].

mod lexembed;
mod rep;
mod step;
mod views;

pub use lexembed::{LexEntry, LexTarget, LexTuple};
pub use rep::{group_representation, rebuild, Embedding, Iota, Level, LevelZ, RepTree};
pub use step::{branch, smallest_pos_idem, Branch, ElemClass, Step};
pub use views::{BetaClass, BetaView, GammaClass, GammaView, TauGeU};

use chain_core::ChainError;
use plex::{PlexError, SyntaxError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("the unit is the only positive idempotent")]
    OnlyUnitIdempotent,
    #[error("wrong branch: needs {0:?}")]
    WrongBranch(Branch),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Build(#[from] PlexError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}
