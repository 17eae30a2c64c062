//! Validated construction of partial lexicographic products (types I to IV)
//! and partial sublex products, plus the text grammar for algebra specs.

mod build;
mod syntax;

pub use build::{
    build_sublex, build_type, discretely_embedded, nu_onto, verify_covers, Precondition, SublexKind, TypeKind,
};
pub use chain_core::HDesc;
pub use syntax::{parse_algebra, parse_group, parse_h, parse_sub, SpecError, SyntaxError, Tokens};

use chain_core::ChainError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlexError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(Precondition),
    #[error(transparent)]
    Chain(#[from] ChainError),
}
