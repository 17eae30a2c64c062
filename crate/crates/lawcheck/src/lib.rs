//! Seeded law checking for odd involutive FLe-chains.
//!
//! Every check samples deterministically from a [`SampleStream`], compares
//! two computed sides exactly and returns a [`Report`] with the first
//! witnesses of failure. Checks are generic over [`chain_core::Chain`], so the
//! quotient views of `decompose` and the mutated chains of [`Mutant`] can be
//! checked the same way as built algebras.

mod hom;
mod laws;
mod mutation;
mod report;
mod sample;
mod tables;

pub use hom::{check_hom, Claims};
pub use laws::{check_fle_laws, check_law, check_named, ALL_LAWS, FLE_LAWS, NAMED_LAWS};
pub use mutation::{self_test, Mutant, Mutation};
pub use report::{render, CellStat, Format, Report, Violation, MAX_WITNESSES};
pub use sample::SampleStream;
pub use tables::{check_table, TABLE_LAWS};

use decompose::{Branch, DecomposeError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("unknown law {0:?}")]
    UnknownLaw(String),
    #[error("wrong branch: the check needs {0:?}")]
    WrongBranch(Branch),
    #[error(transparent)]
    Decompose(DecomposeError),
}

impl From<DecomposeError> for LawError {
    fn from(e: DecomposeError) -> LawError {
        match e {
            DecomposeError::WrongBranch(b) => LawError::WrongBranch(b),
            e => LawError::Decompose(e),
        }
    }
}
