//! Retraction of X-trees onto their retract-free retracts.

mod engine;
mod hom;
mod oracle;

use thiserror::Error;

pub use engine::{
    branches, find_foldable_branch, foldable_branches, is_foldable, is_retract_free, retract,
    retract_by, retract_generic, retract_left_monogenic, Branch,
};
pub use hom::hom_exists;
pub use oracle::{
    endomorphism_oracle, for_each_endomorphism, for_each_idempotent, oracle_retract_free,
    strongly_retracts, Endomorphism, DEFAULT_ORACLE_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RetractError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("tree has {edges} edges, above the oracle bound of {bound}")]
    SizeBound { edges: usize, bound: usize },
}
