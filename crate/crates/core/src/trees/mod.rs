//! Birooted edge-labelled directed trees.

mod canon;
mod enumerate;
mod serial;
mod xtree;

pub use canon::CanonicalCode;
pub use enumerate::{all_monogenic, all_trees, rooted_shapes};
pub use xtree::{Arc, Classification, Dir, Edge, TreeError, TrunkInfo, XTree};

#[cfg(test)]
pub(crate) use serial::tests::arb_tree;
