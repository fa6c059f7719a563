//! Computation in free left, right and two-sided adequate monoids.
//!
//! Elements of `FLAd(X)`, `FRAd(X)` and `FAd(X)` are represented by
//! retract-free birooted edge-labelled trees. The crate provides
//!
//! - [`terms`]: the term language of the free (bi)unary monoid, its parser,
//!   non-nested normal forms and the word combinatorics used by the identity
//!   checker;
//! - [`trees`]: the X-tree data model, canonical codes and serialization;
//! - [`retract`]: the retraction engine and its brute-force oracles;
//! - [`algebra`]: multiplication, the unary operations and term evaluation;
//! - [`growth`]: partition tables, sphere enumeration and zig-zag counts;
//! - [`identities`]: decision procedures for (enriched) identities;
//! - [`reproduce`]: the catalogue of reproducible targets run by the CLI.
//!
//! Counting code is generic over the count type and the convex-dominance
//! solver is generic over an exact ordered field; the aliases below fix the
//! concrete types used throughout the CLI.

pub mod algebra;
pub mod growth;
pub mod identities;
pub mod reproduce;
pub mod retract;
pub mod scalar;
pub mod terms;
pub mod trees;

pub use algebra::{Assignment, Element, Flavor};
pub use terms::{parse_term, Letter, NonNestedWord, Term};
pub use trees::{CanonicalCode, XTree};

/// Partition counts in machine integers; exact for every table this crate builds.
pub type PartitionTable64 = growth::PartitionTable<u64>;
/// Partition counts in arbitrary precision.
pub type BigPartitionTable = growth::PartitionTable<num_bigint::BigUint>;
/// Exact rationals used by the dominance solver.
pub type ExactRational = num_rational::BigRational;
/// Small exact rationals; adequate when all count vectors stay tiny.
pub type SmallRational = num_rational::Rational64;
