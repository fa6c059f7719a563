//! Terms of the free unary and biunary monoids, their non-nested normal
//! forms, and the prefix/suffix combinatorics on non-nested words.

mod term;
mod words;

pub use term::{parse_term, word, Letter, ParseError, ParseErrorKind, Term};
pub use words::{
    anchor_factor, letter_counts, mp, mp_plain, plain_counts, plain_projection, pqr_sets,
    pref_plain, suff_plain, to_nonnested, word_stats, AnchoredBlock, Atom, NonNestedWord, PqrSets,
    Side, WordError, WordStats,
};

#[cfg(test)]
pub(crate) use term::tests::arb_term;
