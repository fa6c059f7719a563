//! Decision procedures for identities over the monogenic free (left, right,
//! two-sided) adequate monoids and over `FLAd(X)`, plus a substitution
//! falsifier used as an independent oracle.

mod checker;
mod dominance;
mod falsify;
mod transform;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Assignment, Element};
use crate::terms::{parse_term, Letter, ParseError, Term, WordError};
use crate::trees::XTree;

pub use checker::{
    check_enriched_flad1, check_enriched_frad1, check_fad1_plain, check_fladx, check_plain,
    decide_enriched_flad1, decide_enriched_frad1, decide_plain, fad1_witness, PlainSide,
};
pub use dominance::dominance_holds;
pub use falsify::{falsify_by_substitution, pool, DEFAULT_BUDGET, POOL_MAX_EDGES};
pub use transform::{dualize_term, embed_rank2, scale_morphism, star_to_plus, trunk_plus_length};

/// `|u|_y` for each letter `y`; absent letters count zero.
pub type CountVector = BTreeMap<Letter, usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected an identity of the form 'u = v'")]
    Malformed,
    #[error("side {0} is not a plain word")]
    NotPlain(String),
    #[error("'^{0}' does not belong to this signature")]
    WrongOperator(char),
}

/// An identity `u ≈ v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySpec {
    pub lhs: Term,
    pub rhs: Term,
    pub alphabet: BTreeSet<Letter>,
}

impl IdentitySpec {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        let mut alphabet = lhs.letters();
        alphabet.extend(rhs.letters());
        IdentitySpec { lhs, rhs, alphabet }
    }

    /// Parses `u = v`; `≈` and `~` are accepted in place of `=`.
    pub fn parse(text: &str) -> Result<Self, IdentityError> {
        let mut parts = text.split(['=', '≈', '~']);
        let (Some(l), Some(r), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(IdentityError::Malformed);
        };
        Self::from_sides(l, r)
    }

    pub fn from_sides(lhs: &str, rhs: &str) -> Result<Self, IdentityError> {
        let lhs = parse_term(lhs.trim())?;
        let rhs = parse_term(rhs.trim())?;
        let has_plus = lhs.has_plus() || rhs.has_plus();
        let has_star = lhs.has_star() || rhs.has_star();
        if has_plus && has_star {
            return Err(IdentityError::WrongOperator('*'));
        }
        Ok(Self::new(lhs, rhs))
    }

    pub fn swapped(&self) -> Self {
        IdentitySpec::new(self.rhs.clone(), self.lhs.clone())
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.alphabet.iter().copied().collect()
    }
}

impl fmt::Display for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// An assignment on which the two sides evaluate to different elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub assignment: Assignment,
    pub lhs: Element,
    pub rhs: Element,
}

/// Which condition of the classification failed first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Letter counts differ.
    I,
    /// Suffix (or prefix) counts differ at some letter.
    II,
    /// A block of the left side is neither dominated nor matched.
    III,
    /// A block of the right side is neither dominated nor matched.
    IV,
    /// Distinct elements of a free monoid with at least two generators.
    Trees,
    /// Distinct words over the two-sided monogenic monoid.
    Words,
}

impl Condition {
    pub fn tag(self) -> &'static str {
        match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
            Condition::Trees => "trees",
            Condition::Words => "words",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub satisfied: bool,
    pub failing_condition: Option<Condition>,
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn satisfied() -> Self {
        CheckResult { satisfied: true, failing_condition: None, witness: None }
    }

    pub fn failed(condition: Condition, witness: Option<Witness>) -> Self {
        CheckResult { satisfied: false, failing_condition: Some(condition), witness }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("results serialize")
    }
}

impl Serialize for CheckResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            satisfied: bool,
            failing_condition: Option<&'static str>,
            witness: Option<BTreeMap<String, &'a XTree>>,
        }
        Out {
            satisfied: self.satisfied,
            failing_condition: self.failing_condition.map(Condition::tag),
            witness: self.witness.as_ref().map(|w| {
                w.assignment
                    .0
                    .iter()
                    .map(|(x, e)| (x.to_string(), e.tree()))
                    .collect()
            }),
        }
        .serialize(serializer)
    }
}
