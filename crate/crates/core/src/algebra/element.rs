use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::AlgebraError;
use crate::retract::retract;
use crate::terms::Letter;
use crate::trees::{CanonicalCode, XTree};

/// Which free adequate monoid an element lives in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Free left adequate: `+` only, left trees.
    Left,
    /// Free right adequate: `*` only, right trees.
    Right,
    /// Free adequate: both operations.
    TwoSided,
}

impl Flavor {
    pub fn has_plus(self) -> bool {
        matches!(self, Flavor::Left | Flavor::TwoSided)
    }

    pub fn has_star(self) -> bool {
        matches!(self, Flavor::Right | Flavor::TwoSided)
    }

    pub fn admits(self, t: &XTree) -> bool {
        match self {
            Flavor::Left => t.is_left(),
            Flavor::Right => t.is_right(),
            Flavor::TwoSided => true,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Left => "left",
            Flavor::Right => "right",
            Flavor::TwoSided => "two-sided",
        })
    }
}

/// An element of a free adequate monoid: a retract-free tree with its
/// canonical code. Equality is equality of codes.
#[derive(Clone, Debug)]
pub struct Element {
    tree: XTree,
    code: CanonicalCode,
    flavor: Flavor,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.flavor == other.flavor && self.code == other.code
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.flavor.hash(state);
        self.code.hash(state);
    }
}

impl Element {
    fn from_retracted(tree: XTree, flavor: Flavor) -> Element {
        let code = tree.canonical_code();
        Element { tree, code, flavor }
    }

    /// Wraps a tree the caller knows to be retract-free and of the flavor's
    /// shape; checked in debug builds.
    pub fn from_retract_free(tree: XTree, flavor: Flavor) -> Element {
        debug_assert!(flavor.admits(&tree));
        debug_assert!(crate::retract::is_retract_free(&tree));
        Element::from_retracted(tree, flavor)
    }

    pub fn identity(flavor: Flavor) -> Element {
        Element::from_retracted(XTree::empty(), flavor)
    }

    pub fn generator(label: impl Into<Letter>, flavor: Flavor) -> Element {
        Element::from_retracted(XTree::generator(label), flavor)
    }

    /// Retracts `tree` and wraps it; fails if the tree is not of the
    /// flavor's shape.
    pub fn from_tree(tree: &XTree, flavor: Flavor) -> Result<Element, AlgebraError> {
        if !flavor.admits(tree) {
            return Err(AlgebraError::WrongShape(flavor));
        }
        Ok(Element::from_retracted(retract(tree), flavor))
    }

    pub fn tree(&self) -> &XTree {
        &self.tree
    }

    pub fn code(&self) -> &CanonicalCode {
        &self.code
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn edge_count(&self) -> usize {
        self.tree.edge_count()
    }

    pub fn trunk_len(&self) -> usize {
        self.tree.trunk_len()
    }

    fn same_flavor(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.flavor != other.flavor {
            return Err(AlgebraError::FlavorMismatch(self.flavor, other.flavor));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.same_flavor(other)?;
        if other.edge_count() == 0 {
            return Ok(self.clone());
        }
        if self.edge_count() == 0 {
            return Ok(other.clone());
        }
        Ok(Element::from_retracted(
            retract(&self.tree.glue(&other.tree)),
            self.flavor,
        ))
    }

    pub fn plus_op(&self) -> Result<Element, AlgebraError> {
        if !self.flavor.has_plus() {
            return Err(AlgebraError::NotInSignature('+', self.flavor));
        }
        Ok(Element::from_retracted(
            retract(&self.tree.end_to_start()),
            self.flavor,
        ))
    }

    pub fn star_op(&self) -> Result<Element, AlgebraError> {
        if !self.flavor.has_star() {
            return Err(AlgebraError::NotInSignature('*', self.flavor));
        }
        Ok(Element::from_retracted(
            retract(&self.tree.start_to_end()),
            self.flavor,
        ))
    }

    /// The trunk alone. Already retract-free: a directed path has no
    /// branches.
    pub fn theta(&self) -> Element {
        Element::from_retracted(self.tree.theta(), self.flavor)
    }

    /// The image under the anti-isomorphism between the left and right
    /// monoids (flip every edge, swap the roots).
    pub fn reverse(&self) -> Element {
        let flavor = match self.flavor {
            Flavor::Left => Flavor::Right,
            Flavor::Right => Flavor::Left,
            Flavor::TwoSided => Flavor::TwoSided,
        };
        Element::from_retracted(self.tree.reverse(), flavor)
    }

    pub fn is_idempotent(&self) -> bool {
        self.tree.start() == self.tree.end()
    }

    pub fn equals(&self, other: &Element) -> Result<bool, AlgebraError> {
        self.same_flavor(other)?;
        Ok(self.code == other.code)
    }
}

pub fn equal_elements(s: &Element, t: &Element) -> Result<bool, AlgebraError> {
    s.equals(t)
}

pub fn multiply(s: &Element, t: &Element) -> Result<Element, AlgebraError> {
    s.multiply(t)
}
