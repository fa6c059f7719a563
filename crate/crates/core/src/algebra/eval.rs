use std::collections::BTreeMap;

use rand::Rng;

use super::{AlgebraError, Element, Flavor};
use crate::terms::{Letter, Term};

/// Values for the letters of a term.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(pub BTreeMap<Letter, Element>);

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn with(mut self, x: impl Into<Letter>, value: Element) -> Self {
        self.0.insert(x.into(), value);
        self
    }

    pub fn insert(&mut self, x: Letter, value: Element) {
        self.0.insert(x, value);
    }

    pub fn get(&self, x: Letter) -> Option<&Element> {
        self.0.get(&x)
    }

    /// Each letter of `letters` to its own generator.
    pub fn identity(letters: impl IntoIterator<Item = Letter>, flavor: Flavor) -> Self {
        Assignment(
            letters
                .into_iter()
                .map(|x| (x, Element::generator(x, flavor)))
                .collect(),
        )
    }
}

/// Evaluates `t` under `assignment` in the monoid of `flavor`.
pub fn eval_term(t: &Term, assignment: &Assignment, flavor: Flavor) -> Result<Element, AlgebraError> {
    match t {
        Term::Identity => Ok(Element::identity(flavor)),
        Term::Letter(x) => {
            let v = assignment.get(*x).ok_or(AlgebraError::Unassigned(*x))?;
            if v.flavor() != flavor {
                return Err(AlgebraError::FlavorMismatch(flavor, v.flavor()));
            }
            Ok(v.clone())
        }
        Term::Product(l, r) => {
            let l = eval_term(l, assignment, flavor)?;
            let r = eval_term(r, assignment, flavor)?;
            l.multiply(&r)
        }
        Term::Plus(c) => {
            if !flavor.has_plus() {
                return Err(AlgebraError::NotInSignature('+', flavor));
            }
            eval_term(c, assignment, flavor)?.plus_op()
        }
        Term::Star(c) => {
            if !flavor.has_star() {
                return Err(AlgebraError::NotInSignature('*', flavor));
            }
            eval_term(c, assignment, flavor)?.star_op()
        }
    }
}

/// Evaluates with every letter sent to its own generator.
pub fn eval_free(t: &Term, flavor: Flavor) -> Result<Element, AlgebraError> {
    eval_term(t, &Assignment::identity(t.letters(), flavor), flavor)
}

/// A random term of the flavor's signature with at most `depth` levels.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, letters: &[Letter], flavor: Flavor, depth: usize) -> Term {
    if depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.1) {
            Term::Identity
        } else {
            Term::Letter(letters[rng.gen_range(0..letters.len())])
        };
    }
    let unary = |rng: &mut R| match flavor {
        Flavor::Left => true,
        Flavor::Right => false,
        Flavor::TwoSided => rng.gen_bool(0.5),
    };
    match rng.gen_range(0..3) {
        0 => {
            let c = random_term(rng, letters, flavor, depth - 1);
            if unary(rng) {
                Term::plus(c)
            } else {
                Term::star(c)
            }
        }
        _ => Term::product(
            random_term(rng, letters, flavor, depth - 1),
            random_term(rng, letters, flavor, depth - 1),
        ),
    }
}

/// A random element over `letters` with at most `max_edges` edges, drawn by
/// evaluating random terms and rejecting large ones.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, letters: &[Letter], flavor: Flavor, max_edges: usize) -> Element {
    loop {
        let depth = rng.gen_range(1..=5);
        let t = random_term(rng, letters, flavor, depth);
        if t.length() > 4 * max_edges + 4 {
            continue;
        }
        let e = eval_free(&t, flavor).expect("random terms respect the signature");
        if e.edge_count() <= max_edges {
            return e;
        }
    }
}
