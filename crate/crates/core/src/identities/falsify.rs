use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{IdentityError, IdentitySpec, Witness};
use crate::algebra::{eval_free, eval_term, random_element, Assignment, Element, Flavor};
use crate::growth::{left_sphere, two_sided_sphere, Strategy};
use crate::terms::{Letter, Term};

pub const DEFAULT_BUDGET: usize = 20_000;
/// Every element of the monogenic monoid with at most this many edges is in
/// the systematic pool.
pub const POOL_MAX_EDGES: usize = 4;
const RANDOM_MAX_EDGES: usize = 12;
const SEED: u64 = 0x5eed_ad0e;

/// All elements of the monogenic monoid of `flavor` with at most
/// [`POOL_MAX_EDGES`] edges, by edge count and then canonical code.
pub fn pool(flavor: Flavor) -> &'static [Element] {
    static LEFT: OnceLock<Vec<Element>> = OnceLock::new();
    static RIGHT: OnceLock<Vec<Element>> = OnceLock::new();
    static BOTH: OnceLock<Vec<Element>> = OnceLock::new();
    let left = || {
        (0..=POOL_MAX_EDGES)
            .flat_map(|n| left_sphere(n, Strategy::Structural).expect("small sphere").elements)
            .collect::<Vec<_>>()
    };
    match flavor {
        Flavor::Left => LEFT.get_or_init(left),
        Flavor::Right => RIGHT.get_or_init(|| left().iter().map(Element::reverse).collect()),
        Flavor::TwoSided => BOTH.get_or_init(|| {
            (0..=POOL_MAX_EDGES)
                .flat_map(|n| two_sided_sphere(n).expect("small sphere").elements)
                .collect()
        }),
    }
}

fn separates(id: &IdentitySpec, assignment: Assignment, flavor: Flavor) -> Option<Witness> {
    let lhs = eval_term(&id.lhs, &assignment, flavor).expect("signature checked");
    let rhs = eval_term(&id.rhs, &assignment, flavor).expect("signature checked");
    (lhs != rhs).then_some(Witness { assignment, lhs, rhs })
}

fn first_hit(id: &IdentitySpec, flavor: Flavor, batch: Vec<Assignment>) -> Option<Witness> {
    batch
        .into_par_iter()
        .map(|a| separates(id, a, flavor))
        .find_first(Option::is_some)
        .flatten()
}

/// Tuples over `0..=m` of length `k` that use `m`, in odometer order.
fn graded_tuples(k: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = Some(vec![0; k]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = 0;
        while i < k && succ[i] == m {
            succ[i] = 0;
            i += 1;
        }
        if i < k {
            succ[i] += 1;
            next = Some(succ);
        }
        Some(current)
    })
    .filter(move |t| k == 0 || t.contains(&m))
}

fn left_elem(t: Term) -> Element {
    eval_free(&t, Flavor::Left).expect("left terms evaluate")
}

fn power(n: usize) -> Term {
    Term::from_word(&vec![Letter('a'); n])
}

/// Assignments shaped like the separating morphisms used to prove the
/// necessity of the classification conditions.
fn shaped(id: &IdentitySpec, flavor: Flavor) -> Vec<Assignment> {
    if flavor == Flavor::TwoSided {
        return Vec::new();
    }
    let letters = id.letters();
    let k = letters.len();
    let n = id.lhs.length() + id.rhs.length() + 1;
    let one = Element::identity(Flavor::Left);
    let gen = left_elem(power(1));
    let mut out = Vec::new();
    let big = left_elem(Term::product_of([power(n), Term::plus(power(2 * n)), power(n)]));
    for (i, _) in letters.iter().enumerate() {
        for j in (0..k).map(Some).chain([None]) {
            if j == Some(i) {
                continue;
            }
            let mut a = Assignment::new();
            for (t, &y) in letters.iter().enumerate() {
                let value = if t == i {
                    big.clone()
                } else if Some(t) == j {
                    gen.clone()
                } else {
                    one.clone()
                };
                a.insert(y, value);
            }
            out.push(a);
        }
    }
    if k <= 4 {
        for code in 0..3usize.pow(k as u32) {
            let c: Vec<usize> = (0..k).map(|t| code / 3usize.pow(t as u32) % 3).collect();
            let top = n * (c.iter().max().copied().unwrap_or(0) + 1);
            for i in 0..k {
                let mut a = Assignment::new();
                for (t, &y) in letters.iter().enumerate() {
                    let value = if t == i {
                        left_elem(Term::product(power(c[t]), Term::plus(power(top))))
                    } else {
                        left_elem(power(c[t]))
                    };
                    a.insert(y, value);
                }
                out.push(a);
            }
        }
    }
    if flavor == Flavor::Right {
        for a in &mut out {
            for v in a.0.values_mut() {
                *v = v.reverse();
            }
        }
    }
    out
}

/// Looks for an assignment on which the sides of `id` differ in the
/// monogenic monoid of `flavor`, spending at most `budget` evaluations:
/// first every tuple from [`pool`], graded by the largest element used,
/// then assignments shaped like the classical separating morphisms, then
/// seeded random elements with up to a dozen edges.
pub fn falsify_by_substitution(id: &IdentitySpec, flavor: Flavor, budget: usize) -> Result<Option<Witness>, IdentityError> {
    let letters = id.letters();
    let unit = Assignment(letters.iter().map(|&x| (x, Element::identity(flavor))).collect());
    eval_term(&id.lhs, &unit, flavor)?;
    eval_term(&id.rhs, &unit, flavor)?;
    let mut left = budget;

    let pool = pool(flavor);
    for m in 0..pool.len() {
        if left == 0 {
            return Ok(None);
        }
        let batch: Vec<Assignment> = graded_tuples(letters.len(), m)
            .take(left)
            .map(|t| Assignment(letters.iter().zip(t).map(|(&x, i)| (x, pool[i].clone())).collect()))
            .collect();
        left -= batch.len();
        if let Some(w) = first_hit(id, flavor, batch) {
            return Ok(Some(w));
        }
        if letters.is_empty() {
            return Ok(None);
        }
    }

    let mut batch = shaped(id, flavor);
    batch.truncate(left);
    left -= batch.len();
    if let Some(w) = first_hit(id, flavor, batch) {
        return Ok(Some(w));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let a = [Letter('a')];
    while left > 0 {
        let size = left.min(256);
        left -= size;
        let batch: Vec<Assignment> = (0..size)
            .map(|_| {
                Assignment(
                    letters
                        .iter()
                        .map(|&x| (x, random_element(&mut rng, &a, flavor, RANDOM_MAX_EDGES)))
                        .collect(),
                )
            })
            .collect();
        if let Some(w) = first_hit(id, flavor, batch) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}
