use std::collections::BTreeSet;

use num_rational::BigRational;

use super::falsify::{falsify_by_substitution, DEFAULT_BUDGET};
use super::transform::{dualize_term, star_to_plus};
use super::{dominance_holds, CheckResult, Condition, CountVector, IdentityError, IdentitySpec, Witness};
use crate::algebra::{eval_free, eval_term, Assignment, Element, Flavor};
use crate::terms::{
    anchor_factor, mp_plain, plain_counts, pqr_sets, pref_plain, suff_plain,
    to_nonnested, Atom, Letter, NonNestedWord, Side, Term,
};

fn vector(counts: &CountVector, alphabet: &[Letter]) -> Vec<u64> {
    alphabet
        .iter()
        .map(|x| counts.get(x).copied().unwrap_or(0) as u64)
        .collect()
}

fn suffix_counts(u: &NonNestedWord, x: &Atom) -> Result<CountVector, IdentityError> {
    Ok(anchor_factor(u, x, Side::Suffix)?.letter_counts())
}

/// Condition (iii) for the blocks of `u` against `v`.
fn blocks_ok(u: &NonNestedWord, v: &NonNestedWord, alphabet: &[Letter]) -> Result<bool, IdentityError> {
    let blocks: BTreeSet<&Vec<Letter>> = u
        .atoms()
        .iter()
        .filter_map(|a| match a {
            Atom::Plus(w) => Some(w),
            Atom::Letter(_) => None,
        })
        .collect();
    let v_blocks: BTreeSet<&Vec<Letter>> = v
        .atoms()
        .iter()
        .filter_map(|a| match a {
            Atom::Plus(h) => Some(h),
            Atom::Letter(_) => None,
        })
        .collect();
    for w in blocks {
        let w_suffix = suffix_counts(u, &Atom::plus(w))?;
        let letters: BTreeSet<Letter> = w.iter().copied().collect();
        for x in letters {
            let mp_w = plain_counts(mp_plain(w, x).expect("x occurs in w"));
            let sets = pqr_sets(u, w, x)?;
            let candidates: Vec<Vec<u64>> = sets
                .r
                .iter()
                .map(|e| {
                    let joined = e.joined();
                    let m = mp_plain(&joined, x).expect("x occurs in every member");
                    vector(&plain_counts(m), alphabet)
                })
                .collect();
            if dominance_holds::<BigRational>(&vector(&mp_w, alphabet), &candidates) {
                continue;
            }
            let mut matched = false;
            for h in &v_blocks {
                let Some(mp_h) = mp_plain(h, x) else { continue };
                if plain_counts(mp_h) == mp_w && suffix_counts(v, &Atom::plus(h))? == w_suffix {
                    matched = true;
                    break;
                }
            }
            if !matched {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn decide_nonnested(u: &NonNestedWord, v: &NonNestedWord, alphabet: &[Letter]) -> Result<Option<Condition>, IdentityError> {
    if u.letter_counts() != v.letter_counts() {
        return Ok(Some(Condition::I));
    }
    let letters: BTreeSet<Letter> = u.letter_counts().into_keys().collect();
    for x in letters {
        let sx = anchor_factor(u, &Atom::Letter(x), Side::Suffix)?;
        let guarded = sx
            .atoms()
            .iter()
            .any(|a| matches!(a, Atom::Plus(w) if w.contains(&x)));
        if !guarded && sx.letter_counts() != suffix_counts(v, &Atom::Letter(x))? {
            return Ok(Some(Condition::II));
        }
    }
    if !blocks_ok(u, v, alphabet)? {
        return Ok(Some(Condition::III));
    }
    if !blocks_ok(v, u, alphabet)? {
        return Ok(Some(Condition::IV));
    }
    Ok(None)
}

fn require_no(t: &Term, op: char) -> Result<(), IdentityError> {
    let found = match op {
        '*' => t.has_star(),
        _ => t.has_plus(),
    };
    if found {
        Err(IdentityError::WrongOperator(op))
    } else {
        Ok(())
    }
}

/// Decides whether `FLAd(a)` satisfies a `^*`-free identity. Returns the
/// first failing condition, or `None` when the identity holds.
pub fn decide_enriched_flad1(id: &IdentitySpec) -> Result<Option<Condition>, IdentityError> {
    require_no(&id.lhs, '*')?;
    require_no(&id.rhs, '*')?;
    let u = to_nonnested(&id.lhs)?;
    let v = to_nonnested(&id.rhs)?;
    decide_nonnested(&u, &v, &id.letters())
}

/// The right-handed version: terms use `^*`, decided through the
/// anti-isomorphism with the left monoid.
pub fn decide_enriched_frad1(id: &IdentitySpec) -> Result<Option<Condition>, IdentityError> {
    require_no(&id.lhs, '+')?;
    require_no(&id.rhs, '+')?;
    decide_enriched_flad1(&IdentitySpec::new(
        star_to_plus(&dualize_term(&id.lhs)),
        star_to_plus(&dualize_term(&id.rhs)),
    ))
}

fn with_witness(id: &IdentitySpec, flavor: Flavor, verdict: Option<Condition>) -> Result<CheckResult, IdentityError> {
    Ok(match verdict {
        None => CheckResult::satisfied(),
        Some(c) => CheckResult::failed(c, falsify_by_substitution(id, flavor, DEFAULT_BUDGET)?),
    })
}

pub fn check_enriched_flad1(id: &IdentitySpec) -> Result<CheckResult, IdentityError> {
    with_witness(id, Flavor::Left, decide_enriched_flad1(id)?)
}

pub fn check_enriched_frad1(id: &IdentitySpec) -> Result<CheckResult, IdentityError> {
    with_witness(id, Flavor::Right, decide_enriched_frad1(id)?)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PlainSide {
    Left,
    Right,
}

fn plain_sides(id: &IdentitySpec) -> Result<(Vec<Letter>, Vec<Letter>), IdentityError> {
    let u = id.lhs.as_plain_word().ok_or_else(|| IdentityError::NotPlain(id.lhs.to_string()))?;
    let v = id.rhs.as_plain_word().ok_or_else(|| IdentityError::NotPlain(id.rhs.to_string()))?;
    Ok((u, v))
}

/// Plain identities over `FLAd(a)` (suffix counts) or `FRAd(a)` (prefix counts).
pub fn decide_plain(id: &IdentitySpec, side: PlainSide) -> Result<Option<Condition>, IdentityError> {
    let (u, v) = plain_sides(id)?;
    if plain_counts(&u) != plain_counts(&v) {
        return Ok(Some(Condition::I));
    }
    for &x in &id.alphabet {
        let same = match side {
            PlainSide::Left => match (suff_plain(&u, x), suff_plain(&v, x)) {
                (Some(a), Some(b)) => plain_counts(a) == plain_counts(b),
                _ => true,
            },
            PlainSide::Right => plain_counts(pref_plain(&u, x)) == plain_counts(pref_plain(&v, x)),
        };
        if !same {
            return Ok(Some(Condition::II));
        }
    }
    Ok(None)
}

pub fn check_plain(id: &IdentitySpec, side: PlainSide) -> Result<CheckResult, IdentityError> {
    let flavor = match side {
        PlainSide::Left => Flavor::Left,
        PlainSide::Right => Flavor::Right,
    };
    with_witness(id, flavor, decide_plain(id, side)?)
}

/// Equality in `FLAd(Σ)`: evaluate both sides on the generators.
pub fn check_fladx(id: &IdentitySpec) -> Result<CheckResult, IdentityError> {
    require_no(&id.lhs, '*')?;
    require_no(&id.rhs, '*')?;
    let lhs = eval_free(&id.lhs, Flavor::Left)?;
    let rhs = eval_free(&id.rhs, Flavor::Left)?;
    if lhs == rhs {
        return Ok(CheckResult::satisfied());
    }
    let assignment = Assignment::identity(id.alphabet.iter().copied(), Flavor::Left);
    Ok(CheckResult::failed(Condition::Trees, Some(Witness { assignment, lhs, rhs })))
}

/// `σ_i ↦ (a(a^{N_i})^*)^+ a` with `N_i = base + i` for the `i`-th letter.
pub fn fad1_witness(letters: &[Letter], base: usize) -> Assignment {
    let a = Letter('a');
    let mut out = Assignment::new();
    for (i, &x) in letters.iter().enumerate() {
        let power = Term::from_word(&vec![a; base + i]);
        let t = Term::product(
            Term::plus(Term::product(Term::Letter(a), Term::star(power))),
            Term::Letter(a),
        );
        out.insert(x, eval_free(&t, Flavor::TwoSided).expect("two-sided terms evaluate"));
    }
    out
}

/// Plain identities over `FAd(a)` hold only when the words coincide.
pub fn check_fad1_plain(id: &IdentitySpec) -> Result<CheckResult, IdentityError> {
    let (u, v) = plain_sides(id)?;
    if u == v {
        return Ok(CheckResult::satisfied());
    }
    let assignment = fad1_witness(&id.letters(), u.len().max(v.len()) + 1);
    let lhs: Element = eval_term(&id.lhs, &assignment, Flavor::TwoSided)?;
    let rhs: Element = eval_term(&id.rhs, &assignment, Flavor::TwoSided)?;
    debug_assert!(lhs != rhs, "distinct words separate under the witness");
    Ok(CheckResult::failed(Condition::Words, Some(Witness { assignment, lhs, rhs })))
}
