use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use super::term::{Letter, Term};

/// A symbol of the extended alphabet `Σ ∪ F(Σ)⁺`.
///
/// `Plus` carries a plain word; `Plus(vec![])` is `ε⁺`, which only appears as
/// the sentinel block in [`AnchoredBlock`]s. Atoms compare structurally, so
/// two occurrences of `(ab)⁺` are the same support element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Letter(Letter),
    Plus(Vec<Letter>),
}

impl Atom {
    pub fn plus(word: &[Letter]) -> Atom {
        Atom::Plus(word.to_vec())
    }

    pub fn is_letter(&self) -> bool {
        matches!(self, Atom::Letter(_))
    }
}

fn fmt_plain(word: &[Letter], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for l in word {
        write!(f, "{l}")?;
    }
    Ok(())
}

fn fmt_block(word: &[Letter], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match word.len() {
        0 => write!(f, "1^+"),
        1 => write!(f, "{}^+", word[0]),
        _ => {
            write!(f, "(")?;
            fmt_plain(word, f)?;
            write!(f, ")^+")
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Letter(l) => write!(f, "{l}"),
            Atom::Plus(w) => fmt_block(w, f),
        }
    }
}

/// A word over `Σ ∪ F(Σ)⁺`: no `+`-block contains another.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonNestedWord(pub Vec<Atom>);

impl NonNestedWord {
    pub fn empty() -> Self {
        NonNestedWord(Vec::new())
    }

    pub fn from_plain(word: &[Letter]) -> Self {
        NonNestedWord(word.iter().copied().map(Atom::Letter).collect())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The term this word denotes (left-associated products).
    pub fn to_term(&self) -> Term {
        Term::product_of(self.0.iter().map(|a| match a {
            Atom::Letter(l) => Term::Letter(*l),
            Atom::Plus(w) => Term::plus(Term::from_word(w)),
        }))
    }

    /// Letter occurrences, ignoring everything inside `+`-blocks.
    pub fn letter_counts(&self) -> BTreeMap<Letter, usize> {
        letter_counts(&self.0)
    }

    pub fn support(&self) -> BTreeSet<Atom> {
        self.0.iter().cloned().collect()
    }
}

impl fmt::Display for NonNestedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for a in &self.0 {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl From<Vec<Atom>> for NonNestedWord {
    fn from(atoms: Vec<Atom>) -> Self {
        NonNestedWord(atoms)
    }
}

/// `|u|_y` for every letter `y` with a positive count.
pub fn letter_counts(atoms: &[Atom]) -> BTreeMap<Letter, usize> {
    let mut out = BTreeMap::new();
    for a in atoms {
        if let Atom::Letter(l) = a {
            *out.entry(*l).or_insert(0) += 1;
        }
    }
    out
}

/// `|w|_y` for a plain word.
pub fn plain_counts(word: &[Letter]) -> BTreeMap<Letter, usize> {
    let mut out = BTreeMap::new();
    for l in word {
        *out.entry(*l).or_insert(0) += 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("atom {0} not in support")]
    NotInSupport(String),
    #[error("normalisation applies to left-signature terms only; found '^*'")]
    StarNotAllowed,
    #[error("{0}")]
    Precondition(String),
}

/// Rewrites a `^*`-free term to a non-nested word equal to it in `FLAd(a)`,
/// using `ε⁺ → ε`, `(x⁺)⁺ → x⁺` and `(xy⁺z)⁺ → (xy)⁺(xz)⁺`, innermost first.
pub fn to_nonnested(t: &Term) -> Result<NonNestedWord, WordError> {
    normalise(t).map(NonNestedWord)
}

fn normalise(t: &Term) -> Result<Vec<Atom>, WordError> {
    match t {
        Term::Identity => Ok(Vec::new()),
        Term::Letter(l) => Ok(vec![Atom::Letter(*l)]),
        Term::Product(l, r) => {
            let mut out = normalise(l)?;
            out.extend(normalise(r)?);
            Ok(out)
        }
        Term::Plus(c) => Ok(plus_of(&normalise(c)?)),
        Term::Star(_) => Err(WordError::StarNotAllowed),
    }
}

/// `(word)⁺` for a non-nested `word`, re-expressed without nesting.
///
/// Each step removes the leftmost block from under the outer `+`, so the
/// recursion depth is bounded by the number of blocks.
fn plus_of(word: &[Atom]) -> Vec<Atom> {
    let Some(split) = word.iter().position(|a| !a.is_letter()) else {
        return if word.is_empty() {
            Vec::new()
        } else {
            vec![Atom::Plus(plain_letters(word))]
        };
    };
    let x = &word[..split];
    let Atom::Plus(y) = &word[split] else {
        unreachable!()
    };
    let z = &word[split + 1..];

    let mut xy = plain_letters(x);
    xy.extend_from_slice(y);
    let mut out = Vec::new();
    if !xy.is_empty() {
        out.push(Atom::Plus(xy));
    }
    let xz: Vec<Atom> = x.iter().chain(z).cloned().collect();
    out.extend(plus_of(&xz));
    out
}

fn plain_letters(atoms: &[Atom]) -> Vec<Letter> {
    atoms
        .iter()
        .filter_map(|a| match a {
            Atom::Letter(l) => Some(*l),
            Atom::Plus(_) => None,
        })
        .collect()
}

/// Letter counts and support of a non-nested word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordStats {
    pub counts: BTreeMap<Atom, usize>,
    pub support: BTreeSet<Atom>,
}

impl WordStats {
    /// `|u|_x`; zero for absent atoms.
    pub fn count(&self, atom: &Atom) -> usize {
        self.counts.get(atom).copied().unwrap_or(0)
    }
}

pub fn word_stats(u: &NonNestedWord) -> WordStats {
    let mut counts = BTreeMap::new();
    for a in u.atoms() {
        *counts.entry(a.clone()).or_insert(0) += 1;
    }
    let support = counts.keys().cloned().collect();
    WordStats { counts, support }
}

/// `(mp_u(x), mp'_u(x))`: the longest prefix ending in `x`, and that prefix
/// with its final `x` removed.
pub fn mp(u: &NonNestedWord, x: &Atom) -> Result<(NonNestedWord, NonNestedWord), WordError> {
    let last = u
        .atoms()
        .iter()
        .rposition(|a| a == x)
        .ok_or_else(|| WordError::NotInSupport(x.to_string()))?;
    let with = u.atoms()[..=last].to_vec();
    let without = u.atoms()[..last].to_vec();
    Ok((NonNestedWord(with), NonNestedWord(without)))
}

/// `mp_w(x)` for a plain word; `None` when `x` does not occur.
pub fn mp_plain(w: &[Letter], x: Letter) -> Option<&[Letter]> {
    w.iter().rposition(|&l| l == x).map(|i| &w[..=i])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Suffix,
    Prefix,
}

/// `suff_u(x)` or `pref_u(x)`.
///
/// For `Suffix` and a letter this is the shortest suffix containing `x`; for
/// a block it is that suffix extended leftwards over any further blocks up to
/// (not including) the next letter. `Prefix` is the shortest prefix
/// containing `x`, or all of `u` when `x` is absent.
pub fn anchor_factor(u: &NonNestedWord, x: &Atom, side: Side) -> Result<NonNestedWord, WordError> {
    let atoms = u.atoms();
    match side {
        Side::Suffix => {
            let last = atoms
                .iter()
                .rposition(|a| a == x)
                .ok_or_else(|| WordError::NotInSupport(x.to_string()))?;
            let mut begin = last;
            if !x.is_letter() {
                while begin > 0 && !atoms[begin - 1].is_letter() {
                    begin -= 1;
                }
            }
            Ok(NonNestedWord(atoms[begin..].to_vec()))
        }
        Side::Prefix => Ok(match atoms.iter().position(|a| a == x) {
            Some(first) => NonNestedWord(atoms[..=first].to_vec()),
            None => u.clone(),
        }),
    }
}

/// `suff_u(x)` for a plain word and a letter in it.
pub fn suff_plain(u: &[Letter], x: Letter) -> Option<&[Letter]> {
    u.iter().rposition(|&l| l == x).map(|i| &u[i..])
}

/// `pref_u(x)` for a plain word: the shortest prefix containing `x`, or `u`.
pub fn pref_plain(u: &[Letter], x: Letter) -> &[Letter] {
    match u.iter().position(|&l| l == x) {
        Some(i) => &u[..=i],
        None => u,
    }
}

/// `ū`: the plain word left after deleting every block.
pub fn plain_projection(u: &NonNestedWord) -> Vec<Letter> {
    plain_letters(u.atoms())
}

/// A word `p·k⁺` with `p` plain and `k⁺` a single block (possibly `ε⁺`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnchoredBlock {
    pub prefix: Vec<Letter>,
    pub block: Vec<Letter>,
}

impl AnchoredBlock {
    /// The plain word `pk`.
    pub fn joined(&self) -> Vec<Letter> {
        let mut w = self.prefix.clone();
        w.extend_from_slice(&self.block);
        w
    }

    pub fn to_word(&self) -> NonNestedWord {
        let mut atoms: Vec<Atom> = self.prefix.iter().copied().map(Atom::Letter).collect();
        atoms.push(Atom::Plus(self.block.clone()));
        NonNestedWord(atoms)
    }
}

impl fmt::Display for AnchoredBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_plain(&self.prefix, f)?;
        fmt_block(&self.block, f)
    }
}

/// The sets `P`, `Q`, `R` attached to a block `w⁺` of `u` and a letter `x` of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqrSets {
    pub p: BTreeSet<AnchoredBlock>,
    pub q: BTreeSet<AnchoredBlock>,
    pub r: BTreeSet<AnchoredBlock>,
}

/// Builds `P^u_{w,x}`, `Q^u_{w,x}` and `R^u_{w,x}`.
///
/// `P` collects, for each occurrence of a block `k⁺` in `suff_u(w⁺)` with
/// `x ∈ supp(k)`, the word `p·k⁺` where `p` is the plain projection of the
/// part of the suffix before that occurrence. `Q` adds `ū'·ε⁺` for the whole
/// suffix when `x` occurs in it as a letter. `R` drops the bare blocks
/// (`p = ε`) whose `mp_k(x)` has the same letter counts as `mp_w(x)`.
pub fn pqr_sets(u: &NonNestedWord, w: &[Letter], x: Letter) -> Result<PqrSets, WordError> {
    let block = Atom::plus(w);
    if !u.atoms().contains(&block) {
        return Err(WordError::NotInSupport(block.to_string()));
    }
    let mp_w = mp_plain(w, x).ok_or_else(|| {
        WordError::Precondition(format!("letter {x} does not occur in block {block}"))
    })?;
    let mp_w_counts = plain_counts(mp_w);

    let suffix = anchor_factor(u, &block, Side::Suffix)?;
    let atoms = suffix.atoms();
    let mut p = BTreeSet::new();
    for (i, a) in atoms.iter().enumerate() {
        if let Atom::Plus(k) = a {
            if k.contains(&x) {
                p.insert(AnchoredBlock {
                    prefix: plain_letters(&atoms[..i]),
                    block: k.clone(),
                });
            }
        }
    }
    let mut q = p.clone();
    if atoms.contains(&Atom::Letter(x)) {
        q.insert(AnchoredBlock {
            prefix: plain_letters(atoms),
            block: Vec::new(),
        });
    }
    let r = q
        .iter()
        .filter(|e| {
            let removable = e.prefix.is_empty()
                && mp_plain(&e.block, x).is_some_and(|m| plain_counts(m) == mp_w_counts);
            !removable
        })
        .cloned()
        .collect();
    Ok(PqrSets { p, q, r })
}
