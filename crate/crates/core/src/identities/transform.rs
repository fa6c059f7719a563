use crate::algebra::Assignment;
use crate::scalar::Count;
use crate::terms::{mp_plain, Letter, Term};

use super::IdentityError;

/// Reverses every product; unary nodes and letters are kept.
pub fn dualize_term(t: &Term) -> Term {
    match t {
        Term::Identity | Term::Letter(_) => t.clone(),
        Term::Product(l, r) => Term::product(dualize_term(r), dualize_term(l)),
        Term::Plus(c) => Term::plus(dualize_term(c)),
        Term::Star(c) => Term::star(dualize_term(c)),
    }
}

/// Renames `^*` to `^+`.
pub fn star_to_plus(t: &Term) -> Term {
    match t {
        Term::Identity | Term::Letter(_) => t.clone(),
        Term::Product(l, r) => Term::product(star_to_plus(l), star_to_plus(r)),
        Term::Plus(c) | Term::Star(c) => Term::plus(star_to_plus(c)),
    }
}

/// `ζ(σ_i) = L^r·ψ(σ_i) + L^i` where `r = psi.len()`.
///
/// For words shorter than `L`, `ζ` is injective on letter counts and
/// preserves the strict order induced by `ψ`.
pub fn scale_morphism<C: Count>(psi: &[C], l: C) -> Vec<C> {
    let top = num_traits::pow(l.clone(), psi.len());
    psi.iter()
        .enumerate()
        .map(|(i, p)| top.clone() * p.clone() + num_traits::pow(l.clone(), i))
        .collect()
}

/// `max_x ρ(mp'_w(x)) + |φ(x)⁺|` over the letters of `w`, where `ρ` sums
/// trunk lengths. This is the number of edges of `φ(w)⁺` in `FLAd(a)`.
pub fn trunk_plus_length(w: &[Letter], assignment: &Assignment) -> Result<usize, IdentityError> {
    let value = |x: Letter| assignment.get(x).ok_or(crate::algebra::AlgebraError::Unassigned(x));
    let mut best = 0;
    for &x in w {
        let mp = mp_plain(w, x).expect("x occurs in w");
        let mut rho = 0;
        for &y in &mp[..mp.len() - 1] {
            rho += value(y)?.trunk_len();
        }
        best = best.max(rho + value(x)?.plus_op()?.edge_count());
    }
    Ok(best)
}

/// Substitutes `x_i ↦ b a^i b`, where `x_i` is the `i`-th letter of
/// `alphabet`. Letters outside `alphabet` are left alone.
pub fn embed_rank2(t: &Term, alphabet: &[Letter]) -> Term {
    t.substitute(&|x| match alphabet.iter().position(|&y| y == x) {
        Some(i) => {
            let mut w = vec![Letter('b')];
            w.extend(std::iter::repeat_n(Letter('a'), i));
            w.push(Letter('b'));
            Term::from_word(&w)
        }
        None => Term::Letter(x),
    })
}
