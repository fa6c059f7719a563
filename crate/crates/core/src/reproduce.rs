//! The catalogue of reproducible results, each an exact finite check.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{eval_term, random_element, random_term, Element, Flavor};
use crate::growth::{
    first_branch, left_comb, left_sphere, sums_with_t_check, two_sided_sphere, zigzag_census,
    PartitionTable, Sphere, Strategy,
};
use crate::identities::{
    check_fad1_plain, check_fladx, decide_enriched_flad1, decide_plain, falsify_by_substitution,
    pool, IdentitySpec, PlainSide,
};
use crate::retract::{is_retract_free, oracle_retract_free, DEFAULT_ORACLE_BOUND};
use crate::scalar::binomial;
use crate::terms::{word, Letter, Term};
use crate::trees::all_monogenic;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Growth,
    Algebra,
    Identities,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Growth => "growth",
            Group::Algebra => "algebra",
            Group::Identities => "identities",
        })
    }
}

impl std::str::FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "growth" => Ok(Group::Growth),
            "algebra" => Ok(Group::Algebra),
            "identities" => Ok(Group::Identities),
            _ => Err(format!("unknown group '{s}'")),
        }
    }
}

/// Sizes of every sweep.
#[derive(Clone, Debug)]
pub struct Settings {
    pub left_generic_max: usize,
    pub left_structural_max: usize,
    pub refinement_max: usize,
    pub two_sided_max: usize,
    pub zigzag_max: usize,
    pub sums_max: i64,
    pub axiom_samples: usize,
    pub axiom_max_edges: usize,
    pub oracle_max_edges: usize,
    pub plain_max_len: usize,
    pub random_identities: usize,
    pub fad_max_len: usize,
    pub fladx_max_occurrences: usize,
    /// Seed value of the partition recurrences; anything but one breaks
    /// the tables on purpose.
    pub partition_base: u64,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            left_generic_max: 12,
            left_structural_max: 20,
            refinement_max: 12,
            two_sided_max: 5,
            zigzag_max: 16,
            sums_max: 12,
            axiom_samples: 1000,
            axiom_max_edges: 8,
            oracle_max_edges: 7,
            plain_max_len: 4,
            random_identities: 1000,
            fad_max_len: 5,
            fladx_max_occurrences: 3,
            partition_base: 1,
            seed: 2024,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TargetOutcome {
    pub id: &'static str,
    pub group: Group,
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub struct Target {
    pub id: &'static str,
    pub group: Group,
    pub claim: &'static str,
    run: fn(&Settings) -> Result<String, String>,
}

impl Target {
    pub fn run(&self, settings: &Settings) -> TargetOutcome {
        let (passed, detail) = match (self.run)(settings) {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        TargetOutcome { id: self.id, group: self.group, claim: self.claim, passed, detail }
    }
}

pub fn targets() -> Vec<Target> {
    vec![
        Target { id: "left-sphere-sizes", group: Group::Growth, claim: "|S_L(n)| = P(n+1)", run: left_sphere_sizes },
        Target { id: "trunk-refinement", group: Group::Growth, claim: "|S_L(n,k)| = P(n+1,k+1)", run: trunk_refinement },
        Target { id: "first-branch-recursion", group: Group::Growth, claim: "|S_L(n,k,l)| = |S_L(n-k-1,k-l)|", run: first_branch_recursion },
        Target { id: "two-trunk-trees", group: Group::Growth, claim: "S_L(6,2,1) is the two combs with branch lengths (0,4,0) and (0,3,1)", run: two_trunk_trees },
        Target { id: "two-sided-table", group: Group::Growth, claim: "S(n) = 1,3,6,14,29,74 and S_E(n) = 1,2,3,6,11,28", run: two_sided_table },
        Target { id: "zigzag-counts", group: Group::Growth, claim: "|Z(n,i)| = (n-2i)/n C(n,i), partial sums C(n-1,k), members retract-free", run: zigzag_counts },
        Target { id: "idempotent-lower-bound", group: Group::Growth, claim: "S_E(n) >= C(n-1, floor((n-1)/2))", run: idempotent_lower_bound },
        Target { id: "sums-with-t", group: Group::Growth, claim: "subset-sum identity over distinct-part partitions", run: sums_with_t },
        Target { id: "adequacy-axioms", group: Group::Algebra, claim: "defining quasi-identities and the monogenic left lemmas", run: adequacy_axioms },
        Target { id: "retraction-oracle", group: Group::Algebra, claim: "retract-free test agrees with idempotent endomorphism search", run: retraction_oracle },
        Target { id: "sylvester-identities", group: Group::Identities, claim: "xyzxty = yxzxty over FLAd(a), xzytxy = xzytyx over FRAd(a)", run: sylvester_identities },
        Target { id: "checker-falsifier-agreement", group: Group::Identities, claim: "classification agrees with substitution search", run: checker_agreement },
        Target { id: "two-sided-plain-identities", group: Group::Identities, claim: "FAd(a) satisfies only trivial plain identities", run: fad_plain },
        Target { id: "free-rank-identities", group: Group::Identities, claim: "FLAd(X) identities are tree equalities and strictly fewer", run: fladx_identities },
    ]
}

pub fn run_all(settings: &Settings, only: Option<Group>) -> Vec<TargetOutcome> {
    targets()
        .iter()
        .filter(|t| only.is_none_or(|g| g == t.group))
        .map(|t| t.run(settings))
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table(s: &Settings, n_max: usize) -> PartitionTable<u64> {
    PartitionTable::with_base(n_max, s.partition_base)
}

fn left_sphere_sizes(s: &Settings) -> Result<String, String> {
    let top = s.left_generic_max.max(s.left_structural_max);
    let p = table(s, top + 1);
    for n in 0..=s.left_structural_max {
        let got = left_sphere(n, Strategy::Structural).map_err(|e| e.to_string())?.census.total;
        ensure(got == p.p_total(n + 1), || format!("structural n = {n}: {got} vs P = {}", p.p_total(n + 1)))?;
    }
    for n in 0..=s.left_generic_max {
        let got = left_sphere(n, Strategy::Generic).map_err(|e| e.to_string())?.census.total;
        ensure(got == p.p_total(n + 1), || format!("generic n = {n}: {got} vs P = {}", p.p_total(n + 1)))?;
    }
    Ok(format!(
        "generic n <= {}, structural n <= {}; |S_L({})| = {}",
        s.left_generic_max,
        s.left_structural_max,
        s.left_structural_max,
        p.p_total(s.left_structural_max + 1)
    ))
}

fn generic_spheres(s: &Settings) -> Result<Vec<Sphere>, String> {
    (0..=s.refinement_max)
        .map(|n| left_sphere(n, Strategy::Generic).map_err(|e| e.to_string()))
        .collect()
}

fn trunk_refinement(s: &Settings) -> Result<String, String> {
    let p = table(s, s.refinement_max + 1);
    let mut checked = 0;
    for (n, sphere) in generic_spheres(s)?.iter().enumerate() {
        for k in 0..=n {
            let want = p.p((n + 1) as i64, (k + 1) as i64);
            let got = sphere.census.trunk(k);
            ensure(got == want, || format!("n = {n}, k = {k}: {got} vs {want}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs (n, k), n <= {}", s.refinement_max))
}

fn first_branch_recursion(s: &Settings) -> Result<String, String> {
    let spheres = generic_spheres(s)?;
    let mut checked = 0;
    for n in 0..=s.refinement_max {
        for k in 0..n {
            for l in 0..=k {
                let got = spheres[n].census.trunk_and_first_branch(k, l);
                let want = spheres[n - k - 1].census.trunk(k - l);
                ensure(got == want, || format!("({n},{k},{l}): {got} vs {want}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} triples, n <= {}", s.refinement_max))
}

fn two_trunk_trees(_: &Settings) -> Result<String, String> {
    let sphere = left_sphere(6, Strategy::Generic).map_err(|e| e.to_string())?;
    let found: Vec<&Element> = sphere
        .elements
        .iter()
        .filter(|e| e.trunk_len() == 2 && first_branch(e.tree()) == Some(1))
        .collect();
    ensure(found.len() == 2, || format!("{} trees", found.len()))?;
    let a = Letter('a');
    for lengths in [[0, 4, 0], [0, 3, 1]] {
        let comb = left_comb(2, &lengths, a);
        ensure(found.iter().any(|e| e.tree().isomorphic(&comb)), || format!("no tree matches {lengths:?}"))?;
    }
    Ok("2 trees, both matched".into())
}

fn two_sided_table(s: &Settings) -> Result<String, String> {
    let want_s = [1, 3, 6, 14, 29, 74];
    let want_e = [1, 2, 3, 6, 11, 28];
    let mut got = Vec::new();
    for n in 0..=s.two_sided_max.min(5) {
        let c = two_sided_sphere(n).map_err(|e| e.to_string())?.census;
        ensure(c.total == want_s[n] && c.idempotent_count == want_e[n], || {
            format!("n = {n}: S = {}, S_E = {}", c.total, c.idempotent_count)
        })?;
        got.push(c.total);
    }
    Ok(format!("S = {got:?}"))
}

fn zigzag_counts(s: &Settings) -> Result<String, String> {
    for n in 1..=s.zigzag_max {
        let rows = zigzag_census(n).map_err(|e| e.to_string())?;
        let mut running = 0u64;
        for i in 0..n {
            if 2 * i >= n {
                continue;
            }
            let want = (n - 2 * i) as u64 * binomial::<u64>(n, i) / n as u64;
            ensure(rows[i].z_count == want, || format!("Z({n},{i}) = {} vs {want}", rows[i].z_count))?;
            running += rows[i].z_count;
            ensure(running == binomial::<u64>(n - 1, i), || format!("partial sum at ({n},{i})"))?;
            if let Some(z) = rows[i].members.iter().find(|z| !is_retract_free(&z.to_tree())) {
                return Err(format!("{z} is not retract-free"));
            }
        }
    }
    Ok(format!("n <= {}", s.zigzag_max))
}

fn idempotent_lower_bound(s: &Settings) -> Result<String, String> {
    let mut rows = Vec::new();
    for n in 1..=s.two_sided_max {
        let e = two_sided_sphere(n).map_err(|e| e.to_string())?.census.idempotent_count;
        let bound = binomial::<u64>(n - 1, (n - 1) / 2);
        ensure(e >= bound, || format!("n = {n}: {e} < {bound}"))?;
        rows.push(format!("{e}>={bound}"));
    }
    Ok(rows.join(" "))
}

fn sums_with_t(s: &Settings) -> Result<String, String> {
    let m = s.sums_max;
    let p = table(s, (3 * m + 2) as usize);
    for a in 1..=m {
        for r in 1..=m {
            for t in 1..=m {
                ensure(sums_with_t_check(&p, a, r, t), || format!("fails at m = {a}, r = {r}, t = {t}"))?;
            }
        }
    }
    Ok(format!("1 <= m, r, t <= {m}"))
}

type Check = fn(&Element, &Element, &Element) -> bool;

fn left_axioms(x: &Element, y: &Element, z: &Element) -> bool {
    let m = |a: &Element, b: &Element| a.multiply(b).expect("same flavor");
    let p = |a: &Element| a.plus_op().expect("has plus");
    let mut ok = m(&p(x), x) == *x
        && p(&m(&p(x), &p(y))) == m(&p(x), &p(y))
        && m(&p(x), &p(y)) == m(&p(y), &p(x))
        && p(&m(x, y)) == p(&m(x, &p(y)));
    if m(x, x) == *x {
        ok &= *x == p(x);
    }
    if m(x, z) == m(y, z) {
        ok &= m(x, &p(z)) == m(y, &p(z));
    }
    ok
}

fn right_axioms(x: &Element, y: &Element, z: &Element) -> bool {
    let m = |a: &Element, b: &Element| a.multiply(b).expect("same flavor");
    let st = |a: &Element| a.star_op().expect("has star");
    let mut ok = m(x, &st(x)) == *x
        && st(&m(&st(x), &st(y))) == m(&st(x), &st(y))
        && m(&st(x), &st(y)) == m(&st(y), &st(x))
        && st(&m(x, y)) == st(&m(&st(x), y));
    if m(x, x) == *x {
        ok &= *x == st(x);
    }
    if m(z, x) == m(z, y) {
        ok &= m(&st(z), x) == m(&st(z), y);
    }
    ok
}

fn monoid_axioms(x: &Element, y: &Element, z: &Element) -> bool {
    let m = |a: &Element, b: &Element| a.multiply(b).expect("same flavor");
    let one = Element::identity(x.flavor());
    m(&m(x, y), z) == m(x, &m(y, z)) && m(x, &one) == *x && m(&one, x) == *x
}

fn monogenic_left_lemmas(x: &Element, y: &Element, z: &Element) -> bool {
    let m = |a: &Element, b: &Element| a.multiply(b).expect("same flavor");
    let p = |a: &Element| a.plus_op().expect("has plus");
    let one = Element::identity(Flavor::Left);
    p(&one) == one
        && p(&p(x)) == p(x)
        && p(&m(&m(x, &p(y)), z)) == m(&p(&m(x, y)), &p(&m(x, z)))
        && m(&m(x, y), x) == m(&m(&x.theta(), y), x)
}

fn adequacy_axioms(s: &Settings) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let a = [Letter('a')];
    let cases: [(Flavor, &[Check]); 3] = [
        (Flavor::Left, &[monoid_axioms, left_axioms, monogenic_left_lemmas]),
        (Flavor::Right, &[monoid_axioms, right_axioms]),
        (Flavor::TwoSided, &[monoid_axioms, left_axioms, right_axioms]),
    ];
    let mut idempotent_premises = 0;
    for (flavor, checks) in cases {
        for i in 0..s.axiom_samples {
            let draw = |rng: &mut ChaCha8Rng| random_element(rng, &a, flavor, s.axiom_max_edges);
            let x = draw(&mut rng);
            // force both quasi-identity premises to fire regularly
            let y = if i % 4 == 0 { x.clone() } else { draw(&mut rng) };
            let z = draw(&mut rng);
            let x = if i % 5 == 0 { x.plus_op().or_else(|_| x.star_op()).expect("one unary") } else { x };
            idempotent_premises += x.is_idempotent() as usize;
            if let Some(bad) = checks.iter().position(|c| !c(&x, &y, &z)) {
                return Err(format!("{flavor}: check {bad} fails on {:?}", [x.tree(), y.tree(), z.tree()]));
            }
        }
    }
    Ok(format!("{} tuples per flavor, {idempotent_premises} idempotent draws", s.axiom_samples))
}

fn retraction_oracle(s: &Settings) -> Result<String, String> {
    let trees = all_monogenic(s.oracle_max_edges, Letter('a'));
    let bound = DEFAULT_ORACLE_BOUND.max(s.oracle_max_edges);
    let mut free = 0;
    for t in &trees {
        let oracle = oracle_retract_free(t, bound).map_err(|e| e.to_string())?;
        ensure(oracle == is_retract_free(t), || format!("disagreement on {}", t.to_json()))?;
        free += oracle as usize;
    }
    Ok(format!("{} trees, {free} retract-free", trees.len()))
}

fn identity(l: &str, r: &str) -> IdentitySpec {
    IdentitySpec::from_sides(l, r).expect("valid identity")
}

fn sylvester_identities(_: &Settings) -> Result<String, String> {
    let left = identity("xyzxty", "yxzxty");
    let right = identity("xzytxy", "xzytyx");
    let l = decide_enriched_flad1(&left).map_err(|e| e.to_string())?;
    let lp = decide_plain(&left, PlainSide::Left).map_err(|e| e.to_string())?;
    let rp = decide_plain(&right, PlainSide::Right).map_err(|e| e.to_string())?;
    let r = crate::identities::decide_enriched_frad1(&right).map_err(|e| e.to_string())?;
    ensure(l.is_none() && lp.is_none() && rp.is_none() && r.is_none(), || {
        format!("{l:?} {lp:?} {rp:?} {r:?}")
    })?;
    Ok("both satisfied".into())
}

/// Plain words over `letters` of length at most `n`, shortest first.
pub fn words_up_to(letters: &[Letter], n: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<Letter>| {
                letters.iter().map(move |&x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Systematic pool tuples plus the shaped and a few random assignments.
fn agreement_budget(id: &IdentitySpec) -> usize {
    pool(Flavor::Left).len().pow(id.alphabet.len() as u32) + 1000
}

fn agree(id: &IdentitySpec) -> Result<bool, String> {
    let verdict = decide_enriched_flad1(id).map_err(|e| e.to_string())?;
    let witness = falsify_by_substitution(id, Flavor::Left, agreement_budget(id)).map_err(|e| e.to_string())?;
    Ok(verdict.is_none() == witness.is_none())
}

/// A random `^*`-free identity with at most `max_len` letters per side.
pub fn random_identity<R: Rng + ?Sized>(rng: &mut R, letters: &[Letter], max_len: usize) -> IdentitySpec {
    let side = |rng: &mut R| loop {
        let t = random_term(rng, letters, Flavor::Left, 4);
        if t.length() <= max_len {
            return t;
        }
    };
    let lhs = side(rng);
    let rhs = match rng.gen_range(0..3) {
        0 => side(rng),
        // rewrite by a law that holds, so satisfied identities are common
        1 => Term::product(Term::plus(lhs.clone()), lhs.clone()),
        _ => {
            let mut w: Vec<Letter> = lhs.letters().into_iter().collect();
            w.reverse();
            lhs.substitute(&|x| Term::Letter(w[lhs.letters().iter().position(|&y| y == x).expect("own letter")]))
        }
    };
    IdentitySpec::new(lhs, rhs)
}

fn checker_agreement(s: &Settings) -> Result<String, String> {
    let xy = word("xy");
    let words = words_up_to(&xy, s.plain_max_len);
    let mut plain = 0;
    let mut plain_satisfied = 0;
    for u in &words {
        for v in &words {
            let id = IdentitySpec::new(Term::from_word(u), Term::from_word(v));
            ensure(agree(&id)?, || format!("contradiction on {id}"))?;
            plain += 1;
            plain_satisfied += decide_enriched_flad1(&id).map_err(|e| e.to_string())?.is_none() as usize;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let xyz = word("xyz");
    let mut satisfied = 0;
    for _ in 0..s.random_identities {
        let letters = if rng.gen_bool(0.5) { &xyz[..2] } else { &xyz[..] };
        let id = random_identity(&mut rng, letters, 6);
        ensure(agree(&id)?, || format!("contradiction on {id}"))?;
        satisfied += decide_enriched_flad1(&id).map_err(|e| e.to_string())?.is_none() as usize;
    }
    Ok(format!(
        "{plain} plain ({plain_satisfied} satisfied), {} enriched ({satisfied} satisfied), no contradictions",
        s.random_identities
    ))
}

fn fad_plain(s: &Settings) -> Result<String, String> {
    let words = words_up_to(&word("xy"), s.fad_max_len);
    let mut rejected = 0;
    for u in &words {
        for v in &words {
            if u == v {
                continue;
            }
            let id = IdentitySpec::new(Term::from_word(u), Term::from_word(v));
            let r = check_fad1_plain(&id).map_err(|e| e.to_string())?;
            let w = r.witness.as_ref().ok_or("no witness")?;
            let lhs = eval_term(&id.lhs, &w.assignment, Flavor::TwoSided).map_err(|e| e.to_string())?;
            let rhs = eval_term(&id.rhs, &w.assignment, Flavor::TwoSided).map_err(|e| e.to_string())?;
            ensure(!r.satisfied && lhs.code() != rhs.code(), || format!("{id} not separated"))?;
            rejected += 1;
        }
    }
    Ok(format!("{rejected} unequal pairs rejected with separating witnesses"))
}

/// `^*`-free terms over `letters` with at most `max` letter occurrences:
/// letters, binary products of smaller terms, and each of these under one
/// `+`. Products are kept in both bracketings.
pub fn small_terms(letters: &[Letter], max: usize) -> Vec<Term> {
    // by occurrences: level[n] holds terms with exactly n letters
    let mut level: Vec<Vec<Term>> = vec![vec![Term::Identity]];
    for n in 1..=max {
        fn add(here: &mut BTreeMap<String, Term>, t: Term) {
            here.entry(t.to_string()).or_insert(t);
        }
        let mut here: BTreeMap<String, Term> = BTreeMap::new();
        if n == 1 {
            for &x in letters {
                add(&mut here, Term::Letter(x));
            }
        }
        for i in 1..n {
            for l in &level[i] {
                for r in &level[n - i] {
                    add(&mut here, Term::product(l.clone(), r.clone()));
                }
            }
        }
        let base: Vec<Term> = here.values().cloned().collect();
        for t in base {
            add(&mut here, Term::plus(t));
        }
        level.push(here.into_values().collect());
    }
    level.into_iter().flatten().collect()
}

fn fladx_identities(s: &Settings) -> Result<String, String> {
    let terms = small_terms(&word("xy"), s.fladx_max_occurrences);
    let values: Vec<Element> = terms
        .iter()
        .map(|t| crate::algebra::eval_free(t, Flavor::Left).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let mut satisfied = 0;
    let mut monogenic_only = None;
    for i in 0..terms.len() {
        for j in i..terms.len() {
            let id = IdentitySpec::new(terms[i].clone(), terms[j].clone());
            let r = check_fladx(&id).map_err(|e| e.to_string())?;
            ensure(r.satisfied == (values[i].code() == values[j].code()), || format!("{id}"))?;
            if r.satisfied {
                satisfied += 1;
                let mono = decide_enriched_flad1(&id).map_err(|e| e.to_string())?;
                ensure(mono.is_none(), || format!("{id} holds in FLAd(X) but not FLAd(a)"))?;
            } else if monogenic_only.is_none() && decide_enriched_flad1(&id).map_err(|e| e.to_string())?.is_none() {
                monogenic_only = Some(id.to_string());
            }
        }
    }
    let sylvester = identity("xyzxty", "yxzxty");
    let holds_free = check_fladx(&sylvester).map_err(|e| e.to_string())?.satisfied;
    ensure(!holds_free, || "xyzxty = yxzxty holds in FLAd(X)".into())?;
    let witness = monogenic_only.ok_or("no identity separates the two monoids in the corpus")?;
    Ok(format!(
        "{} terms, {satisfied} satisfied pairs; {witness} holds only over one generator",
        terms.len()
    ))
}
