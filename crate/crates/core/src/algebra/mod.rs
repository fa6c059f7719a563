//! Free left, right and two-sided adequate monoids on retract-free trees.

mod element;
mod eval;

use thiserror::Error;

use crate::terms::Letter;

pub use element::{equal_elements, multiply, Element, Flavor};
pub use eval::{eval_free, eval_term, random_element, random_term, Assignment};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("flavor mismatch: {0} vs {1}")]
    FlavorMismatch(Flavor, Flavor),
    #[error("operation ^{0} is not in the {1} signature")]
    NotInSignature(char, Flavor),
    #[error("letter {0} is not assigned")]
    Unassigned(Letter),
    #[error("tree does not have the shape of a {0} element")]
    WrongShape(Flavor),
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::retract::is_retract_free;
    use crate::terms::{parse_term, Term};
    use crate::trees::{Edge, XTree};

    const A: Letter = Letter('a');

    fn ev(s: &str, flavor: Flavor) -> Element {
        eval_free(&parse_term(s).unwrap(), flavor).unwrap()
    }

    fn left(s: &str) -> Element {
        ev(s, Flavor::Left)
    }

    fn a_power_plus(j: usize) -> Element {
        if j == 0 {
            return Element::identity(Flavor::Left);
        }
        left(&format!("({})^+", "a".repeat(j)))
    }

    #[test]
    fn products() {
        assert_eq!(left("(aa)^+(aaaaa)^+"), a_power_plus(5));
        let t = left("a^+b");
        let e = Element::identity(Flavor::Left);
        assert_eq!(e.multiply(&t).unwrap(), t);
        assert_eq!(t.multiply(&e).unwrap(), t);

        let aap = left("aa^+");
        let expected = XTree::new(3, 0, 1, vec![Edge::new(0, 1, 'a'), Edge::new(1, 2, 'a')]).unwrap();
        assert!(aap.tree().isomorphic(&expected));
        assert!(is_retract_free(aap.tree()));
        assert_ne!(aap, left("a"));
        assert_eq!(left("a^+a"), left("a"));
        assert!(matches!(
            left("a").multiply(&ev("a", Flavor::Right)),
            Err(AlgebraError::FlavorMismatch(..))
        ));
    }

    #[test]
    fn unary_operations() {
        assert_eq!(left("aa^+").plus_op().unwrap(), a_power_plus(2));
        let e = a_power_plus(3);
        assert_eq!(e.plus_op().unwrap(), e);
        assert_eq!(left("1^+"), Element::identity(Flavor::Left));
        assert!(left("a").star_op().is_err());
        assert!(ev("a", Flavor::Right).plus_op().is_err());

        let a_star = ev("a^*", Flavor::TwoSided);
        let expected = XTree::new(2, 1, 1, vec![Edge::new(0, 1, 'a')]).unwrap();
        assert!(a_star.tree().isomorphic(&expected));
        let idem = ev("(ab)^+", Flavor::TwoSided);
        assert_eq!(idem.star_op().unwrap(), idem);
    }

    #[test]
    fn star_witness_shape() {
        // (a (a^3)^*)^+ a: one trunk edge, and a 3-path pointing into the
        // head of a second a-edge at the start
        let w = ev("(a(aaa)^*)^+a", Flavor::TwoSided);
        let expected = XTree::new(
            6,
            0,
            5,
            vec![
                Edge::new(0, 1, 'a'),
                Edge::new(2, 3, 'a'),
                Edge::new(3, 4, 'a'),
                Edge::new(4, 1, 'a'),
                Edge::new(0, 5, 'a'),
            ],
        )
        .unwrap();
        assert!(w.tree().isomorphic(&expected));
        assert_eq!(w.trunk_len(), 1);
    }

    #[test]
    fn evaluation() {
        let x = Letter('x');
        let asg = Assignment::new().with(x, Element::generator(A, Flavor::Left));
        let v = eval_term(&parse_term("x^+x").unwrap(), &asg, Flavor::Left).unwrap();
        assert_eq!(v, Element::generator(A, Flavor::Left));
        assert_eq!(left("(aa^+a)^+"), left("(aa)^+(aa)^+"));
        assert!(matches!(
            eval_term(&parse_term("y").unwrap(), &asg, Flavor::Left),
            Err(AlgebraError::Unassigned(Letter('y')))
        ));
        assert!(matches!(
            eval_term(&parse_term("x^*").unwrap(), &asg, Flavor::Left),
            Err(AlgebraError::NotInSignature('*', Flavor::Left))
        ));
    }

    #[test]
    fn idempotents() {
        for j in 0..=6 {
            let e = a_power_plus(j);
            assert!(e.is_idempotent());
            assert_eq!(e.multiply(&e).unwrap(), e);
        }
        assert!(!left("a").is_idempotent());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let t = random_element(&mut rng, &[A, Letter('b')], Flavor::TwoSided, 8);
            if t.is_idempotent() {
                assert_eq!(t.multiply(&t).unwrap(), t);
            }
            assert_eq!(t.is_idempotent(), t.tree().classify().is_idempotent_shape);
        }
    }

    #[test]
    fn idempotent_products_take_the_longer() {
        for i in 0..=8 {
            for j in 0..=8 {
                let p = a_power_plus(i).multiply(&a_power_plus(j)).unwrap();
                assert_eq!(p, a_power_plus(i.max(j)), "{i} {j}");
            }
        }
    }

    #[test]
    fn right_flavor_mirrors_left() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let t = random_term(&mut rng, &[A, Letter('b')], Flavor::Left, 4);
            let mirrored = mirror(&t);
            let l = eval_free(&t, Flavor::Left).unwrap();
            let r = eval_free(&mirrored, Flavor::Right).unwrap();
            assert_eq!(l.reverse(), r, "{t}");
        }
    }

    fn mirror(t: &Term) -> Term {
        match t {
            Term::Identity | Term::Letter(_) => t.clone(),
            Term::Product(l, r) => Term::product(mirror(r), mirror(l)),
            Term::Plus(c) => Term::star(mirror(c)),
            Term::Star(c) => Term::plus(mirror(c)),
        }
    }

    #[test]
    fn monogenic_lemmas_fail_with_two_letters() {
        // (x y^+ z)^+ = (x y)^+ (x z)^+ and x y x = theta(x) y x hold over
        // one letter but not over two
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ab = [A, Letter('b')];
        let (mut lemma_a, mut lemma_b) = (false, false);
        for _ in 0..2000 {
            let x = random_element(&mut rng, &ab, Flavor::Left, 5);
            let y = random_element(&mut rng, &ab, Flavor::Left, 5);
            let z = random_element(&mut rng, &ab, Flavor::Left, 5);
            let lhs = x.multiply(&y.plus_op().unwrap()).unwrap().multiply(&z).unwrap().plus_op().unwrap();
            let rhs = x.multiply(&y).unwrap().plus_op().unwrap()
                .multiply(&x.multiply(&z).unwrap().plus_op().unwrap()).unwrap();
            lemma_a |= lhs != rhs;
            let xyx = x.multiply(&y).unwrap().multiply(&x).unwrap();
            let txyx = x.theta().multiply(&y).unwrap().multiply(&x).unwrap();
            lemma_b |= xyx != txyx;
            if lemma_a && lemma_b {
                break;
            }
        }
        assert!(lemma_a && lemma_b);
    }

    fn elem(flavor: Flavor, letters: &'static [Letter]) -> impl Strategy<Value = Element> {
        any::<u64>().prop_map(move |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_element(&mut rng, letters, flavor, 8)
        })
    }

    fn flavors() -> impl Strategy<Value = Flavor> {
        prop::sample::select(vec![Flavor::Left, Flavor::Right, Flavor::TwoSided])
    }

    fn triple() -> impl Strategy<Value = (Element, Element, Element)> {
        (flavors(), prop::bool::ANY).prop_flat_map(|(f, two)| {
            let letters: &'static [Letter] = if two { &[A, Letter('b')] } else { &[A] };
            (elem(f, letters), elem(f, letters), elem(f, letters))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn quasi_identities((x, y, z) in triple()) {
            let f = x.flavor();
            let m = |a: &Element, b: &Element| a.multiply(b).unwrap();
            prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
            let glued = x.tree().glue(y.tree());
            prop_assert_eq!(glued.edge_count(), x.edge_count() + y.edge_count());
            prop_assert!(m(&x, &y).edge_count() <= glued.edge_count());
            if f.has_plus() {
                let p = |a: &Element| a.plus_op().unwrap();
                prop_assert_eq!(m(&p(&x), &x), x.clone());
                prop_assert_eq!(p(&m(&p(&x), &p(&y))), m(&p(&x), &p(&y)));
                prop_assert_eq!(m(&p(&x), &p(&y)), m(&p(&y), &p(&x)));
                prop_assert_eq!(p(&m(&x, &y)), p(&m(&x, &p(&y))));
            }
            if f.has_star() {
                let s = |a: &Element| a.star_op().unwrap();
                prop_assert_eq!(m(&x, &s(&x)), x.clone());
                prop_assert_eq!(s(&m(&s(&x), &s(&y))), m(&s(&x), &s(&y)));
                prop_assert_eq!(m(&s(&x), &s(&y)), m(&s(&y), &s(&x)));
                prop_assert_eq!(s(&m(&x, &y)), s(&m(&s(&x), &y)));
            }
        }

        #[test]
        fn monogenic_left_lemmas(x in elem(Flavor::Left, &[A]), y in elem(Flavor::Left, &[A]), z in elem(Flavor::Left, &[A])) {
            let m = |a: &Element, b: &Element| a.multiply(b).unwrap();
            let p = |a: &Element| a.plus_op().unwrap();
            prop_assert_eq!(p(&m(&m(&x, &p(&y)), &z)), m(&p(&m(&x, &y)), &p(&m(&x, &z))));
            prop_assert_eq!(m(&m(&x, &y), &x), m(&m(&x.theta(), &y), &x));
        }
    }
}
