use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use uhsl2::combinatorics::BiPoly;
use uhsl2::expr::{self, Expression};
use uhsl2::format::{from_json, to_json};
use uhsl2::product::mono_product_terms;
use uhsl2::rewrite::{normalize_with, oracle_star, rewrite_step, FreeWord, Strategy as Order};
use uhsl2::species::{star_species, ColoredSizes, FunctorSpec};
use uhsl2::{mono_star_mono, star, Color, Element, NormalMonomial};

fn color() -> impl Strategy<Value = Color> {
    prop::sample::select(Color::ALL.to_vec())
}

fn monomial(max: u32) -> impl Strategy<Value = NormalMonomial> {
    prop::array::uniform4(0..=max).prop_map(NormalMonomial::from)
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn element(max: u32) -> impl Strategy<Value = Element> {
    prop::collection::vec((monomial(max), -4i64..=4), 0..4).prop_map(|ts| Element::from_int_terms(ts))
}

fn rational_element() -> impl Strategy<Value = Element> {
    (prop::collection::vec((monomial(3), rational()), 0..6), prop::option::of(0u32..10))
        .prop_map(|(ts, cap)| Element::from_terms(ts).with_cap(cap))
}

fn word(max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(color(), 0..=max_len).prop_map(FreeWord::new)
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3), 0..4)
        .prop_map(|ts| ts.into_iter().fold(BiPoly::zero(), |acc, (c, y, h)| acc + BiPoly::term(c, y, h)))
}

fn expression() -> impl Strategy<Value = Expression> {
    let leaf = prop_oneof![
        rational().prop_map(Expression::Literal),
        color().prop_map(Expression::Generator),
        monomial(2).prop_map(Expression::DividedMono),
        color().prop_map(Expression::Exp),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expression::Sum(Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expression::StarProduct(Box::new(l), Box::new(r))),
            (rational(), inner.clone()).prop_map(|(q, e)| Expression::ScalarMul(q, Box::new(e))),
            inner.prop_map(|e| Expression::Negate(Box::new(e))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associative(f in element(2), g in element(2), e in element(2)) {
        prop_assert_eq!(star(&star(&f, &g), &e), star(&f, &star(&g, &e)));
    }

    #[test]
    fn distributive(f in element(2), g in element(2), e in element(2)) {
        let sum = g.add(&e).unwrap();
        prop_assert_eq!(star(&f, &sum), star(&f, &g).add(&star(&f, &e)).unwrap());
        prop_assert_eq!(star(&sum, &f), star(&g, &f).add(&star(&e, &f)).unwrap());
    }

    #[test]
    fn unit_laws(f in element(3)) {
        prop_assert_eq!(star(&Element::unit(), &f), f.clone());
        prop_assert_eq!(star(&f, &Element::unit()), f);
    }

    #[test]
    fn h_is_central(f in element(3), n in 0u32..3) {
        let h = Element::monomial(NormalMonomial::power(Color::H, n));
        prop_assert_eq!(star(&h, &f), star(&f, &h));
    }

    #[test]
    fn closed_formula_matches_rewriting(m1 in monomial(3), m2 in monomial(3)) {
        prop_assert_eq!(mono_star_mono(m1, m2), oracle_star(m1, m2));
    }

    #[test]
    fn products_are_integral_and_graded(m1 in monomial(4), m2 in monomial(4)) {
        let deg = m1.degree() + m2.degree();
        for m in mono_product_terms(m1, m2).keys() {
            prop_assert_eq!(m.degree(), deg);
        }
        prop_assert!(mono_star_mono(m1, m2).is_integral());
    }

    #[test]
    fn species_count_matches_coefficient(m1 in monomial(2), m2 in monomial(2), sizes in monomial(2)) {
        let s = ColoredSizes::from(sizes);
        let count = star_species(&FunctorSpec::DividedPower(m1), &FunctorSpec::DividedPower(m2), s);
        prop_assert_eq!(BigRational::from_integer(count), mono_star_mono(m1, m2).coefficient(&sizes));
    }

    #[test]
    fn rewriting_is_confluent(w in word(8)) {
        prop_assert_eq!(normalize_with(&w, Order::Leftmost), normalize_with(&w, Order::Rightmost));
    }

    #[test]
    fn rewriting_terminates(w in word(12)) {
        let mut current = vec![w];
        while let Some(w) = current.pop() {
            if let Some(next) = rewrite_step(&w) {
                for (nw, _) in next.terms() {
                    prop_assert!(nw.termination_measure() < w.termination_measure(), "{} -> {}", w, nw);
                    current.push(nw.clone());
                }
            }
        }
    }

    #[test]
    fn bipoly_ring_laws(p in bipoly(), q in bipoly(), r in bipoly()) {
        prop_assert_eq!(p.clone() * q.clone(), q.clone() * p.clone());
        prop_assert_eq!((p.clone() * q.clone()) * r.clone(), p.clone() * (q.clone() * r.clone()));
        prop_assert_eq!(p.clone() * (q.clone() + r.clone()), p.clone() * q + p * r);
    }

    #[test]
    fn json_round_trip(e in rational_element()) {
        let text = to_json(&e);
        prop_assert_eq!(from_json(&text).unwrap(), e.clone());
        prop_assert_eq!(to_json(&from_json(&text).unwrap()), text);
    }

    #[test]
    fn printed_expressions_reparse(e in expression()) {
        let printed = e.to_string();
        let reparsed = expr::parse(&printed).unwrap();
        prop_assert_eq!(reparsed.to_string(), printed);
        prop_assert_eq!(reparsed.eval(Some(4)).unwrap(), e.eval(Some(4)).unwrap());
    }
}

#[test]
fn termination_of_long_zx_words() {
    // every word of length 6 over {x, z}, all rewritten to completion
    for bits in 0u32..64 {
        let letters: Vec<Color> = (0..6).map(|i| if bits >> i & 1 == 1 { Color::Z } else { Color::X }).collect();
        let n = normalize_with(&FreeWord::new(letters), Order::Leftmost);
        assert!(n.terms().all(|(w, c)| w.is_normal() && *c != BigInt::from(0)));
    }
}
