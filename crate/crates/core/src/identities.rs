//! A catalogue of known identities, each checked by every route that
//! applies to it. Used by `uhsl2 identities`.

use num_bigint::BigInt;

use crate::combinatorics::{
    falling_factorial, pochhammer_k, shifted_elem, tableaux_count_oracle, vam3_lhs, vam3_rhs, BiPoly,
};
use crate::element::Element;
use crate::monomial::{Color, NormalMonomial};
use crate::product::{exp_series, mono_star_mono, star};
use crate::rewrite::oracle_star;
use crate::species::{star_species, ColoredSizes, FunctorSpec};

pub struct Identity {
    pub name: &'static str,
    pub check: fn() -> bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub passed: bool,
}

/// `m1 ⋆ m2 = expected` by the closed formula, the rewriting oracle and the
/// species count on every size tuple up to the product's degree.
pub fn three_way(m1: NormalMonomial, m2: NormalMonomial, expected: &Element) -> bool {
    if mono_star_mono(m1, m2) != *expected || oracle_star(m1, m2) != *expected {
        return false;
    }
    let (f, g) = (FunctorSpec::DividedPower(m1), FunctorSpec::DividedPower(m2));
    let degree = (m1.degree() + m2.degree()) as usize;
    ColoredSizes::up_to_total(degree).into_iter().all(|s| {
        let count = star_species(&f, &g, s);
        num_rational::BigRational::from_integer(count) == expected.coefficient(&s.as_monomial())
    })
}

fn el(terms: &[((u32, u32, u32, u32), i64)]) -> Element {
    Element::from_int_terms(terms.iter().copied())
}

fn g(c: Color) -> NormalMonomial {
    NormalMonomial::power(c, 1)
}

pub fn catalog() -> Vec<Identity> {
    vec![
        Identity {
            name: "yx = xy + 2xh",
            check: || three_way(g(Color::Y), g(Color::X), &el(&[((1, 1, 0, 0), 1), ((1, 0, 0, 1), 2)])),
        },
        Identity {
            name: "zx = xz - yh",
            check: || three_way(g(Color::Z), g(Color::X), &el(&[((1, 0, 1, 0), 1), ((0, 1, 0, 1), -1)])),
        },
        Identity {
            name: "zy = yz + 2zh",
            check: || three_way(g(Color::Z), g(Color::Y), &el(&[((0, 1, 1, 0), 1), ((0, 0, 1, 1), 2)])),
        },
        Identity {
            name: "h is central",
            check: || {
                [Color::X, Color::Y, Color::Z].iter().all(|&c| {
                    let e = Element::monomial(NormalMonomial { d: 1, ..g(c) });
                    three_way(g(Color::H), g(c), &e) && three_way(g(c), g(Color::H), &e)
                })
            },
        },
        Identity {
            name: "z * x^2/2! = x^2/2! z - xyh - 2x h^2/2!",
            check: || {
                three_way(
                    NormalMonomial::new(0, 0, 1, 0),
                    NormalMonomial::new(2, 0, 0, 0),
                    &el(&[((2, 0, 1, 0), 1), ((1, 1, 0, 1), -1), ((1, 0, 0, 2), -2)]),
                )
            },
        },
        Identity {
            name: "z^2/2! * x^2/2! five-term expansion",
            check: || {
                three_way(
                    NormalMonomial::new(0, 0, 2, 0),
                    NormalMonomial::new(2, 0, 0, 0),
                    &el(&[
                        ((2, 0, 2, 0), 1),
                        ((1, 1, 1, 1), -1),
                        ((1, 0, 1, 2), -4),
                        ((0, 2, 0, 2), 2),
                        ((0, 1, 0, 3), 3),
                    ]),
                )
            },
        },
        Identity {
            name: "(a)^3_4 = 4a^3 + 18a^2 + 22a + 6",
            check: || (0..=10i64).all(|a| shifted_elem(a, 3, 4) == BigInt::from(4 * a.pow(3) + 18 * a.pow(2) + 22 * a + 6)),
        },
        Identity {
            name: "(a)^0_n = 1 and (a)^s_n = 0 for s > n",
            check: || {
                (-5..=10i64).all(|a| {
                    (0..=7u32).all(|n| shifted_elem(a, 0, n) == BigInt::from(1) && shifted_elem(a, n + 1, n) == BigInt::from(0))
                })
            },
        },
        Identity {
            name: "(a)^s_n counts dotted tableaux",
            check: || {
                (0..=6u64).all(|a| (0..=6u32).all(|s| (0..=6u32).all(|n| tableaux_count_oracle(a, s, n) == shifted_elem(a as i64, s, n))))
            },
        },
        Identity {
            name: "(a)_n = (a)_{n,-1}",
            check: || {
                (-5..=10i64).all(|a| (0..=8).all(|n| falling_factorial(a, n) == pochhammer_k(&BigInt::from(a), n, &BigInt::from(-1))))
            },
        },
        Identity {
            name: "(a)_{n,-h} = (a-(n-1)h)(a)_{n-1,-h} = a(a-h)_{n-1,-h}",
            check: || {
                let minus_h = BiPoly::term(-1, 0, 1);
                (-3..=3i64).all(|q| {
                    let a = BiPoly::y() + BiPoly::term(q, 0, 1);
                    (1..=5u32).all(|n| {
                        let full = pochhammer_k(&a, n, &minus_h);
                        let first = (a.clone() + BiPoly::term(-(n as i64 - 1), 0, 1)) * pochhammer_k(&a, n - 1, &minus_h);
                        let second = a.clone() * pochhammer_k(&(a.clone() + minus_h.clone()), n - 1, &minus_h);
                        full == first && full == second
                    })
                })
            },
        },
        Identity {
            name: "(y+(a-(n+1))h)_{n,-h} = sum_w (a-2n)^w_n y^(n-w) h^w",
            check: || (-4..=8i64).all(|a| (0..=6).all(|n| vam3_lhs(a, n) == vam3_rhs(a, n))),
        },
        Identity {
            name: "e^y * e^x = e^(x e^(2h)) e^y through degree 4",
            check: || {
                let p = star(&exp_series(Color::Y, 4), &exp_series(Color::X, 4));
                let mut expected = Element::zero().with_cap(Some(4));
                for m in NormalMonomial::all_of_degree_at_most(4).filter(|m| m.c == 0) {
                    let c = BigInt::from(2 * m.a).pow(m.d);
                    expected.add_term(m, num_rational::BigRational::from_integer(c));
                }
                p == expected
            },
        },
    ]
}

pub fn run_catalog() -> Vec<IdentityResult> {
    catalog().into_iter().map(|i| IdentityResult { name: i.name, passed: (i.check)() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_passes() {
        for r in run_catalog() {
            assert!(r.passed, "{}", r.name);
        }
    }
}
