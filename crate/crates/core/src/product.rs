//! The closed-form star product in the divided-power basis.
//!
//! For input monomials `m1 = (a, b, c, d)` and `m2 = (k, l, m, n)` the
//! product is a signed sum over [`ProductIndexAssignment`]s. Reading the
//! computation as the word `x^a y^b (z^c x^k) y^l z^m h^(d+n)` being brought
//! into normal order:
//!
//! * `rho3 = v` pairs of `z` (from `m1`) and `x` (from `m2`) are consumed by
//!   the `zx` relation, `rho4 = w <= v` of them release an extra `h`, and the
//!   remaining `beta_c = v - w` become new `y`s,
//! * `rho5 = i` of the `y`s of `m1` turn into `h` when passing the surviving
//!   `x`s of `m2`,
//! * `rho6 = u` of the `y`s of `m2` turn into `h` when passed by the
//!   surviving `z`s of `m1`.
//!
//! The summand is
//!
//! ```text
//! (-1)^rho3 · C(alpha; alpha1, alpha2) · C(beta; beta_f, beta_g, beta_c)
//!   · C(gamma; gamma1, gamma2) · C(rho; rho1, ..., rho6)
//!   · (2 alpha2)^rho5 · (2 gamma1)^rho6 · beta_c! · rho4!
//!   · (gamma1 + alpha2)^rho4_rho3
//! ```
//!
//! where `C` denotes a multinomial coefficient and the last factor is
//! [`shifted_elem`]. Every summand is an integer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{factorial, falling_factorial, multinomial, shifted_elem};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::monomial::{Color, NormalMonomial};

/// One summand of the closed product formula: thirteen block sizes.
///
/// `beta_f` is the part of the output `y`-degree inherited from the left
/// factor, `beta_g` the part inherited from the right factor, and `beta_c`
/// the part created by commuting `z` past `x`. The constraint
/// `beta_c + rho4 = rho3` ties the created block to the `zx` exchanges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductIndexAssignment {
    pub alpha1: u32,
    pub alpha2: u32,
    pub beta_f: u32,
    pub beta_g: u32,
    pub beta_c: u32,
    pub gamma1: u32,
    pub gamma2: u32,
    pub rho1: u32,
    pub rho2: u32,
    pub rho3: u32,
    pub rho4: u32,
    pub rho5: u32,
    pub rho6: u32,
}

impl ProductIndexAssignment {
    /// All assignments whose left and right inputs are `m1` and `m2`.
    ///
    /// `rho3` ranges outermost over `0..=min(c, k)`, then `rho4 <= rho3`
    /// (fixing `beta_c = rho3 - rho4`), then `rho5 <= b` and `rho6 <= l`;
    /// the other indices are forced.
    pub fn enumerate(m1: NormalMonomial, m2: NormalMonomial) -> impl Iterator<Item = Self> {
        let NormalMonomial { a, b, c, d } = m1;
        let NormalMonomial { a: k, b: l, c: m, d: n } = m2;
        (0..=c.min(k)).flat_map(move |v| {
            (0..=v).flat_map(move |w| {
                (0..=b).flat_map(move |i| {
                    (0..=l).map(move |u| ProductIndexAssignment {
                        alpha1: a,
                        alpha2: k - v,
                        beta_f: b - i,
                        beta_g: l - u,
                        beta_c: v - w,
                        gamma1: c - v,
                        gamma2: m,
                        rho1: d,
                        rho2: n,
                        rho3: v,
                        rho4: w,
                        rho5: i,
                        rho6: u,
                    })
                })
            })
        })
    }

    /// The output monomial `(alpha, beta, gamma, rho)`.
    pub fn output(&self) -> NormalMonomial {
        NormalMonomial::new(
            self.alpha1 + self.alpha2,
            self.beta_f + self.beta_g + self.beta_c,
            self.gamma1 + self.gamma2,
            self.rho1 + self.rho2 + self.rho3 + self.rho4 + self.rho5 + self.rho6,
        )
    }

    /// The coefficient index `(alpha1, beta_f + rho5, gamma1 + rho3, rho1)`
    /// read from the left factor.
    pub fn left_input(&self) -> NormalMonomial {
        NormalMonomial::new(self.alpha1, self.beta_f + self.rho5, self.gamma1 + self.rho3, self.rho1)
    }

    /// The coefficient index `(alpha2 + rho3, beta_g + rho6, gamma2, rho2)`
    /// read from the right factor.
    pub fn right_input(&self) -> NormalMonomial {
        NormalMonomial::new(self.alpha2 + self.rho3, self.beta_g + self.rho6, self.gamma2, self.rho2)
    }

    /// Whether the block sizes add up to `target` and satisfy
    /// `beta_c + rho4 = rho3`.
    pub fn is_consistent_with(&self, target: NormalMonomial) -> bool {
        self.output() == target && self.beta_c + self.rho4 == self.rho3
    }

    pub fn summand(&self) -> BigInt {
        let mut t = multinomial(&[self.alpha1, self.alpha2])
            * multinomial(&[self.beta_f, self.beta_g, self.beta_c])
            * multinomial(&[self.gamma1, self.gamma2])
            * multinomial(&[self.rho1, self.rho2, self.rho3, self.rho4, self.rho5, self.rho6])
            * BigInt::from(2 * self.alpha2).pow(self.rho5)
            * BigInt::from(2 * self.gamma1).pow(self.rho6)
            * factorial(self.beta_c)
            * factorial(self.rho4)
            * shifted_elem(self.gamma1 + self.alpha2, self.rho4, self.rho3);
        if self.rho3 % 2 == 1 {
            t = -t;
        }
        t
    }
}

/// Integer coefficients of `m1 ⋆ m2`, keyed by output monomial.
pub fn mono_product_terms(m1: NormalMonomial, m2: NormalMonomial) -> BTreeMap<NormalMonomial, BigInt> {
    let mut out: BTreeMap<NormalMonomial, BigInt> = BTreeMap::new();
    for p in ProductIndexAssignment::enumerate(m1, m2) {
        let s = p.summand();
        if s.is_zero() {
            continue;
        }
        *out.entry(p.output()).or_default() += s;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The product of two divided monomials.
pub fn mono_star_mono(m1: NormalMonomial, m2: NormalMonomial) -> Element {
    let mut e = Element::zero();
    for (m, c) in mono_product_terms(m1, m2) {
        e.add_int_term(m, c);
    }
    e
}

/// Bilinear extension of [`mono_star_mono`].
///
/// The result's cap is the smaller of the two input caps. Since the product
/// is graded, pairs whose degrees already sum past the cap are skipped.
pub fn star(f: &Element, g: &Element) -> Element {
    let cap = match (f.cap(), g.cap()) {
        (Some(l), Some(r)) => Some(l.min(r)),
        (l, r) => l.or(r),
    };
    let mut out = Element::zero().with_cap(cap);
    for (m1, c1) in f.terms() {
        for (m2, c2) in g.terms() {
            if cap.is_some_and(|cap| m1.degree() + m2.degree() > cap) {
                continue;
            }
            let scale = c1 * c2;
            for (m, c) in mono_product_terms(*m1, *m2) {
                out.add_term(m, &scale * num_rational::BigRational::from_integer(c));
            }
        }
    }
    out
}

/// The coefficient of `out` in `m1 ⋆ m2`.
pub fn structural_coefficient(m1: NormalMonomial, m2: NormalMonomial, out: NormalMonomial) -> Result<BigInt> {
    let value = mono_star_mono(m1, m2).coefficient(&out);
    if !value.is_integer() {
        return Err(Error::IntegralityViolation { left: m1, right: m2, out, value });
    }
    Ok(value.to_integer())
}

/// `sum_{k=0}^{cap} color^k / k!`, carrying the cap.
pub fn exp_series(color: Color, cap: u32) -> Element {
    Element::from_int_terms((0..=cap).map(|k| (NormalMonomial::power(color, k), 1))).with_cap(Some(cap))
}

/// `z^a/a! ⋆ y^b/b! = sum_k (2a)^k y^(b-k)/(b-k)! z^a/a! h^k/k!`
pub fn normal_order_zy(a: u32, b: u32) -> Element {
    let mut e = Element::zero();
    for k in 0..=b {
        e.add_int_term(NormalMonomial::new(0, b - k, a, k), BigInt::from(2 * a).pow(k));
    }
    e
}

/// `y^a/a! ⋆ x^b/b! = sum_k (2b)^k x^b/b! y^(a-k)/(a-k)! h^k/k!`
pub fn normal_order_yx(a: u32, b: u32) -> Element {
    let mut e = Element::zero();
    for k in 0..=a {
        e.add_int_term(NormalMonomial::new(b, a - k, 0, k), BigInt::from(2 * b).pow(k));
    }
    e
}

/// `z^a/a! ⋆ x^b/b!` as the double sum over `0 <= w <= v <= min(a, b)` of
/// `(-1)^v (v-w)! (v+w)_w (a+b-2v)^w_v` times the divided monomial
/// `x^(b-v) y^(v-w) z^(a-v) h^(v+w)`.
pub fn normal_order_zx(a: u32, b: u32) -> Element {
    normal_order_zx_with(a, b, |v, w| falling_factorial(v + w, w))
}

/// Same sum with `(v+w)_w` written as `C(v+w, w) w!`.
pub fn normal_order_zx_binomial_form(a: u32, b: u32) -> Element {
    normal_order_zx_with(a, b, |v, w| crate::combinatorics::binomial(v + w, w) * factorial(w))
}

fn normal_order_zx_with(a: u32, b: u32, rising: impl Fn(u32, u32) -> BigInt) -> Element {
    let mut e = Element::zero();
    for v in 0..=a.min(b) {
        for w in 0..=v {
            let mut c = factorial(v - w) * rising(v, w) * shifted_elem(a + b - 2 * v, w, v);
            if v % 2 == 1 {
                c = -c;
            }
            e.add_int_term(NormalMonomial::new(b - v, v - w, a - v, v + w), c);
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(a: u32, b: u32, c: u32, d: u32) -> NormalMonomial {
        NormalMonomial::new(a, b, c, d)
    }

    fn el(terms: &[((u32, u32, u32, u32), i64)]) -> Element {
        Element::from_int_terms(terms.iter().copied())
    }

    #[test]
    fn defining_relations() {
        let x = Element::generator(Color::X);
        let y = Element::generator(Color::Y);
        let z = Element::generator(Color::Z);
        assert_eq!(star(&x, &y), el(&[((1, 1, 0, 0), 1)]));
        assert_eq!(star(&y, &x), el(&[((1, 1, 0, 0), 1), ((1, 0, 0, 1), 2)]));
        assert_eq!(star(&z, &x), el(&[((1, 0, 1, 0), 1), ((0, 1, 0, 1), -1)]));
        assert_eq!(star(&z, &y), el(&[((0, 1, 1, 0), 1), ((0, 0, 1, 1), 2)]));
    }

    #[test]
    fn z_times_divided_x_squared() {
        let expected = el(&[((2, 0, 1, 0), 1), ((1, 1, 0, 1), -1), ((1, 0, 0, 2), -2)]);
        assert_eq!(mono_star_mono(m(0, 0, 1, 0), m(2, 0, 0, 0)), expected);
        assert_eq!(normal_order_zx(1, 2), expected);
    }

    #[test]
    fn divided_z_squared_times_divided_x_squared() {
        let expected = el(&[
            ((2, 0, 2, 0), 1),
            ((1, 1, 1, 1), -1),
            ((1, 0, 1, 2), -4),
            ((0, 2, 0, 2), 2),
            ((0, 1, 0, 3), 3),
        ]);
        assert_eq!(normal_order_zx(2, 2), expected);
        assert_eq!(mono_star_mono(m(0, 0, 2, 0), m(2, 0, 0, 0)), expected);
    }

    #[test]
    fn normal_order_small_cases() {
        assert_eq!(normal_order_zy(1, 1), el(&[((0, 1, 1, 0), 1), ((0, 0, 1, 1), 2)]));
        assert_eq!(normal_order_yx(1, 1), el(&[((1, 1, 0, 0), 1), ((1, 0, 0, 1), 2)]));
        assert_eq!(normal_order_zx(1, 1), el(&[((1, 0, 1, 0), 1), ((0, 1, 0, 1), -1)]));
        for n in 0..=5 {
            assert_eq!(normal_order_zy(0, n), Element::monomial(m(0, n, 0, 0)));
            assert_eq!(normal_order_yx(n, 0), Element::monomial(m(0, n, 0, 0)));
            assert_eq!(normal_order_zy(n + 1, 3).len(), 4);
        }
    }

    #[test]
    fn zx_forms_agree() {
        for a in 0..=6 {
            for b in 0..=6 {
                assert_eq!(normal_order_zx(a, b), normal_order_zx_binomial_form(a, b));
            }
        }
    }

    #[test]
    fn unit_is_neutral() {
        for mono in NormalMonomial::all_up_to(2) {
            assert_eq!(mono_star_mono(NormalMonomial::UNIT, mono), Element::monomial(mono));
            assert_eq!(mono_star_mono(mono, NormalMonomial::UNIT), Element::monomial(mono));
        }
    }

    #[test]
    fn structural_coefficients() {
        assert_eq!(structural_coefficient(m(0, 1, 0, 0), m(1, 0, 0, 0), m(1, 0, 0, 1)), Ok(2.into()));
        assert_eq!(structural_coefficient(m(0, 0, 1, 0), m(1, 0, 0, 0), m(0, 1, 0, 1)), Ok((-1).into()));
        assert_eq!(structural_coefficient(m(0, 0, 2, 0), m(2, 0, 0, 0), m(0, 1, 0, 3)), Ok(3.into()));
        assert_eq!(structural_coefficient(m(0, 0, 2, 0), m(2, 0, 0, 0), m(3, 0, 0, 0)), Ok(0.into()));
    }

    #[test]
    fn assignments_are_consistent_and_graded() {
        for m1 in NormalMonomial::all_up_to(2) {
            for m2 in NormalMonomial::all_up_to(2) {
                for p in ProductIndexAssignment::enumerate(m1, m2) {
                    assert!(p.is_consistent_with(p.output()));
                    assert_eq!(p.left_input(), m1);
                    assert_eq!(p.right_input(), m2);
                    assert_eq!(p.output().degree(), m1.degree() + m2.degree());
                }
            }
        }
    }

    #[test]
    fn exp_series_shape() {
        assert_eq!(exp_series(Color::X, 0), Element::unit().with_cap(Some(0)));
        let e = exp_series(Color::Y, 3);
        assert_eq!(e.len(), 4);
        assert_eq!(e.cap(), Some(3));
        for k in 0..=3 {
            assert_eq!(e.coefficient(&NormalMonomial::power(Color::Y, k)), num_rational::BigRational::one());
        }
    }

    #[test]
    fn star_respects_cap() {
        let f = exp_series(Color::Z, 2);
        let g = exp_series(Color::X, 2);
        let p = star(&f, &g);
        assert_eq!(p.cap(), Some(2));
        assert!(p.monomials().all(|m| m.degree() <= 2));
        // zx = xz - yh survives at degree 2
        assert_eq!(p.coefficient(&m(0, 1, 0, 1)), num_rational::BigRational::from_integer((-1).into()));
    }
}
