use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Color, NormalMonomial};

/// A finitely supported element in PBW normal form.
///
/// Coefficients are taken with respect to the divided monomials, so the
/// element `{m(2,0,0,0): 1}` is `x^2 / 2!`. An optional degree cap records
/// that the element is a truncation of a power series; no stored monomial
/// exceeds it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<NormalMonomial, BigRational>,
    cap: Option<u32>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn unit() -> Self {
        Element::monomial(NormalMonomial::UNIT)
    }

    pub fn monomial(m: impl Into<NormalMonomial>) -> Self {
        let mut e = Element::zero();
        e.add_term(m.into(), BigRational::one());
        e
    }

    pub fn generator(color: Color) -> Self {
        Element::monomial(NormalMonomial::power(color, 1))
    }

    pub fn constant(q: BigRational) -> Self {
        let mut e = Element::zero();
        e.add_term(NormalMonomial::UNIT, q);
        e
    }

    /// Builds an element from `(monomial, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I, M, Q>(terms: I) -> Self
    where
        I: IntoIterator<Item = (M, Q)>,
        M: Into<NormalMonomial>,
        Q: Into<BigRational>,
    {
        let mut e = Element::zero();
        for (m, q) in terms {
            e.add_term(m.into(), q.into());
        }
        e
    }

    /// Convenience for integer coefficients.
    pub fn from_int_terms<I, M>(terms: I) -> Self
    where
        I: IntoIterator<Item = (M, i64)>,
        M: Into<NormalMonomial>,
    {
        Self::from_terms(terms.into_iter().map(|(m, c)| (m, BigRational::from_integer(c.into()))))
    }

    /// Sets the degree cap, discarding monomials above it. Passing `None`
    /// removes the cap.
    pub fn with_cap(mut self, cap: Option<u32>) -> Self {
        self.cap = cap;
        if let Some(cap) = cap {
            self.terms.retain(|m, _| m.degree() <= cap);
        }
        self
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &NormalMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in lexicographic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &NormalMonomial> {
        self.terms.keys()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|q| q.is_integer())
    }

    /// The distinct total degrees present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|m| m.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Adds `q` times the divided monomial `m`, dropping the result if it
    /// cancels or lies above the cap.
    pub fn add_term(&mut self, m: NormalMonomial, q: BigRational) {
        if q.is_zero() || self.cap.is_some_and(|c| m.degree() > c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_int_term(&mut self, m: NormalMonomial, c: BigInt) {
        self.add_term(m, BigRational::from_integer(c));
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        let cap = merge_caps(self.cap, other.cap)?;
        let mut out = self.clone().with_cap(cap);
        for (m, q) in &other.terms {
            out.add_term(*m, q.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, q)| (*m, -q)).collect(),
            cap: self.cap,
        }
    }

    pub fn scalar_mul(&self, q: &BigRational) -> Element {
        let mut out = Element { terms: BTreeMap::new(), cap: self.cap };
        for (m, c) in &self.terms {
            out.add_term(*m, c * q);
        }
        out
    }

    /// The noncommutative product; see [`crate::product::star`].
    pub fn star(&self, other: &Element) -> Element {
        crate::product::star(self, other)
    }
}

/// Two caps are compatible when equal or when at least one is absent.
fn merge_caps(left: Option<u32>, right: Option<u32>) -> Result<Option<u32>> {
    match (left, right) {
        (Some(l), Some(r)) if l != r => Err(Error::CapMismatch { left: l, right: r }),
        (Some(c), _) | (_, Some(c)) => Ok(Some(c)),
        (None, None) => Ok(None),
    }
}
