//! Normal ordering by term rewriting in the free algebra on `x, y, z, h`.
//!
//! The rules are the defining relations read left to right:
//!
//! ```text
//! yx -> xy + 2xh      zx -> xz - yh      zy -> yz + 2zh
//! hx -> xh            hy -> yh           hz -> zh
//! ```
//!
//! A word is normal when its letters are sorted `x <= y <= z <= h`. This
//! module shares no code with the closed formula in [`crate::product`]; it
//! exists to check it.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::monomial::{Color, NormalMonomial};

/// A word in the free algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord(pub Vec<Color>);

impl FreeWord {
    pub fn new(letters: impl Into<Vec<Color>>) -> Self {
        FreeWord(letters.into())
    }

    /// Parses letters such as `"ZXX"` (case-insensitive).
    pub fn parse(s: &str) -> Option<Self> {
        s.chars().map(Color::from_letter).collect::<Option<Vec<_>>>().map(FreeWord)
    }

    /// The plain word `x^a y^b z^c h^d`.
    pub fn from_monomial(m: NormalMonomial) -> Self {
        let mut w = Vec::with_capacity(m.degree() as usize);
        for color in Color::ALL {
            w.extend(std::iter::repeat_n(color, m.exponent(color) as usize));
        }
        FreeWord(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        FreeWord(w)
    }

    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }

    /// Exponents of a normal word; `None` if the word is not normal.
    pub fn as_monomial(&self) -> Option<NormalMonomial> {
        if !self.is_normal() {
            return None;
        }
        let mut e = [0u32; 4];
        for c in &self.0 {
            e[c.index()] += 1;
        }
        Some(NormalMonomial::from(e))
    }

    /// `(number of non-h letters, number of inversions)`. Every rewrite step
    /// strictly decreases this pair lexicographically in each word it
    /// produces: swaps keep the letters and remove one inversion, while the
    /// `2xh`, `-yh` and `2zh` terms turn a letter into `h`.
    pub fn termination_measure(&self) -> (usize, usize) {
        let non_h = self.0.iter().filter(|&&c| c != Color::H).count();
        let mut inversions = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        (non_h, inversions)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", c.letter().to_ascii_uppercase())?;
        }
        Ok(())
    }
}

/// Integer linear combination of words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordSum {
    terms: BTreeMap<FreeWord, BigInt>,
}

impl WordSum {
    pub fn zero() -> Self {
        WordSum::default()
    }

    pub fn single(w: FreeWord, c: impl Into<BigInt>) -> Self {
        let mut s = WordSum::zero();
        s.add(w, c.into());
        s
    }

    pub fn from_pairs<I: IntoIterator<Item = (FreeWord, i64)>>(pairs: I) -> Self {
        let mut s = WordSum::zero();
        for (w, c) in pairs {
            s.add(w, c.into());
        }
        s
    }

    pub fn add(&mut self, w: FreeWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, w: &FreeWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
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
}

/// Which out-of-order adjacent pair a step rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Replacement for an out-of-order pair `(first, second)` with `first > second`.
fn rule(first: Color, second: Color) -> Vec<(Vec<Color>, i64)> {
    use Color::*;
    match (first, second) {
        (Y, X) => vec![(vec![X, Y], 1), (vec![X, H], 2)],
        (Z, X) => vec![(vec![X, Z], 1), (vec![Y, H], -1)],
        (Z, Y) => vec![(vec![Y, Z], 1), (vec![Z, H], 2)],
        (H, other) => vec![(vec![other, H], 1)],
        _ => unreachable!("pair {first}{second} is already ordered"),
    }
}

fn step_at(w: &FreeWord, i: usize) -> WordSum {
    let mut out = WordSum::zero();
    for (pair, c) in rule(w.0[i], w.0[i + 1]) {
        let mut letters = Vec::with_capacity(w.len());
        letters.extend_from_slice(&w.0[..i]);
        letters.extend(pair);
        letters.extend_from_slice(&w.0[i + 2..]);
        out.add(FreeWord(letters), c.into());
    }
    out
}

/// Rewrites the leftmost out-of-order adjacent pair; `None` if `w` is normal.
pub fn rewrite_step(w: &FreeWord) -> Option<WordSum> {
    rewrite_step_with(w, Strategy::Leftmost)
}

pub fn rewrite_step_with(w: &FreeWord, strategy: Strategy) -> Option<WordSum> {
    let mut positions = (0..w.len().saturating_sub(1)).filter(|&i| w.0[i] > w.0[i + 1]);
    let i = match strategy {
        Strategy::Leftmost => positions.next(),
        Strategy::Rightmost => positions.last(),
    }?;
    Some(step_at(w, i))
}

/// Normal form of `w` using leftmost rewriting.
pub fn normalize(w: &FreeWord) -> WordSum {
    normalize_with(w, Strategy::Leftmost)
}

pub fn normalize_with(w: &FreeWord, strategy: Strategy) -> WordSum {
    normalize_sum_with(&WordSum::single(w.clone(), 1), strategy)
}

/// Rewrites every word of `s` until all are normal. Pending words with the
/// same spelling are merged before being rewritten further.
pub fn normalize_sum_with(s: &WordSum, strategy: Strategy) -> WordSum {
    let mut done = WordSum::zero();
    let mut pending: BTreeMap<FreeWord, BigInt> = BTreeMap::new();
    for (w, c) in s.terms() {
        pending.insert(w.clone(), c.clone());
    }
    // Most steps make a word lexicographically smaller, so taking the
    // greatest pending word first lets contributions to one spelling merge
    // before it is rewritten.
    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        match rewrite_step_with(&w, strategy) {
            None => done.add(w, c),
            Some(next) => {
                for (nw, nc) in next.terms {
                    let slot = pending.entry(nw).or_default();
                    *slot += &c * nc;
                }
            }
        }
    }
    done
}

/// Converts a sum of normal words to the divided basis: the plain word
/// `x^a y^b z^c h^d` equals `a! b! c! d!` times the divided monomial.
pub fn to_element(s: &WordSum) -> Result<Element> {
    let mut e = Element::zero();
    for (w, c) in s.terms() {
        let m = w.as_monomial().ok_or_else(|| Error::NonNormalWord(w.to_string()))?;
        e.add_term(m, BigRational::from_integer(c * m.factorial_weight()));
    }
    Ok(e)
}

/// `m1 ⋆ m2` computed by rewriting the concatenated plain words and dividing
/// out the factorials of both inputs.
pub fn oracle_star(m1: NormalMonomial, m2: NormalMonomial) -> Element {
    let word = FreeWord::from_monomial(m1).concat(&FreeWord::from_monomial(m2));
    let plain = to_element(&normalize(&word)).expect("normalize returns normal words");
    let weight = m1.factorial_weight() * m2.factorial_weight();
    plain.scalar_mul(&BigRational::new(BigInt::one(), weight))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    fn ws(pairs: &[(&str, i64)]) -> WordSum {
        WordSum::from_pairs(pairs.iter().map(|&(s, c)| (w(s), c)))
    }

    #[test]
    fn single_steps() {
        assert_eq!(rewrite_step(&w("YX")), Some(ws(&[("XY", 1), ("XH", 2)])));
        assert_eq!(rewrite_step(&w("ZX")), Some(ws(&[("XZ", 1), ("YH", -1)])));
        assert_eq!(rewrite_step(&w("ZY")), Some(ws(&[("YZ", 1), ("ZH", 2)])));
        assert_eq!(rewrite_step(&w("HY")), Some(ws(&[("YH", 1)])));
        assert_eq!(rewrite_step(&w("XYZH")), None);
        assert_eq!(rewrite_step(&w("")), None);
        assert_eq!(rewrite_step(&w("XXYYZH")), None);
    }

    #[test]
    fn leftmost_and_rightmost_pick_different_pairs() {
        let word = w("YXZY");
        assert_eq!(rewrite_step_with(&word, Strategy::Leftmost), Some(ws(&[("XYZY", 1), ("XHZY", 2)])));
        assert_eq!(rewrite_step_with(&word, Strategy::Rightmost), Some(ws(&[("YXYZ", 1), ("YXZH", 2)])));
    }

    #[test]
    fn normal_forms() {
        assert_eq!(normalize(&w("ZXX")), ws(&[("XXZ", 1), ("XYH", -2), ("XHH", -2)]));
        assert_eq!(normalize(&w("ZY")), ws(&[("YZ", 1), ("ZH", 2)]));
        assert_eq!(normalize(&w("HXYZ")), ws(&[("XYZH", 1)]));
    }

    #[test]
    fn conversion_to_divided_basis() {
        assert_eq!(
            to_element(&ws(&[("XX", 1)])).unwrap(),
            Element::from_int_terms([((2, 0, 0, 0), 2)])
        );
        assert_eq!(
            to_element(&ws(&[("XYZH", 5)])).unwrap(),
            Element::from_int_terms([((1, 1, 1, 1), 5)])
        );
        assert!(to_element(&WordSum::zero()).unwrap().is_zero());
        assert!(matches!(to_element(&ws(&[("YX", 1)])), Err(Error::NonNormalWord(_))));
    }

    #[test]
    fn oracle_products() {
        let m = NormalMonomial::new;
        assert_eq!(
            oracle_star(m(0, 1, 0, 0), m(1, 0, 0, 0)),
            Element::from_int_terms([((1, 1, 0, 0), 1), ((1, 0, 0, 1), 2)])
        );
        assert_eq!(
            oracle_star(m(0, 0, 1, 0), m(2, 0, 0, 0)),
            Element::from_int_terms([((2, 0, 1, 0), 1), ((1, 1, 0, 1), -1), ((1, 0, 0, 2), -2)])
        );
        assert_eq!(
            oracle_star(m(0, 0, 2, 0), m(2, 0, 0, 0)),
            Element::from_int_terms([
                ((2, 0, 2, 0), 1),
                ((1, 1, 1, 1), -1),
                ((1, 0, 1, 2), -4),
                ((0, 2, 0, 2), 2),
                ((0, 1, 0, 3), 3),
            ])
        );
    }

    #[test]
    fn steps_decrease_the_measure() {
        let letters = Color::ALL;
        for len in 2..=5u32 {
            for code in 0..4usize.pow(len) {
                let word = FreeWord((0..len).map(|i| letters[(code >> (2 * i)) & 3]).collect());
                for strategy in [Strategy::Leftmost, Strategy::Rightmost] {
                    if let Some(next) = rewrite_step_with(&word, strategy) {
                        for (nw, _) in next.terms() {
                            assert_eq!(nw.len(), word.len());
                            assert!(nw.termination_measure() < word.termination_measure(), "{word} -> {nw}");
                        }
                    }
                }
            }
        }
    }
}
