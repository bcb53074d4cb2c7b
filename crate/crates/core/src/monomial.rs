use std::fmt;

use num_bigint::BigInt;

use crate::combinatorics::factorial;

/// One of the four generators. The derived order is the PBW order
/// `x < y < z < h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    X,
    Y,
    Z,
    H,
}

impl Color {
    pub const ALL: [Color; 4] = [Color::X, Color::Y, Color::Z, Color::H];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Color::X => 'x',
            Color::Y => 'y',
            Color::Z => 'z',
            Color::H => 'h',
        }
    }

    pub fn from_letter(c: char) -> Option<Color> {
        match c.to_ascii_lowercase() {
            'x' => Some(Color::X),
            'y' => Some(Color::Y),
            'z' => Some(Color::Z),
            'h' => Some(Color::H),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Exponent tuple `(a, b, c, d)` of the divided monomial
/// `x^a y^b z^c h^d / (a! b! c! d!)`.
///
/// Ordering is lexicographic on `(a, b, c, d)`, which is also the order used
/// for serialized output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NormalMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl NormalMonomial {
    pub const UNIT: NormalMonomial = NormalMonomial { a: 0, b: 0, c: 0, d: 0 };

    pub const fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        NormalMonomial { a, b, c, d }
    }

    /// The divided power `color^n / n!`.
    pub fn power(color: Color, n: u32) -> Self {
        let mut e = [0; 4];
        e[color.index()] = n;
        Self::from(e)
    }

    pub fn exponents(&self) -> [u32; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn exponent(&self, color: Color) -> u32 {
        self.exponents()[color.index()]
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    /// `a! b! c! d!`, the ratio between the plain and the divided monomial.
    pub fn factorial_weight(&self) -> BigInt {
        self.exponents().iter().map(|&e| factorial(e)).product()
    }

    /// Every monomial whose exponents are all at most `max_exp`, in
    /// lexicographic order.
    pub fn all_up_to(max_exp: u32) -> impl Iterator<Item = NormalMonomial> + Clone {
        let r = 0..=max_exp;
        itertools::iproduct!(r.clone(), r.clone(), r.clone(), r)
            .map(|(a, b, c, d)| NormalMonomial::new(a, b, c, d))
    }

    /// Every monomial of total degree at most `max_degree`.
    pub fn all_of_degree_at_most(max_degree: u32) -> impl Iterator<Item = NormalMonomial> {
        Self::all_up_to(max_degree).filter(move |m| m.degree() <= max_degree)
    }
}

impl From<[u32; 4]> for NormalMonomial {
    fn from(e: [u32; 4]) -> Self {
        NormalMonomial::new(e[0], e[1], e[2], e[3])
    }
}

impl From<(u32, u32, u32, u32)> for NormalMonomial {
    fn from((a, b, c, d): (u32, u32, u32, u32)) -> Self {
        NormalMonomial::new(a, b, c, d)
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_lexicographic() {
        let mut v = vec![
            NormalMonomial::new(0, 0, 0, 5),
            NormalMonomial::new(1, 0, 0, 0),
            NormalMonomial::new(0, 2, 0, 0),
            NormalMonomial::new(0, 1, 3, 0),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                NormalMonomial::new(0, 0, 0, 5),
                NormalMonomial::new(0, 1, 3, 0),
                NormalMonomial::new(0, 2, 0, 0),
                NormalMonomial::new(1, 0, 0, 0),
            ]
        );
    }

    #[test]
    fn weight_and_degree() {
        let m = NormalMonomial::new(2, 0, 3, 1);
        assert_eq!(m.degree(), 6);
        assert_eq!(m.factorial_weight(), BigInt::from(12));
        assert_eq!(NormalMonomial::power(Color::Z, 3), NormalMonomial::new(0, 0, 3, 0));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(NormalMonomial::all_up_to(3).count(), 256);
        // C(4 + 4, 4) monomials of degree <= 4
        assert_eq!(NormalMonomial::all_of_degree_at_most(4).count(), 70);
    }
}
