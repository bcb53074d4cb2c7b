//! Exact evaluation of the symbols that parameterize every structural
//! coefficient: elementary symmetric functions at consecutive integers,
//! falling factorials and Pochhammer `k`-symbols, together with
//! enumeration oracles for each of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `n!`
pub fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `n! / (k_1! k_2! ... k_r!)` where `n = k_1 + ... + k_r`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let n: u32 = parts.iter().sum();
    let den: BigInt = parts.iter().map(|&k| factorial(k)).product();
    factorial(n) / den
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    multinomial(&[k, n - k])
}

/// `e^s(values)`: the sum over all `s`-subsets of `values` of the product of
/// the subset. This is the defining enumeration, not a recurrence.
pub fn elementary_symmetric(s: usize, values: &[BigInt]) -> BigInt {
    values
        .iter()
        .combinations(s)
        .map(|subset| subset.into_iter().product::<BigInt>())
        .sum()
}

/// The shifted symbol `(a)^s_n = e^s(a, a+1, ..., a+n-1)`, evaluated with
/// the recurrence `(a)^s_n = (a)^s_{n-1} + (a+n-1) (a)^{s-1}_{n-1}` and the
/// boundary values `(a)^0_n = 1`, `(a)^s_n = 0` for `s > n`.
pub fn shifted_elem(a: impl Into<BigInt>, s: u32, n: u32) -> BigInt {
    if s > n {
        return BigInt::zero();
    }
    let a = a.into();
    let s = s as usize;
    // row[j] holds (a)^j_m for the current m
    let mut row = vec![BigInt::zero(); s + 1];
    row[0] = BigInt::one();
    for m in 1..=n {
        let top = &a + BigInt::from(m - 1);
        for j in (1..=s.min(m as usize)).rev() {
            let add = &top * &row[j - 1];
            row[j] += add;
        }
    }
    row.swap_remove(s)
}

/// Counts the ways of putting `s` dots into a tableau whose rows have
/// lengths `a+n-1, ..., a+1, a`, at most one dot per row, by walking every
/// configuration.
pub fn tableaux_count_oracle(a: u64, s: u32, n: u32) -> BigInt {
    let rows: Vec<u64> = (0..n as u64).rev().map(|i| a + i).collect();
    let mut total: u64 = 0;
    for chosen in rows.iter().copied().combinations(s as usize) {
        if chosen.contains(&0) {
            continue;
        }
        // odometer over one dot position per chosen row
        let mut pos = vec![0u64; chosen.len()];
        'configs: loop {
            total += 1;
            for (p, &len) in pos.iter_mut().zip(&chosen) {
                *p += 1;
                if *p < len {
                    continue 'configs;
                }
                *p = 0;
            }
            break;
        }
    }
    BigInt::from(total)
}

/// Falling factorial `(a)_n = a (a-1) ... (a-n+1)`, with `(a)_0 = 1`.
pub fn falling_factorial(a: impl Into<BigInt>, n: u32) -> BigInt {
    let a = a.into();
    (0..n).map(|i| &a - BigInt::from(i)).product()
}

/// Pochhammer `k`-symbol `(a)_{n,k} = a (a+k) (a+2k) ... (a+(n-1)k)`.
/// The empty product `n = 0` is one.
pub fn pochhammer_k<T>(a: &T, n: u32, k: &T) -> T
where
    T: Clone + One + Add<Output = T> + Mul<Output = T>,
{
    let mut acc = T::one();
    let mut factor = a.clone();
    for i in 0..n {
        if i > 0 {
            factor = factor + k.clone();
        }
        acc = acc * factor.clone();
    }
    acc
}

/// Polynomial with integer coefficients in two commuting indeterminates
/// `y` and `h`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, 0, 0)
    }

    /// `c y^i h^j`
    pub fn term(c: impl Into<BigInt>, y_exp: u32, h_exp: u32) -> Self {
        let mut p = BiPoly::default();
        p.add_term((y_exp, h_exp), c.into());
        p
    }

    pub fn y() -> Self {
        Self::term(1, 1, 0)
    }

    pub fn h() -> Self {
        Self::term(1, 0, 1)
    }

    pub fn coefficient(&self, y_exp: u32, h_exp: u32) -> BigInt {
        self.terms.get(&(y_exp, h_exp)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = BiPoly::default();
        for (&k, v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
        self
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(mut self) -> BiPoly {
        for v in self.terms.values_mut() {
            *v = -std::mem::take(v);
        }
        self
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: BiPoly) -> BiPoly {
        self + (-rhs)
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::constant(1)
    }
}

impl fmt::Display for BiPoly {
    /// Highest power of `y` first, e.g. `y^2 - 3 y h + 2 h^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                parts.push(mag.to_string());
            }
            for (var, e) in [("y", i), ("h", j)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    e => parts.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// `(y + (a-(n+1)) h)_{n,-h}`, i.e. the product
/// `prod_{i=0}^{n-1} [y + (a - (n+i+1)) h]`.
pub fn vam3_lhs(a: i64, n: u32) -> BiPoly {
    let start = BiPoly::y() + BiPoly::term(a - (n as i64 + 1), 0, 1);
    pochhammer_k(&start, n, &BiPoly::term(-1, 0, 1))
}

/// `sum_{w=0}^{n} (a-2n)^w_n y^{n-w} h^w`.
pub fn vam3_rhs(a: i64, n: u32) -> BiPoly {
    (0..=n)
        .map(|w| BiPoly::term(shifted_elem(a - 2 * n as i64, w, n), n - w, w))
        .fold(BiPoly::zero(), |acc, t| acc + t)
}
