//! Labelled-set realization of the star product on functors `B^4 -> C`.
//!
//! A four-coloured finite set `(x, y, z, h)` is split into blocks
//! `x = x1 ⊔ x2`, `y = y1 ⊔ y2 ⊔ y3`, `z = z1 ⊔ z2` and
//! `h = h1 ⊔ ... ⊔ h6` with `|y3| + |h4| = |h3|`. Each split contributes
//!
//! ```text
//! (-1)^|h3| F(x1, y1 ⊔ h5, z1 ⊔ h3, h1) · G(x2 ⊔ h3, y2 ⊔ h6, z2, h2)
//!   · |[h5, x2 ⊔ x2]| · |[h6, z1 ⊔ z1]| · |L(y3)| · |L(h4)|
//!   · |(z1 ⊔ x2)^h4_(y3 ⊔ h4)|
//! ```
//!
//! where `[a, b]` is the set of maps `a -> b`, `L` the set of linear orders
//! and `(base)^k_m` the set of maps counted by [`ascending_maps_count`].
//! Splits are enumerated element by element over concrete labels, so the
//! multinomial coefficients of the closed formula are never written down
//! here; they arise from the enumeration.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::factorial;
use crate::element::Element;
use crate::error::Error;
use crate::monomial::{Color, NormalMonomial};
use crate::product::{exp_series, star};

/// A rigid functor: its value on `(x, y, z, h)` is 0 or 1 and depends only
/// on the four cardinalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctorSpec {
    /// `X^a Y^b Z^c H^d / (a! b! c! d!)`: one structure exactly on sets of
    /// sizes `(a, b, c, d)`.
    DividedPower(NormalMonomial),
    /// One structure on a single element of the given colour.
    Singleton(Color),
    /// `E^C`: one structure whenever all other colours are empty.
    Exponential(Color),
}

/// Cardinalities of the four colour classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColoredSizes {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
    pub nh: usize,
}

impl ColoredSizes {
    pub const fn new(nx: usize, ny: usize, nz: usize, nh: usize) -> Self {
        ColoredSizes { nx, ny, nz, nh }
    }

    pub fn get(&self, color: Color) -> usize {
        match color {
            Color::X => self.nx,
            Color::Y => self.ny,
            Color::Z => self.nz,
            Color::H => self.nh,
        }
    }

    pub fn total(&self) -> usize {
        self.nx + self.ny + self.nz + self.nh
    }

    pub fn as_monomial(&self) -> NormalMonomial {
        NormalMonomial::new(self.nx as u32, self.ny as u32, self.nz as u32, self.nh as u32)
    }

    /// All size tuples with `nx + ny + nz + nh <= max_total`.
    pub fn up_to_total(max_total: usize) -> Vec<ColoredSizes> {
        let mut out = Vec::new();
        for nx in 0..=max_total {
            for ny in 0..=max_total - nx {
                for nz in 0..=max_total - nx - ny {
                    for nh in 0..=max_total - nx - ny - nz {
                        out.push(ColoredSizes::new(nx, ny, nz, nh));
                    }
                }
            }
        }
        out
    }
}

impl From<NormalMonomial> for ColoredSizes {
    fn from(m: NormalMonomial) -> Self {
        ColoredSizes::new(m.a as usize, m.b as usize, m.c as usize, m.d as usize)
    }
}

impl FunctorSpec {
    /// Singletons are divided powers of degree one.
    fn normalized(self) -> FunctorSpec {
        match self {
            FunctorSpec::Singleton(c) => FunctorSpec::DividedPower(NormalMonomial::power(c, 1)),
            other => other,
        }
    }

    /// Largest size of `color` on which the functor can be non-zero, or
    /// `None` if unbounded.
    pub fn size_bound(&self, color: Color) -> Option<usize> {
        match self.normalized() {
            FunctorSpec::DividedPower(m) => Some(m.exponent(color) as usize),
            FunctorSpec::Exponential(c) if c == color => None,
            FunctorSpec::Exponential(_) => Some(0),
            FunctorSpec::Singleton(_) => unreachable!(),
        }
    }

    /// Generating series `sum |F([a],[b],[c],[d])| x^a y^b z^c h^d / (a! b! c! d!)`.
    /// Exponentials are truncated at `cap`, which the result carries.
    pub fn valuation(&self, cap: u32) -> Element {
        match self.normalized() {
            FunctorSpec::DividedPower(m) => Element::monomial(m),
            FunctorSpec::Exponential(c) => exp_series(c, cap),
            FunctorSpec::Singleton(_) => unreachable!(),
        }
    }
}

impl fmt::Display for FunctorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorSpec::DividedPower(m) => write!(f, "{m}"),
            FunctorSpec::Singleton(c) => write!(f, "{c}"),
            FunctorSpec::Exponential(c) => write!(f, "exp({c})"),
        }
    }
}

impl FromStr for FunctorSpec {
    type Err = Error;

    /// Accepts `m(a,b,c,d)`, a colour letter such as `x`, or `exp(y)`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg}: `{s}`") };
        if let Some(inner) = t.strip_prefix("exp(").and_then(|r| r.strip_suffix(')')) {
            let mut chars = inner.chars();
            return match (chars.next().and_then(Color::from_letter), chars.next()) {
                (Some(c), None) => Ok(FunctorSpec::Exponential(c)),
                _ => Err(err("expected exp(x|y|z|h)")),
            };
        }
        if let Some(inner) = t.strip_prefix("m(").and_then(|r| r.strip_suffix(')')) {
            let e: Vec<u32> = inner
                .split(',')
                .map(|p| p.parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| err("expected m(a,b,c,d) with natural exponents"))?;
            let e: [u32; 4] = e.try_into().map_err(|_| err("expected four exponents"))?;
            return Ok(FunctorSpec::DividedPower(e.into()));
        }
        let mut chars = t.chars();
        match (chars.next().and_then(Color::from_letter), chars.next()) {
            (Some(c), None) => Ok(FunctorSpec::Singleton(c)),
            _ => Err(err("unknown functor")),
        }
    }
}

/// Value (0 or 1) of a rigid functor on sets of the given sizes.
pub fn functor_value(f: &FunctorSpec, s: ColoredSizes) -> BigInt {
    let fits = Color::ALL
        .iter()
        .all(|&c| match f.size_bound(c) {
            None => true,
            Some(b) => match f.normalized() {
                FunctorSpec::DividedPower(_) => s.get(c) == b,
                _ => s.get(c) <= b,
            },
        });
    if fits { BigInt::one() } else { BigInt::zero() }
}

/// Number of maps from a `k`-element ordered set into the disjoint union of
/// components of sizes `base, base+1, ..., base+m-1` such that later
/// elements land in strictly later components. With `m = 0` there is exactly
/// one such map when `k = 0` and none otherwise.
///
/// Every such map is generated and counted.
pub fn ascending_maps_count(base: usize, m: usize, k: usize) -> BigInt {
    fn walk(base: usize, m: usize, left: usize, next_component: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut n = 0;
        for j in next_component..m {
            for _element in 0..base + j {
                n += walk(base, m, left - 1, j + 1);
            }
        }
        n
    }
    BigInt::from(walk(base, m, k, 0))
}

/// `|[a, b]|`: the number of maps from an `a`-set to a `b`-set.
fn maps_count(domain: usize, codomain: usize) -> BigInt {
    BigInt::from(codomain).pow(domain as u32)
}

/// `|L(a)|`
fn linear_orders(n: usize) -> BigInt {
    factorial(n as u32)
}

// Block indices into the thirteen-entry size vector.
const X1: usize = 0;
const X2: usize = 1;
const Y1: usize = 2;
const Y2: usize = 3;
const Y3: usize = 4;
const Z1: usize = 5;
const Z2: usize = 6;
const H1: usize = 7;
const H2: usize = 8;
const H3: usize = 9;
const H4: usize = 10;
const H5: usize = 11;
const H6: usize = 12;

const BLOCKS_X: &[usize] = &[X1, X2];
const BLOCKS_Y: &[usize] = &[Y1, Y2, Y3];
const BLOCKS_Z: &[usize] = &[Z1, Z2];
const BLOCKS_H: &[usize] = &[H1, H2, H3, H4, H5, H6];

type Blocks = [usize; 13];

struct Enumerator<'a> {
    left: &'a FunctorSpec,
    right: &'a FunctorSpec,
    /// Linear constraints `sum of blocks <= bound` used for pruning.
    limits: Vec<(Vec<usize>, usize)>,
    weights: HashMap<Blocks, BigInt>,
    ascending: HashMap<(usize, usize, usize), BigInt>,
}

impl<'a> Enumerator<'a> {
    fn new(left: &'a FunctorSpec, right: &'a FunctorSpec) -> Self {
        let mut limits = Vec::new();
        let mut push = |blocks: Vec<usize>, bound: Option<usize>| {
            if let Some(b) = bound {
                limits.push((blocks, b));
            }
        };
        push(vec![X1], left.size_bound(Color::X));
        push(vec![Y1, H5], left.size_bound(Color::Y));
        push(vec![Z1, H3], left.size_bound(Color::Z));
        push(vec![H1], left.size_bound(Color::H));
        push(vec![X2, H3], right.size_bound(Color::X));
        push(vec![Y2, H6], right.size_bound(Color::Y));
        push(vec![Z2], right.size_bound(Color::Z));
        push(vec![H2], right.size_bound(Color::H));
        // |y3| + |h4| = |h3|, and h3 is bounded by the z-slot of F and the
        // x-slot of G
        let h3_bound = match (left.size_bound(Color::Z), right.size_bound(Color::X)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        push(vec![Y3, H4], h3_bound);
        Enumerator { left, right, limits, weights: HashMap::new(), ascending: HashMap::new() }
    }

    fn feasible(&self, blocks: &Blocks) -> bool {
        self.limits.iter().all(|(idx, bound)| idx.iter().map(|&i| blocks[i]).sum::<usize>() <= *bound)
    }

    fn weight(&mut self, b: &Blocks) -> BigInt {
        if let Some(w) = self.weights.get(b) {
            return w.clone();
        }
        let w = self.compute_weight(b);
        self.weights.insert(*b, w.clone());
        w
    }

    fn compute_weight(&mut self, b: &Blocks) -> BigInt {
        if b[Y3] + b[H4] != b[H3] {
            return BigInt::zero();
        }
        let f = functor_value(self.left, ColoredSizes::new(b[X1], b[Y1] + b[H5], b[Z1] + b[H3], b[H1]));
        let g = functor_value(self.right, ColoredSizes::new(b[X2] + b[H3], b[Y2] + b[H6], b[Z2], b[H2]));
        if f.is_zero() || g.is_zero() {
            return BigInt::zero();
        }
        let key = (b[Z1] + b[X2], b[Y3] + b[H4], b[H4]);
        let asc = self.ascending.entry(key).or_insert_with(|| ascending_maps_count(key.0, key.1, key.2)).clone();
        let w = f
            * g
            * maps_count(b[H5], 2 * b[X2])
            * maps_count(b[H6], 2 * b[Z1])
            * linear_orders(b[Y3])
            * linear_orders(b[H4])
            * asc;
        if b[H3] % 2 == 1 { -w } else { w }
    }

    /// Assigns labelled elements `pos..` (listed colour by colour) to blocks.
    fn walk(&mut self, labels: &[&'static [usize]], pos: usize, blocks: &mut Blocks, total: &mut BigInt) {
        if pos == labels.len() {
            let w = self.weight(blocks);
            *total += w;
            return;
        }
        for &blk in labels[pos] {
            blocks[blk] += 1;
            if self.feasible(blocks) {
                self.walk(labels, pos + 1, blocks, total);
            }
            blocks[blk] -= 1;
        }
    }
}

/// Signed count of `F ⋆ G` structures on concrete sets of the given sizes.
pub fn star_species(f: &FunctorSpec, g: &FunctorSpec, s: ColoredSizes) -> BigInt {
    let mut e = Enumerator::new(f, g);
    star_species_with(&mut e, s)
}

fn star_species_with(e: &mut Enumerator<'_>, s: ColoredSizes) -> BigInt {
    let mut labels: Vec<&'static [usize]> = Vec::with_capacity(s.total());
    labels.extend(std::iter::repeat_n(BLOCKS_X, s.nx));
    labels.extend(std::iter::repeat_n(BLOCKS_Y, s.ny));
    labels.extend(std::iter::repeat_n(BLOCKS_Z, s.nz));
    labels.extend(std::iter::repeat_n(BLOCKS_H, s.nh));
    let mut total = BigInt::zero();
    e.walk(&labels, 0, &mut [0; 13], &mut total);
    total
}

/// A disagreement between the species count and the algebraic coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpeciesMismatch {
    pub sizes: ColoredSizes,
    pub species: BigInt,
    pub algebraic: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpeciesReport {
    pub checked: usize,
    pub mismatches: Vec<SpeciesMismatch>,
}

impl SpeciesReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `|F ⋆ G|` counted on sets with the coefficients of `|F| ⋆ |G|`
/// for every size tuple of total at most `max_total`.
pub fn species_coefficient_check(f: &FunctorSpec, g: &FunctorSpec, max_total: usize) -> SpeciesReport {
    let product = star(&f.valuation(max_total as u32), &g.valuation(max_total as u32));
    let mut e = Enumerator::new(f, g);
    let mut report = SpeciesReport::default();
    for sizes in ColoredSizes::up_to_total(max_total) {
        let species = star_species_with(&mut e, sizes);
        let algebraic = product.coefficient(&sizes.as_monomial());
        report.checked += 1;
        if BigRational::from_integer(species.clone()) != algebraic {
            report.mismatches.push(SpeciesMismatch { sizes, species, algebraic });
        }
    }
    report
}

/// Runs [`species_coefficient_check`] for every ordered pair of divided-power
/// functors with all exponents at most `max_exp`, in parallel.
pub fn divided_power_sweep(max_exp: u32, max_total: usize) -> SpeciesReport {
    let functors: Vec<FunctorSpec> = NormalMonomial::all_up_to(max_exp).map(FunctorSpec::DividedPower).collect();
    let pairs: Vec<(FunctorSpec, FunctorSpec)> =
        functors.iter().flat_map(|f| functors.iter().map(move |g| (*f, *g))).collect();
    pairs
        .par_iter()
        .map(|(f, g)| species_coefficient_check(f, g, max_total))
        .reduce(SpeciesReport::default, |mut a, b| {
            a.checked += b.checked;
            a.mismatches.extend(b.mismatches);
            a
        })
}
