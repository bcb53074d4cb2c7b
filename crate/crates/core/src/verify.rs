//! Exhaustive cross-check of the closed product formula against the
//! rewriting oracle.

use rayon::prelude::*;

use crate::element::Element;
use crate::monomial::NormalMonomial;
use crate::product::mono_star_mono;
use crate::rewrite::oracle_star;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMismatch {
    pub left: NormalMonomial,
    pub right: NormalMonomial,
    pub closed: Element,
    pub oracle: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub pairs: usize,
    pub coefficients: usize,
    pub mismatches: Vec<PairMismatch>,
    /// Pairs whose product has a non-integer coefficient by either route.
    pub non_integral: Vec<(NormalMonomial, NormalMonomial)>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.non_integral.is_empty()
    }

    fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.pairs += other.pairs;
        self.coefficients += other.coefficients;
        self.mismatches.extend(other.mismatches);
        self.non_integral.extend(other.non_integral);
        self
    }
}

pub fn check_pair(left: NormalMonomial, right: NormalMonomial) -> VerifyReport {
    let closed = mono_star_mono(left, right);
    let oracle = oracle_star(left, right);
    let mut r = VerifyReport { pairs: 1, coefficients: closed.len(), ..Default::default() };
    if !closed.is_integral() || !oracle.is_integral() {
        r.non_integral.push((left, right));
    }
    if closed != oracle {
        r.mismatches.push(PairMismatch { left, right, closed, oracle });
    }
    r
}

/// Checks every ordered pair of monomials whose exponents are all at most
/// `max_exp`. Pairs are processed in parallel; the report lists problems in
/// lexicographic pair order.
pub fn verify_sweep(max_exp: u32) -> VerifyReport {
    let monos: Vec<NormalMonomial> = NormalMonomial::all_up_to(max_exp).collect();
    let pairs: Vec<(NormalMonomial, NormalMonomial)> =
        monos.iter().flat_map(|l| monos.iter().map(move |r| (*l, *r))).collect();
    let mut report = pairs
        .par_iter()
        .map(|&(l, r)| check_pair(l, r))
        .reduce(VerifyReport::default, VerifyReport::merge);
    report.mismatches.sort_by_key(|m| (m.left, m.right));
    report.non_integral.sort();
    report
}
