//! JSON interchange and human-readable printing of [`Element`]s.
//!
//! The JSON shape is
//!
//! ```text
//! {"cap": N | null, "terms": [{"m": [a, b, c, d], "num": "...", "den": "..."}]}
//! ```
//!
//! with terms sorted lexicographically by `(a, b, c, d)` and coefficients as
//! decimal strings in lowest terms with a positive denominator.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::monomial::{Color, NormalMonomial};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementJson {
    cap: Option<u32>,
    terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    m: [u32; 4],
    num: String,
    den: String,
}

pub fn to_json(e: &Element) -> String {
    let doc = ElementJson {
        cap: e.cap(),
        terms: e
            .terms()
            .map(|(m, q)| TermJson { m: m.exponents(), num: q.numer().to_string(), den: q.denom().to_string() })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Element> {
    let doc: ElementJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let mut seen = BTreeSet::new();
    let mut out = Element::zero().with_cap(doc.cap);
    for t in doc.terms {
        let m = NormalMonomial::from(t.m);
        if !seen.insert(m) {
            return Err(Error::Json(format!("monomial {m} listed twice")));
        }
        if doc.cap.is_some_and(|c| m.degree() > c) {
            return Err(Error::Json(format!("monomial {m} exceeds the cap")));
        }
        let num: BigInt = t.num.parse().map_err(|_| Error::Json(format!("bad numerator `{}`", t.num)))?;
        let den: BigInt = t.den.parse().map_err(|_| Error::Json(format!("bad denominator `{}`", t.den)))?;
        if den.is_zero() {
            return Err(Error::Json(format!("zero denominator for {m}")));
        }
        out.add_term(m, BigRational::new(num, den));
    }
    Ok(out)
}

/// Renders the divided monomial as `x^a y^b z^c h^d / (a! b! c! d!)`,
/// leaving out exponents and factorials equal to one. The unit monomial
/// renders as the empty string.
pub fn pretty_monomial(m: &NormalMonomial) -> String {
    let mut powers = Vec::new();
    let mut facts = Vec::new();
    for c in Color::ALL {
        match m.exponent(c) {
            0 => {}
            1 => powers.push(c.to_string()),
            e => {
                powers.push(format!("{c}^{e}"));
                facts.push(format!("{e}!"));
            }
        }
    }
    let mut s = powers.join(" ");
    if !facts.is_empty() {
        s.push_str(&format!(" / ({})", facts.join(" ")));
    }
    s
}

/// Sum of terms in monomial order, e.g. `x^2 z / (2!) - x y h - 2 x h^2 / (2!)`.
pub fn pretty(e: &Element) -> String {
    let mut out = String::new();
    for (i, (m, q)) in e.terms().enumerate() {
        let negative = q.is_negative();
        let mag = q.abs();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = pretty_monomial(m);
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag} {mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    if let Some(cap) = e.cap() {
        out.push_str(&format!(" + O(deg {})", cap + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pretty_worked_example() {
        let e = Element::from_int_terms([((2, 0, 1, 0), 1), ((1, 1, 0, 1), -1), ((1, 0, 0, 2), -2)]);
        assert_eq!(pretty(&e), "-2 x h^2 / (2!) - x y h + x^2 z / (2!)");
        assert_eq!(pretty(&Element::zero()), "0");
        assert_eq!(pretty(&Element::unit().scalar_mul(&BigRational::new((-3).into(), 4.into()))), "-3/4");
        assert_eq!(pretty_monomial(&NormalMonomial::new(2, 0, 3, 1)), "x^2 z^3 h / (2! 3!)");
        assert_eq!(pretty(&Element::unit().with_cap(Some(2))), "1 + O(deg 3)");
    }

    #[test]
    fn json_shape() {
        let e = Element::from_int_terms([((1, 1, 0, 0), 1), ((1, 0, 0, 1), 2)]);
        assert_eq!(
            to_json(&e),
            r#"{"cap":null,"terms":[{"m":[1,0,0,1],"num":"2","den":"1"},{"m":[1,1,0,0],"num":"1","den":"1"}]}"#
        );
        let capped = Element::constant(BigRational::new((-1).into(), 3.into())).with_cap(Some(4));
        assert_eq!(to_json(&capped), r#"{"cap":4,"terms":[{"m":[0,0,0,0],"num":"-1","den":"3"}]}"#);
    }

    #[test]
    fn json_round_trip_and_rejections() {
        let e = Element::from_terms([
            ((0, 0, 0, 0), BigRational::new(5.into(), 7.into())),
            ((3, 1, 0, 2), BigRational::from_integer((-12).into())),
        ])
        .with_cap(Some(6));
        assert_eq!(from_json(&to_json(&e)).unwrap(), e);
        assert!(from_json(r#"{"cap":1,"terms":[{"m":[1,1,0,0],"num":"1","den":"1"}]}"#).is_err());
        assert!(from_json(r#"{"cap":null,"terms":[{"m":[1,0,0,0],"num":"1","den":"0"}]}"#).is_err());
        assert!(
            from_json(r#"{"cap":null,"terms":[{"m":[1,0,0,0],"num":"1","den":"1"},{"m":[1,0,0,0],"num":"2","den":"1"}]}"#)
                .is_err()
        );
        assert!(from_json(r#"{"cap":null,"terms":[{"m":[1,0,0],"num":"1","den":"1"}]}"#).is_err());
        assert!(from_json("[]").is_err());
        // non-canonical fractions are reduced on input
        assert_eq!(
            from_json(r#"{"cap":null,"terms":[{"m":[0,0,0,0],"num":"2","den":"-4"}]}"#).unwrap(),
            Element::constant(BigRational::new((-1).into(), 2.into()))
        );
    }
}
