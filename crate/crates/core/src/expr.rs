//! A small expression language for algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | '-' factor | gen | 'm(' nat ',' nat ',' nat ',' nat ')'
//!         | 'exp(' gen ')' | '(' expr ')'
//! gen    := 'x' | 'y' | 'z' | 'h'
//! ```
//!
//! `*` is the (noncommutative) star product and is never implied by
//! juxtaposition. `m(a,b,c,d)` is the divided monomial
//! `x^a y^b z^c h^d / (a! b! c! d!)`. A rational literal is `-?digits` or
//! `-?digits/digits` with no inner spaces; a literal on the left of `*` is
//! read as a scalar multiple.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::monomial::{Color, NormalMonomial};
use crate::product::{exp_series, star};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expression {
    Literal(BigRational),
    Generator(Color),
    DividedMono(NormalMonomial),
    Exp(Color),
    Sum(Box<Expression>, Box<Expression>),
    StarProduct(Box<Expression>, Box<Expression>),
    ScalarMul(BigRational, Box<Expression>),
    Negate(Box<Expression>),
}

impl Expression {
    pub fn contains_exp(&self) -> bool {
        match self {
            Expression::Exp(_) => true,
            Expression::Literal(_) | Expression::Generator(_) | Expression::DividedMono(_) => false,
            Expression::Sum(l, r) | Expression::StarProduct(l, r) => l.contains_exp() || r.contains_exp(),
            Expression::ScalarMul(_, e) | Expression::Negate(e) => e.contains_exp(),
        }
    }

    /// Evaluates bottom-up. With `cap` set every intermediate result is
    /// truncated above that total degree; `exp(..)` requires a cap.
    pub fn eval(&self, cap: Option<u32>) -> Result<Element> {
        let leaf = |e: Element| e.with_cap(cap);
        Ok(match self {
            Expression::Literal(q) => leaf(Element::constant(q.clone())),
            Expression::Generator(c) => leaf(Element::generator(*c)),
            Expression::DividedMono(m) => leaf(Element::monomial(*m)),
            Expression::Exp(c) => exp_series(*c, cap.ok_or(Error::MissingCap)?),
            Expression::Sum(l, r) => l.eval(cap)?.add(&r.eval(cap)?)?,
            Expression::StarProduct(l, r) => star(&l.eval(cap)?, &r.eval(cap)?),
            Expression::ScalarMul(q, e) => e.eval(cap)?.scalar_mul(q),
            Expression::Negate(e) => e.eval(cap)?.negate(),
        })
    }
}

pub fn parse(text: &str) -> Result<Expression> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and evaluates in one go.
pub fn eval(text: &str, cap: Option<u32>) -> Result<Element> {
    parse(text)?.eval(cap)
}

impl FromStr for Expression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) { Ok(()) } else { Err(self.error(format!("expected `{c}`"))) }
    }

    fn expr(&mut self) -> Result<Expression> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expression::Sum(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expression::Sum(Box::new(lhs), Box::new(Expression::Negate(Box::new(self.term()?))));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expression> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            let rhs = self.factor()?;
            lhs = match lhs {
                Expression::Literal(q) => Expression::ScalarMul(q, Box::new(rhs)),
                other => Expression::StarProduct(Box::new(other), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expression> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    Ok(Expression::Literal(-self.rational()?))
                } else {
                    Ok(Expression::Negate(Box::new(self.factor()?)))
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(Expression::Literal(self.rational()?)),
            Some(c) if c.is_ascii_alphabetic() => self.word(),
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
        }
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num: BigInt = self.digits()?.parse().expect("ascii digits");
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let den: BigInt = self.digits()?.parse().expect("ascii digits");
            if den.is_zero() {
                return Err(Error::Parse { pos: at, msg: "zero denominator".into() });
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn natural(&mut self) -> Result<u32> {
        self.skip_ws();
        let at = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| Error::Parse { pos: at, msg: "exponent out of range".into() })
    }

    fn word(&mut self) -> Result<Expression> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name = &self.src[start..self.pos];
        match name {
            "exp" => {
                self.expect('(')?;
                self.skip_ws();
                let at = self.pos;
                let inner = self.word()?;
                let Expression::Generator(c) = inner else {
                    return Err(Error::Parse { pos: at, msg: "exp takes one of x, y, z, h".into() });
                };
                self.expect(')')?;
                Ok(Expression::Exp(c))
            }
            "m" => {
                self.expect('(')?;
                let mut e = [0u32; 4];
                for (i, slot) in e.iter_mut().enumerate() {
                    if i > 0 {
                        self.expect(',')?;
                    }
                    *slot = self.natural()?;
                }
                self.expect(')')?;
                Ok(Expression::DividedMono(e.into()))
            }
            _ => {
                let mut chars = name.chars();
                match (chars.next().and_then(Color::from_letter), chars.next()) {
                    (Some(c), None) if name.chars().all(|c| c.is_ascii_lowercase()) => Ok(Expression::Generator(c)),
                    _ => Err(Error::Parse { pos: start, msg: format!("unknown name `{name}`") }),
                }
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Expr,
    Term,
    Factor,
}

fn level(e: &Expression) -> Level {
    match e {
        Expression::Sum(..) => Level::Expr,
        Expression::StarProduct(..) | Expression::ScalarMul(..) => Level::Term,
        _ => Level::Factor,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expression, min: Level) -> fmt::Result {
    if level(e) < min {
        write!(f, "(")?;
        write_expr(f, e)?;
        write!(f, ")")
    } else {
        write_expr(f, e)
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expression) -> fmt::Result {
    match e {
        Expression::Literal(q) => write!(f, "{q}"),
        Expression::Generator(c) => write!(f, "{c}"),
        Expression::DividedMono(m) => write!(f, "{m}"),
        Expression::Exp(c) => write!(f, "exp({c})"),
        Expression::Sum(l, r) => {
            write_at(f, l, Level::Expr)?;
            match &**r {
                Expression::Negate(inner) => {
                    write!(f, " - ")?;
                    write_at(f, inner, Level::Term)
                }
                other => {
                    write!(f, " + ")?;
                    write_at(f, other, Level::Term)
                }
            }
        }
        Expression::StarProduct(l, r) => {
            write_at(f, l, Level::Term)?;
            write!(f, " * ")?;
            write_at(f, r, Level::Factor)
        }
        Expression::ScalarMul(q, r) => {
            write!(f, "{q} * ")?;
            write_at(f, r, Level::Factor)
        }
        Expression::Negate(inner) => {
            write!(f, "-")?;
            match &**inner {
                Expression::Literal(q) => write!(f, "({q})"),
                other => write_at(f, other, Level::Factor),
            }
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(c: Color) -> Box<Expression> {
        Box::new(Expression::Generator(c))
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn parses_products_and_sums() {
        assert_eq!(parse("y * x").unwrap(), Expression::StarProduct(gen(Color::Y), gen(Color::X)));
        assert_eq!(
            parse("m(0,0,2,0) * m(2,0,0,0)").unwrap(),
            Expression::StarProduct(
                Box::new(Expression::DividedMono(NormalMonomial::new(0, 0, 2, 0))),
                Box::new(Expression::DividedMono(NormalMonomial::new(2, 0, 0, 0)))
            )
        );
        assert_eq!(
            parse("2 * m(1,0,0,0) + -1 * h").unwrap(),
            Expression::Sum(
                Box::new(Expression::ScalarMul(int(2), Box::new(Expression::DividedMono(NormalMonomial::new(1, 0, 0, 0))))),
                Box::new(Expression::ScalarMul(int(-1), gen(Color::H)))
            )
        );
        assert_eq!(
            parse("x - y").unwrap(),
            Expression::Sum(gen(Color::X), Box::new(Expression::Negate(gen(Color::Y))))
        );
        assert_eq!(parse("3/6").unwrap(), Expression::Literal(BigRational::new(1.into(), 2.into())));
        assert_eq!(parse(" exp( z ) ").unwrap(), Expression::Exp(Color::Z));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(parse("x y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse("x *"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse("m(1,2,3)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("exp(2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("q"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse("1/0"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse("(x + y"), Err(Error::Parse { .. })));
        assert!(matches!(parse(""), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn evaluation() {
        assert_eq!(
            eval("z * m(2,0,0,0)", Some(8)).unwrap(),
            Element::from_int_terms([((2, 0, 1, 0), 1), ((1, 1, 0, 1), -1), ((1, 0, 0, 2), -2)]).with_cap(Some(8))
        );
        assert_eq!(eval("x * y", Some(8)).unwrap(), Element::monomial((1, 1, 0, 0)).with_cap(Some(8)));
        assert_eq!(eval("y * x - x * y", None).unwrap(), Element::from_int_terms([((1, 0, 0, 1), 2)]));
        assert_eq!(eval("exp(x)", None), Err(Error::MissingCap));
        assert_eq!(eval("1/2 * x + x * 1/2", None).unwrap(), Element::generator(Color::X));
    }

    #[test]
    fn printing_reparses() {
        for src in [
            "y * x",
            "2 * m(1,0,0,0) + -1 * h",
            "x - (y + z)",
            "x - y * z",
            "-(x * y) + --z",
            "-(3) * x - -2",
            "(x + y) * (z - h) * exp(y)",
            "x * (y * z)",
            "1/2 * (x + 3/4)",
        ] {
            let e = parse(src).unwrap();
            let printed = e.to_string();
            assert_eq!(parse(&printed).unwrap(), e, "{src} -> {printed}");
        }
    }
}
