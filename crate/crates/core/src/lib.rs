//! Exact arithmetic in the formal homogeneous universal enveloping algebra
//! of `sl2`, written in the divided-power PBW basis
//! `x^a y^b z^c h^d / (a! b! c! d!)`.
//!
//! Products are available through three independent routes that check one
//! another:
//!
//! * [`product`]: a closed-form coefficient formula summing over thirteen
//!   auxiliary block sizes,
//! * [`rewrite`]: a term-rewriting normalizer driven by the defining
//!   relations `yx = xy + 2xh`, `zx = xz - yh`, `zy = yz + 2zh`,
//! * [`species`]: a brute-force enumeration of signed labelled structures
//!   over explicit finite colour classes.
//!
//! The [`combinatorics`] module evaluates the symmetric-function symbols the
//! formula needs, and [`expr`] / [`format`] provide the small expression
//! language and the JSON / pretty output used by the `uhsl2` binary.

pub mod combinatorics;
pub mod element;
pub mod error;
pub mod expr;
pub mod format;
pub mod identities;
pub mod monomial;
pub mod product;
pub mod rewrite;
pub mod species;
pub mod verify;

pub use element::Element;
pub use error::{Error, Result};
pub use monomial::{Color, NormalMonomial};
pub use product::{exp_series, mono_star_mono, star, structural_coefficient};
