//! Exact arithmetic for nearly holomorphic modular forms and the
//! representation theory around their Eisenstein part.
//!
//! The series core ([`series`]) stores forms as truncated `q`-expansions with
//! coefficients polynomial in `X = 1/(4πy)`. On top of it sit the
//! Maass–Shimura operators ([`operators`]), level-one generators and binary
//! theta series ([`generators`]), the structure-theorem decomposition
//! ([`decompose`]), Laurent analysis of Eisenstein constant terms
//! ([`laurent`]), local quadratic invariants ([`quadratic`]), and category O
//! bookkeeping ([`category_o`]).

pub mod category_o;
pub mod decompose;
pub mod error;
pub mod generators;
pub mod laurent;
pub mod linalg;
pub mod operators;
pub mod quadratic;
pub mod series;

pub use error::{CategoryError, DecompositionError, LaurentError, OperatorError, QuadraticError, SeriesError};
pub use series::{NearlyHolomorphicForm, PiScalar, Rational};

pub(crate) fn serde_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&series::format_rational(r))
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/forms.md")]
    mod forms {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/constant_terms.md")]
    mod constant_terms {}
    #[doc = include_str!("../../../book/src/quadratic.md")]
    mod quadratic {}
    #[doc = include_str!("../../../book/src/category_o.md")]
    mod category_o {}
}
