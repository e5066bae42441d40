//! Exact series arithmetic: rationals, π-graded scalars, and nearly
//! holomorphic q-expansions.

pub mod form;
pub mod io;
pub mod pi_scalar;
pub mod rational;

pub use form::{GradedSum, NearlyHolomorphicForm};
pub use io::FormFile;
pub use pi_scalar::{Gaussian, HalfInt, PiScalar};
pub use rational::{format_rational, factorial, frac, int, parse_rational, Rational};
