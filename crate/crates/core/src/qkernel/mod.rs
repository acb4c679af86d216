//! Exact rational arithmetic, dense matrices over ℚ and multivariate
//! polynomials. Everything else in the crate is built on these.

pub mod matrix;
pub mod poly;
pub mod rational;

pub use matrix::{QMatrix, SpanCoords};
pub use poly::QPoly;
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
