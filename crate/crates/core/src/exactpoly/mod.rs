//! Exact rational scalars, dense polynomials and Wronskians.

pub mod linear;
pub mod poly;
pub mod rational;
pub mod tuple;
pub mod wronskian;

pub use poly::Poly;
pub use rational::{factorial, format_rational, int, parse_rational, rat, Rational};
pub use tuple::PolyTuple;
pub use wronskian::{poly_det, w5_check, wronskian, wronskian2};
