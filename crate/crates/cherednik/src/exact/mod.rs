//! Exact scalar and polynomial arithmetic: arbitrary-precision rationals,
//! univariate polynomials in the deformation parameter `t`, sparse
//! multivariate polynomials, and normalized rational functions.

pub mod gcd;
pub mod multipoly;
pub mod ratfun;
pub mod scalar;
pub mod tpoly;

pub use gcd::{poly_gcd, poly_lcm};
pub use multipoly::{Exponents, MultiPoly};
pub use ratfun::RatFun;
pub use scalar::{format_scalar, int, parse_scalar, parse_scalar_list, rat, Scalar};
pub use tpoly::TPoly;
