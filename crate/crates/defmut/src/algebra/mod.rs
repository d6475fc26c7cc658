//! Exact arithmetic: arbitrary-precision rationals, multivariate Laurent
//! polynomials, reduced rational functions, substitution and symbolic
//! differentiation. Everything downstream computes over this module.
//!
//! Values are immutable after construction and all operations are pure,
//! so independent computations can run concurrently without shared state.
//!
//! Parameters (`a1`, `a4`, `c`, `d`, `e`, ...) are ordinary variables
//! segregated into a declared parameter alphabet by convention: in any
//! ambient variable set the dynamical variables come first and the
//! parameters last. Numeric specialization is substitution of rationals
//! for the parameter variables.

mod gcd;
mod map;
mod monomial;
mod poly;
pub mod rational;
mod ratfunc;
mod value;

pub use gcd::{exact_div, poly_gcd, poly_lcm};
pub use map::RationalMap;
pub use monomial::Monomial;
pub use poly::LaurentPoly;
pub use rational::{format_rational, parse_rational, rat, valuation, Rational};
pub use ratfunc::RatFunc;
pub use value::ClusterValue;
