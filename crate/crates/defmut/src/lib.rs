//! Exact-arithmetic engine for deformed cluster mutations.
//!
//! The crate implements, at desk scale, the full verification toolkit for
//! deformations of cluster mutations that preserve the log-canonical
//! presymplectic form while (in general) destroying the Laurent property:
//!
//! - [`algebra`]: exact rationals, Laurent polynomials, rational functions.
//! - [`quiver`]: exchange matrices, matrix mutation, permutations,
//!   kernel/image, DOT export.
//! - [`dynamics`]: deformed exchange rules, seeds, composed cluster maps,
//!   orbit iteration and monomial-invariant reductions.
//! - [`geometry`]: log-canonical two-forms, symbolic pullback checks,
//!   Poisson brackets.
//! - [`integrals`]: first-integral verification, cyclic symmetric
//!   integrals of periodic maps, monomial-ansatz searches.
//! - [`laurent`]: bilinear tau-function systems, Laurent-property
//!   reports, tau/cluster consistency.
//! - [`padic`]: prime factorization of orbits, valuation tables,
//!   singularity-pattern detection.
//! - [`scenarios`]: a registry binding named constructions into
//!   ready-to-run verification bundles.

pub mod algebra;
pub mod dynamics;
pub mod error;
pub mod geometry;
pub mod integrals;
pub mod laurent;
pub mod padic;
pub mod quiver;
pub mod scenarios;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book;
