//! The scalar abstraction shared by exact and symbolic computations.
//!
//! Cluster dynamics, bilinear systems and orbit projections are written
//! once against [`ClusterValue`] and instantiated both with exact
//! rationals (orbit runs) and with rational functions (symbolic proofs).

use num_rational::BigRational;
use num_traits::Zero;

use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// A field element that cluster dynamics can compute with. All operations
/// are exact; division by zero is an error, never a silent NaN.
///
/// Constructors are "witnessed" (`zero_like`, `from_rational`) because a
/// rational function needs to know its ambient variable count.
pub trait ClusterValue: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rational(&self, q: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Result<Self>;
    /// Integer power, with negative exponents allowed on nonzero values.
    fn int_pow(&self, e: i32) -> Result<Self>;
}

impl ClusterValue for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }

    fn one_like(&self) -> Self {
        num_traits::One::one()
    }

    fn from_rational(&self, q: &BigRational) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn div(&self, other: &Self) -> Result<Self> {
        if Zero::is_zero(other) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / other)
    }

    fn int_pow(&self, e: i32) -> Result<Self> {
        if e == 0 {
            return Ok(self.one_like());
        }
        if Zero::is_zero(self) {
            return if e > 0 { Ok(self.clone()) } else { Err(Error::ZeroToNegativePower) };
        }
        let base = if e > 0 { self.clone() } else { self.recip() };
        let mut out = self.one_like();
        for _ in 0..e.unsigned_abs() {
            out *= &base;
        }
        Ok(out)
    }
}

impl ClusterValue for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.nvars())
    }

    fn one_like(&self) -> Self {
        RatFunc::one(self.nvars())
    }

    fn from_rational(&self, q: &BigRational) -> Self {
        RatFunc::constant(self.nvars(), q.clone())
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }

    fn div(&self, other: &Self) -> Result<Self> {
        RatFunc::try_div(self, other)
    }

    fn int_pow(&self, e: i32) -> Result<Self> {
        RatFunc::int_pow(self, e)
    }
}
