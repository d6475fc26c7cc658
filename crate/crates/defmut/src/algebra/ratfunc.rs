//! Reduced rational functions over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::{exact_div, poly_gcd};
use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::value::ClusterValue;
use crate::error::{Error, Result};

/// A rational function in canonical reduced form.
///
/// Invariants: numerator and denominator are ordinary polynomials
/// (nonnegative exponents) with no common polynomial or monomial factor;
/// the denominator is nonzero with graded-lex leading coefficient `1`
/// (so in particular positive); zero is `0/1`. Equality of canonical
/// forms decides equality of rational functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    /// Build `num/den`, reducing to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero(nvars: usize) -> Self {
        RatFunc { num: LaurentPoly::zero(nvars), den: LaurentPoly::one(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        RatFunc { num: LaurentPoly::one(nvars), den: LaurentPoly::one(nvars) }
    }

    pub fn constant(nvars: usize, q: BigRational) -> Self {
        RatFunc { num: LaurentPoly::constant(nvars, q), den: LaurentPoly::one(nvars) }
    }

    pub fn from_int(nvars: usize, n: i64) -> Self {
        RatFunc { num: LaurentPoly::from_int(nvars, n), den: LaurentPoly::one(nvars) }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        RatFunc { num: LaurentPoly::var(nvars, i), den: LaurentPoly::one(nvars) }
    }

    /// All ambient variables, in order.
    pub fn vars(nvars: usize) -> Vec<RatFunc> {
        (0..nvars).map(|i| Self::var(nvars, i)).collect()
    }

    /// Embed a Laurent polynomial (negative exponents move to the denominator).
    pub fn from_poly(p: LaurentPoly) -> Self {
        let nvars = p.nvars();
        Self::reduce(p, LaurentPoly::one(nvars))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        let nvars = num.nvars();
        if num.is_zero() {
            return RatFunc { num, den: LaurentPoly::one(nvars) };
        }
        // Strip monomial content from both sides; the net shift is
        // reattached after the polynomial part is reduced.
        let sn = num.min_exponents();
        let sd = den.min_exponents();
        let mut n = num.mul_monomial(&sn.inverse());
        let mut d = den.mul_monomial(&sd.inverse());
        let mut shift = sn.div(&sd);

        // Cluster-style divisions are exact far more often than not, so try
        // both exact quotients before paying for a full GCD.
        if d.is_constant() {
            let c = d.as_constant().expect("constant");
            n = n.scale(&c.recip());
            d = LaurentPoly::one(nvars);
        } else if let Some(q) = exact_div(&n, &d) {
            n = q;
            d = LaurentPoly::one(nvars);
        } else if let Some(q) = exact_div(&d, &n) {
            d = q;
            n = LaurentPoly::one(nvars);
        } else {
            let g = poly_gcd(&n, &d);
            if !g.is_constant() {
                n = exact_div(&n, &g).expect("gcd divides numerator");
                d = exact_div(&d, &g).expect("gcd divides denominator");
            }
        }
        // Quotients can reintroduce monomial content; fold it into the shift.
        let mn = n.min_exponents();
        if !mn.is_unit() {
            n = n.mul_monomial(&mn.inverse());
            shift = shift.mul(&mn);
        }
        let md = d.min_exponents();
        if !md.is_unit() {
            d = d.mul_monomial(&md.inverse());
            shift = shift.div(&md);
        }
        let n = n.mul_monomial(&shift.positive_part());
        let d = d.mul_monomial(&shift.negative_part());
        // Canonical scale: denominator leading coefficient 1.
        let lc = d.leading_coeff();
        debug_assert!(!lc.is_zero());
        let inv = lc.recip();
        RatFunc { num: n.scale(&inv), den: d.scale(&inv) }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::reduce(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(self.num.sub(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        Self::reduce(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.num.mul(&other.den), self.den.mul(&other.num)))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.nvars()).try_div(self)
    }

    pub fn int_pow(&self, e: i32) -> Result<Self> {
        if e == 0 {
            return Ok(Self::one(self.nvars()));
        }
        if self.is_zero() {
            return if e > 0 { Ok(self.clone()) } else { Err(Error::ZeroToNegativePower) };
        }
        let base = if e > 0 { self.clone() } else { self.recip()? };
        let mut out = Self::one(self.nvars());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        self.int_pow(e as i32).expect("nonnegative power")
    }

    /// Exact partial derivative with respect to variable `i` (quotient rule).
    pub fn differentiate(&self, i: usize) -> Result<Self> {
        if i >= self.nvars() {
            return Err(Error::VariableOutOfRange(i));
        }
        let num = self
            .num
            .derivative(i)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(i)));
        Ok(Self::reduce(num, self.den.mul(&self.den)))
    }

    /// Substitute one image per ambient variable. Images may live in a
    /// different ambient variable set (all must share one).
    pub fn substitute(&self, images: &[RatFunc]) -> Result<RatFunc> {
        if images.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), got: images.len() });
        }
        if self.nvars() == 0 {
            return Ok(self.clone());
        }
        let witness = RatFunc::zero(images[0].nvars());
        let n = self.num.eval_values(images, &witness)?;
        let d = self.den.eval_values(images, &witness)?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        n.try_div(&d)
    }

    /// Evaluate at a rational point; errors if the denominator vanishes.
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational> {
        let d = self.den.eval_values(point, &BigRational::zero())?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let n = self.num.eval_values(point, &BigRational::zero())?;
        Ok(n / d)
    }

    /// Laurent normal form: `Some(p)` iff the reduced denominator is a
    /// single monomial, in which case `p` is the Laurent polynomial
    /// obtained by exponent shifting.
    pub fn laurent_normal_form(&self) -> Option<LaurentPoly> {
        if self.den.num_terms() != 1 {
            if self.is_zero() {
                return Some(self.num.clone());
            }
            return None;
        }
        let (m, c) = self.den.leading().expect("single term");
        let scaled = self.num.scale(&c.recip());
        Some(scaled.mul_monomial(&m.inverse()))
    }

    /// Render with the given variable names.
    pub fn to_string_in(&self, names: &[&str]) -> String {
        let den_is_one = self.den.as_constant().map(|c| c.is_one()).unwrap_or(false);
        if den_is_one {
            self.num.to_string_in(names)
        } else {
            format!("({}) / ({})", self.num.to_string_in(names), self.den.to_string_in(names))
        }
    }
}

macro_rules! ratfunc_binop {
    ($trait:ident, $method:ident, $call:ident) => {
        impl std::ops::$trait<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$call(self, rhs)
            }
        }
        impl std::ops::$trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$call(&self, &rhs)
            }
        }
        impl std::ops::$trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$call(&self, rhs)
            }
        }
    };
}

ratfunc_binop!(Add, add, add);
ratfunc_binop!(Sub, sub, sub);
ratfunc_binop!(Mul, mul, mul);

impl std::ops::Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.try_div(rhs).expect("division by the zero rational function")
    }
}

impl std::ops::Div<RatFunc> for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        (&self).div(&rhs)
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl std::ops::Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn x() -> RatFunc {
        RatFunc::var(2, 0)
    }
    fn y() -> RatFunc {
        RatFunc::var(2, 1)
    }
    fn c(n: i64) -> RatFunc {
        RatFunc::from_int(2, n)
    }

    #[test]
    fn inverse_pair_cancels() {
        // (x1/x2) * (x2/x1) = 1
        let f = x().try_div(&y()).unwrap();
        let g = y().try_div(&x()).unwrap();
        assert!(f.mul(&g).is_one());
    }

    #[test]
    fn cancellation_in_sum() {
        // (y+1)/y + (y-1)/y = 2
        let f = (y() + c(1)) / y();
        let g = (y() - c(1)) / y();
        assert_eq!(f + g, c(2));
    }

    #[test]
    fn canonical_form_monic_denominator() {
        // 1/(2x) reduces with denominator x and numerator 1/2
        let f = RatFunc::new(LaurentPoly::one(2), LaurentPoly::var(2, 0).scale(&rat(2, 1))).unwrap();
        assert_eq!(f.denom(), &LaurentPoly::var(2, 0));
        assert_eq!(f.numer().as_constant().unwrap(), rat(1, 2));
    }

    #[test]
    fn laurent_normal_form_cases() {
        // (x^2 + y)/(xy) is Laurent: x y^{-1} + x^{-1}
        let f = (x().pow(2) + y()) / (x() * y());
        let p = f.laurent_normal_form().unwrap();
        let mut expect = LaurentPoly::zero(2);
        expect.add_term(Monomial::new(vec![1, -1]), rat(1, 1));
        expect.add_term(Monomial::new(vec![-1, 0]), rat(1, 1));
        assert_eq!(p, expect);
        // (x+1)/(x+y) is not Laurent
        let g = (x() + c(1)) / (x() + y());
        assert!(g.laurent_normal_form().is_none());
    }

    #[test]
    fn substitution_identity_and_composition() {
        let k = (x() * y() + c(1)) / (x() - y());
        let id = RatFunc::vars(2);
        assert_eq!(k.substitute(&id).unwrap(), k);
        // x -> y, y -> x swaps the sign of the denominator
        let swapped = k.substitute(&[y(), x()]).unwrap();
        assert_eq!(swapped, (x() * y() + c(1)) / (y() - x()));
    }

    #[test]
    fn substitution_zero_denominator_detected() {
        let f = c(1) / (x() + y());
        let e = f.substitute(&[x(), x().neg()]).unwrap_err();
        assert_eq!(e, Error::ZeroDenominator);
    }

    #[test]
    fn derivative_linear_numerator() {
        // d/dy [(a y + b)/x] = a/x with (x, y, a, b) ambient
        let x = RatFunc::var(4, 0);
        let y = RatFunc::var(4, 1);
        let a = RatFunc::var(4, 2);
        let b = RatFunc::var(4, 3);
        let f = (a.clone() * y + b) / x.clone();
        assert_eq!(f.differentiate(1).unwrap(), a / x);
    }

    #[test]
    fn division_by_zero_reported() {
        assert_eq!(x().try_div(&RatFunc::zero(2)).unwrap_err(), Error::DivisionByZero);
        assert_eq!(RatFunc::zero(2).int_pow(-1).unwrap_err(), Error::ZeroToNegativePower);
    }
}
