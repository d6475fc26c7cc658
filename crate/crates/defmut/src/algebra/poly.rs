//! Sparse multivariate Laurent polynomials over the rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::value::ClusterValue;
use crate::error::{Error, Result};

/// A multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered graded-lexicographically on exponents;
/// zero coefficients are never stored. Exponents may be negative, so the
/// type also serves as an ordinary polynomial whenever every exponent is
/// nonnegative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(nvars), c);
        }
        p
    }

    pub fn from_int(nvars: usize, n: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(n)))
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let nvars = m.nvars();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in graded-lexicographic order, smallest first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Leading term in graded-lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiply by a single monomial (an exponent shift).
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// True if every exponent of every term is nonnegative.
    pub fn is_ordinary(&self) -> bool {
        self.terms.keys().all(|m| m.is_ordinary())
    }

    /// Componentwise minimum exponent over all terms (unit for the zero
    /// polynomial). Dividing by this monomial yields a polynomial whose
    /// per-variable minimum exponent is zero.
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Monomial::unit(self.nvars),
            Some(m) => m.clone(),
        };
        it.fold(first, |acc, m| acc.min(m))
    }

    /// Largest exponent of variable `i` over all terms (0 for the zero polynomial).
    pub fn max_exponent(&self, i: usize) -> i32 {
        self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0)
    }

    /// True if variable `i` occurs with a nonzero exponent.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(i) != 0)
    }

    /// Exact partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::new(exps), c * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Evaluate at arbitrary values. `images` must provide one value per
    /// variable; `witness` supplies the target arity for constants.
    pub fn eval_values<V: ClusterValue>(&self, images: &[V], witness: &V) -> Result<V> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: images.len() });
        }
        let mut acc = witness.zero_like();
        for (m, c) in &self.terms {
            let mut term = witness.from_rational(c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e != 0 {
                    term = term.mul(&images[i].int_pow(e)?);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Evaluate at a rational point.
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational> {
        self.eval_values(point, &BigRational::zero())
    }

    /// Split off the rational content: returns `(primitive, content)` with
    /// `self = content * primitive`, where `primitive` has coprime integer
    /// coefficients and positive leading coefficient. The zero polynomial
    /// returns `(0, 0)`.
    pub fn primitive_integer(&self) -> (LaurentPoly, BigRational) {
        if self.is_zero() {
            return (self.clone(), BigRational::zero());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_integer::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (self.scale(&inv), content)
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True if every coefficient is a strictly positive integer.
    pub fn has_positive_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && c.is_positive())
    }

    /// True if every term has nonnegative exponents in all of the listed
    /// variables.
    pub fn nonneg_in(&self, vars: &[usize]) -> bool {
        self.terms
            .keys()
            .all(|m| vars.iter().all(|&i| m.exponent(i) >= 0))
    }

    /// Render with the given variable names (for reports and diagnostics).
    pub fn to_string_in(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        // Highest term first reads like handwritten math.
        for (m, c) in self.terms.iter().rev() {
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                let name = names.get(i).copied().unwrap_or("?");
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            let vars = factors.join("*");
            let piece = if vars.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                vars
            } else if (-c).is_one() {
                format!("-{vars}")
            } else {
                format!("{c}*{vars}")
            };
            parts.push(piece);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn xy_poly() -> (LaurentPoly, LaurentPoly) {
        (LaurentPoly::var(2, 0), LaurentPoly::var(2, 1))
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let (x, y) = xy_poly();
        let s = x.add(&y).mul(&x.sub(&y));
        let expect = x.pow(2).sub(&y.pow(2));
        assert_eq!(s, expect);
        assert!(s.sub(&expect).is_zero());
    }

    #[test]
    fn derivative_of_product() {
        let (x, y) = xy_poly();
        let f = x.mul(&y); // d/dx (xy) = y
        assert_eq!(f.derivative(0), y);
    }

    #[test]
    fn primitive_content() {
        let (x, y) = xy_poly();
        // (2/3)x + 2y → content 2/3, primitive x + 3y
        let f = x.scale(&rat(2, 3)).add(&y.scale(&rat(2, 1)));
        let (p, c) = f.primitive_integer();
        assert_eq!(c, rat(2, 3));
        assert_eq!(p, x.add(&y.scale(&rat(3, 1))));
        assert!(p.has_integer_coeffs());
    }

    #[test]
    fn eval_laurent_monomial() {
        // x/y at (3, 2) = 3/2
        let m = LaurentPoly::monomial(Monomial::new(vec![1, -1]), rat(1, 1));
        let v = m.eval_rational(&[rat(3, 1), rat(2, 1)]).unwrap();
        assert_eq!(v, rat(3, 2));
        assert!(m.eval_rational(&[rat(3, 1), rat(0, 1)]).is_err());
    }
}
