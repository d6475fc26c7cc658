//! Rational maps: tuples of rational functions acting on an initial
//! segment of the ambient variables, with trailing variables treated as
//! parameters that the map fixes.

use num_rational::BigRational;

use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// A map `x -> (f_1(x, p), ..., f_m(x, p))` on `m` variables, where the
/// ambient variable set of each component may carry extra parameter
/// variables after the first `m`. Parameters are fixed by the map.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalMap {
    components: Vec<RatFunc>,
}

impl RationalMap {
    pub fn new(components: Vec<RatFunc>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Other("a rational map needs at least one component".into()));
        }
        let nvars = components[0].nvars();
        if components.iter().any(|c| c.nvars() != nvars) {
            return Err(Error::Other("map components must share one ambient variable set".into()));
        }
        if components.len() > nvars {
            return Err(Error::ArityMismatch { expected: components.len(), got: nvars });
        }
        Ok(RationalMap { components })
    }

    /// The identity on `dim` variables in an ambient set of `nvars`.
    pub fn identity(dim: usize, nvars: usize) -> Self {
        RationalMap { components: (0..dim).map(|i| RatFunc::var(nvars, i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn components(&self) -> &[RatFunc] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &RatFunc {
        &self.components[i]
    }

    /// Images used for substitution: the map components followed by the
    /// untouched parameter variables.
    pub fn substitution_images(&self) -> Vec<RatFunc> {
        let mut images = self.components.clone();
        for i in self.dim()..self.nvars() {
            images.push(RatFunc::var(self.nvars(), i));
        }
        images
    }

    /// Pullback `f ∘ φ` of a scalar function under this map.
    pub fn pullback(&self, f: &RatFunc) -> Result<RatFunc> {
        f.substitute(&self.substitution_images())
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &RationalMap) -> Result<RationalMap> {
        let images = other.substitution_images();
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(&images))
            .collect::<Result<Vec<_>>>()?;
        RationalMap::new(components)
    }

    /// `self` composed with itself `k` times; `k = 0` is the identity.
    pub fn iterate(&self, k: usize) -> Result<RationalMap> {
        let mut out = RationalMap::identity(self.dim(), self.nvars());
        for _ in 0..k {
            out = self.compose(&out)?;
        }
        Ok(out)
    }

    /// Evaluate at an exact point; `point` covers the map variables and
    /// `params` the trailing parameter variables.
    pub fn apply_rational(&self, point: &[BigRational], params: &[BigRational]) -> Result<Vec<BigRational>> {
        if point.len() != self.dim() || point.len() + params.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), got: point.len() + params.len() });
        }
        let mut full: Vec<BigRational> = Vec::with_capacity(self.nvars());
        full.extend_from_slice(point);
        full.extend_from_slice(params);
        self.components.iter().map(|c| c.eval_rational(&full)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    /// The plane map (x, y) -> (y, (a y + b)/x) with parameters (a, b).
    fn lyness() -> RationalMap {
        let x = RatFunc::var(4, 0);
        let y = RatFunc::var(4, 1);
        let a = RatFunc::var(4, 2);
        let b = RatFunc::var(4, 3);
        RationalMap::new(vec![y.clone(), (a * y + b) / x]).unwrap()
    }

    #[test]
    fn composition_matches_pointwise_application() {
        let phi = lyness();
        let phi2 = phi.compose(&phi).unwrap();
        let p = [rat(1, 1), rat(2, 1)];
        let params = [rat(1, 1), rat(1, 1)];
        let one_step = phi.apply_rational(&p, &params).unwrap();
        let two_step = phi.apply_rational(&one_step, &params).unwrap();
        assert_eq!(phi2.apply_rational(&p, &params).unwrap(), two_step);
    }

    #[test]
    fn five_cycle_iterate_is_identity() {
        // With a = b = 1 the map has period five.
        let x = RatFunc::var(2, 0);
        let y = RatFunc::var(2, 1);
        let one = RatFunc::one(2);
        let phi = RationalMap::new(vec![y.clone(), (y + one) / x]).unwrap();
        let p5 = phi.iterate(5).unwrap();
        assert_eq!(p5, RationalMap::identity(2, 2));
    }
}
