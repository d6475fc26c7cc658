//! Laurent monomials: integer exponent vectors of fixed length.

use std::cmp::Ordering;

/// A Laurent monomial, stored as one integer exponent per ambient variable.
/// Exponents may be negative; the zero vector is the unit monomial.
///
/// Monomials are ordered graded-lexicographically: first by total degree
/// (the sum of exponents), then lexicographically on the exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<i32>,
}

impl Monomial {
    pub fn new(exps: Vec<i32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial (all exponents zero).
    pub fn unit(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> i32 {
        self.exps[i]
    }

    /// Total degree: the sum of all exponents.
    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// True if every exponent is nonnegative.
    pub fn is_ordinary(&self) -> bool {
        self.exps.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Quotient monomial; always defined in the Laurent ring.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Quotient restricted to ordinary (nonnegative-exponent) divisibility.
    pub fn try_div_ordinary(&self, other: &Monomial) -> Option<Monomial> {
        let q = self.div(other);
        q.is_ordinary().then_some(q)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e * k).collect(),
        }
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// Componentwise minimum of two exponent vectors.
    pub fn min(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// Positive part: `max(e, 0)` componentwise.
    pub fn positive_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.max(0)).collect(),
        }
    }

    /// Negative part: `max(-e, 0)` componentwise.
    pub fn negative_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| (-e).max(0)).collect(),
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let u = Monomial::unit(2);
        let x = Monomial::var(2, 0);
        let y = Monomial::var(2, 1);
        let xy = x.mul(&y);
        let x2 = x.pow(2);
        assert!(u < x);
        assert!(y < x); // same degree, lex on exponents
        assert!(x < xy);
        assert!(xy < x2);
    }

    #[test]
    fn laurent_quotients() {
        let x = Monomial::var(2, 0);
        let y = Monomial::var(2, 1);
        let q = x.div(&y);
        assert_eq!(q.exponents(), &[1, -1]);
        assert!(!q.is_ordinary());
        assert!(x.try_div_ordinary(&y).is_none());
        assert_eq!(q.positive_part().exponents(), &[1, 0]);
        assert_eq!(q.negative_part().exponents(), &[0, 1]);
    }
}
