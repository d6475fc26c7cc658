//! Exact rational scalars.
//!
//! Arbitrary-precision rationals are provided by `num-rational`, which
//! maintains the canonical form used throughout: reduced to lowest terms
//! with a positive denominator and zero stored as `0/1`. Orbit data is
//! serialized as `"p/q"` strings, never floats.

use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shorthand constructor: `rat(n, d)` is the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p"`, `"-p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Other(format!("invalid rational literal {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
    }
}

/// Render as `"p"` or `"p/q"`; the standard `Display` of `BigRational`
/// already does this, so this is just a named entry point.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// p-adic valuation of a nonzero rational.
pub fn valuation(q: &Rational, p: &BigInt) -> i64 {
    if q.is_zero() {
        panic!("valuation of zero is undefined");
    }
    fn vp(mut n: BigInt, p: &BigInt) -> i64 {
        let mut v = 0;
        n = n.abs();
        loop {
            let (q, r) = num_integer::Integer::div_rem(&n, p);
            if r.is_zero() {
                v += 1;
                n = q;
            } else {
                return v;
            }
        }
    }
    vp(q.numer().clone(), p) - vp(q.denom().clone(), p)
}

/// `q * p^(-v)` where `v` is the p-adic valuation: the unit part of `q` at `p`.
pub fn strip_prime(q: &Rational, p: &BigInt) -> Rational {
    let v = valuation(q, p);
    let pw = Rational::from_integer(p.clone());
    let mut out = q.clone();
    let mut k = v;
    while k > 0 {
        out /= pw.clone();
        k -= 1;
    }
    while k < 0 {
        out *= pw.clone();
        k += 1;
    }
    out
}

pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("137/8").unwrap(), rat(137, 8));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(format_rational(&rat(17, 40)), "17/40");
        assert_eq!(format_rational(&rat(5, 1)), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn p_adic_valuation() {
        let two = BigInt::from(2);
        assert_eq!(valuation(&rat(8, 1), &two), 3);
        assert_eq!(valuation(&rat(137, 8), &two), -3);
        assert_eq!(valuation(&rat(17, 40), &BigInt::from(5)), -1);
        assert_eq!(valuation(&rat(17, 40), &BigInt::from(7)), 0);
    }
}
