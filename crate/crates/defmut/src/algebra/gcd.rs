//! Multivariate polynomial GCD and exact division.
//!
//! The GCD uses content/primitive-part recursion with a subresultant
//! polynomial remainder sequence on the top variable. This is ample for
//! the low-variable, low-degree workloads the engine sees; no modular or
//! sparse-interpolation machinery is needed.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::monomial::Monomial;
use super::poly::LaurentPoly;

/// Exact division of Laurent polynomials. Returns `Some(q)` with
/// `f = q * g` when `g` divides `f`, and `None` otherwise.
///
/// Monomial content is stripped first, so the quotient of ordinary
/// polynomials is found by leading-term elimination in graded-lex order:
/// if the quotient exists, the divisor's leading term divides the
/// dividend's at every step.
pub fn exact_div(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    if g.is_zero() {
        return None;
    }
    if f.is_zero() {
        return Some(LaurentPoly::zero(f.nvars()));
    }
    let sf = f.min_exponents();
    let sg = g.min_exponents();
    let fo = f.mul_monomial(&sf.inverse());
    let go = g.mul_monomial(&sg.inverse());

    let (lead_g, lc_g) = go.leading().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut rem: BTreeMap<Monomial, BigRational> = fo.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut quot = LaurentPoly::zero(f.nvars());

    while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        let qm = m.try_div_ordinary(&lead_g)?;
        let qc = c / &lc_g;
        quot.add_term(qm.clone(), qc.clone());
        for (gm, gc) in go.terms() {
            let key = qm.mul(gm);
            let delta = &qc * gc;
            use std::collections::btree_map::Entry;
            match rem.entry(key) {
                Entry::Vacant(e) => {
                    e.insert(-delta);
                }
                Entry::Occupied(mut e) => {
                    let v = e.get() - &delta;
                    if num_traits::Zero::is_zero(&v) {
                        e.remove();
                    } else {
                        *e.get_mut() = v;
                    }
                }
            }
        }
    }
    Some(quot.mul_monomial(&sf.div(&sg)))
}

/// GCD of two Laurent polynomials, up to a unit: the result is primitive
/// with integer coefficients, positive leading coefficient, and zero
/// minimum exponent in every variable. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let ao = a.mul_monomial(&a.min_exponents().inverse());
    let bo = b.mul_monomial(&b.min_exponents().inverse());
    let (pa, _) = ao.primitive_integer();
    let (pb, _) = bo.primitive_integer();
    let g = gcd_rec(&pa, &pb);
    normalize(&g)
}

fn normalize(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let shifted = p.mul_monomial(&p.min_exponents().inverse());
    shifted.primitive_integer().0
}

fn gcd_rec(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    debug_assert!(a.is_ordinary() && b.is_ordinary());
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one(a.nvars());
    }
    // Top variable: the highest index occurring in either operand.
    let nvars = a.nvars();
    let v = (0..nvars)
        .rev()
        .find(|&i| a.involves(i) || b.involves(i))
        .expect("nonconstant polynomial involves a variable");
    if !a.involves(v) {
        return gcd_rec(a, &content_in(b, v));
    }
    if !b.involves(v) {
        return gcd_rec(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd_rec(&ca, &cb);
    let pa = exact_div(a, &ca).expect("content divides");
    let pb = exact_div(b, &cb).expect("content divides");
    let g = subresultant_prs(pa, pb, v);
    c.mul(&g)
}

/// Content of `p` with respect to variable `v`: the GCD of the coefficient
/// polynomials of the powers of `x_v`.
fn content_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let coeffs = split_by_var(p, v);
    let mut acc = LaurentPoly::zero(p.nvars());
    for c in coeffs.values() {
        if acc.is_zero() {
            acc = c.primitive_integer().0;
        } else {
            acc = gcd_of(&acc, c);
        }
        if acc.is_constant() {
            return LaurentPoly::one(p.nvars());
        }
    }
    acc
}

fn gcd_of(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (pa, _) = a.primitive_integer();
    let (pb, _) = b.primitive_integer();
    if pa.is_constant() || pb.is_constant() {
        return LaurentPoly::one(a.nvars());
    }
    normalize(&gcd_rec(&pa, &pb))
}

/// View `p` as a univariate polynomial in `x_v`: exponent of `x_v` →
/// coefficient polynomial (with the `v` exponent zeroed out).
fn split_by_var(p: &LaurentPoly, v: usize) -> BTreeMap<i32, LaurentPoly> {
    let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exponent(v);
        let mut exps = m.exponents().to_vec();
        exps[v] = 0;
        out.entry(e)
            .or_insert_with(|| LaurentPoly::zero(p.nvars()))
            .add_term(Monomial::new(exps), c.clone());
    }
    out.retain(|_, c| !c.is_zero());
    out
}

struct UniPoly {
    coeffs: BTreeMap<i32, LaurentPoly>,
    nvars: usize,
    v: usize,
}

impl UniPoly {
    fn from(p: &LaurentPoly, v: usize) -> Self {
        UniPoly { coeffs: split_by_var(p, v), nvars: p.nvars(), v }
    }

    fn deg(&self) -> i32 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn lc(&self) -> LaurentPoly {
        self.coeffs
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.nvars))
    }

    fn join(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (&e, c) in &self.coeffs {
            out = out.add(&c.mul_monomial(&Monomial::var(self.nvars, self.v).pow(e)));
        }
        out
    }

    fn scale(&self, k: &LaurentPoly) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c.mul(k))).collect(),
            nvars: self.nvars,
            v: self.v,
        }
    }

    fn sub(&self, other: &UniPoly) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &other.coeffs {
            let entry = coeffs.entry(e).or_insert_with(|| LaurentPoly::zero(self.nvars));
            *entry = entry.sub(c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        UniPoly { coeffs, nvars: self.nvars, v: self.v }
    }

    /// Multiply by `c * x_v^k`.
    fn shift_scale(&self, c: &LaurentPoly, k: i32) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(&e, cc)| (e + k, cc.mul(c))).collect(),
            nvars: self.nvars,
            v: self.v,
        }
    }

    fn div_coeffs(&self, d: &LaurentPoly) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, exact_div(c, d).expect("subresultant division is exact")))
                .collect(),
            nvars: self.nvars,
            v: self.v,
        }
    }
}

/// Pseudo-remainder: returns `prem` with `lc(g)^(deg f - deg g + 1) * f =
/// q * g + prem` and `deg prem < deg g`.
fn pseudo_rem(f: &UniPoly, g: &UniPoly) -> UniPoly {
    let m = g.deg();
    let lc_g = g.lc();
    let mut r = UniPoly { coeffs: f.coeffs.clone(), nvars: f.nvars, v: f.v };
    let mut mults = f.deg() - m + 1;
    while !r.is_zero() && r.deg() >= m {
        let k = r.deg() - m;
        let lc_r = r.lc();
        r = r.scale(&lc_g).sub(&g.shift_scale(&lc_r, k));
        mults -= 1;
    }
    let mut extra = LaurentPoly::one(f.nvars);
    for _ in 0..mults.max(0) {
        extra = extra.mul(&lc_g);
    }
    r.scale(&extra)
}

/// Subresultant PRS on primitive inputs; returns the primitive part of the
/// GCD with respect to `v`.
fn subresultant_prs(a: LaurentPoly, b: LaurentPoly, v: usize) -> LaurentPoly {
    let ua = UniPoly::from(&a, v);
    let ub = UniPoly::from(&b, v);
    let (mut r0, mut r1) = if ua.deg() >= ub.deg() { (ua, ub) } else { (ub, ua) };

    let one = LaurentPoly::one(a.nvars());
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let d = r0.deg() - r1.deg();
        let rem = pseudo_rem(&r0, &r1);
        if rem.is_zero() {
            let p = r1.join();
            let c = content_in(&p, v);
            return exact_div(&p, &c).expect("content divides").primitive_integer().0;
        }
        if rem.deg() == 0 && !rem.is_zero() {
            return one;
        }
        r0 = r1;
        let mut divisor = g.clone();
        for _ in 0..d {
            divisor = divisor.mul(&h);
        }
        r1 = rem.div_coeffs(&divisor);
        g = r0.lc();
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => {
                let mut gd = LaurentPoly::one(a.nvars());
                for _ in 0..d {
                    gd = gd.mul(&g);
                }
                let mut hd = LaurentPoly::one(a.nvars());
                for _ in 0..(d - 1) {
                    hd = hd.mul(&h);
                }
                exact_div(&gd, &hd).expect("subresultant h-update is exact")
            }
        };
    }
}

/// Least common multiple, normalized like [`poly_gcd`].
pub fn poly_lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero(a.nvars());
    }
    let g = poly_gcd(a, b);
    let q = exact_div(a, &g).expect("gcd divides");
    normalize(&q.mul(b))
}

#[allow(dead_code)]
fn lc_one(p: &LaurentPoly) -> bool {
    p.leading_coeff().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn x() -> LaurentPoly {
        LaurentPoly::var(2, 0)
    }
    fn y() -> LaurentPoly {
        LaurentPoly::var(2, 1)
    }
    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::constant(2, rat(n, 1))
    }

    #[test]
    fn exact_division_succeeds_and_fails() {
        let f = x().add(&y()).mul(&x().sub(&y())); // x^2 - y^2
        let q = exact_div(&f, &x().add(&y())).unwrap();
        assert_eq!(q, x().sub(&y()));
        assert!(exact_div(&f, &x().add(&c(1))).is_none());
    }

    #[test]
    fn exact_division_with_laurent_shift() {
        // (x^2 - y^2)/x divided by (x+y)/y = y(x-y)/x
        let f = x().pow(2).sub(&y().pow(2)).mul_monomial(&Monomial::new(vec![-1, 0]));
        let g = x().add(&y()).mul_monomial(&Monomial::new(vec![0, -1]));
        let q = exact_div(&f, &g).unwrap();
        assert_eq!(q, x().sub(&y()).mul_monomial(&Monomial::new(vec![-1, 1])));
    }

    #[test]
    fn gcd_shared_factor() {
        let p = x().add(&y()); // x + y
        let f = p.mul(&x().add(&c(1))).mul(&p); // (x+y)^2 (x+1)
        let g = p.mul(&y().add(&c(2))); // (x+y)(y+2)
        assert_eq!(poly_gcd(&f, &g), p);
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(poly_gcd(&x().add(&c(1)), &y().add(&c(1))), LaurentPoly::one(2));
        assert_eq!(poly_gcd(&x(), &y()), LaurentPoly::one(2));
    }

    #[test]
    fn gcd_is_idempotent_under_normalization() {
        let p = x().scale(&rat(4, 6)).add(&y().scale(&rat(2, 3)));
        let g1 = poly_gcd(&p, &p);
        let g2 = poly_gcd(&g1, &g1);
        assert_eq!(g1, g2);
        assert_eq!(g1, x().add(&y()));
    }

    #[test]
    fn gcd_univariate_contents() {
        // gcd(2x^2+2x, 4x) over the integers: primitive gcd is x... content
        // handling: with rational coefficients the gcd is defined up to a
        // unit, normalized to primitive: gcd = x.
        let f = x().pow(2).scale(&rat(2, 1)).add(&x().scale(&rat(2, 1)));
        let g = x().scale(&rat(4, 1));
        assert_eq!(poly_gcd(&f, &g), x());
    }

    #[test]
    fn lcm_product_relation() {
        let p = x().add(&y());
        let f = p.mul(&x());
        let g = p.mul(&y());
        let l = poly_lcm(&f, &g);
        assert_eq!(l, p.mul(&x()).mul(&y()));
    }
}
