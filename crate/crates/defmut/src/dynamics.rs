//! Deformed mutation rules, seeds, composed cluster maps, orbit
//! iteration and monomial-invariant reductions.
//!
//! The exchange at a mutable node `k` replaces `x_k` by
//! `x_k' = x_k^{-1} M_k^+ g_k(M_k^- / M_k^+)` where `M_k^+`, `M_k^-` are
//! the exchange monomials of the current matrix (frozen variables
//! included) and `g_k` is the node's deformation. The default
//! `g(x) = 1 + x` reproduces the ordinary exchange relation
//! `x_k' x_k = M^+ + M^-`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{ClusterValue, RatFunc, Rational, RationalMap};
use crate::error::{Error, Result};
use crate::quiver::{ExchangeMatrix, MutationWord};

/// A scalar expression in the parameter alphabet, used for deformation
/// coefficients: a rational constant, a named parameter, or a rational
/// multiple of a named parameter.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ParamExpr {
    Const(Rational),
    Param(String),
    Scaled(Rational, String),
}

impl ParamExpr {
    pub fn int(n: i64) -> Self {
        ParamExpr::Const(Rational::from_integer(n.into()))
    }

    pub fn param(name: &str) -> Self {
        ParamExpr::Param(name.to_string())
    }

    /// Parse `"3"`, `"-1/2"`, `"d"` or `"2*d"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((c, p)) = s.split_once('*') {
            let q = crate::algebra::parse_rational(c)?;
            return Ok(ParamExpr::Scaled(q, p.trim().to_string()));
        }
        if let Ok(q) = crate::algebra::parse_rational(s) {
            return Ok(ParamExpr::Const(q));
        }
        if s.is_empty() || !s.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(Error::Manifest(format!("invalid parameter expression {s:?}")));
        }
        Ok(ParamExpr::Param(s.to_string()))
    }

    pub fn eval<V: ClusterValue>(&self, env: &ParamEnv<'_, V>) -> Result<V> {
        match self {
            ParamExpr::Const(q) => Ok(env.witness.from_rational(q)),
            ParamExpr::Param(name) => env.get(name),
            ParamExpr::Scaled(q, name) => {
                Ok(env.get(name)?.mul(&env.witness.from_rational(q)))
            }
        }
    }
}

impl TryFrom<String> for ParamExpr {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        ParamExpr::parse(&s)
    }
}

impl From<ParamExpr> for String {
    fn from(p: ParamExpr) -> String {
        match p {
            ParamExpr::Const(q) => q.to_string(),
            ParamExpr::Param(name) => name,
            ParamExpr::Scaled(q, name) => format!("{q}*{name}"),
        }
    }
}

/// Parameter bindings for one evaluation: names and values in matching
/// order, plus a witness fixing the scalar type's ambient arity.
pub struct ParamEnv<'a, V: ClusterValue> {
    pub names: &'a [String],
    pub values: &'a [V],
    pub witness: &'a V,
}

impl<'a, V: ClusterValue> ParamEnv<'a, V> {
    pub fn new(names: &'a [String], values: &'a [V], witness: &'a V) -> Self {
        ParamEnv { names, values, witness }
    }

    fn get(&self, name: &str) -> Result<V> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| self.values[i].clone())
            .ok_or_else(|| Error::Other(format!("unbound parameter {name:?}")))
    }
}

/// One-variable deformation `g_k` attached to a node. The affine and
/// Moebius kinds cover every deformation used by the named scenarios;
/// `Custom` admits an arbitrary univariate rational function whose
/// ambient variables are `(x, p_1, ..., p_m)` for the parameter list of
/// the owning map.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GSpec {
    /// `g(x) = b x + a`: the exchange is `x_k' x_k = a M^+ + b M^-`.
    Affine { a: ParamExpr, b: ParamExpr },
    /// `g(x) = (a1 x + a3)/(a2 x + a1)`.
    Moebius { a1: ParamExpr, a2: ParamExpr, a3: ParamExpr },
    /// `g(x) = x (a1 + a3 x)/(a2 + a1 x)`.
    MoebiusX { a1: ParamExpr, a2: ParamExpr, a3: ParamExpr },
    /// Arbitrary `g`; variable 0 is the argument, the rest are parameters.
    #[serde(skip)]
    Custom(RatFunc),
}

impl GSpec {
    /// The undeformed exchange `g(x) = 1 + x`.
    pub fn undeformed() -> Self {
        GSpec::Affine { a: ParamExpr::int(1), b: ParamExpr::int(1) }
    }

    pub fn affine(a: ParamExpr, b: ParamExpr) -> Self {
        GSpec::Affine { a, b }
    }

    /// The exchange value `f_k(M^+, M^-) = M^+ g_k(M^- / M^+)`, computed
    /// in cleared form so that only genuine zero denominators error.
    pub fn exchange_value<V: ClusterValue>(
        &self,
        m_plus: &V,
        m_minus: &V,
        env: &ParamEnv<'_, V>,
    ) -> Result<V> {
        match self {
            GSpec::Affine { a, b } => {
                let av = a.eval(env)?;
                let bv = b.eval(env)?;
                Ok(av.mul(m_plus).add(&bv.mul(m_minus)))
            }
            GSpec::Moebius { a1, a2, a3 } => {
                let a1 = a1.eval(env)?;
                let a2 = a2.eval(env)?;
                let a3 = a3.eval(env)?;
                // M^+ (a1 M^- + a3 M^+) / (a2 M^- + a1 M^+)
                let num = m_plus.mul(&a1.mul(m_minus).add(&a3.mul(m_plus)));
                let den = a2.mul(m_minus).add(&a1.mul(m_plus));
                num.div(&den)
            }
            GSpec::MoebiusX { a1, a2, a3 } => {
                let a1 = a1.eval(env)?;
                let a2 = a2.eval(env)?;
                let a3 = a3.eval(env)?;
                // x g(1/x) form: M^- (a1 M^+ + a3 M^-) / (a2 M^+ + a1 M^-)
                let num = m_minus.mul(&a1.mul(m_plus).add(&a3.mul(m_minus)));
                let den = a2.mul(m_plus).add(&a1.mul(m_minus));
                num.div(&den)
            }
            GSpec::Custom(g) => {
                let arg = m_minus.div(m_plus)?;
                let mut images: Vec<V> = Vec::with_capacity(1 + env.values.len());
                images.push(arg);
                images.extend_from_slice(env.values);
                if images.len() != g.nvars() {
                    return Err(Error::ArityMismatch { expected: g.nvars(), got: images.len() });
                }
                let d = g.denom().eval_values(&images, env.witness)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let n = g.numer().eval_values(&images, env.witness)?;
                m_plus.mul(&n).div(&d)
            }
        }
    }

    /// Degree-1 homogeneity of `f(M^+, M^-) = M^+ g(M^- / M^+)`, checked
    /// as the symbolic identity `f(t u, t v) = t f(u, v)` in fresh
    /// variables `(u, v, t, params...)`.
    pub fn is_homogeneous_degree_one(&self, param_names: &[String]) -> Result<bool> {
        let nv = 3 + param_names.len();
        let u = RatFunc::var(nv, 0);
        let v = RatFunc::var(nv, 1);
        let t = RatFunc::var(nv, 2);
        let values: Vec<RatFunc> =
            (0..param_names.len()).map(|i| RatFunc::var(nv, 3 + i)).collect();
        let witness = RatFunc::zero(nv);
        let env = ParamEnv::new(param_names, &values, &witness);
        let plain = self.exchange_value(&u, &v, &env)?;
        let scaled = self.exchange_value(&t.mul(&u), &t.mul(&v), &env)?;
        Ok(scaled == t.mul(&plain))
    }
}

/// An exchange matrix paired with a cluster of field values. The cluster
/// covers the frozen rows too; frozen entries never change under mutation.
#[derive(Clone, PartialEq, Debug)]
pub struct Seed<V: ClusterValue> {
    pub matrix: ExchangeMatrix,
    pub cluster: Vec<V>,
}

impl<V: ClusterValue> Seed<V> {
    pub fn new(matrix: ExchangeMatrix, cluster: Vec<V>) -> Result<Self> {
        if cluster.len() != matrix.n_rows() {
            return Err(Error::ArityMismatch { expected: matrix.n_rows(), got: cluster.len() });
        }
        Ok(Seed { matrix, cluster })
    }

    pub fn mutable_cluster(&self) -> &[V] {
        &self.cluster[..self.matrix.n_mutable()]
    }

    /// The exchange monomials `(M_k^+, M_k^-)` at the current matrix.
    pub fn exchange_monomials(&self, node: usize) -> Result<(V, V)> {
        let (plus, minus) = self.matrix.exchange_exponents(node)?;
        let witness = &self.cluster[0];
        let mut mp = witness.one_like();
        let mut mm = witness.one_like();
        for (i, (&ep, &em)) in plus.iter().zip(&minus).enumerate() {
            if ep > 0 {
                mp = mp.mul(&self.cluster[i].int_pow(ep as i32)?);
            }
            if em > 0 {
                mm = mm.mul(&self.cluster[i].int_pow(em as i32)?);
            }
        }
        Ok((mp, mm))
    }

    /// Deformed mutation at `node`: `x_k <- x_k^{-1} f_k(M^+, M^-)`, and
    /// the matrix mutates. Every other cluster entry is unchanged.
    pub fn mutate(&self, node: usize, rule: &GSpec, env: &ParamEnv<'_, V>) -> Result<Seed<V>> {
        let k = node - 1;
        let (mp, mm) = self.exchange_monomials(node)?;
        if self.cluster[k].is_zero() {
            return Err(Error::SingularMutation { node, step: 0 });
        }
        let f = rule
            .exchange_value(&mp, &mm, env)
            .map_err(|e| match e {
                Error::DivisionByZero => Error::RuleDenominator { node, step: 0 },
                other => other,
            })?;
        let new_value = f.div(&self.cluster[k]).map_err(|e| match e {
            Error::DivisionByZero => Error::SingularMutation { node, step: 0 },
            other => other,
        })?;
        let mut cluster = self.cluster.clone();
        cluster[k] = new_value;
        Ok(Seed { matrix: self.matrix.mutate(node)?, cluster })
    }
}

/// A program of deformed mutations (with an optional trailing
/// permutation) whose word leaves the exchange matrix invariant, plus a
/// rule per node (defaulting to the undeformed exchange).
#[derive(Clone, Debug)]
pub struct ClusterMap {
    word: MutationWord,
    rules: BTreeMap<usize, GSpec>,
    param_names: Vec<String>,
}

impl ClusterMap {
    /// Build and validate against a matrix: the word (with its trailing
    /// permutation) must leave the matrix invariant.
    pub fn new(
        matrix: &ExchangeMatrix,
        word: MutationWord,
        rules: BTreeMap<usize, GSpec>,
        param_names: Vec<String>,
    ) -> Result<Self> {
        let res = matrix.check_word_invariance(&word)?;
        if !res.invariant {
            return Err(Error::WordNotInvariant);
        }
        Ok(ClusterMap { word, rules, param_names })
    }

    pub fn word(&self) -> &MutationWord {
        &self.word
    }

    pub fn param_names(&self) -> &[String] {
        &self.param_names
    }

    pub fn rule(&self, node: usize) -> GSpec {
        self.rules.get(&node).cloned().unwrap_or_else(GSpec::undeformed)
    }

    /// Apply the whole program to a seed. Mutations run left to right in
    /// word order; afterwards the inverse of the trailing permutation
    /// relabels the mutable cluster entries, realizing
    /// `phi = rho^{-1} mu_{i_l} ... mu_{i_1}`.
    pub fn apply<V: ClusterValue>(&self, seed: &Seed<V>, params: &[V]) -> Result<Seed<V>> {
        let witness = seed.cluster[0].clone();
        let env = ParamEnv::new(&self.param_names, params, &witness);
        let mut s = seed.clone();
        for (pos, &node) in self.word.indices.iter().enumerate() {
            s = s.mutate(node, &self.rule(node), &env).map_err(|e| match e {
                Error::SingularMutation { node, .. } => Error::SingularMutation { node, step: pos },
                Error::RuleDenominator { node, .. } => Error::RuleDenominator { node, step: pos },
                other => other,
            })?;
        }
        if let Some(rho) = &self.word.permutation {
            let inv = rho.inverse();
            s.cluster = inv.apply_to_tuple(&s.cluster);
            s.matrix = s.matrix.apply_permutation(&inv)?;
        }
        debug_assert_eq!(s.matrix, seed.matrix);
        Ok(s)
    }

    /// The map as a tuple of rational functions in the ambient variables
    /// `(x_1, ..., x_n, params...)`. Requires a matrix without frozen
    /// rows (frozen scenarios bind their frozen entries explicitly).
    pub fn symbolic_map(&self, matrix: &ExchangeMatrix) -> Result<RationalMap> {
        if matrix.n_frozen() != 0 {
            return Err(Error::Other("symbolic_map needs a matrix without frozen rows".into()));
        }
        let n = matrix.n_mutable();
        let nv = n + self.param_names.len();
        let cluster: Vec<RatFunc> = (0..n).map(|i| RatFunc::var(nv, i)).collect();
        let params: Vec<RatFunc> =
            (0..self.param_names.len()).map(|i| RatFunc::var(nv, n + i)).collect();
        let seed = Seed::new(matrix.clone(), cluster)?;
        let out = self.apply(&seed, &params)?;
        RationalMap::new(out.cluster)
    }

    /// Iterate an exact orbit, recording every cluster. Stops early with
    /// a report if a step is singular; detects exact periodicity as the
    /// first return to the initial cluster.
    pub fn iterate_orbit(
        &self,
        seed: &Seed<Rational>,
        params: &[Rational],
        steps: usize,
    ) -> Result<OrbitRecord> {
        let mut clusters = vec![seed.cluster.clone()];
        let mut s = seed.clone();
        let mut period = None;
        let mut singularity = None;
        for step in 1..=steps {
            match self.apply(&s, params) {
                Ok(next) => {
                    s = next;
                    clusters.push(s.cluster.clone());
                    if period.is_none() && s.cluster == seed.cluster {
                        period = Some(step);
                    }
                }
                Err(e) => {
                    let node = match e {
                        Error::SingularMutation { node, .. } | Error::RuleDenominator { node, .. } => node,
                        other => return Err(other),
                    };
                    singularity = Some(SingularityReport { step, node, detail: e.to_string() });
                    break;
                }
            }
        }
        Ok(OrbitRecord { clusters, period, singularity })
    }
}

/// A recorded orbit: the initial cluster and its images.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitRecord<V: ClusterValue = Rational> {
    pub clusters: Vec<Vec<V>>,
    /// First step at which the cluster returns exactly to the start.
    pub period: Option<usize>,
    pub singularity: Option<SingularityReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub step: usize,
    pub node: usize,
    pub detail: String,
}

impl<V: ClusterValue> OrbitRecord<V> {
    pub fn steps(&self) -> usize {
        self.clusters.len().saturating_sub(1)
    }

    /// Scalar reading of a shift-map orbit: the first entry of every
    /// cluster, then the remaining entries of the final cluster.
    pub fn flatten_shift(&self) -> Vec<V> {
        let mut out: Vec<V> = self.clusters.iter().map(|c| c[0].clone()).collect();
        if let Some(last) = self.clusters.last() {
            out.extend_from_slice(&last[1..]);
        }
        out
    }
}

/// A monomial map onto scaling-invariant coordinates: one integer
/// exponent row per reduced variable, each row constrained to lie in the
/// image of the exchange matrix.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MonomialProjection {
    pub rows: Vec<Vec<i64>>,
}

impl MonomialProjection {
    pub fn new(rows: Vec<Vec<i64>>, matrix: &ExchangeMatrix) -> Result<Self> {
        let ki = matrix.integer_kernel_image();
        for row in &rows {
            if row.len() != matrix.n_mutable() {
                return Err(Error::ArityMismatch { expected: matrix.n_mutable(), got: row.len() });
            }
            if !ki.image_contains(row) {
                return Err(Error::ProjectionNotInImage);
            }
        }
        Ok(MonomialProjection { rows })
    }

    /// Identity-style projection used in tests and degenerate cases.
    pub fn unchecked(rows: Vec<Vec<i64>>) -> Self {
        MonomialProjection { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply<V: ClusterValue>(&self, cluster: &[V]) -> Result<Vec<V>> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = cluster[0].one_like();
                for (i, &e) in row.iter().enumerate() {
                    if e != 0 {
                        acc = acc.mul(&cluster[i].int_pow(e as i32)?);
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    /// Map every cluster of an orbit through the projection.
    pub fn project_orbit<V: ClusterValue>(&self, orbit: &OrbitRecord<V>) -> Result<OrbitRecord<V>> {
        let mut clusters = Vec::with_capacity(orbit.clusters.len());
        for (step, c) in orbit.clusters.iter().enumerate() {
            let projected = self.apply(c).map_err(|e| match e {
                Error::ZeroToNegativePower => Error::ZeroOrbitEntry { step },
                other => other,
            })?;
            clusters.push(projected);
        }
        let period = clusters
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| **c == clusters[0])
            .map(|(i, _)| i);
        Ok(OrbitRecord { clusters, period, singularity: orbit.singularity.clone() })
    }

    /// The projection as rational-function images `y_r = prod x_i^{e_ri}`
    /// in an ambient set of `nvars` variables.
    pub fn symbolic_images(&self, nvars: usize) -> Vec<RatFunc> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = RatFunc::one(nvars);
                for (i, &e) in row.iter().enumerate() {
                    if e != 0 {
                        acc = acc.mul(&RatFunc::var(nvars, i).int_pow(e as i32).expect("nonzero variable"));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Exact check of the quadrilateral window relation
/// `a1 (s_n s_{n+4} - s_{n+1} s_{n+3}) + a2 s_n s_{n+1} s_{n+3} s_{n+4} = a3`
/// at every window of the scalar sequence.
pub fn check_quad_relation(seq: &[Rational], a: &(Rational, Rational, Rational)) -> bool {
    if seq.len() < 5 {
        return false;
    }
    let (a1, a2, a3) = a;
    seq.windows(5).all(|w| {
        let lhs = a1 * (&w[0] * &w[4] - &w[1] * &w[3]) + a2 * (&w[0] * &w[1] * &w[3] * &w[4]);
        lhs == *a3
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn a2_matrix() -> ExchangeMatrix {
        ExchangeMatrix::square(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    fn lyness_map(a: i64, b: i64) -> ClusterMap {
        let mut rules = BTreeMap::new();
        rules.insert(
            1,
            GSpec::affine(
                ParamExpr::Const(rat(a, 1)),
                ParamExpr::Const(rat(b, 1)),
            ),
        );
        ClusterMap::new(
            &a2_matrix(),
            MutationWord::with_permutation(vec![1], crate::quiver::Permutation::new(vec![2, 1]).unwrap()),
            rules,
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn a2_affine_mutation_at_ones() {
        let seed = Seed::new(a2_matrix(), vec![rat(1, 1), rat(1, 1)]).unwrap();
        let env_names: Vec<String> = vec![];
        let witness = rat(0, 1);
        let env = ParamEnv::new(&env_names, &[], &witness);
        let out = seed.mutate(1, &GSpec::undeformed(), &env).unwrap();
        assert_eq!(out.cluster[0], rat(2, 1));
        assert_eq!(out.cluster[1], rat(1, 1));
    }

    #[test]
    fn lyness_is_shift_with_exchange() {
        // (x, y) -> (y, (a y + b)/x) with a = 2, b = 3 from (1, 1): next is (1, 5)
        let map = lyness_map(2, 3);
        let seed = Seed::new(a2_matrix(), vec![rat(1, 1), rat(1, 1)]).unwrap();
        let out = map.apply(&seed, &[]).unwrap();
        assert_eq!(out.cluster, vec![rat(1, 1), rat(5, 1)]);
    }

    #[test]
    fn five_cycle_period() {
        let map = lyness_map(1, 1);
        let seed = Seed::new(a2_matrix(), vec![rat(1, 1), rat(1, 1)]).unwrap();
        let orbit = map.iterate_orbit(&seed, &[], 10).unwrap();
        assert_eq!(orbit.period, Some(5));
        // 1, 1, 2, 3, 2, 1, 1, ...
        let xs: Vec<Rational> = orbit.clusters.iter().map(|c| c[0].clone()).collect();
        assert_eq!(&xs[..7], &[rat(1, 1), rat(1, 1), rat(2, 1), rat(3, 1), rat(2, 1), rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn singular_orbit_reported() {
        // From (1, -1) with a = b = 1 the next cluster holds a zero, and the
        // following step divides by it.
        let map = lyness_map(1, 1);
        let seed = Seed::new(a2_matrix(), vec![rat(1, 1), rat(-1, 1)]).unwrap();
        let orbit = map.iterate_orbit(&seed, &[], 10).unwrap();
        let report = orbit.singularity.expect("orbit hits a singularity");
        assert_eq!(report.node, 1);
        assert!(orbit.clusters.len() <= 3);
    }

    #[test]
    fn symbolic_lyness_components() {
        let mut rules = BTreeMap::new();
        rules.insert(1, GSpec::affine(ParamExpr::param("a"), ParamExpr::param("b")));
        let map = ClusterMap::new(
            &a2_matrix(),
            MutationWord::with_permutation(vec![1], crate::quiver::Permutation::new(vec![2, 1]).unwrap()),
            rules,
            vec!["a".into(), "b".into()],
        )
        .unwrap();
        let sym = map.symbolic_map(&a2_matrix()).unwrap();
        // components in (x, y, a, b): (y, (a y + b)/x)
        let x = RatFunc::var(4, 0);
        let y = RatFunc::var(4, 1);
        let a = RatFunc::var(4, 2);
        let b = RatFunc::var(4, 3);
        assert_eq!(sym.components()[0], y);
        assert_eq!(sym.components()[1], (a * y + b) / x);
    }

    #[test]
    fn quad_relation_windows() {
        let ones = vec![rat(1, 1); 8];
        assert!(check_quad_relation(&ones, &(rat(1, 1), rat(1, 1), rat(2, 1))));
        let mut corrupted = ones.clone();
        corrupted[5] = rat(7, 1);
        assert!(!check_quad_relation(&corrupted, &(rat(1, 1), rat(1, 1), rat(2, 1))));
    }

    #[test]
    fn homogeneity_of_rules() {
        assert!(GSpec::undeformed().is_homogeneous_degree_one(&[]).unwrap());
        let names = vec!["a1".to_string(), "a2".to_string(), "a3".to_string()];
        let moebius = GSpec::Moebius {
            a1: ParamExpr::param("a1"),
            a2: ParamExpr::param("a2"),
            a3: ParamExpr::param("a3"),
        };
        assert!(moebius.is_homogeneous_degree_one(&names).unwrap());
        let moebius_x = GSpec::MoebiusX {
            a1: ParamExpr::param("a1"),
            a2: ParamExpr::param("a2"),
            a3: ParamExpr::param("a3"),
        };
        assert!(moebius_x.is_homogeneous_degree_one(&names).unwrap());
        // g(x) = 1 + x^2 is admissible (any g is); homogeneity still holds.
        let g = {
            let x = RatFunc::var(1, 0);
            RatFunc::one(1).add(&x.mul(&x))
        };
        assert!(GSpec::Custom(g).is_homogeneous_degree_one(&[]).unwrap());
    }
}
