//! Exchange matrices, matrix mutation, permutations and mutation words.
//!
//! An exchange matrix stores the full `(n_mutable + n_frozen) x n_mutable`
//! array of a quiver with optional frozen nodes. Node indices in the
//! public API are 1-based, matching the usual labelling of quiver nodes;
//! frozen nodes carry the indices after the mutable ones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer exchange matrix with `n_mutable` columns and
/// `n_mutable + n_frozen` rows. The top square block is skew-symmetric;
/// frozen rows are unconstrained.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "ExchangeMatrixDto", into = "ExchangeMatrixDto")]
pub struct ExchangeMatrix {
    n_mutable: usize,
    n_frozen: usize,
    /// Row-major, rows `0..n_mutable + n_frozen`, columns `0..n_mutable`.
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct ExchangeMatrixDto {
    n_mutable: usize,
    n_frozen: usize,
    entries: Vec<Vec<i64>>,
}

impl TryFrom<ExchangeMatrixDto> for ExchangeMatrix {
    type Error = Error;

    fn try_from(dto: ExchangeMatrixDto) -> Result<Self> {
        let rows: Vec<Vec<i64>> = dto.entries;
        if rows.len() != dto.n_mutable + dto.n_frozen
            || rows.iter().any(|r| r.len() != dto.n_mutable)
        {
            return Err(Error::Manifest("exchange matrix shape mismatch".into()));
        }
        ExchangeMatrix::with_frozen(dto.n_mutable, dto.n_frozen, rows.concat())
    }
}

impl From<ExchangeMatrix> for ExchangeMatrixDto {
    fn from(m: ExchangeMatrix) -> Self {
        let rows = (0..m.n_rows()).map(|i| m.row(i).to_vec()).collect();
        ExchangeMatrixDto { n_mutable: m.n_mutable, n_frozen: m.n_frozen, entries: rows }
    }
}

impl ExchangeMatrix {
    /// A square skew-symmetric matrix with no frozen rows.
    pub fn square(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Manifest("square matrix rows must all have length n".into()));
        }
        Self::with_frozen(n, 0, rows.concat())
    }

    /// Build from a row-major entry list including frozen rows.
    pub fn with_frozen(n_mutable: usize, n_frozen: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != (n_mutable + n_frozen) * n_mutable {
            return Err(Error::Manifest("exchange matrix entry count mismatch".into()));
        }
        let m = ExchangeMatrix { n_mutable, n_frozen, entries };
        for i in 0..n_mutable {
            for j in 0..n_mutable {
                if m.get(i, j) != -m.get(j, i) {
                    return Err(Error::Manifest(format!(
                        "mutable block is not skew-symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn n_mutable(&self) -> usize {
        self.n_mutable
    }

    pub fn n_frozen(&self) -> usize {
        self.n_frozen
    }

    pub fn n_rows(&self) -> usize {
        self.n_mutable + self.n_frozen
    }

    /// Entry at 0-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n_mutable + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n_mutable + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n_mutable..(i + 1) * self.n_mutable]
    }

    /// The square mutable block as rows.
    pub fn mutable_block(&self) -> Vec<Vec<i64>> {
        (0..self.n_mutable).map(|i| self.row(i).to_vec()).collect()
    }

    fn check_node(&self, node: usize) -> Result<usize> {
        if node == 0 || node > self.n_mutable {
            return Err(Error::NodeOutOfRange { node, n_mutable: self.n_mutable });
        }
        Ok(node - 1)
    }

    /// Matrix mutation at (1-based) node `k`, applied to every row
    /// including frozen ones. Involutive: mutating twice at `k` returns
    /// the original matrix.
    pub fn mutate(&self, node: usize) -> Result<ExchangeMatrix> {
        let k = self.check_node(node)?;
        let mut out = self.clone();
        for i in 0..self.n_rows() {
            for j in 0..self.n_mutable {
                let v = if i == k || j == k {
                    -self.get(i, j)
                } else {
                    let bik = self.get(i, k);
                    let bkj = self.get(k, j);
                    self.get(i, j) + bik.signum() * (bik * bkj).max(0)
                };
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    /// Exponents of `M_k^+` and `M_k^-` for the exchange at node `k`:
    /// per variable `i` (including frozen), `[-b_ik]_+` and `[b_ik]_+`
    /// respectively, reading down column `k`.
    pub fn exchange_exponents(&self, node: usize) -> Result<(Vec<i64>, Vec<i64>)> {
        let k = self.check_node(node)?;
        let mut plus = Vec::with_capacity(self.n_rows());
        let mut minus = Vec::with_capacity(self.n_rows());
        for i in 0..self.n_rows() {
            let b = self.get(i, k);
            plus.push((-b).max(0));
            minus.push(b.max(0));
        }
        Ok((plus, minus))
    }

    /// Simultaneous relabelling of the mutable nodes: entry `(i, j)` of
    /// the result is `b_{rho(i), rho(j)}`. Frozen rows keep their row
    /// position; only their columns are relabelled.
    pub fn apply_permutation(&self, rho: &Permutation) -> Result<ExchangeMatrix> {
        if rho.len() != self.n_mutable {
            return Err(Error::InvalidPermutation(self.n_mutable));
        }
        let mut out = self.clone();
        for i in 0..self.n_rows() {
            for j in 0..self.n_mutable {
                let src_row = if i < self.n_mutable { rho.image(i + 1) - 1 } else { i };
                let src_col = rho.image(j + 1) - 1;
                out.set(i, j, self.get(src_row, src_col));
            }
        }
        Ok(out)
    }

    /// Apply a full mutation word (and its trailing permutation, inverted,
    /// if present) and report whether the matrix returns to itself.
    pub fn check_word_invariance(&self, word: &MutationWord) -> Result<WordInvariance> {
        let mut m = self.clone();
        for &node in &word.indices {
            m = m.mutate(node)?;
        }
        if let Some(rho) = &word.permutation {
            m = m.apply_permutation(&rho.inverse())?;
        }
        Ok(WordInvariance { invariant: m == *self, final_matrix: m })
    }

    /// Integer kernel and image bases of the mutable block.
    ///
    /// The kernel basis spans `ker B` over the rationals with primitive
    /// integer vectors; the image basis is a lattice basis of the integer
    /// column span, in Hermite normal form.
    pub fn integer_kernel_image(&self) -> KernelImage {
        let n = self.n_mutable;
        let block: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(BigInt::from(self.get(i, j))))
                    .collect()
            })
            .collect();
        let kernel = rational_kernel(&block)
            .into_iter()
            .map(|v| primitive_integer_vector(&v))
            .collect();
        let columns: Vec<Vec<BigInt>> = (0..n)
            .map(|j| (0..n).map(|i| BigInt::from(self.get(i, j))).collect())
            .collect();
        let image = hermite_normal_form(columns);
        KernelImage { kernel_basis: kernel, image_basis: image }
    }

    /// Exact inverse of the mutable block, if nondegenerate.
    pub fn inverse_mutable(&self) -> Result<Vec<Vec<BigRational>>> {
        let n = self.n_mutable;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..n)
                    .map(|j| BigRational::from_integer(BigInt::from(self.get(i, j))))
                    .collect();
                for k in 0..n {
                    row.push(if k == i { BigRational::one() } else { BigRational::zero() });
                }
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for j in 0..2 * n {
                a[col][j] = &a[col][j] * &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..2 * n {
                        a[r][j] = &a[r][j] - &f * &a[col][j];
                    }
                }
            }
        }
        Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// DOT rendering: `b_ij > 0` draws one arrow `i -> j` labelled with
    /// the multiplicity when it exceeds 1; frozen nodes are boxed.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for i in 0..self.n_rows() {
            let shape = if i < self.n_mutable { "circle" } else { "box" };
            out.push_str(&format!("    n{} [label=\"{}\", shape={}];\n", i + 1, i + 1, shape));
        }
        for i in 0..self.n_rows() {
            for j in 0..self.n_mutable {
                let b = self.get(i, j);
                if b > 0 {
                    if b == 1 {
                        out.push_str(&format!("    n{} -> n{};\n", i + 1, j + 1));
                    } else {
                        out.push_str(&format!("    n{} -> n{} [label=\"{}\"];\n", i + 1, j + 1, b));
                    }
                }
                // Arrows from a mutable node to a frozen node are encoded by
                // negative entries in the frozen row.
                if i >= self.n_mutable && b < 0 {
                    if b == -1 {
                        out.push_str(&format!("    n{} -> n{};\n", j + 1, i + 1));
                    } else {
                        out.push_str(&format!("    n{} -> n{} [label=\"{}\"];\n", j + 1, i + 1, -b));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Brute-force search for a permutation with `word(B) = rho(B)`.
    pub fn find_permutation_equivalence(&self, mutated: &ExchangeMatrix) -> Option<Permutation> {
        let n = self.n_mutable;
        let mut images: Vec<usize> = (1..=n).collect();
        permute_search(self, mutated, &mut images, 0)
    }
}

fn permute_search(
    base: &ExchangeMatrix,
    target: &ExchangeMatrix,
    images: &mut Vec<usize>,
    k: usize,
) -> Option<Permutation> {
    let n = images.len();
    if k == n {
        let rho = Permutation::new(images.clone()).ok()?;
        let permuted = base.apply_permutation(&rho).ok()?;
        return (permuted == *target).then_some(rho);
    }
    for i in k..n {
        images.swap(k, i);
        if let Some(found) = permute_search(base, target, images, k + 1) {
            images.swap(k, i);
            return Some(found);
        }
        images.swap(k, i);
    }
    None
}

/// Result of applying a mutation word to a matrix.
#[derive(Clone, Debug)]
pub struct WordInvariance {
    pub invariant: bool,
    pub final_matrix: ExchangeMatrix,
}

/// Integer kernel/image bases of the mutable block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelImage {
    pub kernel_basis: Vec<Vec<BigInt>>,
    pub image_basis: Vec<Vec<BigInt>>,
}

impl KernelImage {
    /// True if `v` lies in the integer row span of `basis`.
    pub fn image_contains(&self, v: &[i64]) -> bool {
        lattice_contains(&self.image_basis, v)
    }

    pub fn kernel_rank(&self) -> usize {
        self.kernel_basis.len()
    }
}

/// True if `v` lies in the integer lattice spanned by `basis`.
pub fn lattice_contains(basis: &[Vec<BigInt>], v: &[i64]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|&x| x == 0);
    }
    let mut target: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    // The HNF basis is upper-triangular with respect to pivot positions.
    for b in basis {
        if let Some(p) = b.iter().position(|x| !x.is_zero()) {
            if target[p].is_zero() {
                continue;
            }
            let (q, r) = target[p].div_rem(&b[p]);
            if !r.is_zero() {
                return false;
            }
            for (t, bb) in target.iter_mut().zip(b) {
                *t -= &q * bb;
            }
        }
    }
    target.iter().all(|x| x.is_zero())
}

/// Hermite normal form (row-style) of the lattice spanned by the given
/// vectors; returns a canonical basis with positive pivots.
pub fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut col = 0;
    while col < ncols && !rows.is_empty() {
        // Euclidean elimination in this column.
        loop {
            let mut nonzero: Vec<usize> =
                (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&i| rows[i][col].magnitude().clone());
            let (small, rest) = (nonzero[0], &nonzero[1..]);
            for &i in rest {
                let q = &rows[i][col] / &rows[small][col];
                for j in 0..ncols {
                    let sub = &q * &rows[small][j];
                    rows[i][j] -= sub;
                }
            }
        }
        if let Some(p) = (0..rows.len()).find(|&i| !rows[i][col].is_zero()) {
            let mut pivot = rows.remove(p);
            if pivot[col].is_negative() {
                for x in pivot.iter_mut() {
                    *x = -x.clone();
                }
            }
            out.push(pivot);
        }
        col += 1;
    }
    // Reduce entries above each pivot.
    for i in (0..out.len()).rev() {
        let p = out[i].iter().position(|x| !x.is_zero()).unwrap();
        for j in 0..i {
            let q = out[j][p].div_floor(&out[i][p]);
            if !q.is_zero() {
                for k in 0..ncols {
                    let sub = &q * &out[i][k];
                    out[j][k] -= sub;
                }
            }
        }
    }
    out
}

fn rational_kernel(block: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = block.len();
    if n == 0 {
        return Vec::new();
    }
    let mut a: Vec<Vec<BigRational>> = block.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) {
            a.swap(r, p);
            let inv = a[r][c].recip();
            for j in 0..n {
                a[r][j] = &a[r][j] * &inv;
            }
            for i in 0..n {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..n {
                        a[i][j] = &a[i][j] - &f * &a[r][j];
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); n];
            v[fc] = BigRational::one();
            for (ri, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[ri][fc].clone();
            }
            v
        })
        .collect()
}

fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    let mut out: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in out.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    out
}

/// A bijection on the mutable node labels `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || seen[i] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Image of a 1-based node label.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Relabel a tuple: entry `i` of the result is entry `rho(i)` of the
    /// input (frozen tail positions, if any, are left in place).
    pub fn apply_to_tuple<T: Clone>(&self, tuple: &[T]) -> Vec<T> {
        let n = self.images.len();
        let mut out = tuple.to_vec();
        for i in 0..n {
            out[i] = tuple[self.image(i + 1) - 1].clone();
        }
        out
    }
}

/// A mutation word: node indices applied left to right, with an optional
/// trailing permutation for mutation-periodic quivers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MutationWord {
    pub indices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Permutation>,
}

impl MutationWord {
    pub fn plain(indices: Vec<usize>) -> Self {
        MutationWord { indices, permutation: None }
    }

    pub fn with_permutation(indices: Vec<usize>, rho: Permutation) -> Self {
        MutationWord { indices, permutation: Some(rho) }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// The word applied `k` times (the permutation stays attached once;
    /// repeated application is only meaningful for words whose
    /// permutation is trivial).
    pub fn repeat(&self, k: usize) -> MutationWord {
        let mut indices = Vec::with_capacity(self.indices.len() * k);
        for _ in 0..k {
            indices.extend_from_slice(&self.indices);
        }
        MutationWord { indices, permutation: self.permutation.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn a2() -> ExchangeMatrix {
        ExchangeMatrix::square(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    pub fn a3() -> ExchangeMatrix {
        ExchangeMatrix::square(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap()
    }

    pub fn a4() -> ExchangeMatrix {
        ExchangeMatrix::square(vec![
            vec![0, 1, 0, 0],
            vec![-1, 0, 1, 0],
            vec![0, -1, 0, 1],
            vec![0, 0, -1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn a2_mutation_negates() {
        let b = a2();
        let m = b.mutate(1).unwrap();
        assert_eq!(m, ExchangeMatrix::square(vec![vec![0, -1], vec![1, 0]]).unwrap());
        assert_eq!(m.mutate(1).unwrap(), b);
    }

    #[test]
    fn a3_mutation_at_one() {
        let expect =
            ExchangeMatrix::square(vec![vec![0, -1, 0], vec![1, 0, 1], vec![0, -1, 0]]).unwrap();
        assert_eq!(a3().mutate(1).unwrap(), expect);
    }

    #[test]
    fn mutation_involutive_and_skew_preserving() {
        for b in [a2(), a3(), a4()] {
            for k in 1..=b.n_mutable() {
                let m = b.mutate(k).unwrap();
                for i in 0..m.n_mutable() {
                    for j in 0..m.n_mutable() {
                        assert_eq!(m.get(i, j), -m.get(j, i));
                    }
                }
                assert_eq!(m.mutate(k).unwrap(), b);
            }
        }
    }

    #[test]
    fn node_out_of_range() {
        assert!(matches!(a2().mutate(3), Err(Error::NodeOutOfRange { node: 3, .. })));
        assert!(matches!(a2().mutate(0), Err(Error::NodeOutOfRange { node: 0, .. })));
    }

    #[test]
    fn a2_period_one_permutation() {
        let b = a2();
        let rho = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(b.apply_permutation(&rho).unwrap(), b.mutate(1).unwrap());
        assert_eq!(b.apply_permutation(&Permutation::identity(2)).unwrap(), b);
    }

    #[test]
    fn word_invariance_a3() {
        let res = a3().check_word_invariance(&MutationWord::plain(vec![1, 2, 3])).unwrap();
        assert!(res.invariant);
        let res = a4().check_word_invariance(&MutationWord::plain(vec![1, 2, 3, 4])).unwrap();
        assert!(res.invariant);
    }

    #[test]
    fn kernel_image_a3() {
        let ki = a3().integer_kernel_image();
        assert_eq!(ki.kernel_basis, vec![vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]]);
        assert!(ki.image_contains(&[0, 1, 0]));
        assert!(ki.image_contains(&[-1, 0, 1]));
        assert!(!ki.image_contains(&[1, 0, 1]));
        assert_eq!(ki.image_basis.len(), 2);
        // Kernel vectors are annihilated and orthogonal to the image basis.
        for v in &ki.image_basis {
            let dot: BigInt = v.iter().zip(&ki.kernel_basis[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn kernel_a4_trivial() {
        let ki = a4().integer_kernel_image();
        assert_eq!(ki.kernel_rank(), 0);
    }

    #[test]
    fn dot_export_renders_arrows() {
        let dot = a2().export_dot();
        assert!(dot.contains("n1 -> n2"));
        assert!(!dot.contains("n2 -> n1"));
        let empty = ExchangeMatrix::square(vec![vec![0, 0], vec![0, 0]]).unwrap().export_dot();
        assert!(!empty.contains("->"));
    }

    #[test]
    fn json_round_trip() {
        let b = a3();
        let s = serde_json::to_string(&b).unwrap();
        assert!(s.contains("\"n_mutable\":3"));
        let back: ExchangeMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }
}
