//! Dense complex matrices, symmetric matrices, tensors and weighted hypergraphs.
//!
//! All containers are immutable after construction and reject non-finite
//! entries. Storage is row-major (lexicographic index order for tensors) and
//! 0-based; error messages report 1-based positions.

use serde::Serialize;

use crate::error::{Error, Result};

pub type Complex = num_complex::Complex64;

pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);
pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);

fn check_finite(entries: &[Complex]) -> Result<()> {
    match entries
        .iter()
        .position(|z| !(z.re.is_finite() && z.im.is_finite()))
    {
        Some(p) => Err(Error::NonFinite(p + 1)),
        None => Ok(()),
    }
}

/// Dense `n x n` complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn new(n: usize, entries: Vec<Complex>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidShape("matrix side must be positive".into()));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidShape(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        check_finite(&entries)?;
        Ok(Self { n, entries })
    }

    pub fn from_real(n: usize, entries: &[f64]) -> Result<Self> {
        Self::new(n, entries.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    pub fn from_rows(rows: Vec<Vec<Complex>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidShape("rows must all have length n".into()));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    /// The all-ones matrix `J_n`.
    pub fn ones(n: usize) -> Self {
        assert!(n > 0, "matrix side must be positive");
        Self {
            n,
            entries: vec![ONE; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Complex] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im == 0.0)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let entries = (0..n * n).map(|p| self.get(p % n, p / n)).collect();
        Self { n, entries }
    }

    /// Reinterprets the matrix as a 2-dimensional tensor with the same index order.
    pub fn to_tensor(&self) -> ComplexTensor {
        ComplexTensor {
            d: 2,
            n: self.n,
            entries: self.entries.clone(),
        }
    }
}

/// Symmetric `2n x 2n` complex matrix. Symmetry is exact (bit-equal).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetricComplexMatrix {
    two_n: usize,
    entries: Vec<Complex>,
}

impl SymmetricComplexMatrix {
    pub fn new(two_n: usize, entries: Vec<Complex>) -> Result<Self> {
        if two_n == 0 || two_n % 2 != 0 {
            return Err(Error::InvalidShape(format!(
                "side {two_n} must be even and positive"
            )));
        }
        if entries.len() != two_n * two_n {
            return Err(Error::InvalidShape(format!(
                "expected {} entries for a {two_n}x{two_n} matrix, got {}",
                two_n * two_n,
                entries.len()
            )));
        }
        check_finite(&entries)?;
        for i in 0..two_n {
            for j in i + 1..two_n {
                let a = entries[i * two_n + j];
                let b = entries[j * two_n + i];
                if a.re.to_bits() != b.re.to_bits() || a.im.to_bits() != b.im.to_bits() {
                    return Err(Error::NotSymmetric {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(Self { two_n, entries })
    }

    /// Builds a symmetric matrix from its strict upper triangle, given row by row
    /// (`(0,1), (0,2), ..., (1,2), ...`). The diagonal is set to `diagonal`.
    pub fn from_upper(two_n: usize, upper: &[Complex], diagonal: Complex) -> Result<Self> {
        if two_n == 0 || two_n % 2 != 0 {
            return Err(Error::InvalidShape(format!(
                "side {two_n} must be even and positive"
            )));
        }
        if upper.len() != two_n * (two_n - 1) / 2 {
            return Err(Error::InvalidShape("wrong upper-triangle length".into()));
        }
        let mut entries = vec![diagonal; two_n * two_n];
        let mut it = upper.iter();
        for i in 0..two_n {
            for j in i + 1..two_n {
                let z = *it.next().expect("length checked");
                entries[i * two_n + j] = z;
                entries[j * two_n + i] = z;
            }
        }
        Self::new(two_n, entries)
    }

    /// The all-ones matrix `J_{2n}`.
    pub fn ones(two_n: usize) -> Self {
        assert!(
            two_n > 0 && two_n % 2 == 0,
            "side must be even and positive"
        );
        Self {
            two_n,
            entries: vec![ONE; two_n * two_n],
        }
    }

    /// The block matrix `[[0, A], [A^T, 0]]`, whose hafnian is `per A`.
    pub fn bipartite(a: &ComplexMatrix) -> Self {
        let n = a.n();
        let two_n = 2 * n;
        let mut entries = vec![ZERO; two_n * two_n];
        for i in 0..n {
            for j in 0..n {
                entries[i * two_n + n + j] = a.get(i, j);
                entries[(n + j) * two_n + i] = a.get(i, j);
            }
        }
        Self { two_n, entries }
    }

    pub fn two_n(&self) -> usize {
        self.two_n
    }

    /// Half the side length; the number of pairs in a perfect matching.
    pub fn half(&self) -> usize {
        self.two_n / 2
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.entries[i * self.two_n + j]
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    /// True when every off-diagonal entry is real. The diagonal never enters the hafnian.
    pub fn is_real(&self) -> bool {
        (0..self.two_n).all(|i| (0..self.two_n).all(|j| i == j || self.get(i, j).im == 0.0))
    }

    /// Applies the simultaneous row/column permutation `perm` (new index `i` takes old `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let m = self.two_n;
        if perm.len() != m {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let mut seen = vec![false; m];
        for &p in perm {
            if p >= m || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let entries = (0..m * m)
            .map(|q| self.get(perm[q / m], perm[q % m]))
            .collect();
        Ok(Self { two_n: m, entries })
    }
}

/// Dense `d`-dimensional `n x ... x n` complex array in lexicographic index order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexTensor {
    d: usize,
    n: usize,
    entries: Vec<Complex>,
}

impl ComplexTensor {
    pub fn new(d: usize, n: usize, entries: Vec<Complex>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidShape(format!(
                "tensor dimension d = {d} must be at least 2"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidShape("tensor side must be positive".into()));
        }
        let len = n
            .checked_pow(d as u32)
            .ok_or_else(|| Error::InvalidShape("tensor too large".into()))?;
        if entries.len() != len {
            return Err(Error::InvalidShape(format!(
                "expected {len} entries for d = {d}, n = {n}, got {}",
                entries.len()
            )));
        }
        check_finite(&entries)?;
        Ok(Self { d, n, entries })
    }

    pub fn from_real(d: usize, n: usize, entries: &[f64]) -> Result<Self> {
        Self::new(
            d,
            n,
            entries.iter().map(|&x| Complex::new(x, 0.0)).collect(),
        )
    }

    /// The all-ones tensor `J`.
    pub fn ones(d: usize, n: usize) -> Self {
        Self::new(d, n, vec![ONE; n.pow(d as u32)]).expect("valid shape")
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    /// Flat offset of a multi-index.
    #[inline]
    pub fn offset(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.d);
        index.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    #[inline]
    pub fn get(&self, index: &[usize]) -> Complex {
        self.entries[self.offset(index)]
    }

    /// Inverse of [`offset`](Self::offset).
    pub fn multi_index(&self, mut offset: usize) -> Vec<usize> {
        let mut idx = vec![0; self.d];
        for slot in idx.iter_mut().rev() {
            *slot = offset % self.n;
            offset /= self.n;
        }
        idx
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im == 0.0)
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.d != 2 {
            return Err(Error::InvalidShape(format!(
                "d = {} is not a matrix",
                self.d
            )));
        }
        ComplexMatrix::new(self.n, self.entries.clone())
    }
}

impl From<&ComplexMatrix> for ComplexTensor {
    fn from(m: &ComplexMatrix) -> Self {
        m.to_tensor()
    }
}

/// A `d`-uniform hypergraph with complex edge weights.
///
/// Each edge is stored with its vertices sorted ascending; edges are kept in
/// lexicographic order of their vertex lists.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightedHypergraph {
    d: usize,
    vertex_count: usize,
    edges: Vec<(Vec<usize>, Complex)>,
}

impl WeightedHypergraph {
    pub fn new(d: usize, vertex_count: usize, edges: Vec<(Vec<usize>, Complex)>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidHypergraph(format!(
                "edge size d = {d} must be at least 2"
            )));
        }
        if vertex_count == 0 {
            return Err(Error::InvalidHypergraph(
                "vertex count must be positive".into(),
            ));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (mut verts, w) in edges {
            if verts.len() != d {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {:?} has {} vertices, expected {d}",
                    verts,
                    verts.len()
                )));
            }
            verts.sort_unstable();
            if verts.windows(2).any(|p| p[0] == p[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {verts:?} repeats a vertex"
                )));
            }
            if let Some(&v) = verts.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidHypergraph(format!(
                    "vertex {} out of range 1..={vertex_count}",
                    v + 1
                )));
            }
            if !(w.re.is_finite() && w.im.is_finite()) {
                return Err(Error::InvalidHypergraph("non-finite edge weight".into()));
            }
            normalized.push((verts, w));
        }
        normalized.sort_by(|a, b| a.0.cmp(&b.0));
        if normalized.windows(2).any(|p| p[0].0 == p[1].0) {
            return Err(Error::InvalidHypergraph("duplicate edge".into()));
        }
        Ok(Self {
            d,
            vertex_count,
            edges: normalized,
        })
    }

    /// The complete `d`-partite hypergraph on `n * d` vertices carrying weights
    /// `z_{i_1...i_d} - 1`; vertex `i` of part `p` is numbered `p * n + i`.
    pub fn complete_partite(z: &ComplexTensor) -> Self {
        let (d, n) = (z.d(), z.n());
        let edges = z
            .entries()
            .iter()
            .enumerate()
            .map(|(off, &w)| {
                let idx = z.multi_index(off);
                let verts = idx.iter().enumerate().map(|(p, &i)| p * n + i).collect();
                (verts, w - ONE)
            })
            .collect();
        Self::new(d, n * d, edges).expect("complete partite hypergraph is well formed")
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(Vec<usize>, Complex)] {
        &self.edges
    }

    /// Returns a copy with every weight multiplied by `s`.
    pub fn scaled(&self, s: Complex) -> Self {
        Self {
            d: self.d,
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|(v, w)| (v.clone(), w * s)).collect(),
        }
    }

    /// `max_v sum_{e contains v} |w(e)|`.
    pub fn max_vertex_weight(&self) -> f64 {
        let mut load = vec![0.0; self.vertex_count];
        for (verts, w) in &self.edges {
            for &v in verts {
                load[v] += w.norm();
            }
        }
        load.into_iter().fold(0.0, f64::max)
    }
}

/// Any of the three input shapes accepted by the oracles and pipelines.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Instance {
    Matrix(ComplexMatrix),
    Symmetric(SymmetricComplexMatrix),
    Tensor(ComplexTensor),
}

impl Instance {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Instance::Matrix(_) => "matrix",
            Instance::Symmetric(_) => "symmetric",
            Instance::Tensor(_) => "tensor",
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Instance::Matrix(a) => a.is_real(),
            Instance::Symmetric(a) => a.is_real(),
            Instance::Tensor(a) => a.is_real(),
        }
    }

    /// Degree of `g(z) = F(J + z(A - J))`: `n` for matrices and tensors, half the side for hafnians.
    pub fn interpolation_degree(&self) -> usize {
        match self {
            Instance::Matrix(a) => a.n(),
            Instance::Symmetric(a) => a.half(),
            Instance::Tensor(a) => a.n(),
        }
    }
}

impl From<ComplexMatrix> for Instance {
    fn from(a: ComplexMatrix) -> Self {
        Instance::Matrix(a)
    }
}

impl From<SymmetricComplexMatrix> for Instance {
    fn from(a: SymmetricComplexMatrix) -> Self {
        Instance::Symmetric(a)
    }
}

impl From<ComplexTensor> for Instance {
    fn from(a: ComplexTensor) -> Self {
        Instance::Tensor(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn matrix_shape_and_finiteness() {
        assert!(ComplexMatrix::new(2, vec![ONE; 3]).is_err());
        assert!(ComplexMatrix::new(0, vec![]).is_err());
        let err = ComplexMatrix::new(1, vec![c(f64::NAN, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NonFinite(1)));
    }

    #[test]
    fn symmetric_requires_even_and_exact_symmetry() {
        assert!(SymmetricComplexMatrix::new(3, vec![ONE; 9]).is_err());
        let mut e = vec![ONE; 4];
        e[1] = c(1.0, 1e-300);
        let err = SymmetricComplexMatrix::new(2, e).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric { row: 1, col: 2 }));
    }

    #[test]
    fn tensor_d2_round_trips_through_matrix() {
        let a = ComplexMatrix::from_real(3, &[1., 2., 3., 4., 5., 6., 7., 8., 9.]).unwrap();
        let t = a.to_tensor();
        assert_eq!(t.get(&[1, 2]), a.get(1, 2));
        assert_eq!(t.to_matrix().unwrap(), a);
    }

    #[test]
    fn tensor_multi_index_inverts_offset() {
        let t = ComplexTensor::ones(3, 4);
        for off in 0..64 {
            assert_eq!(t.offset(&t.multi_index(off)), off);
        }
        assert_eq!(t.multi_index(1), vec![0, 0, 1]);
    }

    #[test]
    fn hypergraph_validation() {
        assert!(WeightedHypergraph::new(2, 3, vec![(vec![0, 0], ONE)]).is_err());
        assert!(WeightedHypergraph::new(2, 3, vec![(vec![0, 3], ONE)]).is_err());
        assert!(WeightedHypergraph::new(2, 3, vec![(vec![0, 1, 2], ONE)]).is_err());
        let dup = vec![(vec![0, 1], ONE), (vec![1, 0], ONE)];
        assert!(WeightedHypergraph::new(2, 3, dup).is_err());
        let h = WeightedHypergraph::new(2, 3, vec![(vec![2, 1], ONE), (vec![0, 1], ONE)]).unwrap();
        assert_eq!(h.edges()[0].0, vec![0, 1]);
        assert_eq!(h.edges()[1].0, vec![1, 2]);
    }

    #[test]
    fn bipartite_block_is_symmetric() {
        let a = ComplexMatrix::from_real(2, &[1., 2., 3., 4.]).unwrap();
        let s = SymmetricComplexMatrix::bipartite(&a);
        assert_eq!(s.get(0, 3), c(2.0, 0.0));
        assert_eq!(s.get(3, 0), c(2.0, 0.0));
        assert_eq!(s.get(0, 1), ZERO);
        assert!(SymmetricComplexMatrix::new(4, s.entries().to_vec()).is_ok());
    }
}
