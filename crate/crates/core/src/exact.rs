//! Exponential-time reference evaluation of permanents, hafnians,
//! multidimensional permanents and hypergraph matching polynomials.
//!
//! Every routine is single-threaded with a fixed summation order, so repeated
//! calls on the same input return bit-identical results.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sum::ComplexSum;
use crate::types::{
    Complex, ComplexMatrix, ComplexTensor, SymmetricComplexMatrix, WeightedHypergraph, ONE, ZERO,
};

/// Size limits for the exact routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleLimits {
    /// Largest matrix side accepted by [`permanent_exact`].
    pub permanent_n: usize,
    /// Largest `2n` accepted by [`hafnian_exact`].
    pub hafnian_two_n: usize,
    /// Largest `(n!)^(d-1)` accepted by [`tensor_permanent_exact`].
    pub tensor_terms: f64,
    /// Largest number of matchings visited by [`matching_polynomial`].
    pub matchings: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            permanent_n: 14,
            hafnian_two_n: 16,
            tensor_terms: 1e7,
            matchings: 10_000_000,
        }
    }
}

/// Coefficients `W_k` of the matching polynomial `sum_k W_k z^k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchingPolynomialCoeffs {
    pub weights: Vec<Complex>,
}

impl MatchingPolynomialCoeffs {
    /// `P_H` with every edge weight multiplied by `z`.
    pub fn eval(&self, z: Complex) -> Complex {
        self.weights.iter().rev().fold(ZERO, |acc, &w| acc * z + w)
    }
}

pub fn permanent_exact(a: &ComplexMatrix) -> Result<Complex> {
    permanent_exact_with(a, &OracleLimits::default())
}

/// Ryser's formula
/// `per A = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij`,
/// visiting subsets in binary-reflected Gray-code order so each step updates
/// the row sums by one column.
pub fn permanent_exact_with(a: &ComplexMatrix, limits: &OracleLimits) -> Result<Complex> {
    let n = a.n();
    if n > limits.permanent_n {
        return Err(Error::SizeLimitExceeded {
            what: "permanent size n",
            actual: n as f64,
            limit: limits.permanent_n as f64,
        });
    }
    let mut row_sums = vec![ZERO; n];
    let mut total = ComplexSum::new();
    let mut in_subset = vec![false; n];
    let mut size = 0usize;
    for step in 1u64..(1u64 << n) {
        let col = step.trailing_zeros() as usize;
        if in_subset[col] {
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s -= a.get(i, col);
            }
            size -= 1;
        } else {
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s += a.get(i, col);
            }
            size += 1;
        }
        in_subset[col] = !in_subset[col];
        let prod = row_sums.iter().fold(ONE, |acc, &s| acc * s);
        if (n - size) % 2 == 0 {
            total.add(prod);
        } else {
            total.add(-prod);
        }
    }
    Ok(total.value())
}

/// Direct sum over all `n!` permutations. Reference implementation for tests.
pub fn permanent_naive(a: &ComplexMatrix) -> Complex {
    fn rec(a: &ComplexMatrix, row: usize, used: u64, prod: Complex, acc: &mut ComplexSum) {
        let n = a.n();
        if row == n {
            acc.add(prod);
            return;
        }
        for col in 0..n {
            if used & (1 << col) == 0 {
                rec(a, row + 1, used | (1 << col), prod * a.get(row, col), acc);
            }
        }
    }
    let mut acc = ComplexSum::new();
    rec(a, 0, 0, ONE, &mut acc);
    acc.value()
}

pub fn hafnian_exact(a: &SymmetricComplexMatrix) -> Result<Complex> {
    hafnian_exact_with(a, &OracleLimits::default())
}

/// First-row expansion `haf A = sum_j a_1j haf A_j`, memoised on the set of
/// remaining vertices. Diagonal entries are never read.
pub fn hafnian_exact_with(a: &SymmetricComplexMatrix, limits: &OracleLimits) -> Result<Complex> {
    let two_n = a.two_n();
    if two_n > limits.hafnian_two_n {
        return Err(Error::SizeLimitExceeded {
            what: "hafnian size 2n",
            actual: two_n as f64,
            limit: limits.hafnian_two_n as f64,
        });
    }
    let full = (1usize << two_n) - 1;
    let mut memo: Vec<Option<Complex>> = vec![None; full + 1];
    memo[0] = Some(ONE);
    Ok(hafnian_rec(a, full, &mut memo))
}

fn hafnian_rec(a: &SymmetricComplexMatrix, mask: usize, memo: &mut [Option<Complex>]) -> Complex {
    if let Some(v) = memo[mask] {
        return v;
    }
    let i = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << i);
    let mut acc = ComplexSum::new();
    let mut others = rest;
    while others != 0 {
        let j = others.trailing_zeros() as usize;
        others &= others - 1;
        let w = a.get(i, j);
        if w != ZERO {
            acc.add(w * hafnian_rec(a, rest & !(1 << j), memo));
        }
    }
    let v = acc.value();
    memo[mask] = Some(v);
    v
}

/// Sum over all `(2n-1)!!` perfect matchings. Reference implementation for tests.
pub fn hafnian_naive(a: &SymmetricComplexMatrix) -> Complex {
    fn rec(a: &SymmetricComplexMatrix, mask: u64, prod: Complex, acc: &mut ComplexSum) {
        if mask == 0 {
            acc.add(prod);
            return;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut others = rest;
        while others != 0 {
            let j = others.trailing_zeros() as usize;
            others &= others - 1;
            rec(a, rest & !(1 << j), prod * a.get(i, j), acc);
        }
    }
    let mut acc = ComplexSum::new();
    rec(a, (1u64 << a.two_n()) - 1, ONE, &mut acc);
    acc.value()
}

/// `(n!)^(d-1)` as a float.
pub fn tensor_term_count(d: usize, n: usize) -> f64 {
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    fact.powi(d as i32 - 1)
}

pub fn tensor_permanent_exact(a: &ComplexTensor) -> Result<Complex> {
    tensor_permanent_exact_with(a, &OracleLimits::default())
}

/// `PER A = sum_{s_2..s_d} prod_i a_{i s_2(i) .. s_d(i)}` by depth-first
/// enumeration: row by row, then coordinate by coordinate, each coordinate
/// taking the unused indices in increasing order.
pub fn tensor_permanent_exact_with(a: &ComplexTensor, limits: &OracleLimits) -> Result<Complex> {
    let (d, n) = (a.d(), a.n());
    let terms = tensor_term_count(d, n);
    if terms > limits.tensor_terms {
        return Err(Error::SizeLimitExceeded {
            what: "tensor permutation tuples (n!)^(d-1)",
            actual: terms,
            limit: limits.tensor_terms,
        });
    }
    let mut walk = TensorWalk {
        a,
        d,
        n,
        strides: (0..d).map(|p| n.pow((d - 1 - p) as u32)).collect(),
        used: vec![0u64; d],
        acc: ComplexSum::new(),
    };
    walk.row(0, ONE);
    Ok(walk.acc.value())
}

struct TensorWalk<'a> {
    a: &'a ComplexTensor,
    d: usize,
    n: usize,
    strides: Vec<usize>,
    used: Vec<u64>,
    acc: ComplexSum,
}

impl TensorWalk<'_> {
    fn row(&mut self, i: usize, prod: Complex) {
        if i == self.n {
            self.acc.add(prod);
            return;
        }
        self.coord(i, 1, i * self.strides[0], prod);
    }

    fn coord(&mut self, i: usize, p: usize, offset: usize, prod: Complex) {
        if p == self.d {
            let v = self.a.entries()[offset];
            if v != ZERO {
                self.row(i + 1, prod * v);
            }
            return;
        }
        for j in 0..self.n {
            if self.used[p] & (1 << j) == 0 {
                self.used[p] |= 1 << j;
                self.coord(i, p + 1, offset + j * self.strides[p], prod);
                self.used[p] &= !(1 << j);
            }
        }
    }
}

pub fn matching_polynomial(h: &WeightedHypergraph) -> Result<MatchingPolynomialCoeffs> {
    matching_polynomial_with(h, &OracleLimits::default())
}

/// Enumerates matchings by branching on the first remaining edge (edges in
/// lexicographic order): exclude it, or include it when disjoint from the
/// vertices already covered.
pub fn matching_polynomial_with(
    h: &WeightedHypergraph,
    limits: &OracleLimits,
) -> Result<MatchingPolynomialCoeffs> {
    if h.vertex_count() > 64 {
        return Err(Error::SizeLimitExceeded {
            what: "hypergraph vertex count",
            actual: h.vertex_count() as f64,
            limit: 64.0,
        });
    }
    let edges: Vec<(u64, Complex)> = h
        .edges()
        .iter()
        .map(|(vs, w)| (vs.iter().fold(0u64, |m, &v| m | (1 << v)), *w))
        .collect();
    let max_k = h.vertex_count() / h.d();
    let mut walk = MatchingWalk {
        edges: &edges,
        sums: vec![ComplexSum::new(); max_k + 1],
        visited: 0,
        limit: limits.matchings,
    };
    if !walk.visit(0, 0, 0, ONE) {
        return Err(Error::SizeLimitExceeded {
            what: "hypergraph matchings",
            actual: walk.visited as f64,
            limit: limits.matchings as f64,
        });
    }
    Ok(MatchingPolynomialCoeffs {
        weights: walk.sums.iter().map(ComplexSum::value).collect(),
    })
}

struct MatchingWalk<'a> {
    edges: &'a [(u64, Complex)],
    sums: Vec<ComplexSum>,
    visited: u64,
    limit: u64,
}

impl MatchingWalk<'_> {
    /// Returns false once the matching limit is exceeded.
    fn visit(&mut self, next: usize, covered: u64, k: usize, weight: Complex) -> bool {
        if next == self.edges.len() {
            self.visited += 1;
            if self.visited > self.limit {
                return false;
            }
            self.sums[k].add(weight);
            return true;
        }
        if !self.visit(next + 1, covered, k, weight) {
            return false;
        }
        let (mask, w) = self.edges[next];
        if covered & mask == 0 {
            return self.visit(next + 1, covered | mask, k + 1, weight * w);
        }
        true
    }
}
