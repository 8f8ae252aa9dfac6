//! Derivatives at zero of `g(z) = F(J + z(A - J))` for `F` the permanent,
//! hafnian or multidimensional permanent, and the conversion to derivatives
//! of `ln g`.
//!
//! Each tuple-sum kernel enumerates collections of `k` entries of `B = A - J`
//! lying in distinct rows, columns (or slices) and accumulates their products
//! for every `k` up to the requested order in a single depth-first pass. The
//! first coordinate of each collection is enumerated in increasing order; the
//! `k!` orderings of it give equal products and are restored by the
//! normalising factors.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{tensor_term_count, OracleLimits};
use crate::poly::UnivariatePolynomial;
use crate::sum::{ln_factorial, ComplexSum};
use crate::types::{Complex, ComplexMatrix, ComplexTensor, SymmetricComplexMatrix, ONE, ZERO};

/// Default cap on the number of index-tuple products in a derivative sum.
pub const DEFAULT_TUPLE_BUDGET: f64 = 1e8;

/// Largest matrix side for [`g_full_expansion_permanent`].
pub const FULL_EXPANSION_MAX_N: usize = 10;

/// Largest `2n` for [`g_full_expansion_hafnian`].
pub const FULL_EXPANSION_MAX_TWO_N: usize = 14;

/// How the coefficients of `g` were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DerivativePath {
    TupleSum,
    FullExpansion,
}

fn falling(n: usize, k: usize) -> f64 {
    (n - k + 1..=n).map(|x| x as f64).product()
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|x| x as f64).product()
}

/// `(2j - 1)!!` with `(-1)!! = 1`.
fn double_factorial_odd(j: usize) -> f64 {
    (1..=j).map(|t| (2 * t - 1) as f64).product()
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |c, t| c * (n - t) as f64 / (t + 1) as f64)
}

fn check_order(m: usize, n: usize) -> Result<()> {
    if m > n {
        return Err(Error::InvalidArgument(format!(
            "derivative order {m} exceeds n = {n}"
        )));
    }
    Ok(())
}

fn check_budget(needed: f64, budget: f64) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded {
            what: "derivative tuple sum",
            needed,
            budget,
        });
    }
    Ok(())
}

/// `ln per J_n = ln n!`.
pub fn ln_base_permanent(n: usize) -> f64 {
    ln_factorial(n)
}

/// `ln haf J_2n = ln (2n-1)!!`.
pub fn ln_base_hafnian(half: usize) -> f64 {
    crate::sum::sum_f64((1..=half).map(|t| ((2 * t - 1) as f64).ln()))
}

/// `ln PER J = (d-1) ln n!`.
pub fn ln_base_tensor(d: usize, n: usize) -> f64 {
    (d as f64 - 1.0) * ln_factorial(n)
}

fn deviations(entries: &[Complex]) -> Vec<Complex> {
    entries.iter().map(|&a| a - ONE).collect()
}

// ---------------------------------------------------------------------------
// Permanent

/// Sums `S_k` over increasing row tuples and ordered distinct column tuples.
fn permanent_tuple_sums(a: &ComplexMatrix, m: usize) -> Vec<Complex> {
    struct Walk<'a> {
        b: &'a [Complex],
        n: usize,
        m: usize,
        sums: Vec<ComplexSum>,
    }
    impl Walk<'_> {
        fn visit(&mut self, depth: usize, next_row: usize, used: u64, prod: Complex) {
            self.sums[depth].add(prod);
            if depth == self.m {
                return;
            }
            for i in next_row..self.n {
                let row = &self.b[i * self.n..(i + 1) * self.n];
                for (j, &x) in row.iter().enumerate() {
                    if used & (1 << j) == 0 && x != ZERO {
                        self.visit(depth + 1, i + 1, used | (1 << j), prod * x);
                    }
                }
            }
        }
    }
    let b = deviations(a.entries());
    let mut walk = Walk {
        b: &b,
        n: a.n(),
        m,
        sums: vec![ComplexSum::new(); m + 1],
    };
    walk.visit(0, 0, 0, ONE);
    walk.sums.iter().map(ComplexSum::value).collect()
}

/// Coefficients `q_k = g^(k)(0) / (k! g(0))` of `per(J + z(A-J)) / n!`, `k = 0..=m`.
pub fn normalized_coeffs_permanent(
    a: &ComplexMatrix,
    m: usize,
    budget: f64,
) -> Result<Vec<Complex>> {
    let n = a.n();
    check_order(m, n)?;
    check_budget(falling(n, m).powi(2), budget)?;
    let sums = permanent_tuple_sums(a, m);
    Ok(sums
        .iter()
        .enumerate()
        .map(|(k, &s)| s / falling(n, k))
        .collect())
}

/// `g(0), g'(0), ..., g^(m)(0)` for `g(z) = per(J + z(A - J))`, using
/// `g^(k)(0) = (n-k)! sum (a_{i1 j1} - 1) ... (a_{ik jk} - 1)` over pairs of
/// ordered tuples of distinct row and column indices.
pub fn g_derivatives_permanent(a: &ComplexMatrix, m: usize) -> Result<Vec<Complex>> {
    g_derivatives_permanent_with_budget(a, m, DEFAULT_TUPLE_BUDGET)
}

pub fn g_derivatives_permanent_with_budget(
    a: &ComplexMatrix,
    m: usize,
    budget: f64,
) -> Result<Vec<Complex>> {
    let n = a.n();
    check_order(m, n)?;
    check_budget(falling(n, m).powi(2), budget)?;
    let sums = permanent_tuple_sums(a, m);
    Ok(sums
        .iter()
        .enumerate()
        .map(|(k, &s)| s * (factorial(n - k) * factorial(k)))
        .collect())
}

/// All coefficients of `per(J + z(A - J))`, by expanding
/// `prod_i (1 + z (a_{i s(i)} - 1))` for every permutation `s`.
pub fn g_full_expansion_permanent(a: &ComplexMatrix) -> Result<UnivariatePolynomial> {
    let n = a.n();
    if n > FULL_EXPANSION_MAX_N {
        return Err(Error::SizeLimitExceeded {
            what: "full expansion size n",
            actual: n as f64,
            limit: FULL_EXPANSION_MAX_N as f64,
        });
    }
    let b = deviations(a.entries());
    let mut acc = Expansion::new(n);
    fn visit(b: &[Complex], n: usize, row: usize, used: u64, acc: &mut Expansion) {
        if row == n {
            acc.finish();
            return;
        }
        for j in 0..n {
            if used & (1 << j) == 0 {
                acc.push(b[row * n + j]);
                visit(b, n, row + 1, used | (1 << j), acc);
                acc.pop();
            }
        }
    }
    visit(&b, n, 0, 0, &mut acc);
    Ok(acc.polynomial())
}

/// Stack of partial products `prod (1 + z b_t)` shared along a search path.
struct Expansion {
    levels: Vec<Vec<Complex>>,
    depth: usize,
    totals: Vec<ComplexSum>,
}

impl Expansion {
    fn new(max_depth: usize) -> Self {
        let mut levels: Vec<Vec<Complex>> = (0..=max_depth).map(|t| vec![ZERO; t + 1]).collect();
        levels[0][0] = ONE;
        Self {
            levels,
            depth: 0,
            totals: vec![ComplexSum::new(); max_depth + 1],
        }
    }

    fn push(&mut self, b: Complex) {
        let (lo, hi) = self.levels.split_at_mut(self.depth + 1);
        let prev = &lo[self.depth];
        let next = &mut hi[0];
        next[0] = prev[0];
        for t in 1..=self.depth {
            next[t] = prev[t] + prev[t - 1] * b;
        }
        next[self.depth + 1] = prev[self.depth] * b;
        self.depth += 1;
    }

    fn pop(&mut self) {
        self.depth -= 1;
    }

    fn finish(&mut self) {
        for (t, &c) in self.levels[self.depth].iter().enumerate() {
            self.totals[t].add(c);
        }
    }

    fn polynomial(&self) -> UnivariatePolynomial {
        UnivariatePolynomial::new(self.totals.iter().map(ComplexSum::value).collect())
    }
}

// ---------------------------------------------------------------------------
// Hafnian

fn hafnian_pairs(two_n: usize) -> Vec<(usize, usize)> {
    (0..two_n)
        .flat_map(|i| (i + 1..two_n).map(move |j| (i, j)))
        .collect()
}

/// Sums `H_k` over collections of `k` disjoint unordered pairs, pairs listed
/// in lexicographic order.
fn hafnian_pair_sums(a: &SymmetricComplexMatrix, m: usize) -> Vec<Complex> {
    struct Walk {
        pairs: Vec<(u64, Complex)>,
        m: usize,
        sums: Vec<ComplexSum>,
    }
    impl Walk {
        fn visit(&mut self, depth: usize, next: usize, used: u64, prod: Complex) {
            self.sums[depth].add(prod);
            if depth == self.m {
                return;
            }
            for p in next..self.pairs.len() {
                let (mask, w) = self.pairs[p];
                if used & mask == 0 {
                    self.visit(depth + 1, p + 1, used | mask, prod * w);
                }
            }
        }
    }
    let pairs = hafnian_pairs(a.two_n())
        .into_iter()
        .map(|(i, j)| ((1u64 << i) | (1u64 << j), a.get(i, j) - ONE))
        .filter(|&(_, w)| w != ZERO)
        .collect();
    let mut walk = Walk {
        pairs,
        m,
        sums: vec![ComplexSum::new(); m + 1],
    };
    walk.visit(0, 0, 0, ONE);
    walk.sums.iter().map(ComplexSum::value).collect()
}

fn hafnian_budget(half: usize, m: usize) -> f64 {
    binomial(2 * half, 2 * m) * double_factorial_odd(m)
}

/// Coefficients `q_k = g^(k)(0) / (k! g(0))` of `haf(J + z(A-J)) / (2n-1)!!`.
pub fn normalized_coeffs_hafnian(
    a: &SymmetricComplexMatrix,
    m: usize,
    budget: f64,
) -> Result<Vec<Complex>> {
    let half = a.half();
    check_order(m, half)?;
    check_budget(hafnian_budget(half, m), budget)?;
    let sums = hafnian_pair_sums(a, m);
    let mut scale = 1.0;
    Ok(sums
        .iter()
        .enumerate()
        .map(|(k, &s)| {
            if k > 0 {
                scale *= (2 * half - 2 * k + 1) as f64;
            }
            s / scale
        })
        .collect())
}

/// `g(0), ..., g^(m)(0)` for `g(z) = haf(J + z(A - J))`, using
/// `g^(k)(0) = k! (2n-2k)! / (2^(n-k) (n-k)!) sum (a_{i1 j1} - 1) ... (a_{ik jk} - 1)`
/// over collections of `k` pairwise disjoint unordered pairs.
pub fn g_derivatives_hafnian(a: &SymmetricComplexMatrix, m: usize) -> Result<Vec<Complex>> {
    g_derivatives_hafnian_with_budget(a, m, DEFAULT_TUPLE_BUDGET)
}

pub fn g_derivatives_hafnian_with_budget(
    a: &SymmetricComplexMatrix,
    m: usize,
    budget: f64,
) -> Result<Vec<Complex>> {
    let half = a.half();
    check_order(m, half)?;
    check_budget(hafnian_budget(half, m), budget)?;
    let sums = hafnian_pair_sums(a, m);
    Ok(sums
        .iter()
        .enumerate()
        .map(|(k, &s)| s * (factorial(k) * double_factorial_odd(half - k)))
        .collect())
}

/// All coefficients of `haf(J + z(A - J))` over the perfect matchings.
pub fn g_full_expansion_hafnian(a: &SymmetricComplexMatrix) -> Result<UnivariatePolynomial> {
    let two_n = a.two_n();
    if two_n > FULL_EXPANSION_MAX_TWO_N {
        return Err(Error::SizeLimitExceeded {
            what: "full expansion size 2n",
            actual: two_n as f64,
            limit: FULL_EXPANSION_MAX_TWO_N as f64,
        });
    }
    fn visit(a: &SymmetricComplexMatrix, mask: u64, acc: &mut Expansion) {
        if mask == 0 {
            acc.finish();
            return;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut others = rest;
        while others != 0 {
            let j = others.trailing_zeros() as usize;
            others &= others - 1;
            acc.push(a.get(i, j) - ONE);
            visit(a, rest & !(1 << j), acc);
            acc.pop();
        }
    }
    let mut acc = Expansion::new(a.half());
    visit(a, (1u64 << two_n) - 1, &mut acc);
    Ok(acc.polynomial())
}

// ---------------------------------------------------------------------------
// Multidimensional permanent

/// Sums over `k`-collections of entries whose `d` coordinates are pairwise
/// distinct within each axis; first coordinates increase.
fn tensor_tuple_sums(a: &ComplexTensor, m: usize) -> Vec<Complex> {
    struct Walk<'a> {
        b: &'a [Complex],
        d: usize,
        n: usize,
        m: usize,
        strides: Vec<usize>,
        used: Vec<u64>,
        sums: Vec<ComplexSum>,
    }
    impl Walk<'_> {
        fn visit(&mut self, depth: usize, next_first: usize, prod: Complex) {
            self.sums[depth].add(prod);
            if depth == self.m {
                return;
            }
            for i in next_first..self.n {
                self.coord(depth, i, 1, i * self.strides[0], prod);
            }
        }

        fn coord(&mut self, depth: usize, first: usize, p: usize, offset: usize, prod: Complex) {
            if p == self.d {
                let x = self.b[offset];
                if x != ZERO {
                    self.visit(depth + 1, first + 1, prod * x);
                }
                return;
            }
            for j in 0..self.n {
                if self.used[p] & (1 << j) == 0 {
                    self.used[p] |= 1 << j;
                    self.coord(depth, first, p + 1, offset + j * self.strides[p], prod);
                    self.used[p] &= !(1 << j);
                }
            }
        }
    }
    let (d, n) = (a.d(), a.n());
    let b = deviations(a.entries());
    let mut walk = Walk {
        b: &b,
        d,
        n,
        m,
        strides: (0..d).map(|p| n.pow((d - 1 - p) as u32)).collect(),
        used: vec![0; d],
        sums: vec![ComplexSum::new(); m + 1],
    };
    walk.visit(0, 0, ONE);
    walk.sums.iter().map(ComplexSum::value).collect()
}

/// Coefficients `q_k = g^(k)(0) / (k! g(0))` of `PER(J + z(A-J)) / (n!)^(d-1)`.
pub fn normalized_coeffs_tensor(a: &ComplexTensor, m: usize, budget: f64) -> Result<Vec<Complex>> {
    let (d, n) = (a.d(), a.n());
    check_order(m, n)?;
    check_budget(falling(n, m).powi(d as i32), budget)?;
    let sums = tensor_tuple_sums(a, m);
    Ok(sums
        .iter()
        .enumerate()
        .map(|(k, &s)| s / falling(n, k).powi(d as i32 - 1))
        .collect())
}

/// `g(0), ..., g^(m)(0)` for `g(z) = PER(J + z(A - J))`, using
/// `g^(k)(0) = ((n-k)!)^(d-1) sum prod_t (a_{i_t1 .. i_td} - 1)` over
/// collections of `d` ordered `k`-tuples of distinct indices.
pub fn g_derivatives_tensor(a: &ComplexTensor, m: usize) -> Result<Vec<Complex>> {
    g_derivatives_tensor_with_budget(a, m, DEFAULT_TUPLE_BUDGET)
}

pub fn g_derivatives_tensor_with_budget(
    a: &ComplexTensor,
    m: usize,
    budget: f64,
) -> Result<Vec<Complex>> {
    let (d, n) = (a.d(), a.n());
    check_order(m, n)?;
    check_budget(falling(n, m).powi(d as i32), budget)?;
    let sums = tensor_tuple_sums(a, m);
    Ok(sums
        .iter()
        .enumerate()
        .map(|(k, &s)| s * (factorial(n - k).powi(d as i32 - 1) * factorial(k)))
        .collect())
}

/// All coefficients of `PER(J + z(A - J))` over all permutation tuples.
pub fn g_full_expansion_tensor(a: &ComplexTensor) -> Result<UnivariatePolynomial> {
    let (d, n) = (a.d(), a.n());
    let limit = OracleLimits::default().tensor_terms;
    let terms = tensor_term_count(d, n);
    if terms > limit {
        return Err(Error::SizeLimitExceeded {
            what: "full expansion permutation tuples",
            actual: terms,
            limit,
        });
    }
    struct Walk<'a> {
        b: &'a [Complex],
        d: usize,
        n: usize,
        strides: Vec<usize>,
        used: Vec<u64>,
        acc: Expansion,
    }
    impl Walk<'_> {
        fn row(&mut self, i: usize) {
            if i == self.n {
                self.acc.finish();
                return;
            }
            self.coord(i, 1, i * self.strides[0]);
        }
        fn coord(&mut self, i: usize, p: usize, offset: usize) {
            if p == self.d {
                self.acc.push(self.b[offset]);
                self.row(i + 1);
                self.acc.pop();
                return;
            }
            for j in 0..self.n {
                if self.used[p] & (1 << j) == 0 {
                    self.used[p] |= 1 << j;
                    self.coord(i, p + 1, offset + j * self.strides[p]);
                    self.used[p] &= !(1 << j);
                }
            }
        }
    }
    let b = deviations(a.entries());
    let mut walk = Walk {
        b: &b,
        d,
        n,
        strides: (0..d).map(|p| n.pow((d - 1 - p) as u32)).collect(),
        used: vec![0; d],
        acc: Expansion::new(n),
    };
    walk.row(0);
    Ok(walk.acc.polynomial())
}

// ---------------------------------------------------------------------------
// Logarithmic derivatives

/// Solves `g^(k)(0) = sum_{j=0}^{k-1} C(k-1, j) g^(j)(0) f^(k-j)(0)` for
/// `f = ln g`, returning `f'(0), ..., f^(m)(0)` where `m = g_derivs.len() - 1`.
pub fn log_derivatives(g_derivs: &[Complex]) -> Result<Vec<Complex>> {
    let g0 = *g_derivs
        .first()
        .ok_or_else(|| Error::InvalidArgument("log_derivatives needs at least g(0)".into()))?;
    if g0 == ZERO {
        return Err(Error::ZeroBaseValue);
    }
    let m = g_derivs.len() - 1;
    let inv = g0.inv();
    let mut f = vec![ZERO; m + 1];
    // binom[j] = C(k-1, j), updated row by row.
    let mut binom = vec![1.0f64; m + 1];
    for k in 1..=m {
        if k >= 2 {
            for j in (1..k - 1).rev() {
                binom[j] += binom[j - 1];
            }
            binom[k - 1] = 1.0;
        }
        let mut acc = ComplexSum::new();
        acc.add(g_derivs[k]);
        for j in 1..k {
            acc.add(-(g_derivs[j] * f[k - j]) * binom[j]);
        }
        f[k] = acc.value() * inv;
    }
    f.remove(0);
    Ok(f)
}

/// Inverse of [`log_derivatives`]: rebuilds `g^(1..=m)(0)` from `g(0)` and `f^(1..=m)(0)`.
pub fn g_derivatives_from_log(g0: Complex, f_derivs: &[Complex]) -> Vec<Complex> {
    let m = f_derivs.len();
    let f = |k: usize| f_derivs[k - 1];
    let mut g = vec![g0];
    let mut binom = vec![1.0f64; m + 1];
    for k in 1..=m {
        if k >= 2 {
            for j in (1..k - 1).rev() {
                binom[j] += binom[j - 1];
            }
            binom[k - 1] = 1.0;
        }
        let mut acc = ComplexSum::new();
        for j in 0..k {
            acc.add(g[j] * f(k - j) * binom[j]);
        }
        g.push(acc.value());
    }
    g.remove(0);
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn close(x: Complex, y: Complex, rel: f64) -> bool {
        (x - y).norm() <= rel * (1.0 + x.norm().max(y.norm()))
    }

    #[test]
    fn all_ones_has_flat_derivatives() {
        let g = g_derivatives_permanent(&ComplexMatrix::ones(4), 4).unwrap();
        assert_eq!(g, vec![c(24.0, 0.0), ZERO, ZERO, ZERO, ZERO]);
        let g = g_derivatives_hafnian(&SymmetricComplexMatrix::ones(6), 3).unwrap();
        assert_eq!(g, vec![c(15.0, 0.0), ZERO, ZERO, ZERO]);
        let g = g_derivatives_tensor(&ComplexTensor::ones(3, 3), 3).unwrap();
        assert_eq!(g, vec![c(36.0, 0.0), ZERO, ZERO, ZERO]);
    }

    #[test]
    fn single_perturbed_entry() {
        let w = c(0.5, -0.25);
        let a = ComplexMatrix::new(2, vec![ONE + w, ONE, ONE, ONE]).unwrap();
        assert_eq!(
            g_derivatives_permanent(&a, 2).unwrap(),
            vec![c(2.0, 0.0), w, ZERO]
        );

        let mut e = vec![ONE; 16];
        e[1] = ONE + w;
        e[4] = ONE + w;
        let s = SymmetricComplexMatrix::new(4, e).unwrap();
        let g = g_derivatives_hafnian(&s, 2).unwrap();
        assert_eq!(g, vec![c(3.0, 0.0), w, ZERO]);
    }

    #[test]
    fn order_above_n_rejected() {
        assert!(g_derivatives_permanent(&ComplexMatrix::ones(3), 4).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let err =
            g_derivatives_permanent_with_budget(&ComplexMatrix::ones(6), 4, 100.0).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn tensor_kernel_with_d2_matches_permanent_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in 1..=5 {
            let e: Vec<Complex> = (0..n * n).map(|_| c(rng.gen(), rng.gen())).collect();
            let a = ComplexMatrix::new(n, e).unwrap();
            let m = n.min(3);
            let p = g_derivatives_permanent(&a, m).unwrap();
            let t = g_derivatives_tensor(&a.to_tensor(), m).unwrap();
            for (x, y) in p.iter().zip(&t) {
                assert!(close(*x, *y, 1e-12));
            }
        }
    }

    #[test]
    fn full_expansion_endpoints() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let e: Vec<Complex> = (0..25).map(|_| c(rng.gen(), rng.gen())).collect();
        let a = ComplexMatrix::new(5, e).unwrap();
        let g = g_full_expansion_permanent(&a).unwrap();
        assert!(close(
            g.eval(ONE),
            crate::exact::permanent_exact(&a).unwrap(),
            1e-12
        ));
        assert!(close(g.eval(ZERO), c(120.0, 0.0), 1e-14));
        assert_eq!(
            g_full_expansion_permanent(&ComplexMatrix::ones(4))
                .unwrap()
                .coeffs(),
            &[c(24.0, 0.0)]
        );
    }

    #[test]
    fn log_derivative_examples() {
        let (a, b, cc) = (c(0.3, 0.1), c(-1.2, 0.5), c(2.0, -0.7));
        let f = log_derivatives(&[ONE, a]).unwrap();
        assert_eq!(f, vec![a]);
        let f = log_derivatives(&[ONE, a, b]).unwrap();
        assert!(close(f[1], b - a * a, 1e-15));
        let f = log_derivatives(&[ONE, a, b, cc]).unwrap();
        assert!(close(f[2], cc - 3.0 * a * b + 2.0 * a * a * a, 1e-15));
        assert!(matches!(
            log_derivatives(&[ZERO, a]),
            Err(Error::ZeroBaseValue)
        ));
    }

    #[test]
    fn log_derivatives_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut g: Vec<Complex> = (0..12)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen()))
            .collect();
        g[0] = c(1.5, 0.2);
        let f = log_derivatives(&g).unwrap();
        let back = g_derivatives_from_log(g[0], &f);
        for (x, y) in back.iter().zip(&g[1..]) {
            assert!(close(*x, *y, 1e-10));
        }
    }
}
