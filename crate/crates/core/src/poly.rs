//! Univariate complex polynomials.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::series;
use crate::types::{Complex, ZERO};

/// Polynomial with complex coefficients, `coeffs[k]` multiplying `z^k`.
///
/// Trailing coefficients that are exactly zero are removed on construction;
/// the zero polynomial is stored as a single zero coefficient.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnivariatePolynomial {
    coeffs: Vec<Complex>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().expect("nonempty") == ZERO {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![ZERO] }
    }

    pub fn constant(c: Complex) -> Self {
        Self::new(vec![c])
    }

    /// `lead * prod (z - r)`.
    pub fn from_roots(lead: Complex, roots: &[Complex]) -> Self {
        let mut c = vec![lead];
        for &r in roots {
            let mut next = vec![ZERO; c.len() + 1];
            for (k, &x) in c.iter().enumerate() {
                next[k + 1] += x;
                next[k] -= x * r;
            }
            c = next;
        }
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex> {
        self.coeffs
    }

    /// Coefficient of `z^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Values at `z_j = radius * exp(2 pi i j / points)`, `j = 0..points`.
    ///
    /// Coefficients are folded modulo `points` before a single FFT, so the
    /// cost is `O(degree + points log points)` and the result is exact up to
    /// rounding regardless of how the degree compares with `points`.
    pub fn eval_on_circle(&self, radius: f64, points: usize) -> Vec<Complex> {
        assert!(points > 0);
        let mut bins = vec![ZERO; points];
        let mut scale = 1.0;
        for (k, &c) in self.coeffs.iter().enumerate() {
            bins[k % points] += c * scale;
            scale *= radius;
        }
        // sum_k b_k w^{jk} with w = exp(+2 pi i / points) is an inverse DFT without normalization.
        let mut planner = rustfft::FftPlanner::<f64>::new();
        planner.plan_fft_inverse(points).process(&mut bins);
        bins
    }

    /// Drops every monomial of degree above `m`.
    pub fn truncate(&self, m: usize) -> Self {
        Self::new(self.coeffs.iter().take(m + 1).copied().collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        Self::new(series::mul_trunc(&self.coeffs, &other.coeffs, len))
    }

    /// `(self * other)` with monomials above degree `m` discarded.
    pub fn mul_truncated(&self, other: &Self, m: usize) -> Self {
        Self::new(series::mul_trunc(&self.coeffs, &other.coeffs, m + 1))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Full symbolic composition `self(inner(z))`; used as a reference for the truncated form.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, &c| {
            acc.mul(inner).add(&Self::constant(c))
        })
    }
}

/// `p` with all monomials of degree above `m` removed.
pub fn poly_truncate(p: &UnivariatePolynomial, m: usize) -> UnivariatePolynomial {
    p.truncate(m)
}

/// `outer(inner(z))` truncated at degree `m`, evaluated Horner-style with a
/// truncation after every multiplication so nothing exceeds degree `m`.
/// Requires `inner(0) = 0`.
pub fn poly_compose_truncated(
    outer: &UnivariatePolynomial,
    inner: &UnivariatePolynomial,
    m: usize,
) -> Result<UnivariatePolynomial> {
    if inner.coeff(0) != ZERO {
        return Err(Error::NonzeroInnerConstant);
    }
    Ok(UnivariatePolynomial::new(compose_truncated_coeffs(
        outer.coeffs(),
        inner.coeffs(),
        m + 1,
    )))
}

/// First `len` coefficients of `outer(inner(z))` for a series `inner` with zero constant term.
/// Coefficients of `outer` past `len - 1` cannot contribute and are skipped.
pub(crate) fn compose_truncated_coeffs<T: series::SeriesScalar>(
    outer: &[T],
    inner: &[T],
    len: usize,
) -> Vec<T> {
    debug_assert!(inner.is_empty() || inner[0] == T::zero());
    let inner = &inner[..inner.len().min(len)];
    let top = outer.len().min(len);
    let mut acc = vec![T::zero(); len];
    for &c in outer[..top].iter().rev() {
        if acc.iter().any(|&x| x != T::zero()) {
            acc = series::mul_trunc(&acc, inner, len);
        }
        if len > 0 {
            acc[0] = acc[0] + c;
        }
    }
    acc
}
