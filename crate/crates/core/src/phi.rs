//! The polynomial `phi(z) = (1/sigma) sum_{m=1}^N (alpha z)^m / m`, which
//! maps the disc `|z| <= beta` into the strip
//! `-rho <= Re w <= 1 + 2 rho`, `|Im w| <= 2 rho`, with `phi(0) = 0` and
//! `phi(1) = 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::UnivariatePolynomial;
use crate::sum::NeumaierSum;
use crate::types::Complex;

/// Largest degree for which coefficients are materialised.
pub const MAX_PHI_DEGREE: usize = 1 << 28;

/// Constants of `phi` for one `rho`. The degree is kept as a float because
/// it overflows every integer type once `rho` drops below about `0.02`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhiConstants {
    pub rho: f64,
    pub alpha: f64,
    pub beta: f64,
    /// `beta - 1`, computed without cancellation.
    pub beta_excess: f64,
    pub degree: f64,
    pub sigma: f64,
}

impl PhiConstants {
    pub fn new(rho: f64) -> Result<Self> {
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::RhoOutOfRange(rho));
        }
        let inv = 1.0 / rho;
        // 1 - e^(-1/rho)
        let alpha = -(-inv).exp_m1();
        // (e^(-1/rho) - e^(-1-1/rho)) / (1 - e^(-1/rho))
        let beta_excess = (-inv).exp() * (-(-1.0f64).exp_m1()) / alpha;
        let beta = (-(-1.0 - inv).exp_m1()) / alpha;
        let degree = ((1.0 + inv) * (1.0 + inv).exp()).floor();
        let sigma = if degree <= MAX_PHI_DEGREE as f64 {
            let mut s = NeumaierSum::new();
            let mut power = 1.0;
            for m in 1..=degree as usize {
                power *= alpha;
                s.add(power / m as f64);
            }
            s.value()
        } else {
            // sum_{m>N} alpha^m / m <= alpha^(N+1) / ((N+1)(1-alpha)), below 1e-60 here.
            inv
        };
        Ok(Self {
            rho,
            alpha,
            beta,
            beta_excess,
            degree,
            sigma,
        })
    }

    /// Degree as an integer, if it fits the materialisation limit.
    pub fn degree_usize(&self) -> Option<usize> {
        (self.degree <= MAX_PHI_DEGREE as f64).then_some(self.degree as usize)
    }

    /// Real coefficients `c_0 = 0, c_1, ..., c_{len-1}` of `phi`, zero past the degree.
    pub fn coefficients(&self, len: usize) -> Vec<f64> {
        let top = if self.degree >= len as f64 {
            len.saturating_sub(1)
        } else {
            self.degree as usize
        };
        let mut c = vec![0.0; len];
        let mut power = 1.0 / self.sigma;
        for (m, slot) in c.iter_mut().enumerate().take(top + 1).skip(1) {
            power *= self.alpha;
            *slot = power / m as f64;
        }
        c
    }
}

/// `phi` with its constants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiPolynomial {
    pub constants: PhiConstants,
    pub degree: usize,
    pub coeffs: Vec<f64>,
}

impl PhiPolynomial {
    pub fn poly(&self) -> UnivariatePolynomial {
        UnivariatePolynomial::new(self.coeffs.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
    }
}

pub fn build_phi(rho: f64) -> Result<PhiPolynomial> {
    let constants = PhiConstants::new(rho)?;
    let degree = constants.degree_usize().ok_or(Error::SizeLimitExceeded {
        what: "phi degree",
        actual: constants.degree,
        limit: MAX_PHI_DEGREE as f64,
    })?;
    let coeffs = constants.coefficients(degree + 1);
    Ok(PhiPolynomial {
        constants,
        degree,
        coeffs,
    })
}
