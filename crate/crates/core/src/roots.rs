//! Polynomial roots as eigenvalues of a balanced companion matrix.

use nalgebra::DMatrix;

use crate::poly::UnivariatePolynomial;
use crate::types::{Complex, ZERO};

/// All roots of `p`, with multiplicity. Zero roots from vanishing low-order
/// coefficients are returned exactly.
pub fn polynomial_roots(p: &UnivariatePolynomial) -> Vec<Complex> {
    let c = p.coeffs();
    let lead_zeros = c.iter().take_while(|&&x| x == ZERO).count();
    let mut roots = vec![ZERO; lead_zeros.min(p.degree())];
    let c = &c[lead_zeros.min(c.len() - 1)..];
    let deg = c.len() - 1;
    if deg == 0 {
        return roots;
    }
    let lead = c[deg];
    let mut m = DMatrix::<Complex>::zeros(deg, deg);
    for j in 0..deg {
        m[(0, j)] = -c[deg - 1 - j] / lead;
    }
    for i in 1..deg {
        m[(i, i - 1)] = Complex::new(1.0, 0.0);
    }
    balance(&mut m);
    let eig = m
        .schur()
        .eigenvalues()
        .expect("complex Schur form is triangular");
    roots.extend(eig.iter().copied());
    roots
}

/// Smallest root modulus, or infinity for a nonzero constant.
pub fn min_root_modulus(p: &UnivariatePolynomial) -> f64 {
    polynomial_roots(p)
        .iter()
        .map(|z| z.norm())
        .fold(f64::INFINITY, f64::min)
}

/// Parlett-Reinsch diagonal similarity scaling by powers of two.
fn balance(m: &mut DMatrix<Complex>) {
    let n = m.nrows();
    let radix = 2.0f64;
    let mut converged = false;
    while !converged {
        converged = true;
        for i in 0..n {
            let mut col = 0.0;
            let mut row = 0.0;
            for j in 0..n {
                if j != i {
                    col += m[(j, i)].l1_norm();
                    row += m[(i, j)].l1_norm();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let total = col + row;
            let mut f = 1.0;
            let mut g = row / radix;
            while col < g {
                f *= radix;
                col *= radix * radix;
            }
            g = row * radix;
            while col > g {
                f /= radix;
                col /= radix * radix;
            }
            if (col + row) / f < 0.95 * total {
                converged = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                    m[(j, i)] *= f;
                }
            }
        }
    }
}
