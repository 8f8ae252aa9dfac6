//! Seeded generators of random instances inside the zero-free regions.

use std::f64::consts::PI;

use rand::Rng;

use crate::error::Result;
use crate::regions::matching_weight_bound;
use crate::types::{
    Complex, ComplexMatrix, ComplexTensor, SymmetricComplexMatrix, WeightedHypergraph,
};

/// Uniform point of the closed disc `|1 - z| <= radius`.
pub fn disc_point<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Complex {
    let r = radius * rng.gen::<f64>().sqrt();
    let t = rng.gen_range(0.0..2.0 * PI);
    Complex::new(1.0 + r * t.cos(), r * t.sin())
}

/// Uniform point of the rectangle `|1 - Re z| <= eta`, `|Im z| <= tau`.
pub fn strip_point<R: Rng + ?Sized>(rng: &mut R, eta: f64, tau: f64) -> Complex {
    let re = 1.0 + eta * rng.gen_range(-1.0..=1.0);
    let im = tau * rng.gen_range(-1.0..=1.0);
    Complex::new(re, im)
}

pub fn real_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: f64, hi: f64) -> ComplexMatrix {
    let e: Vec<f64> = (0..n * n).map(|_| rng.gen_range(lo..=hi)).collect();
    ComplexMatrix::from_real(n, &e).expect("valid shape")
}

pub fn real_symmetric<R: Rng + ?Sized>(
    rng: &mut R,
    two_n: usize,
    lo: f64,
    hi: f64,
) -> SymmetricComplexMatrix {
    let upper: Vec<Complex> = (0..two_n * (two_n - 1) / 2)
        .map(|_| Complex::new(rng.gen_range(lo..=hi), 0.0))
        .collect();
    SymmetricComplexMatrix::from_upper(two_n, &upper, Complex::new(1.0, 0.0)).expect("valid shape")
}

pub fn real_tensor<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    n: usize,
    lo: f64,
    hi: f64,
) -> ComplexTensor {
    let e: Vec<f64> = (0..n.pow(d as u32))
        .map(|_| rng.gen_range(lo..=hi))
        .collect();
    ComplexTensor::from_real(d, n, &e).expect("valid shape")
}

/// Complex tensor whose entries are drawn by `draw`.
pub fn tensor_with<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    n: usize,
    mut draw: impl FnMut(&mut R) -> Complex,
) -> ComplexTensor {
    let e: Vec<Complex> = (0..n.pow(d as u32)).map(|_| draw(rng)).collect();
    ComplexTensor::new(d, n, e).expect("valid shape")
}

pub fn matrix_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    mut draw: impl FnMut(&mut R) -> Complex,
) -> ComplexMatrix {
    let e: Vec<Complex> = (0..n * n).map(|_| draw(rng)).collect();
    ComplexMatrix::new(n, e).expect("valid shape")
}

pub fn symmetric_with<R: Rng + ?Sized>(
    rng: &mut R,
    two_n: usize,
    mut draw: impl FnMut(&mut R) -> Complex,
) -> SymmetricComplexMatrix {
    let upper: Vec<Complex> = (0..two_n * (two_n - 1) / 2).map(|_| draw(rng)).collect();
    SymmetricComplexMatrix::from_upper(two_n, &upper, Complex::new(1.0, 0.0)).expect("valid shape")
}

/// Tensor with every slice sum of `|1 - z|` at most `eta n^(d-1)`: random
/// deviations rescaled so the largest slice sum hits a random fraction of
/// the bound.
pub fn l1_tensor<R: Rng + ?Sized>(rng: &mut R, d: usize, n: usize, eta: f64) -> ComplexTensor {
    let len = n.pow(d as u32);
    let devs: Vec<Complex> = (0..len)
        .map(|_| {
            // Sparse heavy deviations probe the slice constraint better than uniform ones.
            let mag = if rng.gen_bool(0.3) {
                rng.gen::<f64>()
            } else {
                0.1 * rng.gen::<f64>()
            };
            Complex::from_polar(mag, rng.gen_range(0.0..2.0 * PI))
        })
        .collect();
    let mut sums = vec![vec![0.0; n]; d];
    for (offset, z) in devs.iter().enumerate() {
        let mut r = offset;
        for p in (0..d).rev() {
            sums[p][r % n] += z.norm();
            r /= n;
        }
    }
    let worst = sums.iter().flatten().fold(0.0f64, |a, &b| a.max(b));
    let target = eta * (n as f64).powi(d as i32 - 1) * rng.gen_range(0.5..=1.0);
    let scale = if worst > 0.0 { target / worst } else { 0.0 };
    let e = devs
        .into_iter()
        .map(|z| Complex::new(1.0, 0.0) - z * scale)
        .collect();
    ComplexTensor::new(d, n, e).expect("valid shape")
}

pub fn l1_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, eta: f64) -> ComplexMatrix {
    l1_tensor(rng, 2, n, eta).to_matrix().expect("d = 2")
}

/// Random `d`-hypergraph on `vertex_count` vertices with complex weights
/// scaled so every vertex's total `|w|` equals `fraction` times the bound
/// `(d-1)^(d-1) / d^d` at the heaviest vertex.
pub fn bounded_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    vertex_count: usize,
    edge_probability: f64,
    fraction: f64,
) -> Result<WeightedHypergraph> {
    let mut edges = Vec::new();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        if rng.gen_bool(edge_probability) {
            let w = Complex::from_polar(rng.gen_range(0.1..1.0), rng.gen_range(0.0..2.0 * PI));
            edges.push((subset.clone(), w));
        }
        // Next d-subset in lexicographic order.
        let mut i = d;
        while i > 0 && subset[i - 1] == vertex_count - d + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        subset[i - 1] += 1;
        for j in i..d {
            subset[j] = subset[j - 1] + 1;
        }
    }
    let h = WeightedHypergraph::new(d, vertex_count, edges)?;
    let heaviest = h.max_vertex_weight();
    if heaviest == 0.0 {
        return Ok(h);
    }
    Ok(h.scaled(Complex::new(
        fraction * matching_weight_bound(d) / heaviest,
        0.0,
    )))
}
