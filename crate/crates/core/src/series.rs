//! Truncated power-series arithmetic: products, reciprocals and logarithms.
//!
//! Slices hold coefficients in ascending order. Products switch from the
//! schoolbook method to FFT convolution once both operands are long, and very
//! long products are cut into blocks so no single transform exceeds
//! [`MAX_FFT_LEN`] points. Reciprocals use Newton iteration, so the logarithm
//! of a length-`m` series costs `O(m log m)`.

use std::cell::RefCell;
use std::ops::{Add, Mul, Neg, Sub};

use realfft::RealFftPlanner;
use rustfft::FftPlanner;

use crate::types::Complex;

/// Largest transform length used by a single convolution.
pub const MAX_FFT_LEN: usize = 1 << 24;

/// Operands shorter than this are multiplied directly.
const SCHOOLBOOK_CUTOFF: usize = 48;

/// Logarithms of series up to this length use the quadratic recurrence.
const LOG_RECURRENCE_CUTOFF: usize = 256;

/// Scalar field for series arithmetic.
pub trait SeriesScalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + std::fmt::Debug
    + PartialEq
    + Send
    + Sync
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    fn recip(self) -> Self;
    fn scale(self, s: f64) -> Self;
    /// Spectrum of `x` zero-padded to `fft_len` points.
    fn forward(x: &[Self], fft_len: usize) -> Vec<Complex>;
    /// First `len` points of the normalised inverse transform of `spec`.
    fn backward(spec: Vec<Complex>, fft_len: usize, len: usize) -> Vec<Self>;
}

thread_local! {
    static REAL_PLANNER: RefCell<RealFftPlanner<f64>> = RefCell::new(RealFftPlanner::new());
    static COMPLEX_PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

impl SeriesScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn recip(self) -> Self {
        1.0 / self
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }

    fn forward(x: &[f64], fft_len: usize) -> Vec<Complex> {
        let plan = REAL_PLANNER.with(|p| p.borrow_mut().plan_fft_forward(fft_len));
        let mut buf = vec![0.0; fft_len];
        buf[..x.len()].copy_from_slice(x);
        let mut spec = plan.make_output_vec();
        plan.process(&mut buf, &mut spec)
            .expect("forward transform");
        spec
    }

    fn backward(mut spec: Vec<Complex>, fft_len: usize, len: usize) -> Vec<f64> {
        let plan = REAL_PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(fft_len));
        // DC and Nyquist bins of a real signal are real.
        spec[0].im = 0.0;
        if let Some(last) = spec.last_mut() {
            last.im = 0.0;
        }
        let mut out = plan.make_output_vec();
        plan.process(&mut spec, &mut out)
            .expect("inverse transform");
        drop(spec);
        let norm = 1.0 / fft_len as f64;
        out.truncate(len);
        out.iter_mut().for_each(|x| *x *= norm);
        out
    }
}

impl SeriesScalar for Complex {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Complex::new(x, 0.0)
    }
    fn recip(self) -> Self {
        self.inv()
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }

    fn forward(x: &[Complex], fft_len: usize) -> Vec<Complex> {
        let plan = COMPLEX_PLANNER.with(|p| p.borrow_mut().plan_fft_forward(fft_len));
        let mut buf = vec![Complex::new(0.0, 0.0); fft_len];
        buf[..x.len()].copy_from_slice(x);
        plan.process(&mut buf);
        buf
    }

    fn backward(mut spec: Vec<Complex>, fft_len: usize, len: usize) -> Vec<Complex> {
        let plan = COMPLEX_PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(fft_len));
        plan.process(&mut spec);
        let norm = 1.0 / fft_len as f64;
        spec.truncate(len);
        spec.iter_mut().for_each(|x| *x *= norm);
        spec
    }
}

/// Linear convolution restricted to `len` terms, with
/// `a.len() + b.len() - 1 <= fft_len`.
fn fft_convolve<T: SeriesScalar>(a: &[T], b: &[T], len: usize, fft_len: usize) -> Vec<T> {
    let mut spec = T::forward(a, fft_len);
    let other = T::forward(b, fft_len);
    for (x, y) in spec.iter_mut().zip(&other) {
        *x *= y;
    }
    drop(other);
    T::backward(spec, fft_len, len)
}

/// Truncated product of long operands. Both are cut into chunks of
/// `fft_len / 2` points whose spectra are computed once; the spectra
/// for each output block are summed before a single inverse transform.
fn blocked_convolve<T: SeriesScalar>(a: &[T], b: &[T], len: usize, fft_len: usize) -> Vec<T> {
    let chunk = fft_len / 2;
    let blocks = len.div_ceil(chunk);
    let spectra = |x: &[T]| -> Vec<Vec<Complex>> {
        x.chunks(chunk)
            .take(blocks)
            .map(|c| T::forward(c, fft_len))
            .collect()
    };
    let spec_a = spectra(a);
    let spec_b = spectra(b);
    let mut out = vec![T::zero(); len];
    for s in 0..blocks {
        let mut acc: Option<Vec<Complex>> = None;
        for i in 0..=s.min(spec_a.len().saturating_sub(1)) {
            let Some(sb) = spec_b.get(s - i) else {
                continue;
            };
            let sa = &spec_a[i];
            match acc.as_mut() {
                None => acc = Some(sa.iter().zip(sb).map(|(x, y)| x * y).collect()),
                Some(acc) => acc
                    .iter_mut()
                    .zip(sa.iter().zip(sb))
                    .for_each(|(o, (x, y))| *o += x * y),
            }
        }
        let Some(acc) = acc else { continue };
        let offset = s * chunk;
        let keep = (len - offset).min(fft_len);
        for (o, v) in out[offset..]
            .iter_mut()
            .zip(T::backward(acc, fft_len, keep))
        {
            *o = *o + v;
        }
    }
    out
}

fn schoolbook<T: SeriesScalar>(a: &[T], b: &[T], len: usize) -> Vec<T> {
    let mut out = vec![T::zero(); len];
    for (i, &x) in a.iter().enumerate().take(len) {
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

/// First `len` coefficients of `a * b`.
pub fn mul_trunc<T: SeriesScalar>(a: &[T], b: &[T], len: usize) -> Vec<T> {
    let a = &a[..a.len().min(len)];
    let b = &b[..b.len().min(len)];
    if a.is_empty() || b.is_empty() || len == 0 {
        return vec![T::zero(); len];
    }
    if a.len().min(b.len()) <= SCHOOLBOOK_CUTOFF {
        return schoolbook(a, b, len);
    }
    let full = a.len() + b.len() - 1;
    // A cyclic transform shorter than the full product would wrap high terms
    // onto the ones we keep, so the transform always covers `full`.
    let fft_len = full.next_power_of_two();
    if fft_len <= MAX_FFT_LEN {
        let mut out = fft_convolve(a, b, len.min(full), fft_len);
        out.resize(len, T::zero());
        return out;
    }
    let keep = len.min(full);
    let mut out = blocked_convolve(a, b, keep, MAX_FFT_LEN);
    out.resize(len, T::zero());
    out
}

/// First `len` coefficients of `1 / a`. Requires `a[0] != 0`.
pub fn inverse<T: SeriesScalar>(a: &[T], len: usize) -> Vec<T> {
    assert!(
        !a.is_empty() && a[0] != T::zero(),
        "series inverse needs a nonzero constant term"
    );
    if len == 0 {
        return Vec::new();
    }
    let mut h = vec![a[0].recip()];
    let mut cur = 1;
    while cur < len {
        let next = (2 * cur).min(len);
        // e = a * h = 1 + z^cur * r (mod z^next)
        let e = mul_trunc(&a[..a.len().min(next)], &h, next);
        let r: Vec<T> = e[cur..next].to_vec();
        let corr = mul_trunc(&r, &h, next - cur);
        h.extend(corr.into_iter().map(|x| -x));
        cur = next;
    }
    h
}

/// Coefficients `b_0..b_{len-1}` of `ln(a(z)) - ln(a(0))` (so `b_0 = 0`).
/// Requires `a[0] != 0`.
pub fn log<T: SeriesScalar>(a: &[T], len: usize) -> Vec<T> {
    assert!(
        !a.is_empty() && a[0] != T::zero(),
        "series logarithm needs a nonzero constant term"
    );
    if len <= 1 {
        return vec![T::zero(); len];
    }
    if a[1..a.len().min(len)].iter().all(|&x| x == T::zero()) {
        return vec![T::zero(); len];
    }
    if len <= LOG_RECURRENCE_CUTOFF {
        return log_recurrence(a, len);
    }
    // b' = a' / a
    let a = &a[..a.len().min(len)];
    let deriv: Vec<T> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &x)| x.scale(k as f64))
        .collect();
    let inv = inverse(a, len - 1);
    let q = mul_trunc(&deriv, &inv, len - 1);
    let mut b = Vec::with_capacity(len);
    b.push(T::zero());
    b.extend(
        q.into_iter()
            .enumerate()
            .map(|(k, x)| x.scale(1.0 / (k + 1) as f64)),
    );
    b
}

/// Quadratic recurrence `k a_0 b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}`.
pub fn log_recurrence<T: SeriesScalar>(a: &[T], len: usize) -> Vec<T> {
    let coef = |k: usize| if k < a.len() { a[k] } else { T::zero() };
    let inv0 = a[0].recip();
    let mut b = vec![T::zero(); len];
    for k in 1..len {
        let mut acc = coef(k).scale(k as f64);
        for j in 1..k {
            acc = acc - b[j].scale(j as f64) * coef(k - j);
        }
        b[k] = (acc * inv0).scale(1.0 / k as f64);
    }
    b
}
