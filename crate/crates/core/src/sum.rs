//! Neumaier compensated summation.

use crate::types::Complex;

/// Running Neumaier sum of `f64` values.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Componentwise Neumaier sum of complex values.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex {
        Complex::new(self.re.value(), self.im.value())
    }
}

pub fn sum_f64<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut s = NeumaierSum::new();
    values.into_iter().for_each(|v| s.add(v));
    s.value()
}

pub fn sum_complex<I: IntoIterator<Item = Complex>>(values: I) -> Complex {
    let mut s = ComplexSum::new();
    values.into_iter().for_each(|v| s.add(v));
    s.value()
}

/// `ln(n!)` as a sum of logarithms; no overflow for large `n`.
pub fn ln_factorial(n: usize) -> f64 {
    sum_f64((2..=n).map(|k| (k as f64).ln()))
}
