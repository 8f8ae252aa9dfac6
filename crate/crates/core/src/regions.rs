//! Zero-free region constants, membership tests, and the polynomial tools
//! used to reason about zero-free discs.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::UnivariatePolynomial;
use crate::types::{Complex, ComplexMatrix, ComplexTensor, Instance, SymmetricComplexMatrix};

/// Root of `x e^(1+x) = 1`, by bisection on `[0.2, 0.3]`.
pub fn alpha_constant() -> f64 {
    static ALPHA: OnceLock<f64> = OnceLock::new();
    *ALPHA.get_or_init(|| {
        let f = |x: f64| x * (1.0 + x).exp() - 1.0;
        let (mut lo, mut hi) = (0.2f64, 0.3f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if f(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if f(lo).abs() <= f(hi).abs() {
            lo
        } else {
            hi
        }
    })
}

/// Largest `eta` with a positive imaginary allowance: `tan(pi / (4(d-1)))`.
pub fn eta_d_strip(d: usize) -> f64 {
    (PI / (4.0 * (d as f64 - 1.0))).tan()
}

/// `(1 - eta) sin(pi / (4(d-1)) - arctan eta)`, the half-width of the
/// imaginary allowance in the strip regions.
pub fn tau_bound(eta: f64, d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "d = {d} must be at least 2"
        )));
    }
    let angle = PI / (4.0 * (d as f64 - 1.0));
    if !(eta >= 0.0) || eta.atan() >= angle || eta >= 1.0 {
        return Err(Error::EtaTooLarge {
            eta,
            limit: eta_d_strip(d),
        });
    }
    Ok((1.0 - eta) * (angle - eta.atan()).sin())
}

/// Maximiser of `sin(theta/2) cos((d-1) theta/2)` on `(0, 2 pi / (3(d-1)))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiscConstant {
    pub eta: f64,
    pub theta: f64,
}

/// Golden-section search for the disc constant of `d`-dimensional tensors.
pub fn eta_d_disc(d: usize) -> DiscConstant {
    let k = d as f64 - 1.0;
    let f = |t: f64| (t / 2.0).sin() * (k * t / 2.0).cos();
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (0.0, 2.0 * PI / (3.0 * k));
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > 1e-12 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    let theta = 0.5 * (a + b);
    DiscConstant {
        eta: f(theta),
        theta,
    }
}

/// `alpha^(d-1) (d-1)^(d-1) / d^d`.
pub fn eta_d_l1(d: usize) -> f64 {
    let k = d as f64 - 1.0;
    alpha_constant().powf(k) * k.powf(k) / (d as f64).powf(d as f64)
}

/// Per-vertex weight bound `(d-1)^(d-1) / d^d` under which a hypergraph
/// matching polynomial has no zeros.
pub fn matching_weight_bound(d: usize) -> f64 {
    let k = d as f64 - 1.0;
    k.powf(k) / (d as f64).powf(d as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RegionKind {
    DiscPer,
    DiscHaf,
    DiscTensor,
    StripPer,
    StripHaf,
    StripTensor,
    L1Per,
    L1Tensor,
}

impl RegionKind {
    pub const ALL: [RegionKind; 8] = [
        RegionKind::DiscPer,
        RegionKind::DiscHaf,
        RegionKind::DiscTensor,
        RegionKind::StripPer,
        RegionKind::StripHaf,
        RegionKind::StripTensor,
        RegionKind::L1Per,
        RegionKind::L1Tensor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionKind::DiscPer => "disc-per",
            RegionKind::DiscHaf => "disc-haf",
            RegionKind::DiscTensor => "disc-tensor",
            RegionKind::StripPer => "strip-per",
            RegionKind::StripHaf => "strip-haf",
            RegionKind::StripTensor => "strip-tensor",
            RegionKind::L1Per => "l1-per",
            RegionKind::L1Tensor => "l1-tensor",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn is_strip(self) -> bool {
        matches!(
            self,
            RegionKind::StripPer | RegionKind::StripHaf | RegionKind::StripTensor
        )
    }

    pub fn is_l1(self) -> bool {
        matches!(self, RegionKind::L1Per | RegionKind::L1Tensor)
    }

    pub fn is_tensor(self) -> bool {
        matches!(
            self,
            RegionKind::DiscTensor | RegionKind::StripTensor | RegionKind::L1Tensor
        )
    }

    pub fn is_hafnian(self) -> bool {
        matches!(self, RegionKind::DiscHaf | RegionKind::StripHaf)
    }

    /// Upper end of the admissible `eta` range.
    pub fn max_eta(self, d: usize) -> f64 {
        match self {
            RegionKind::DiscPer | RegionKind::DiscHaf => 0.5,
            RegionKind::DiscTensor => eta_d_disc(d).eta,
            RegionKind::StripPer | RegionKind::StripHaf => 1.0,
            RegionKind::StripTensor => eta_d_strip(d),
            RegionKind::L1Per => alpha_constant() / 4.0,
            RegionKind::L1Tensor => eta_d_l1(d),
        }
    }
}

/// Parameters selecting one zero-free region.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionSpec {
    pub kind: RegionKind,
    pub d: usize,
    pub eta: f64,
    /// Imaginary allowance; zero for non-strip kinds.
    pub tau: f64,
}

impl RegionSpec {
    /// Validates `0 <= eta <= max_eta` and, for strip kinds,
    /// `0 <= tau <= tau_bound(eta, d)` (any `eta` admits `tau = 0`).
    pub fn new(kind: RegionKind, d: usize, eta: f64, tau: f64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidArgument(format!(
                "d = {d} must be at least 2"
            )));
        }
        if !kind.is_tensor() && d != 2 {
            return Err(Error::InvalidArgument(format!(
                "{} requires d = 2",
                kind.name()
            )));
        }
        let limit = kind.max_eta(d);
        if !(eta >= 0.0) || eta > limit {
            return Err(Error::EtaTooLarge { eta, limit });
        }
        if kind.is_strip() {
            if !(tau >= 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "tau = {tau} must be non-negative"
                )));
            }
            if tau > 0.0 && tau > tau_bound(eta, d)? {
                return Err(Error::InvalidArgument(format!(
                    "tau = {tau} exceeds the bound {} for eta = {eta}",
                    tau_bound(eta, d)?
                )));
            }
        } else if tau != 0.0 {
            return Err(Error::InvalidArgument(
                "tau applies to strip regions only".into(),
            ));
        }
        Ok(Self { kind, d, eta, tau })
    }

    pub fn disc_per(eta: f64) -> Result<Self> {
        Self::new(RegionKind::DiscPer, 2, eta, 0.0)
    }

    pub fn disc_haf(eta: f64) -> Result<Self> {
        Self::new(RegionKind::DiscHaf, 2, eta, 0.0)
    }

    pub fn disc_tensor(d: usize, eta: f64) -> Result<Self> {
        Self::new(RegionKind::DiscTensor, d, eta, 0.0)
    }

    pub fn strip_per(eta: f64, tau: f64) -> Result<Self> {
        Self::new(RegionKind::StripPer, 2, eta, tau)
    }

    pub fn strip_haf(eta: f64, tau: f64) -> Result<Self> {
        Self::new(RegionKind::StripHaf, 2, eta, tau)
    }

    pub fn strip_tensor(d: usize, eta: f64, tau: f64) -> Result<Self> {
        Self::new(RegionKind::StripTensor, d, eta, tau)
    }

    pub fn l1_per(eta: f64) -> Result<Self> {
        Self::new(RegionKind::L1Per, 2, eta, 0.0)
    }

    pub fn l1_tensor(d: usize, eta: f64) -> Result<Self> {
        Self::new(RegionKind::L1Tensor, d, eta, 0.0)
    }
}

/// Borrowed view of any supported input.
#[derive(Debug, Clone, Copy)]
pub enum InstanceRef<'a> {
    Matrix(&'a ComplexMatrix),
    Symmetric(&'a SymmetricComplexMatrix),
    Tensor(&'a ComplexTensor),
}

impl<'a> From<&'a ComplexMatrix> for InstanceRef<'a> {
    fn from(a: &'a ComplexMatrix) -> Self {
        InstanceRef::Matrix(a)
    }
}

impl<'a> From<&'a SymmetricComplexMatrix> for InstanceRef<'a> {
    fn from(a: &'a SymmetricComplexMatrix) -> Self {
        InstanceRef::Symmetric(a)
    }
}

impl<'a> From<&'a ComplexTensor> for InstanceRef<'a> {
    fn from(a: &'a ComplexTensor) -> Self {
        InstanceRef::Tensor(a)
    }
}

impl<'a> From<&'a Instance> for InstanceRef<'a> {
    fn from(a: &'a Instance) -> Self {
        match a {
            Instance::Matrix(m) => InstanceRef::Matrix(m),
            Instance::Symmetric(s) => InstanceRef::Symmetric(s),
            Instance::Tensor(t) => InstanceRef::Tensor(t),
        }
    }
}

impl InstanceRef<'_> {
    pub fn kind_name(&self) -> &'static str {
        match self {
            InstanceRef::Matrix(_) => "matrix",
            InstanceRef::Symmetric(_) => "symmetric",
            InstanceRef::Tensor(_) => "tensor",
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            InstanceRef::Matrix(a) => a.is_real(),
            InstanceRef::Symmetric(a) => a.is_real(),
            InstanceRef::Tensor(a) => a.is_real(),
        }
    }

    /// `(d, n)` of the dense array whose entries are constrained: matrices
    /// and symmetric matrices are `d = 2`.
    fn dense_shape(&self) -> (usize, usize) {
        match self {
            InstanceRef::Matrix(a) => (2, a.n()),
            InstanceRef::Symmetric(a) => (2, a.two_n()),
            InstanceRef::Tensor(a) => (a.d(), a.n()),
        }
    }

    fn entries(&self) -> &[Complex] {
        match self {
            InstanceRef::Matrix(a) => a.entries(),
            InstanceRef::Symmetric(a) => a.entries(),
            InstanceRef::Tensor(a) => a.entries(),
        }
    }
}

/// Where the tightest constraint sits. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Entry(Vec<usize>),
    Slice { axis: usize, index: usize },
}

/// Sum of `|1 - z|` over one slice (row or column for matrices).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineSum {
    pub axis: usize,
    pub index: usize,
    pub sum: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MembershipReport {
    pub kind: RegionKind,
    pub inside: bool,
    /// Smallest slack over all constraints; negative when outside.
    pub margin: f64,
    /// Right-hand side of the tightest constraint.
    pub bound: f64,
    /// Left-hand side of the tightest constraint.
    pub worst_value: f64,
    pub worst: Option<Location>,
    /// Slice sums, L1 kinds only.
    pub line_sums: Option<Vec<LineSum>>,
}

/// Tests the hypothesis of the region selected by `spec`.
///
/// Disc kinds: `|1 - z| <= eta` per entry, margin `eta - max |1 - z|`.
/// Strip kinds: `|1 - Re z| <= eta` and `|Im z| <= tau` per entry, margin the
/// smallest slack of either inequality.
/// L1 kinds: every slice sum of `|1 - z|` is at most `eta n^(d-1)`, margin
/// `eta n^(d-1) - max sum`.
/// Hafnian kinds ignore diagonal entries.
pub fn check_region<'a>(
    input: impl Into<InstanceRef<'a>>,
    spec: &RegionSpec,
) -> Result<MembershipReport> {
    let input = input.into();
    let compatible = match (input, spec.kind) {
        (
            InstanceRef::Matrix(_),
            RegionKind::DiscPer | RegionKind::StripPer | RegionKind::L1Per,
        ) => true,
        (InstanceRef::Symmetric(_), RegionKind::DiscHaf | RegionKind::StripHaf) => true,
        (InstanceRef::Tensor(t), k) if k.is_tensor() => t.d() == spec.d,
        (InstanceRef::Matrix(_), k) if k.is_tensor() => spec.d == 2,
        _ => false,
    };
    if !compatible {
        return Err(Error::ShapeMismatch(format!(
            "{} input cannot be checked against {} (d = {})",
            input.kind_name(),
            spec.kind.name(),
            spec.d
        )));
    }
    let (d, n) = input.dense_shape();
    let entries = input.entries();
    let skip_diagonal = spec.kind.is_hafnian();
    let multi = |offset: usize| -> Vec<usize> {
        let mut idx = vec![0; d];
        let mut r = offset;
        for p in (0..d).rev() {
            idx[p] = r % n;
            r /= n;
        }
        idx
    };

    let report = if spec.kind.is_l1() {
        let bound = spec.eta * (n as f64).powi(d as i32 - 1);
        let mut sums = vec![vec![crate::sum::NeumaierSum::new(); n]; d];
        for (offset, z) in entries.iter().enumerate() {
            let dev = (Complex::new(1.0, 0.0) - z).norm();
            for (axis, i) in multi(offset).into_iter().enumerate() {
                sums[axis][i].add(dev);
            }
        }
        let line_sums: Vec<LineSum> = sums
            .iter()
            .enumerate()
            .flat_map(|(axis, v)| {
                v.iter().enumerate().map(move |(index, s)| LineSum {
                    axis,
                    index,
                    sum: s.value(),
                })
            })
            .collect();
        let worst = line_sums
            .iter()
            .fold(None::<&LineSum>, |best, l| match best {
                Some(b) if b.sum >= l.sum => Some(b),
                _ => Some(l),
            })
            .expect("at least one slice");
        MembershipReport {
            kind: spec.kind,
            inside: worst.sum <= bound,
            margin: bound - worst.sum,
            bound,
            worst_value: worst.sum,
            worst: Some(Location::Slice {
                axis: worst.axis,
                index: worst.index,
            }),
            line_sums: Some(line_sums),
        }
    } else {
        // Track (slack, value, bound, offset) of the tightest constraint.
        let mut tightest: Option<(f64, f64, f64, usize)> = None;
        let mut consider = |slack: f64, value: f64, bound: f64, offset: usize| {
            if tightest.map_or(true, |t| slack < t.0) {
                tightest = Some((slack, value, bound, offset));
            }
        };
        for (offset, z) in entries.iter().enumerate() {
            if skip_diagonal && offset / n == offset % n {
                continue;
            }
            if spec.kind.is_strip() {
                let re_dev = (1.0 - z.re).abs();
                consider(spec.eta - re_dev, re_dev, spec.eta, offset);
                consider(spec.tau - z.im.abs(), z.im.abs(), spec.tau, offset);
            } else {
                let dev = (Complex::new(1.0, 0.0) - z).norm();
                consider(spec.eta - dev, dev, spec.eta, offset);
            }
        }
        match tightest {
            Some((slack, value, bound, offset)) => MembershipReport {
                kind: spec.kind,
                inside: slack >= 0.0,
                margin: slack,
                bound,
                worst_value: value,
                worst: Some(Location::Entry(multi(offset))),
                line_sums: None,
            },
            // A 2x2 hafnian input with only diagonal entries is skipped entirely.
            None => MembershipReport {
                kind: spec.kind,
                inside: true,
                margin: spec.eta,
                bound: spec.eta,
                worst_value: 0.0,
                worst: None,
                line_sums: None,
            },
        }
    };
    Ok(report)
}

/// Binomial coefficients `C(n, k)`, `k = 0..=n`, as floats.
fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = 1.0f64;
    row.push(c);
    for k in 1..=n {
        c = c * (n + 1 - k) as f64 / k as f64;
        if c < 9.0e15 {
            c = c.round();
        }
        row.push(c);
    }
    row
}

/// Schur product `c_k = a_k b_k / C(n, k)`. If `f` has no zeros in
/// `|z| < r1` and `g` none in `|z| < r2`, then the product has none in
/// `|z| < r1 r2`.
pub fn schur_product(
    f: &UnivariatePolynomial,
    g: &UnivariatePolynomial,
    n: usize,
) -> Result<UnivariatePolynomial> {
    if f.degree() > n || g.degree() > n {
        return Err(Error::DegreeExceedsN { n });
    }
    let binom = binomial_row(n);
    Ok(UnivariatePolynomial::new(
        (0..=n)
            .map(|k| f.coeff(k) * g.coeff(k) / binom[k])
            .collect(),
    ))
}

/// `p_n(z) = sum_{k=0}^n z^k / k!`, which has no zeros in `|z| <= alpha n`.
pub fn partial_exp_poly(n: usize) -> Result<UnivariatePolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "partial exponential sum needs n >= 1".into(),
        ));
    }
    if n > 170 {
        return Err(Error::SizeLimitExceeded {
            what: "partial exponential degree",
            actual: n as f64,
            limit: 170.0,
        });
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut c = 1.0f64;
    coeffs.push(Complex::new(c, 0.0));
    for k in 1..=n {
        c /= k as f64;
        coeffs.push(Complex::new(c, 0.0));
    }
    Ok(UnivariatePolynomial::new(coeffs))
}
