//! Taylor interpolation of `ln g` from `z = 0` to `z = 1`.
//!
//! The disc and L1 pipelines expand `g(z) = F(J + z(A - J))` directly; the
//! strip pipeline expands `g = r(phi(z))` with `r(z) = F(J + z(A - J))`.

use std::time::Instant;

use serde::Serialize;

use crate::derivatives::{
    g_full_expansion_hafnian, g_full_expansion_permanent, g_full_expansion_tensor, ln_base_hafnian,
    ln_base_permanent, ln_base_tensor, log_derivatives, normalized_coeffs_hafnian,
    normalized_coeffs_permanent, normalized_coeffs_tensor, DerivativePath, DEFAULT_TUPLE_BUDGET,
};
use crate::error::{Error, Result};
use crate::phi::PhiConstants;
use crate::poly::compose_truncated_coeffs;
use crate::regions::{
    alpha_constant, check_region, eta_d_disc, eta_d_l1, eta_d_strip, tau_bound, InstanceRef,
    MembershipReport, RegionKind, RegionSpec,
};
use crate::series::{self, SeriesScalar};
use crate::sum::{ComplexSum, NeumaierSum};
use crate::types::{Complex, ZERO};

/// Orders up to this use the derivative recurrence; longer expansions use
/// the equivalent coefficient-form series logarithm, whose terms stay bounded.
const DERIVATIVE_FORM_MAX_ORDER: usize = 60;

/// `deg_g / ((m + 1) beta^m (beta - 1))`.
pub fn taylor_error_bound(deg_g: usize, beta: f64, m: usize) -> Result<f64> {
    if !(beta > 1.0) {
        return Err(Error::BetaNotGreaterThanOne(beta));
    }
    Ok(bound_from_excess(deg_g as f64, beta - 1.0, m))
}

/// The same bound with `beta = 1 + excess`, evaluated in log space so that
/// excesses far below machine epsilon and astronomically large degrees are
/// handled.
pub fn bound_from_excess(deg_g: f64, excess: f64, m: usize) -> f64 {
    if deg_g == 0.0 {
        return 0.0;
    }
    if m == 0 {
        return deg_g / excess;
    }
    let mf = m as f64;
    (deg_g.ln() - (mf + 1.0).ln() - mf * excess.ln_1p() - excess.ln()).exp()
}

/// Smallest `m` with `taylor_error_bound(deg_g, beta, m) <= epsilon`.
pub fn choose_degree(deg_g: usize, beta: f64, epsilon: f64) -> usize {
    choose_degree_from_excess(deg_g as f64, beta - 1.0, epsilon)
}

/// Smallest `m` with `bound_from_excess(deg_g, excess, m) <= epsilon`, or
/// `usize::MAX` if no `m` below `2^62` qualifies. The bound decreases in
/// `m`, so a doubling search followed by bisection returns the same `m` as a
/// linear scan.
pub fn choose_degree_from_excess(deg_g: f64, excess: f64, epsilon: f64) -> usize {
    let ok = |m: usize| bound_from_excess(deg_g, excess, m) <= epsilon;
    if ok(0) {
        return 0;
    }
    let mut hi = 1usize;
    while !ok(hi) {
        if hi >= 1 << 62 {
            return usize::MAX;
        }
        hi *= 2;
    }
    let mut lo = hi / 2;
    // Invariant: !ok(lo), ok(hi).
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pipeline {
    Disc,
    Strip,
    L1,
}

/// How the strip widths are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum StripRule {
    /// Largest `rho = min(xi, zeta) / 2`: `xi` solves `xi = zeta(xi)` with
    /// `zeta` the full imaginary allowance at real allowance `xi`.
    #[default]
    Balanced,
    /// `xi = delta / (2(1-delta))` and `zeta` half the allowance (matrices);
    /// for tensors `eta'` is the midpoint of `eta` and its limit.
    Midpoint,
}

/// Strip widths and the resulting `phi` constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StripInfo {
    pub rule: StripRule,
    /// Real allowance: `r` has no zeros for `-xi <= Re z <= 1 + xi`, `|Im z| <= zeta`.
    pub xi: f64,
    pub zeta: f64,
    /// Entrywise real deviation of `J + z(A - J)` at the strip edge.
    pub eta_prime: f64,
    pub phi: PhiConstants,
}

#[derive(Debug, Clone, Serialize)]
pub struct ApproxReport {
    /// Approximation of `ln F(A)`; real for real input.
    pub log_value: Complex,
    pub degree_used: usize,
    /// Certified `|log_value - ln F(A)|` bound; absent when the region check was skipped.
    pub error_bound: Option<f64>,
    pub epsilon: f64,
    pub pipeline: Pipeline,
    pub beta_used: f64,
    /// `beta - 1`, kept separately because it can be far below machine epsilon.
    pub beta_excess: f64,
    pub deg_g: f64,
    /// `F(J)`; overflows to infinity for large inputs.
    pub g0: f64,
    pub ln_g0: f64,
    pub derivative_path: DerivativePath,
    pub region: Option<MembershipReport>,
    pub strip: Option<StripInfo>,
    pub elapsed_s: f64,
}

/// Tuning knobs shared by the pipelines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxOptions {
    /// Cap on tuple products per derivative sum before falling back to full expansion.
    pub tuple_budget: f64,
    /// Largest Taylor degree attempted.
    pub max_degree: usize,
    /// Use this degree instead of the one chosen from epsilon.
    pub degree: Option<usize>,
    /// Skip the region check; the report then carries no error bound.
    pub force: bool,
    pub strip_rule: StripRule,
}

impl Default for ApproxOptions {
    fn default() -> Self {
        Self {
            tuple_budget: DEFAULT_TUPLE_BUDGET,
            max_degree: 1 << 26,
            degree: None,
            force: false,
            strip_rule: StripRule::Balanced,
        }
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "epsilon = {epsilon} must lie in (0, 1)"
        )));
    }
    Ok(())
}

/// Degree of `r(z) = F(J + z(A - J))` and `ln F(J)`.
fn base_of(input: InstanceRef<'_>) -> (usize, f64) {
    match input {
        InstanceRef::Matrix(a) => (a.n(), ln_base_permanent(a.n())),
        InstanceRef::Symmetric(a) => (a.half(), ln_base_hafnian(a.half())),
        InstanceRef::Tensor(a) => (a.n(), ln_base_tensor(a.d(), a.n())),
    }
}

/// `q_0..=q_m` with `q_k = r^(k)(0) / (k! r(0))`, by tuple sums when the
/// budget allows and full expansion otherwise.
pub fn normalized_coeffs(
    input: InstanceRef<'_>,
    m: usize,
    budget: f64,
) -> Result<(Vec<Complex>, DerivativePath)> {
    let tuple = match input {
        InstanceRef::Matrix(a) => normalized_coeffs_permanent(a, m, budget),
        InstanceRef::Symmetric(a) => normalized_coeffs_hafnian(a, m, budget),
        InstanceRef::Tensor(a) => normalized_coeffs_tensor(a, m, budget),
    };
    match tuple {
        Ok(q) => Ok((q, DerivativePath::TupleSum)),
        Err(budget_err @ Error::BudgetExceeded { .. }) => {
            let (full, ln_g0) = match input {
                InstanceRef::Matrix(a) => (g_full_expansion_permanent(a), ln_base_permanent(a.n())),
                InstanceRef::Symmetric(a) => {
                    (g_full_expansion_hafnian(a), ln_base_hafnian(a.half()))
                }
                InstanceRef::Tensor(a) => {
                    (g_full_expansion_tensor(a), ln_base_tensor(a.d(), a.n()))
                }
            };
            let full = full.map_err(|_| budget_err)?;
            let g0 = ln_g0.exp();
            Ok((
                (0..=m).map(|k| full.coeff(k) / g0).collect(),
                DerivativePath::FullExpansion,
            ))
        }
        Err(e) => Err(e),
    }
}

/// `sum_{k=1}^{m} f^(k)(0) / k!` for `f = ln(sum_k q_k z^k)`, `q_0 = 1`,
/// `q_k = 0` past the end of `q`.
fn log_taylor_sum(q: &[Complex], m: usize) -> Result<Complex> {
    if m == 0 {
        return Ok(ZERO);
    }
    if q.len() <= 1 || q[1..].iter().all(|&x| x == ZERO) {
        return Ok(ZERO);
    }
    let mut acc = ComplexSum::new();
    if m <= DERIVATIVE_FORM_MAX_ORDER {
        let mut derivs = Vec::with_capacity(m + 1);
        let mut fact = 1.0;
        for k in 0..=m {
            if k > 0 {
                fact *= k as f64;
            }
            derivs.push(q.get(k).copied().unwrap_or(ZERO) * fact);
        }
        let f = log_derivatives(&derivs)?;
        let mut fact = 1.0;
        for (k, fk) in f.iter().enumerate() {
            fact *= (k + 1) as f64;
            acc.add(fk / fact);
        }
    } else {
        for b in series::log(&q[..q.len().min(m + 1)], m + 1)
            .into_iter()
            .skip(1)
        {
            acc.add(b);
        }
    }
    Ok(acc.value())
}

struct DiscSetup {
    pipeline: Pipeline,
    spec: RegionSpec,
    beta: f64,
}

fn disc_setup(input: InstanceRef<'_>, eta: f64, l1: bool) -> Result<DiscSetup> {
    let (kind, d, limit) = match (input, l1) {
        (InstanceRef::Matrix(_), false) => (RegionKind::DiscPer, 2, 0.5),
        (InstanceRef::Symmetric(_), false) => (RegionKind::DiscHaf, 2, 0.5),
        (InstanceRef::Tensor(t), false) => (RegionKind::DiscTensor, t.d(), eta_d_disc(t.d()).eta),
        (InstanceRef::Matrix(_), true) => (RegionKind::L1Per, 2, alpha_constant() / 4.0),
        (InstanceRef::Tensor(t), true) => (RegionKind::L1Tensor, t.d(), eta_d_l1(t.d())),
        (InstanceRef::Symmetric(_), true) => {
            return Err(Error::ShapeMismatch(
                "the l1 pipeline takes matrices or tensors".into(),
            ))
        }
    };
    if !(eta >= 0.0) || eta >= limit {
        return Err(Error::EtaTooLarge { eta, limit });
    }
    Ok(DiscSetup {
        pipeline: if l1 { Pipeline::L1 } else { Pipeline::Disc },
        spec: RegionSpec::new(kind, d, eta, 0.0)?,
        beta: if eta == 0.0 {
            f64::INFINITY
        } else {
            limit / eta
        },
    })
}

/// Interpolates `ln g` for `g(z) = F(J + z(A - J))` when every entry
/// satisfies `|1 - a| <= eta`; `g` has no zeros in `|z| <= beta` with
/// `beta = eta_max / eta`.
pub fn approx_log_disc<'a>(
    input: impl Into<InstanceRef<'a>>,
    eta: f64,
    epsilon: f64,
    options: &ApproxOptions,
) -> Result<ApproxReport> {
    let input = input.into();
    let setup = disc_setup(input, eta, false)?;
    run_disc(input, setup, epsilon, options)
}

/// As [`approx_log_disc`] under the slice-sum hypothesis: every row and
/// column (slice) sum of `|1 - a|` is at most `eta n^(d-1)`.
pub fn approx_log_l1<'a>(
    input: impl Into<InstanceRef<'a>>,
    eta: f64,
    epsilon: f64,
    options: &ApproxOptions,
) -> Result<ApproxReport> {
    let input = input.into();
    let setup = disc_setup(input, eta, true)?;
    run_disc(input, setup, epsilon, options)
}

fn region_gate(
    input: InstanceRef<'_>,
    spec: &RegionSpec,
    options: &ApproxOptions,
) -> Result<Option<MembershipReport>> {
    if options.force {
        return Ok(None);
    }
    let report = check_region(input, spec)?;
    if !report.inside {
        return Err(Error::RegionViolation(Box::new(report)));
    }
    Ok(Some(report))
}

fn run_disc(
    input: InstanceRef<'_>,
    setup: DiscSetup,
    epsilon: f64,
    options: &ApproxOptions,
) -> Result<ApproxReport> {
    let start = Instant::now();
    check_epsilon(epsilon)?;
    let region = region_gate(input, &setup.spec, options)?;
    let (n, ln_g0) = base_of(input);
    let deg_g = n as f64;
    let excess = setup.beta - 1.0;
    let m = match options.degree {
        Some(m) => m,
        None => choose_degree_from_excess(deg_g, excess, epsilon),
    };
    if m > options.max_degree {
        return Err(Error::BudgetExceeded {
            what: "Taylor degree",
            needed: m as f64,
            budget: options.max_degree as f64,
        });
    }
    let (q, path) = normalized_coeffs(input, m.min(n), options.tuple_budget)?;
    let correction = log_taylor_sum(&q, m)?;
    let log_value = Complex::new(ln_g0, 0.0) + correction;
    Ok(ApproxReport {
        log_value,
        degree_used: m,
        error_bound: (!options.force).then(|| bound_from_excess(deg_g, excess, m)),
        epsilon,
        pipeline: setup.pipeline,
        beta_used: setup.beta,
        beta_excess: excess,
        deg_g,
        g0: ln_g0.exp(),
        ln_g0,
        derivative_path: path,
        region,
        strip: None,
        elapsed_s: start.elapsed().as_secs_f64(),
    })
}

/// Strip widths for entrywise real deviation `scale` (`1 - delta` for
/// matrices, `eta` for tensors) in dimension `d`.
pub fn strip_parameters(scale: f64, d: usize, rule: StripRule) -> Result<StripInfo> {
    let limit = eta_d_strip(d);
    if !(scale >= 0.0) || scale >= limit {
        return Err(Error::InfeasibleParameters(format!(
            "deviation {scale} must lie in [0, {limit})"
        )));
    }
    if scale == 0.0 {
        let phi = PhiConstants::new(1.0)?;
        return Ok(StripInfo {
            rule,
            xi: f64::INFINITY,
            zeta: f64::INFINITY,
            eta_prime: 0.0,
            phi,
        });
    }
    let zeta_at = |xi: f64| -> f64 {
        match tau_bound((1.0 + xi) * scale, d) {
            Ok(t) => t / scale,
            Err(_) => 0.0,
        }
    };
    let xi_max = limit / scale - 1.0;
    let (xi, zeta) = match rule {
        StripRule::Midpoint => {
            let xi = if d == 2 {
                (1.0 - scale) / (2.0 * scale)
            } else {
                0.5 * xi_max
            };
            (xi, 0.5 * zeta_at(xi))
        }
        StripRule::Balanced => {
            let (mut lo, mut hi) = (0.0f64, xi_max);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if zeta_at(mid) > mid {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            (lo, zeta_at(lo))
        }
    };
    if !(xi > 0.0 && zeta > 0.0) {
        return Err(Error::InfeasibleParameters(format!(
            "xi = {xi}, zeta = {zeta}"
        )));
    }
    let rho = (0.5 * xi.min(zeta)).min(1.0);
    Ok(StripInfo {
        rule,
        xi,
        zeta,
        eta_prime: (1.0 + xi) * scale,
        phi: PhiConstants::new(rho)?,
    })
}

/// Interpolates `ln F(A)` through `g = r(phi(z))`, `r(z) = F(J + z(A - J))`.
///
/// Matrices and symmetric matrices take `delta`: real entries with
/// `|1 - a| <= 1 - delta` (in particular `delta <= a <= 1`). Tensors take
/// `eta`: real entries with `|1 - a| <= eta < tan(pi / (4(d-1)))`.
pub fn approx_log_strip<'a>(
    input: impl Into<InstanceRef<'a>>,
    delta_or_eta: f64,
    epsilon: f64,
    options: &ApproxOptions,
) -> Result<ApproxReport> {
    let start = Instant::now();
    let input = input.into();
    check_epsilon(epsilon)?;
    let (spec, scale, d) = match input {
        InstanceRef::Matrix(_) | InstanceRef::Symmetric(_) => {
            let delta = delta_or_eta;
            if !(delta > 0.0 && delta <= 1.0) {
                return Err(Error::InvalidArgument(format!(
                    "delta = {delta} must lie in (0, 1]"
                )));
            }
            let kind = if matches!(input, InstanceRef::Matrix(_)) {
                RegionKind::StripPer
            } else {
                RegionKind::StripHaf
            };
            (RegionSpec::new(kind, 2, 1.0 - delta, 0.0)?, 1.0 - delta, 2)
        }
        InstanceRef::Tensor(t) => {
            let eta = delta_or_eta;
            let limit = eta_d_strip(t.d());
            if !(eta >= 0.0) || eta >= limit {
                return Err(Error::EtaTooLarge { eta, limit });
            }
            (RegionSpec::strip_tensor(t.d(), eta, 0.0)?, eta, t.d())
        }
    };
    let region = region_gate(input, &spec, options)?;
    let info = strip_parameters(scale, d, options.strip_rule)?;
    let phi = info.phi;
    let (n, ln_g0) = base_of(input);
    let deg_g = phi.degree * n as f64;
    let m = match options.degree {
        Some(m) => m,
        None => choose_degree_from_excess(deg_g, phi.beta_excess, epsilon),
    };
    if m > options.max_degree {
        return Err(Error::BudgetExceeded {
            what: "Taylor degree",
            needed: m as f64,
            budget: options.max_degree as f64,
        });
    }
    let (q, path) = normalized_coeffs(input, m.min(n), options.tuple_budget)?;
    let correction = if input.is_real() {
        let q: Vec<f64> = q.iter().map(|z| z.re).collect();
        Complex::new(composed_log_sum(&q, &phi, m), 0.0)
    } else {
        composed_log_sum(&q, &phi, m)
    };
    Ok(ApproxReport {
        log_value: Complex::new(ln_g0, 0.0) + correction,
        degree_used: m,
        error_bound: (!options.force).then(|| bound_from_excess(deg_g, phi.beta_excess, m)),
        epsilon,
        pipeline: Pipeline::Strip,
        beta_used: phi.beta,
        beta_excess: phi.beta_excess,
        deg_g,
        g0: ln_g0.exp(),
        ln_g0,
        derivative_path: path,
        region,
        strip: Some(info),
        elapsed_s: start.elapsed().as_secs_f64(),
    })
}

/// `sum_{k=1}^m` of the Taylor coefficients of `ln(r(phi(z)) / r(0))`,
/// where `q` are the normalised coefficients of `r`.
fn composed_log_sum<T: SeriesScalar + ScalarSum>(q: &[T], phi: &PhiConstants, m: usize) -> T {
    if m == 0 || q[1..].iter().all(|&x| x == T::zero()) {
        return T::zero();
    }
    let len = m + 1;
    let g = if phi.degree >= m as f64 {
        compose_with_log_series(q, phi, len)
    } else {
        let phi_coeffs: Vec<T> = phi.coefficients(len).into_iter().map(T::from_f64).collect();
        compose_truncated_coeffs(q, &phi_coeffs, len)
    };
    let b = series::log(&g, len);
    T::compensated_sum(&b[1..])
}

/// First `len` coefficients of `r(phi(z))` when `len - 1` does not exceed the
/// degree of `phi`. Below that degree `phi` agrees with `-ln(1 - alpha z) / sigma`,
/// and `[u^k] (-ln(1 - u))^p / p! = |s(k, p)| / k!` obeys
/// `e_p(k+1) = (k e_p(k) + e_{p-1}(k)) / (k+1)`, so each coefficient costs `O(n)`.
fn compose_with_log_series<T: SeriesScalar>(q: &[T], phi: &PhiConstants, len: usize) -> Vec<T> {
    let top = q.len().saturating_sub(1).min(len.saturating_sub(1));
    // weights q_p p! / sigma^p
    let mut weight = 1.0;
    let weights: Vec<T> = (0..=top)
        .map(|p| {
            if p > 0 {
                weight *= p as f64 / phi.sigma;
            }
            q[p].scale(weight)
        })
        .collect();
    let ln_alpha = (-(-1.0 / phi.rho).exp()).ln_1p();
    let mut e = vec![0.0f64; top + 1];
    e[0] = 1.0;
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = T::zero();
        for (w, &x) in weights.iter().zip(&e) {
            acc = acc + w.scale(x);
        }
        out.push(acc.scale((k as f64 * ln_alpha).exp()));
        let kf = k as f64;
        let inv = 1.0 / (kf + 1.0);
        for p in (1..=top).rev() {
            e[p] = (kf * e[p] + e[p - 1]) * inv;
        }
        e[0] *= kf * inv;
    }
    out
}

/// Compensated summation for the series scalar types.
trait ScalarSum: Sized {
    fn compensated_sum(values: &[Self]) -> Self;
}

impl ScalarSum for f64 {
    fn compensated_sum(values: &[f64]) -> f64 {
        let mut s = NeumaierSum::new();
        values.iter().for_each(|&v| s.add(v));
        s.value()
    }
}

impl ScalarSum for Complex {
    fn compensated_sum(values: &[Complex]) -> Complex {
        let mut s = ComplexSum::new();
        values.iter().for_each(|&v| s.add(v));
        s.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{ComplexMatrix, ComplexTensor, SymmetricComplexMatrix};

    #[test]
    fn stirling_composition_matches_horner() {
        let q = [
            Complex::new(1.0, 0.0),
            Complex::new(0.3, -0.2),
            Complex::new(-0.1, 0.05),
            Complex::new(0.02, 0.01),
        ];
        for rho in [0.5, 0.2, 0.1] {
            let phi = PhiConstants::new(rho).unwrap();
            let len = 400.min(phi.degree as usize + 1);
            let coeffs: Vec<Complex> = phi
                .coefficients(len)
                .into_iter()
                .map(Complex::from)
                .collect();
            let horner = compose_truncated_coeffs(&q, &coeffs, len);
            let fast = compose_with_log_series(&q, &phi, len);
            for (k, (x, y)) in fast.iter().zip(&horner).enumerate() {
                assert!(
                    (x - y).norm() < 1e-12 * (1.0 + y.norm()),
                    "rho={rho} k={k}: {x} vs {y}"
                );
            }
        }
    }

    #[test]
    fn bound_example() {
        let b = taylor_error_bound(10, 2.0, 5).unwrap();
        assert!((b - 10.0 / 192.0).abs() < 1e-15);
        assert!(matches!(
            taylor_error_bound(10, 1.0, 5),
            Err(Error::BetaNotGreaterThanOne(_))
        ));
    }

    #[test]
    fn bound_decreases_in_degree() {
        let mut prev = f64::INFINITY;
        for m in 0..50 {
            let b = taylor_error_bound(7, 1.3, m).unwrap();
            assert!(b < prev);
            prev = b;
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(choose_degree(10, 2.0, 0.0521), 5);
        assert_eq!(choose_degree(1, 100.0, 0.5), 0);
        let m = choose_degree(7, 1.25, 1e-3);
        assert!(taylor_error_bound(7, 1.25, m).unwrap() <= 1e-3);
        assert!(taylor_error_bound(7, 1.25, m - 1).unwrap() > 1e-3);
    }

    #[test]
    fn degree_matches_linear_scan() {
        for &(deg, beta, eps) in &[(3usize, 1.01, 1e-2), (50, 1.5, 1e-6), (1000, 1.001, 0.1)] {
            let fast = choose_degree(deg, beta, eps);
            let slow = (0..)
                .find(|&m| taylor_error_bound(deg, beta, m).unwrap() <= eps)
                .unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn unreachable_degree_saturates() {
        assert_eq!(choose_degree_from_excess(1e30, 1e-30, 1e-3), usize::MAX);
    }

    #[test]
    fn ones_give_exact_base_log() {
        let opts = ApproxOptions::default();
        let r = approx_log_disc(&ComplexMatrix::ones(5), 0.4, 1e-3, &opts).unwrap();
        assert_eq!(r.log_value, Complex::new(120f64.ln(), 0.0));
        let r = approx_log_disc(&SymmetricComplexMatrix::ones(6), 0.4, 1e-3, &opts).unwrap();
        assert_eq!(r.log_value, Complex::new(ln_base_hafnian(3), 0.0));
        let r = approx_log_strip(&ComplexMatrix::ones(4), 0.5, 0.1, &opts).unwrap();
        assert_eq!(r.log_value, Complex::new(24f64.ln(), 0.0));
        let r = approx_log_strip(&ComplexTensor::ones(3, 3), 0.3, 0.1, &opts).unwrap();
        assert_eq!(r.log_value, Complex::new(36f64.ln(), 0.0));
    }

    #[test]
    fn region_violation_is_reported() {
        let mut e = vec![1.0; 9];
        e[4] = 0.2;
        let a = ComplexMatrix::from_real(3, &e).unwrap();
        let err = approx_log_disc(&a, 0.4, 1e-3, &ApproxOptions::default()).unwrap_err();
        assert!(matches!(err, Error::RegionViolation(_)));
        let forced = ApproxOptions {
            force: true,
            ..Default::default()
        };
        let r = approx_log_disc(&a, 0.4, 1e-3, &forced).unwrap();
        assert!(r.error_bound.is_none());
    }

    #[test]
    fn small_disc_matches_exact() {
        let e = [0.9, 0.7, 1.0, 0.8, 0.65, 0.95, 1.0, 0.75, 0.85];
        let a = ComplexMatrix::from_real(3, &e).unwrap();
        let r = approx_log_disc(&a, 0.4, 1e-6, &ApproxOptions::default()).unwrap();
        let exact = crate::exact::permanent_exact(&a).unwrap().re.ln();
        assert!((r.log_value.re - exact).abs() <= 1e-6);
        assert_eq!(r.log_value.im, 0.0);
    }

    #[test]
    fn balanced_rule_solves_fixed_point() {
        let info = strip_parameters(0.5, 2, StripRule::Balanced).unwrap();
        assert!((info.xi - info.zeta).abs() < 1e-9);
        let mid = strip_parameters(0.5, 2, StripRule::Midpoint).unwrap();
        assert!((mid.xi - 0.5).abs() < 1e-15);
        assert!(info.phi.rho > mid.phi.rho);
    }
}
