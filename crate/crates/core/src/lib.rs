//! Deterministic approximation of logarithms of permanents, hafnians and
//! multidimensional permanents by Taylor interpolation inside zero-free
//! regions, with exact exponential-time oracles for verification.

pub mod derivatives;
pub mod error;
pub mod exact;
pub mod phi;
pub mod poly;
pub mod regions;
pub mod roots;
pub mod sampling;
pub mod series;
pub mod sum;
pub mod taylor;
pub mod types;

pub use derivatives::{
    g_derivatives_hafnian, g_derivatives_permanent, g_derivatives_tensor, g_full_expansion_hafnian,
    g_full_expansion_permanent, g_full_expansion_tensor, log_derivatives, DerivativePath,
};
pub use error::{Error, Result};
pub use exact::{
    hafnian_exact, matching_polynomial, permanent_exact, tensor_permanent_exact,
    MatchingPolynomialCoeffs, OracleLimits,
};
pub use phi::{build_phi, PhiConstants, PhiPolynomial};
pub use poly::{poly_compose_truncated, poly_truncate, UnivariatePolynomial};
pub use regions::{
    alpha_constant, check_region, eta_d_disc, eta_d_l1, eta_d_strip, partial_exp_poly,
    schur_product, tau_bound, InstanceRef, MembershipReport, RegionKind, RegionSpec,
};
pub use taylor::{
    approx_log_disc, approx_log_l1, approx_log_strip, choose_degree, taylor_error_bound,
    ApproxOptions, ApproxReport, Pipeline, StripRule,
};
pub use types::{
    Complex, ComplexMatrix, ComplexTensor, Instance, SymmetricComplexMatrix, WeightedHypergraph,
};
