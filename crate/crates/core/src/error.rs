use thiserror::Error;

use crate::regions::MembershipReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("non-finite entry at position {0}")]
    NonFinite(usize),

    #[error("matrix is not symmetric at ({row}, {col}) (1-based)")]
    NotSymmetric { row: usize, col: usize },

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size limit exceeded: {what} ({actual} > {limit})")]
    SizeLimitExceeded {
        what: &'static str,
        actual: f64,
        limit: f64,
    },

    #[error("enumeration budget exceeded: {what} needs {needed:.3e} > budget {budget:.3e}")]
    BudgetExceeded {
        what: &'static str,
        needed: f64,
        budget: f64,
    },

    #[error("inner polynomial has nonzero constant term")]
    NonzeroInnerConstant,

    #[error("polynomial degree exceeds n = {n}")]
    DegreeExceedsN { n: usize },

    #[error("eta = {eta} too large (limit {limit})")]
    EtaTooLarge { eta: f64, limit: f64 },

    #[error("beta = {0} must be greater than 1")]
    BetaNotGreaterThanOne(f64),

    #[error("rho = {0} outside (0, 1]")]
    RhoOutOfRange(f64),

    #[error("base value g(0) is zero")]
    ZeroBaseValue,

    #[error("region kind does not match input shape: {0}")]
    ShapeMismatch(String),

    #[error("input outside the zero-free region (margin {:.6e})", .0.margin)]
    RegionViolation(Box<MembershipReport>),

    #[error("no admissible strip parameters: {0}")]
    InfeasibleParameters(String),
}
