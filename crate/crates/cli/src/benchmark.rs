//! Seeded benchmark suites: random in-region instances, each approximated
//! and compared against its exact oracle.

use std::time::Instant;

use clap::ValueEnum;
use logperm::sampling::{l1_matrix, l1_tensor, real_matrix, real_symmetric, real_tensor};
use logperm::{ApproxOptions, Instance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::commands::{approximate, exact_value, log_distance, Method};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Small,
    Medium,
}

#[derive(Debug, Clone, Copy)]
enum Family {
    /// Real `n x n` entries in `[lo, 1]`.
    Matrix {
        n: usize,
        lo: f64,
    },
    Symmetric {
        two_n: usize,
        lo: f64,
    },
    /// Real `d`-tensor with entries in `[lo, hi]`.
    Tensor {
        d: usize,
        n: usize,
        lo: f64,
        hi: f64,
    },
    SliceMatrix {
        n: usize,
        eta: f64,
    },
    SliceTensor {
        d: usize,
        n: usize,
        eta: f64,
    },
}

#[derive(Debug, Clone, Copy)]
struct Case {
    family: Family,
    method: Method,
    /// `eta` for disc, l1 and tensor strip; `delta` for matrix strip.
    param: f64,
    epsilons: &'static [f64],
}

const SWEEP: &[f64] = &[1e-1, 1e-2, 1e-3];
const FINE: &[f64] = &[1e-3];
const COARSE: &[f64] = &[1e-1];

fn cases(suite: Suite) -> Vec<Case> {
    use Family::*;
    let mut v = vec![
        Case {
            family: Matrix { n: 5, lo: 0.6 },
            method: Method::Disc,
            param: 0.4,
            epsilons: SWEEP,
        },
        Case {
            family: Matrix { n: 7, lo: 0.6 },
            method: Method::Disc,
            param: 0.4,
            epsilons: FINE,
        },
        Case {
            family: Symmetric { two_n: 6, lo: 0.6 },
            method: Method::Disc,
            param: 0.4,
            epsilons: SWEEP,
        },
        Case {
            family: Tensor {
                d: 3,
                n: 3,
                lo: 0.78,
                hi: 1.0,
            },
            method: Method::Disc,
            param: 0.22,
            epsilons: SWEEP,
        },
        Case {
            family: SliceMatrix { n: 5, eta: 0.05 },
            method: Method::L1,
            param: 0.05,
            epsilons: FINE,
        },
        Case {
            family: SliceTensor {
                d: 3,
                n: 3,
                eta: 0.01,
            },
            method: Method::L1,
            param: 0.01,
            epsilons: FINE,
        },
        Case {
            family: Matrix { n: 4, lo: 0.5 },
            method: Method::Strip,
            param: 0.5,
            epsilons: &[1e-1, 1e-2],
        },
    ];
    if suite == Suite::Medium {
        v.extend([
            Case {
                family: Matrix { n: 8, lo: 0.6 },
                method: Method::Disc,
                param: 0.4,
                epsilons: SWEEP,
            },
            Case {
                family: Matrix { n: 10, lo: 0.6 },
                method: Method::Disc,
                param: 0.4,
                epsilons: FINE,
            },
            Case {
                family: Symmetric { two_n: 10, lo: 0.6 },
                method: Method::Disc,
                param: 0.4,
                epsilons: FINE,
            },
            Case {
                family: Tensor {
                    d: 3,
                    n: 4,
                    lo: 0.78,
                    hi: 1.0,
                },
                method: Method::Disc,
                param: 0.22,
                epsilons: FINE,
            },
            Case {
                family: Matrix { n: 6, lo: 0.5 },
                method: Method::Strip,
                param: 0.5,
                epsilons: COARSE,
            },
            Case {
                family: Symmetric { two_n: 8, lo: 0.5 },
                method: Method::Strip,
                param: 0.5,
                epsilons: COARSE,
            },
            Case {
                family: Tensor {
                    d: 3,
                    n: 3,
                    lo: 0.7,
                    hi: 1.3,
                },
                method: Method::Strip,
                param: 0.3,
                epsilons: COARSE,
            },
        ]);
    }
    v
}

fn sample(family: Family, rng: &mut ChaCha8Rng) -> (Instance, String) {
    match family {
        Family::Matrix { n, lo } => (real_matrix(rng, n, lo, 1.0).into(), "matrix".into()),
        Family::Symmetric { two_n, lo } => (
            real_symmetric(rng, two_n, lo, 1.0).into(),
            "symmetric".into(),
        ),
        Family::Tensor { d, n, lo, hi } => (
            real_tensor(rng, d, n, lo, hi).into(),
            format!("tensor-d{d}"),
        ),
        Family::SliceMatrix { n, eta } => (l1_matrix(rng, n, eta).into(), "matrix-l1".into()),
        Family::SliceTensor { d, n, eta } => {
            (l1_tensor(rng, d, n, eta).into(), format!("tensor-d{d}-l1"))
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub family: String,
    pub n: usize,
    pub pipeline: String,
    pub parameter: f64,
    pub epsilon: f64,
    pub degree: usize,
    pub bound: f64,
    pub realized_error: f64,
    pub ok: bool,
    pub elapsed_s: f64,
}

/// Runs every case of `suite` with instances drawn from one generator seeded by `seed`.
pub fn run_suite(suite: Suite, seed: u64) -> Result<Vec<Row>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for case in cases(suite) {
        let (instance, family) = sample(case.family, &mut rng);
        let exact = exact_value(&instance)?.ln();
        for &epsilon in case.epsilons {
            let start = Instant::now();
            let report = approximate(
                &instance,
                case.method,
                Some(case.param),
                Some(case.param),
                epsilon,
                &ApproxOptions::default(),
            )?;
            let bound = report.error_bound.unwrap_or(f64::INFINITY);
            let realized = log_distance(report.log_value, exact);
            rows.push(Row {
                family: family.clone(),
                n: match &instance {
                    Instance::Symmetric(a) => a.two_n(),
                    other => other.interpolation_degree(),
                },
                pipeline: format!("{:?}", report.pipeline).to_lowercase(),
                parameter: case.param,
                epsilon,
                degree: report.degree_used,
                bound,
                realized_error: realized,
                ok: realized <= bound,
                elapsed_s: start.elapsed().as_secs_f64(),
            });
        }
    }
    Ok(rows)
}

pub fn table(rows: &[Row]) -> String {
    let mut out = format!(
        "{:<14} {:>3} {:<6} {:>6} {:>8} {:>10} {:>11} {:>11} {:>9} {}\n",
        "family", "n", "method", "param", "epsilon", "m", "bound", "realized", "time_s", "ok"
    );
    for r in rows {
        out += &format!(
            "{:<14} {:>3} {:<6} {:>6} {:>8.0e} {:>10} {:>11.3e} {:>11.3e} {:>9.3} {}\n",
            r.family,
            r.n,
            r.pipeline,
            r.parameter,
            r.epsilon,
            r.degree,
            r.bound,
            r.realized_error,
            r.elapsed_s,
            r.ok
        );
    }
    out
}
