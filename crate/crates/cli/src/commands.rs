use std::f64::consts::TAU;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use logperm::regions::{MembershipReport, RegionKind, RegionSpec};
use logperm::{
    approx_log_disc, approx_log_l1, approx_log_strip, build_phi, check_region, hafnian_exact,
    permanent_exact, tensor_permanent_exact, ApproxOptions, ApproxReport, Complex, Instance,
    PhiConstants, StripRule,
};
use serde_json::{json, Value};

use crate::benchmark::{self, Suite};
use crate::instance::load_instance;
use crate::{describe_location, CliError, RunReport, EXIT_CERTIFICATE, EXIT_OK, EXIT_REGION};

#[derive(Debug, Parser)]
#[command(
    name = "logperm",
    version,
    about = "Logarithms of permanents, hafnians and tensor permanents"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Disc,
    Strip,
    L1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Balanced,
    Midpoint,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact value by the exponential-time oracle.
    Exact { path: PathBuf },
    /// Taylor-interpolation approximation of the logarithm.
    Approx {
        path: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Entrywise (disc), slice-average (l1) or tensor strip deviation bound.
        #[arg(long)]
        eta: Option<f64>,
        /// Lower entry bound for the matrix strip method.
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long)]
        epsilon: f64,
        /// Use this Taylor degree instead of the one certified for epsilon.
        #[arg(long)]
        degree: Option<usize>,
        /// Also run the exact oracle and report the realized error.
        #[arg(long)]
        verify: bool,
        /// Skip the region check. No error bound is reported.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = RuleArg::Balanced)]
        strip_rule: RuleArg,
    },
    /// Region membership test.
    CheckRegion {
        path: PathBuf,
        /// One of disc-per, disc-haf, disc-tensor, strip-per, strip-haf, strip-tensor, l1-per, l1-tensor.
        #[arg(long)]
        region: String,
        #[arg(long)]
        eta: f64,
        #[arg(long, default_value_t = 0.0)]
        tau: f64,
    },
    /// Seeded random instances run against their oracles.
    Benchmark {
        #[arg(long, value_enum, default_value_t = Suite::Small)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Constants of the strip map for a given rho.
    PhiTable {
        #[arg(long)]
        rho: f64,
    },
}

/// A finished command: its report, a text rendering and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub report: RunReport,
    pub text: String,
    pub exit_code: i32,
    /// Messages for standard error.
    pub warnings: Vec<String>,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.report.to_json(),
            Format::Text => self.text.clone(),
        }
    }
}

fn complex_json(z: Complex) -> Value {
    json!([z.re, z.im])
}

fn fmt_complex(z: Complex) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!(
            "{} {} {}i",
            z.re,
            if z.im < 0.0 { "-" } else { "+" },
            z.im.abs()
        )
    }
}

/// Exact value by the oracle for the instance's kind.
pub fn exact_value(instance: &Instance) -> Result<Complex, CliError> {
    Ok(match instance {
        Instance::Matrix(a) => permanent_exact(a)?,
        Instance::Symmetric(a) => hafnian_exact(a)?,
        Instance::Tensor(a) => tensor_permanent_exact(a)?,
    })
}

/// `|a - b|` with the imaginary difference taken modulo `2 pi`, so that
/// logarithms on different branches compare equal.
pub fn log_distance(a: Complex, b: Complex) -> f64 {
    let d = a - b;
    let im = d.im - TAU * (d.im / TAU).round();
    Complex::new(d.re, im).norm()
}

/// Runs the requested pipeline on `instance`.
pub fn approximate(
    instance: &Instance,
    method: Method,
    eta: Option<f64>,
    delta: Option<f64>,
    epsilon: f64,
    options: &ApproxOptions,
) -> Result<ApproxReport, CliError> {
    let need = |v: Option<f64>, flag: &str| {
        v.ok_or_else(|| {
            CliError::Input(
                format!(
                    "--method {method:?} on a {} needs {flag}",
                    instance.kind_name()
                )
                .to_lowercase(),
            )
        })
    };
    let report = match method {
        Method::Disc => approx_log_disc(instance, need(eta, "--eta")?, epsilon, options)?,
        Method::L1 => approx_log_l1(instance, need(eta, "--eta")?, epsilon, options)?,
        Method::Strip => {
            let param = match instance {
                Instance::Tensor(_) => need(eta, "--eta")?,
                _ => need(delta, "--delta")?,
            };
            approx_log_strip(instance, param, epsilon, options)?
        }
    };
    Ok(report)
}

fn exact_cmd(path: &PathBuf) -> Result<Outcome, CliError> {
    let (instance, digest) = load_instance(path)?;
    let start = Instant::now();
    let value = exact_value(&instance)?;
    let (log_json, log_text) = if value.norm() > 0.0 {
        let l = value.ln();
        (complex_json(l), fmt_complex(l))
    } else {
        (json!("undefined"), "undefined".to_string())
    };
    let results =
        json!({ "kind": instance.kind_name(), "value": complex_json(value), "log": log_json });
    Ok(Outcome {
        text: format!("value: {}\nlog: {log_text}\n", fmt_complex(value)),
        report: RunReport {
            command: json!({ "name": "exact", "path": path }),
            instance_digest: Some(digest),
            seed: None,
            results,
            elapsed_s: start.elapsed().as_secs_f64(),
        },
        exit_code: EXIT_OK,
        warnings: Vec::new(),
    })
}

#[allow(clippy::too_many_arguments)]
fn approx_cmd(
    path: &PathBuf,
    method: Method,
    eta: Option<f64>,
    delta: Option<f64>,
    epsilon: f64,
    degree: Option<usize>,
    verify: bool,
    force: bool,
    rule: RuleArg,
) -> Result<Outcome, CliError> {
    let (instance, digest) = load_instance(path)?;
    let start = Instant::now();
    let strip_rule = match rule {
        RuleArg::Balanced => StripRule::Balanced,
        RuleArg::Midpoint => StripRule::Midpoint,
    };
    let options = ApproxOptions {
        degree,
        force,
        strip_rule,
        ..ApproxOptions::default()
    };
    let mut warnings = Vec::new();
    if force {
        warnings.push(
            "WARNING: --force skips the region check; the result carries NO certified error bound"
                .to_string(),
        );
    }
    let report = approximate(&instance, method, eta, delta, epsilon, &options)?;
    let mut text = format!(
        "log_value: {}\ndegree: {}\nerror_bound: {}\npipeline: {:?}\n",
        fmt_complex(report.log_value),
        report.degree_used,
        report
            .error_bound
            .map_or("none".to_string(), |b| format!("{b:e}")),
        report.pipeline,
    );
    let mut results =
        json!({ "approx": serde_json::to_value(&report).expect("reports serialize") });
    let mut exit_code = EXIT_OK;
    if verify {
        let verification = match exact_value(&instance) {
            Ok(v) if v.norm() > 0.0 => {
                let exact = v.ln();
                let realized = log_distance(report.log_value, exact);
                if report.error_bound.is_some_and(|b| !(realized <= b)) {
                    exit_code = EXIT_CERTIFICATE;
                    warnings.push(format!(
                        "WARNING: realized error {realized:e} exceeds the certified bound"
                    ));
                }
                text += &format!(
                    "exact_log: {}\nrealized_error: {realized:e}\n",
                    fmt_complex(exact)
                );
                json!({ "exact_log": complex_json(exact), "realized_error": realized })
            }
            Ok(_) => {
                text += "exact_log: undefined\n";
                json!({ "exact_log": "undefined" })
            }
            Err(e) => {
                text += &format!("verification skipped: {e}\n");
                json!({ "skipped": e.to_string() })
            }
        };
        results["verification"] = verification;
    }
    if force {
        results["warning"] = json!("region check skipped; no certified bound");
    }
    Ok(Outcome {
        report: RunReport {
            command: json!({
                "name": "approx",
                "path": path,
                "method": format!("{method:?}").to_lowercase(),
                "eta": eta,
                "delta": delta,
                "epsilon": epsilon,
                "degree": degree,
                "verify": verify,
                "force": force,
                "strip_rule": format!("{rule:?}").to_lowercase(),
            }),
            instance_digest: Some(digest),
            seed: None,
            results,
            elapsed_s: start.elapsed().as_secs_f64(),
        },
        text,
        exit_code,
        warnings,
    })
}

fn region_text(report: &MembershipReport) -> String {
    let at = report
        .worst
        .as_ref()
        .map(describe_location)
        .unwrap_or_else(|| "-".into());
    format!(
        "region: {}\ninside: {}\nmargin: {:e}\nworst: {at}\nworst_value: {:e}\nbound: {:e}\n",
        report.kind.name(),
        report.inside,
        report.margin,
        report.worst_value,
        report.bound
    )
}

fn check_region_cmd(path: &PathBuf, region: &str, eta: f64, tau: f64) -> Result<Outcome, CliError> {
    let (instance, digest) = load_instance(path)?;
    let start = Instant::now();
    let kind = RegionKind::from_name(region)
        .ok_or_else(|| CliError::Input(format!("unknown region kind `{region}`")))?;
    let d = match &instance {
        Instance::Tensor(t) => t.d(),
        _ => 2,
    };
    let spec = RegionSpec::new(kind, d, eta, tau)?;
    let report = check_region(&instance, &spec).map_err(|e| CliError::Input(e.to_string()))?;
    let mut results = serde_json::to_value(&report).expect("reports serialize");
    if let Some(loc) = &report.worst {
        results["worst_described"] = json!(describe_location(loc));
    }
    Ok(Outcome {
        text: region_text(&report),
        report: RunReport {
            command: json!({ "name": "check-region", "path": path, "region": region, "eta": eta, "tau": tau }),
            instance_digest: Some(digest),
            seed: None,
            results,
            elapsed_s: start.elapsed().as_secs_f64(),
        },
        exit_code: if report.inside { EXIT_OK } else { EXIT_REGION },
        warnings: Vec::new(),
    })
}

fn benchmark_cmd(suite: Suite, seed: u64) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let rows = benchmark::run_suite(suite, seed)?;
    let all_ok = rows.iter().all(|r| r.ok);
    let text = benchmark::table(&rows);
    let mut warnings = Vec::new();
    if !all_ok {
        warnings
            .push("certificate violated: realized error exceeds the certified bound".to_string());
    }
    Ok(Outcome {
        report: RunReport {
            command: json!({ "name": "benchmark", "suite": format!("{suite:?}").to_lowercase() }),
            instance_digest: None,
            seed: Some(seed),
            results: json!({ "rows": serde_json::to_value(&rows).expect("rows serialize"), "all_within_bound": all_ok }),
            elapsed_s: start.elapsed().as_secs_f64(),
        },
        text,
        exit_code: if all_ok { EXIT_OK } else { EXIT_CERTIFICATE },
        warnings,
    })
}

fn phi_table_cmd(rho: f64) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let constants = PhiConstants::new(rho)?;
    let mut results =
        json!({ "constants": serde_json::to_value(constants).expect("constants serialize") });
    let mut text = format!(
        "rho: {}\nalpha: {}\nbeta: {}\nbeta_minus_one: {:e}\ndegree: {}\nsigma: {}\n",
        constants.rho,
        constants.alpha,
        constants.beta,
        constants.beta_excess,
        constants.degree,
        constants.sigma
    );
    match build_phi(rho) {
        Ok(phi) => {
            let shown: Vec<f64> = phi.coeffs.iter().take(16).copied().collect();
            text += &format!("leading coefficients: {shown:?}\n");
            results["leading_coefficients"] = json!(shown);
        }
        Err(e) => {
            text += &format!("coefficients not materialised: {e}\n");
            results["leading_coefficients"] = Value::Null;
        }
    }
    Ok(Outcome {
        text,
        report: RunReport {
            command: json!({ "name": "phi-table", "rho": rho }),
            instance_digest: None,
            seed: None,
            results,
            elapsed_s: start.elapsed().as_secs_f64(),
        },
        exit_code: EXIT_OK,
        warnings: Vec::new(),
    })
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Exact { path } => exact_cmd(path),
        Command::Approx {
            path,
            method,
            eta,
            delta,
            epsilon,
            degree,
            verify,
            force,
            strip_rule,
        } => approx_cmd(
            path,
            *method,
            *eta,
            *delta,
            *epsilon,
            *degree,
            *verify,
            *force,
            *strip_rule,
        ),
        Command::CheckRegion {
            path,
            region,
            eta,
            tau,
        } => check_region_cmd(path, region, *eta, *tau),
        Command::Benchmark { suite, seed } => benchmark_cmd(*suite, *seed),
        Command::PhiTable { rho } => phi_table_cmd(*rho),
    }
}
