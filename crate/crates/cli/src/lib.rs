//! Command-line front end for the `logperm` library.
//!
//! Every command builds a [`RunReport`], a key-sorted JSON object. Wall-clock
//! fields are all named `elapsed_s`; [`strip_wall_time`] removes them so that
//! reports from identical inputs and seeds compare byte for byte.

pub mod benchmark;
pub mod commands;
pub mod instance;

use std::fmt;

use serde::Serialize;
use serde_json::Value;

pub use commands::{run, Cli, Command, Format, Outcome};
pub use instance::{instance_digest, load_instance, InstanceFile, InstanceKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_REGION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_CERTIFICATE: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    /// Malformed file, bad flag combination or invalid argument.
    Input(String),
    /// Input outside the region required by the requested pipeline.
    Region(String),
    /// An enumeration budget or size limit was hit.
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Region(_) => EXIT_REGION,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Region(m) => write!(f, "region violation: {m}"),
            CliError::Budget(m) => write!(f, "limit exceeded: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

/// 1-based rendering of a location inside an instance.
pub fn describe_location(loc: &logperm::regions::Location) -> String {
    use logperm::regions::Location;
    match loc {
        Location::Entry(idx) => {
            let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            format!("entry ({})", parts.join(", "))
        }
        Location::Slice { axis, index } => format!("slice {} along axis {}", index + 1, axis + 1),
    }
}

impl From<logperm::Error> for CliError {
    fn from(e: logperm::Error) -> Self {
        use logperm::Error as E;
        match e {
            E::RegionViolation(report) => {
                let at = report
                    .worst
                    .as_ref()
                    .map(describe_location)
                    .unwrap_or_else(|| "-".into());
                CliError::Region(format!(
                    "{} fails at {at}: value {:.6e} exceeds bound {:.6e} (margin {:.3e})",
                    report.kind.name(),
                    report.worst_value,
                    report.bound,
                    report.margin
                ))
            }
            E::BudgetExceeded { .. } | E::SizeLimitExceeded { .. } => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Structured record of one run.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub results: Value,
    pub elapsed_s: f64,
}

impl RunReport {
    /// Key-sorted JSON value (serde_json maps are ordered by key).
    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("reports serialize")
    }
}

/// Copy of `v` with every `elapsed_s` field removed, at any depth.
pub fn strip_wall_time(v: &Value) -> Value {
    match v {
        Value::Object(map) => Value::Object(
            map.iter()
                .filter(|(k, _)| k.as_str() != "elapsed_s")
                .map(|(k, x)| (k.clone(), strip_wall_time(x)))
                .collect(),
        ),
        Value::Array(items) => Value::Array(items.iter().map(strip_wall_time).collect()),
        other => other.clone(),
    }
}
