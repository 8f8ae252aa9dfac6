//! Instance files: JSON objects with `kind`, the size fields and nested
//! `entries`. Each entry is a bare number or an `[re, im]` pair.

use std::path::Path;

use logperm::{Complex, ComplexMatrix, ComplexTensor, Instance, SymmetricComplexMatrix};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Matrix,
    Symmetric,
    Tensor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub kind: InstanceKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_n: Option<usize>,
    pub entries: Value,
}

fn input_error(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn parse_entry(v: &Value, path: &str) -> Result<Complex, CliError> {
    let num = |x: &Value| {
        x.as_f64()
            .ok_or_else(|| input_error(format!("entry {path}: expected a number")))
    };
    match v {
        Value::Number(_) => Ok(Complex::new(num(v)?, 0.0)),
        Value::Array(pair) if pair.len() == 2 && pair.iter().all(Value::is_number) => {
            Ok(Complex::new(num(&pair[0])?, num(&pair[1])?))
        }
        _ => Err(input_error(format!(
            "entry {path}: expected a number or an [re, im] pair"
        ))),
    }
}

/// Flattens `depth` levels of nested arrays, each of length `n`, in
/// lexicographic order.
fn flatten(
    v: &Value,
    depth: usize,
    n: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Complex>,
) -> Result<(), CliError> {
    let label = || format!("{path:?}");
    if depth == 0 {
        out.push(parse_entry(v, &label())?);
        return Ok(());
    }
    let items = v
        .as_array()
        .ok_or_else(|| input_error(format!("entries {}: expected an array", label())))?;
    if items.len() != n {
        return Err(input_error(format!(
            "entries {}: expected {n} items, found {}",
            label(),
            items.len()
        )));
    }
    for (i, item) in items.iter().enumerate() {
        path.push(i);
        flatten(item, depth - 1, n, path, out)?;
        path.pop();
    }
    Ok(())
}

fn nest(values: &[Complex], depth: usize, n: usize) -> Value {
    if depth == 0 {
        let z = values[0];
        return Value::Array(vec![z.re.into(), z.im.into()]);
    }
    let stride = values.len() / n;
    Value::Array(
        (0..n)
            .map(|i| nest(&values[i * stride..(i + 1) * stride], depth - 1, n))
            .collect(),
    )
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| input_error(format!("malformed instance file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Validates shape (and exact symmetry for the symmetric kind).
    pub fn to_instance(&self) -> Result<Instance, CliError> {
        let size = |field: Option<usize>, name: &str| {
            field.filter(|&s| s > 0).ok_or_else(|| {
                input_error(format!(
                    "{:?} instance needs a positive `{name}`",
                    self.kind
                ))
            })
        };
        let mut flat = Vec::new();
        let core = |e: logperm::Error| input_error(e.to_string());
        Ok(match self.kind {
            InstanceKind::Matrix => {
                if self.two_n.is_some() || self.d.is_some_and(|d| d != 2) {
                    return Err(input_error(
                        "matrix instances take `n` only (d = 2 if given)",
                    ));
                }
                let n = size(self.n, "n")?;
                flatten(&self.entries, 2, n, &mut Vec::new(), &mut flat)?;
                Instance::Matrix(ComplexMatrix::new(n, flat).map_err(core)?)
            }
            InstanceKind::Symmetric => {
                if self.n.is_some() || self.d.is_some() {
                    return Err(input_error("symmetric instances take `two_n` only"));
                }
                let two_n = size(self.two_n, "two_n")?;
                flatten(&self.entries, 2, two_n, &mut Vec::new(), &mut flat)?;
                Instance::Symmetric(SymmetricComplexMatrix::new(two_n, flat).map_err(core)?)
            }
            InstanceKind::Tensor => {
                if self.two_n.is_some() {
                    return Err(input_error("tensor instances take `d` and `n`"));
                }
                let d = size(self.d, "d")?;
                if d < 2 {
                    return Err(input_error("tensor dimension d must be at least 2"));
                }
                let n = size(self.n, "n")?;
                flatten(&self.entries, d, n, &mut Vec::new(), &mut flat)?;
                Instance::Tensor(ComplexTensor::new(d, n, flat).map_err(core)?)
            }
        })
    }

    /// Canonical file for an instance: every entry written as an `[re, im]` pair.
    pub fn from_instance(instance: &Instance) -> Self {
        match instance {
            Instance::Matrix(a) => Self {
                kind: InstanceKind::Matrix,
                d: None,
                n: Some(a.n()),
                two_n: None,
                entries: nest(a.entries(), 2, a.n()),
            },
            Instance::Symmetric(a) => Self {
                kind: InstanceKind::Symmetric,
                d: None,
                n: None,
                two_n: Some(a.two_n()),
                entries: nest(a.entries(), 2, a.two_n()),
            },
            Instance::Tensor(a) => Self {
                kind: InstanceKind::Tensor,
                d: Some(a.d()),
                n: Some(a.n()),
                two_n: None,
                entries: nest(a.entries(), a.d(), a.n()),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("instance files serialize");
        serde_json::to_string(&value).expect("values serialize")
    }
}

/// SHA-256 of the canonical serialisation, in hex.
pub fn instance_digest(instance: &Instance) -> String {
    let canonical = InstanceFile::from_instance(instance).to_json();
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

/// Reads, validates and digests an instance file.
pub fn load_instance(path: &Path) -> Result<(Instance, String), CliError> {
    let instance = InstanceFile::load(path)?.to_instance()?;
    let digest = instance_digest(&instance);
    Ok((instance, digest))
}
