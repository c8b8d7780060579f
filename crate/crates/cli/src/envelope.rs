//! Response envelopes, request hashing and the two failure classes.

use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;

pub const VERSION: &str = concat!("instability-lab/", env!("CARGO_PKG_VERSION"));

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input: grammar, JSON, non-prime `p`, shapes. Exit code 2.
    #[error("{0}")]
    Validation(String),
    /// A computed certificate did not check out. Exit code 1.
    #[error("certificate check failed: {0}")]
    Certificate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Certificate(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::Certificate(_) => "certificate",
        }
    }
}

impl From<instability_core::Error> for CliError {
    fn from(e: instability_core::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

pub fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub version: &'static str,
    pub subcommand: String,
    pub status: &'static str,
    pub payload_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Value>,
}

/// SHA-256 of the canonical request `{"payload": …, "subcommand": …}`.
/// Object keys serialize sorted, so equal requests hash equally.
pub fn request_hash(subcommand: &str, payload: &Value) -> String {
    let canonical = json!({ "subcommand": subcommand, "payload": payload });
    hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
}

impl Envelope {
    pub fn new(subcommand: &str, payload: &Value, outcome: &Result<Value, CliError>) -> Self {
        let (status, result, error) = match outcome {
            Ok(v) => ("ok", Some(v.clone()), None),
            Err(e) => (
                "error",
                None,
                Some(json!({ "kind": e.kind(), "message": e.to_string() })),
            ),
        };
        Envelope {
            version: VERSION,
            subcommand: subcommand.to_string(),
            status,
            payload_sha256: request_hash(subcommand, payload),
            result,
            error,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("envelopes serialize")
    }

    /// Indented `key: value` lines, nested objects flattened with dots.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} [{}]\n", self.subcommand, self.status, self.version);
        let _ = writeln!(out, "payload_sha256: {}", self.payload_sha256);
        if let Some(Value::Object(map)) = self.result.as_ref().or(self.error.as_ref()) {
            flatten("", map, &mut out);
        }
        out
    }
}

fn flatten(prefix: &str, map: &Map<String, Value>, out: &mut String) {
    for (k, v) in map {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        match v {
            Value::Object(inner) => flatten(&key, inner, out),
            Value::String(s) => {
                let _ = writeln!(out, "{key}: {s}");
            }
            other => {
                let _ = writeln!(out, "{key}: {other}");
            }
        }
    }
}

/// An exact integer as a JSON number, whatever its size.
pub fn int(n: &impl ToString) -> Value {
    Value::Number(
        n.to_string()
            .parse()
            .expect("integers are valid JSON numbers"),
    )
}
