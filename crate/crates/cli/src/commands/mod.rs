//! One handler per subcommand: a serde payload in, a JSON result out.

pub mod binary_form;
pub mod bounds;
pub mod bundle;
pub mod ep;
pub mod kempf;

use crate::envelope::{invalid, CliError};
use serde::de::DeserializeOwned;
use serde_json::Value;

pub const SUBCOMMANDS: [&str; 5] = ["binary-form", "kempf", "ep", "bounds", "bundle"];

/// Runs one request against the matching handler.
pub fn dispatch(subcommand: &str, payload: &Value) -> Result<Value, CliError> {
    match subcommand {
        "binary-form" => binary_form::run(&decode(payload)?),
        "kempf" => kempf::run(&decode(payload)?),
        "ep" => ep::run(&decode(payload)?),
        "bounds" => bounds::run(&decode(payload)?),
        "bundle" => bundle::run(&decode(payload)?),
        other => Err(invalid(format!(
            "unknown subcommand '{other}', expected one of {}",
            SUBCOMMANDS.join(", ")
        ))),
    }
}

fn decode<T: DeserializeOwned>(payload: &Value) -> Result<T, CliError> {
    serde_json::from_value(payload.clone()).map_err(|e| invalid(format!("payload: {e}")))
}

/// Refuses requests whose output or search space would exceed `limit` items.
pub fn guard(what: &str, size: &num_bigint::BigUint, limit: u64) -> Result<(), CliError> {
    if *size > num_bigint::BigUint::from(limit) {
        return Err(invalid(format!(
            "{what} would have size {size}, above the limit of {limit}"
        )));
    }
    Ok(())
}

/// Parses a JSON flag value, keeping serde's line/column in the message.
pub fn parse_json<T: DeserializeOwned>(flag: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| invalid(format!("--{flag}: {e}")))
}

/// Comma-separated list of integers, or a JSON array.
pub fn parse_int_list(flag: &str, text: &str) -> Result<Vec<i64>, CliError> {
    if text.trim_start().starts_with('[') {
        return parse_json(flag, text);
    }
    text.split(',')
        .enumerate()
        .map(|(k, item)| {
            item.trim().parse().map_err(|_| {
                invalid(format!(
                    "--{flag}: entry {k} ('{}') is not an integer",
                    item.trim()
                ))
            })
        })
        .collect()
}
