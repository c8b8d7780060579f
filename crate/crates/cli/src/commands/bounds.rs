use crate::envelope::{int, invalid, CliError};
use instability_core::bounds::{
    jh_t, padic_digits, symmetric_report, tensor_t, wedge_t, BoundReport,
};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Rep {
    Symmetric,
    Tensor,
    Wedge,
    Jh,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Payload {
    pub rep: Rep,
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub big_n: Option<u64>,
}

fn need(value: Option<u64>, flag: &str, rep: &str) -> Result<u64, CliError> {
    value.ok_or_else(|| invalid(format!("--rep {rep} needs --{flag}")))
}

pub fn run(payload: &Payload) -> Result<Value, CliError> {
    let p = payload.p;
    let (report, extra): (BoundReport, Value) = match payload.rep {
        Rep::Symmetric => {
            let big_n = need(payload.big_n, "N", "symmetric")?;
            let digits = padic_digits(&BigUint::from(big_n), p)?;
            (
                symmetric_report(big_n, p)?,
                json!({ "N": big_n, "digits": digits }),
            )
        }
        Rep::Tensor => {
            let m = need(payload.m, "m", "tensor")?;
            (
                tensor_t(need(payload.n, "n", "tensor")?, m, p)?,
                json!({ "m": m }),
            )
        }
        Rep::Wedge => {
            let m = need(payload.m, "m", "wedge")?;
            (
                wedge_t(need(payload.n, "n", "wedge")?, m, p)?,
                json!({ "m": m }),
            )
        }
        Rep::Jh => {
            let d = need(payload.d, "d", "jh")?;
            (jh_t(need(payload.n, "n", "jh")?, d, p)?, json!({ "d": d }))
        }
    };
    let mut out = json!({
        "rep": payload.rep,
        "n": report.n,
        "p": report.p,
        "N_raw": int(&report.n_raw),
        "t": report.t,
        "degenerate": report.degenerate,
    });
    if let (Value::Object(o), Value::Object(e)) = (&mut out, extra) {
        o.extend(e);
    }
    Ok(out)
}
