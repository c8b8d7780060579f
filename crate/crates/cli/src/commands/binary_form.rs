use crate::envelope::{int, invalid, CliError};
use instability_core::binary_forms::{analyze, format_upoly, hm_weight, BinaryForm, SepPart};
use instability_core::bounds::sl2_symmetric_t;
use instability_core::field_tower::parse_element;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// A form by its coefficients `a_N, …, a_0` of `X^N, …, Y^N`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Payload {
    pub p: u64,
    pub coeffs: Vec<String>,
}

/// Reads `--coeffs`: a JSON array of strings/integers or a comma list.
pub fn parse_coeffs(text: &str) -> Result<Vec<String>, CliError> {
    if !text.trim_start().starts_with('[') {
        return Ok(text.split(',').map(|c| c.trim().to_string()).collect());
    }
    let items: Vec<Value> = super::parse_json("coeffs", text)?;
    items
        .iter()
        .enumerate()
        .map(|(k, v)| coeff_text(k, v))
        .collect()
}

pub fn coeff_text(k: usize, v: &Value) -> Result<String, CliError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(invalid(format!(
            "coefficient {k}: expected a string or integer, got {other}"
        ))),
    }
}

/// One corpus line: a bare coefficient array (using `default_p`) or an
/// object `{"p": …, "coeffs": […]}`.
pub fn corpus_line(line: &str, default_p: Option<u64>) -> Result<Payload, CliError> {
    let value: Value =
        serde_json::from_str(line).map_err(|e| invalid(format!("corpus line: {e}")))?;
    let (p, coeffs) = match &value {
        Value::Array(items) => (default_p, items.clone()),
        Value::Object(map) => {
            let p = match map.get("p") {
                Some(v) => Some(
                    v.as_u64()
                        .ok_or_else(|| invalid("\"p\" must be a positive integer"))?,
                ),
                None => default_p,
            };
            let coeffs = map
                .get("coeffs")
                .and_then(Value::as_array)
                .ok_or_else(|| invalid("missing \"coeffs\" array"))?;
            (p, coeffs.clone())
        }
        _ => return Err(invalid("corpus line must be an array or an object")),
    };
    let p = p.ok_or_else(|| invalid("no characteristic: give --p or a \"p\" field"))?;
    let coeffs = coeffs
        .iter()
        .enumerate()
        .map(|(k, v)| coeff_text(k, v))
        .collect::<Result<_, _>>()?;
    Ok(Payload { p, coeffs })
}

pub fn run(payload: &Payload) -> Result<Value, CliError> {
    let p = payload.p;
    let coeffs = payload
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, text)| {
            parse_element(text, p).map_err(|e| invalid(format!("coefficient {k} ('{text}'): {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let form = BinaryForm::from_descending(coeffs)?;
    let report = analyze(&form)?;
    let digit_bound = sl2_symmetric_t(form.degree() as u64, p)?;

    let certificate = match (&report.one_ps, report.field_exponent) {
        (Some(one_ps), Some(t)) => {
            let weight = hm_weight(&form, &one_ps.conjugator, 1)?;
            if weight != report.nu.m {
                return Err(CliError::Certificate(format!(
                    "conjugated 1-PS has weight {weight}, expected {}",
                    report.nu.m
                )));
            }
            if t > digit_bound {
                return Err(CliError::Certificate(format!(
                    "field exponent {t} exceeds the digit bound {digit_bound}"
                )));
            }
            json!({ "hm_weight": weight, "checked": true })
        }
        _ => Value::Null,
    };
    let one_ps = report.one_ps.as_ref().map(|o| {
        let rows: Vec<Vec<String>> = o
            .conjugator
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        json!({ "conjugator": rows, "exponents": o.exponents })
    });
    let profile: Vec<Value> = report
        .profile
        .iter()
        .map(|c| {
            let sep = match &c.sep_part {
                SepPart::Affine(h) => format_upoly(h, "X"),
                SepPart::AtInfinity => "[1:0]".to_string(),
            };
            json!({ "sep_part": sep, "mult": c.mult, "insep_exp": c.insep_exp })
        })
        .collect();
    Ok(json!({
        "form": form.to_string(),
        "degree": form.degree(),
        "status": report.status,
        "T": report.dominant_mult,
        "nu": { "m": report.nu.m, "normsq": report.nu.normsq },
        "dominant_root": report.dominant_root.as_ref().map(|r| r.to_string()),
        "field_exponent": report.field_exponent,
        "digit_bound": int(&digit_bound),
        "one_ps": one_ps,
        "parabolic": report.parabolic.as_ref().map(|r| json!({ "stabilizer_of": r.to_string() })),
        "profile": profile,
        "certificate": certificate,
    }))
}
