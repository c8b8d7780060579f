use crate::envelope::CliError;
use instability_core::bounds::binomial;
use instability_core::kempf_torus::{
    parabolic_of, torus_destabilizer, verify_certificate, Mode, State,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

const MAX_FACES: u64 = 2_000_000;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Payload {
    pub n: usize,
    pub weights: Vec<Vec<i64>>,
}

pub fn run(payload: &Payload) -> Result<Value, CliError> {
    let state = State::new(payload.n, payload.weights.clone())?;
    // the exact search visits every face spanned by at most n weights
    let k = state.weights().len() as u64;
    let faces = (1..=state.n() as u64)
        .filter(|&j| j <= k)
        .map(|j| binomial(k, j).expect("j <= k"))
        .sum();
    super::guard("the face search", &faces, MAX_FACES)?;
    let destabilizer = torus_destabilizer(&state)?;
    let nearest = match &destabilizer {
        Some(d) => d.nearest.clone(),
        None => instability_core::kempf_torus::nearest_point(&state, Mode::Sl),
    };
    if !verify_certificate(&state, Mode::Sl, &nearest) {
        return Err(CliError::Certificate(
            "nearest point fails its supporting-hyperplane check".into(),
        ));
    }
    let certificate = json!({
        "checked": true,
        "support": nearest.support,
        "barycentric": strings(&nearest.barycentric),
    });
    let mut out = json!({
        "n": state.n(),
        "state": state.weights(),
        "status": if destabilizer.is_some() { "unstable" } else { "semistable" },
        "q": strings(&nearest.q),
        "q_normsq": nearest.normsq.to_string(),
        "certificate": certificate,
        "lambda": null,
        "m": null,
        "normsq": null,
        "parabolic": null,
    });
    if let Some(d) = destabilizer {
        let par = parabolic_of(&d.lambda);
        out["lambda"] = json!(d.lambda.exponents());
        out["m"] = json!(d.m);
        out["normsq"] = json!(d.normsq);
        out["parabolic"] = json!({ "perm": par.perm, "blocks": par.blocks });
    }
    Ok(out)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}
