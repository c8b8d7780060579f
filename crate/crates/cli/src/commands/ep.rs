use crate::envelope::{invalid, CliError};
use instability_core::elementary_polys::{matrix_var_names, theta_tensor, Tensor};
use instability_core::field_tower::is_prime;
use instability_core::Fp;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Large prime used when no characteristic is given, so small integer
/// coefficients behave as they would over the integers.
pub const DEFAULT_P: u64 = 2_147_483_647;

/// Each of the `n^m` polynomials can have up to `n^m` terms.
const MAX_DIM: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Tensor,
}

/// `v = Σ coeff · e_{w₁}⊗…⊗e_{w_m}` as (word, coefficient) pairs, words 1-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Payload {
    pub kind: Kind,
    pub n: usize,
    pub m: usize,
    pub p: u64,
    pub v: Vec<(Vec<usize>, i64)>,
}

pub fn run(payload: &Payload) -> Result<Value, CliError> {
    let Payload { kind, n, m, p, .. } = *payload;
    if !is_prime(p) {
        return Err(instability_core::Error::NotPrime(p).into());
    }
    if let Some((k, _)) = payload
        .v
        .iter()
        .enumerate()
        .find(|(_, (w, _))| w.len() != m)
    {
        return Err(invalid(format!("term {k}: word length must be m = {m}")));
    }
    let dim = (n as u64)
        .checked_pow(m as u32)
        .map_or_else(|| num_bigint::BigUint::from(n).pow(m as u32), Into::into);
    super::guard("V^{⊗m}", &dim, MAX_DIM)?;
    let pairs: Vec<(Vec<usize>, Fp)> = payload
        .v
        .iter()
        .map(|(w, c)| (w.clone(), Fp::new(*c, p)))
        .collect();
    let v = Tensor::from_words(n, m, &pairs, &Fp::new(0, p))?;
    let ep = theta_tensor(&v);
    let names = matrix_var_names(n);
    let polys: Vec<String> = ep.polys.iter().map(|f| f.format_with(&names)).collect();
    Ok(json!({
        "kind": kind,
        "n": n,
        "m": m,
        "p": p,
        "variables": names,
        "polynomials": polys,
    }))
}
