use crate::envelope::{int, invalid, CliError};
use instability_core::bounds::binomial;
use instability_core::bundle_calc::{
    fraction_parts, frobenius_pullback, hn_filtration, induced, instability_degree, slope, Functor,
    SplittingType,
};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Hn,
    Slope,
    Instability,
    Frob,
    Tensor,
    Wedge,
    Sym,
}

/// `E = ⊕ O(d_i)` on the projective line and an operation on it.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Payload {
    pub degrees: Vec<i64>,
    pub op: Op,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    /// Second factor for `tensor`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub with: Option<Vec<i64>>,
    /// Exterior or symmetric power for `wedge` / `sym`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

const MAX_RANK: u64 = 1_000_000;

fn fraction(q: &BigRational) -> Value {
    let (num, den) = fraction_parts(q);
    json!({ "num": int(&num), "den": int(&den) })
}

fn ints(xs: &[BigInt]) -> Vec<Value> {
    xs.iter().map(int).collect()
}

/// Everything about a splitting type that the operations report.
fn describe(st: &SplittingType) -> Value {
    let blocks: Vec<Value> = hn_filtration(st)
        .iter()
        .map(|b| json!({ "degree": int(&b.degree), "multiplicity": b.multiplicity, "slope": fraction(&b.slope()) }))
        .collect();
    json!({
        "degrees": ints(st.degrees()),
        "rank": st.rank(),
        "degree": int(&st.degree()),
        "slope": fraction(&slope(st)),
        "semistable": st.is_semistable(),
        "instability_degree": int(&instability_degree(st)),
        "blocks": blocks,
    })
}

pub fn run(payload: &Payload) -> Result<Value, CliError> {
    let st = SplittingType::from_i64(&payload.degrees)?;
    let result = match payload.op {
        Op::Hn => describe(&st),
        Op::Slope => json!({ "slope": fraction(&slope(&st)) }),
        Op::Instability => json!({ "instability_degree": int(&instability_degree(&st)) }),
        Op::Frob => {
            let p = payload.p.ok_or_else(|| invalid("--op frob needs --p"))?;
            if !instability_core::field_tower::is_prime(p) {
                return Err(instability_core::Error::NotPrime(p).into());
            }
            let t = payload.t.ok_or_else(|| invalid("--op frob needs --t"))?;
            let pulled = frobenius_pullback(&st, p, t);
            // the degree law F^{t*}: instability degree scales by p^t
            let expected = instability_degree(&st) * BigInt::from(p).pow(t);
            if instability_degree(&pulled) != expected {
                return Err(CliError::Certificate(
                    "Frobenius pullback breaks the degree law".into(),
                ));
            }
            json!({ "p": p, "t": t, "pullback": describe(&pulled) })
        }
        Op::Tensor => {
            let other = payload
                .with
                .as_ref()
                .ok_or_else(|| invalid("--op tensor needs --with"))?;
            let other = SplittingType::from_i64(other)?;
            super::guard(
                "the tensor product",
                &(BigUint::from(st.rank()) * other.rank()),
                MAX_RANK,
            )?;
            json!({ "induced": describe(&induced(&st, &Functor::TensorWith(other))?) })
        }
        Op::Wedge => {
            let r = payload.r.ok_or_else(|| invalid("--op wedge needs --r"))?;
            if r >= 1 && r <= st.rank() {
                super::guard(
                    "the exterior power",
                    &binomial(st.rank() as u64, r as u64)?,
                    MAX_RANK,
                )?;
            }
            json!({ "r": r, "induced": describe(&induced(&st, &Functor::Wedge(r))?) })
        }
        Op::Sym => {
            let r = payload.r.ok_or_else(|| invalid("--op sym needs --r"))?;
            let rank = binomial((st.rank() + r - 1) as u64, r as u64)?;
            super::guard("the symmetric power", &rank, MAX_RANK)?;
            json!({ "r": r, "induced": describe(&induced(&st, &Functor::Sym(r))?) })
        }
    };
    let mut out = json!({ "op": payload.op, "input": ints(st.degrees()) });
    if let (Value::Object(o), Value::Object(r)) = (&mut out, result) {
        o.extend(r);
    }
    Ok(out)
}
