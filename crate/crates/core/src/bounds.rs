//! Frobenius thresholds: the smallest `t` with `p^t` beyond a degree bound.

use crate::field_tower::is_prime;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// `S^N(V)` of `SL(2)`.
    Symmetric { big_n: u64 },
    /// `V^{⊗m}`.
    Tensor { m: u64 },
    /// `∧^r(V^{⊗m})`, maximised over `r`.
    Wedge { m: u64 },
    /// A module of Jordan–Hölder degree `d`.
    JordanHolder { d: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub rep: Representation,
    pub p: u64,
    pub n_raw: BigUint,
    pub t: u32,
    /// The maximisation range was empty; the bound is vacuous.
    pub degenerate: bool,
}

fn check_p(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidArgument(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Base-`p` digits of `big_n`, least significant first.
pub fn padic_digits(big_n: &BigUint, p: u64) -> Result<Vec<u64>> {
    check_p(p)?;
    if big_n.is_zero() {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    Ok(big_n
        .to_radix_le(p as u32)
        .into_iter()
        .map(u64::from)
        .collect())
}

/// Index of the most significant nonzero `p`-adic digit of `N`.
pub fn sl2_symmetric_t(big_n: u64, p: u64) -> Result<u32> {
    let digits = padic_digits(&BigUint::from(big_n), p)?;
    Ok(digits.len() as u32 - 1)
}

/// Minimal `t` with `p^t > bound`.
pub fn threshold_exponent(bound: &BigUint, p: u64) -> u32 {
    let mut t = 0;
    let mut power = BigUint::one();
    while &power <= bound {
        power *= p;
        t += 1;
    }
    t
}

/// Exact binomial coefficient.
pub fn binomial(a: u64, r: u64) -> Result<BigUint> {
    if r > a {
        return Err(Error::InvalidArgument(format!(
            "binomial({a}, {r}) needs r <= a"
        )));
    }
    let r = r.min(a - r);
    let mut c = BigUint::one();
    for i in 0..r {
        c = c * (a - i) / (i + 1);
    }
    Ok(c)
}

fn report(n: u64, rep: Representation, p: u64, n_raw: BigUint, degenerate: bool) -> BoundReport {
    let t = threshold_exponent(&n_raw, p);
    BoundReport {
        n,
        rep,
        p,
        n_raw,
        t,
        degenerate,
    }
}

fn dim_power(n: u64, m: u64) -> Result<u64> {
    u32::try_from(m)
        .ok()
        .and_then(|m| n.checked_pow(m))
        .ok_or_else(|| Error::InvalidArgument("n^m does not fit in 64 bits".into()))
}

/// `max_{r ∈ range} C(M, r)·r·m` with `M = n^m`.
fn binomial_max(big_m: u64, m: u64, range: impl Iterator<Item = u64>) -> Option<BigUint> {
    range
        .map(|r| binomial(big_m, r).expect("r <= M") * r * m)
        .max()
}

/// `p^t > m·n^m`.
pub fn tensor_t(n: u64, m: u64, p: u64) -> Result<BoundReport> {
    check_p(p)?;
    positive("n", n)?;
    positive("m", m)?;
    let n_raw = BigUint::from(m) * BigUint::from(n).pow(m as u32);
    Ok(report(n, Representation::Tensor { m }, p, n_raw, false))
}

/// `p^t > max_{0 ≤ r ≤ n^m - 1} C(n^m, r)·(rm)`.
pub fn wedge_t(n: u64, m: u64, p: u64) -> Result<BoundReport> {
    check_p(p)?;
    positive("n", n)?;
    positive("m", m)?;
    let big_m = dim_power(n, m)?;
    let n_raw = binomial_max(big_m, m, 0..big_m).expect("r = 0 is always in range");
    Ok(report(n, Representation::Wedge { m }, p, n_raw, false))
}

/// `p^t > max_{0 < r ≤ n^d - 1} C(n^d, r)·(rd)`; an empty range is reported
/// as degenerate with `N_raw = 0`.
pub fn jh_t(n: u64, d: u64, p: u64) -> Result<BoundReport> {
    check_p(p)?;
    positive("n", n)?;
    positive("d", d)?;
    let big_m = dim_power(n, d)?;
    let rep = Representation::JordanHolder { d };
    Ok(match binomial_max(big_m, d, 1..big_m) {
        Some(n_raw) => report(n, rep, p, n_raw, false),
        None => report(n, rep, p, BigUint::zero(), true),
    })
}

/// The symmetric-power case as a report: `t` is the top digit index.
pub fn symmetric_report(big_n: u64, p: u64) -> Result<BoundReport> {
    let t = sl2_symmetric_t(big_n, p)?;
    Ok(BoundReport {
        n: 2,
        rep: Representation::Symmetric { big_n },
        p,
        n_raw: BigUint::from(big_n),
        t,
        degenerate: false,
    })
}
