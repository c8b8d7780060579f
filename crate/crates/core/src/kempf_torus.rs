//! Kempf destabilization for the diagonal torus of `SL(n)` / `GL(n)`.
//!
//! For a state `S` (the torus weights of `v`), `m(v, λ) = min_{χ∈S} ⟨λ, χ⟩`
//! and the optimal direction is the minimum-norm point `q` of the convex
//! hull of the (projected) weights. It is found exactly by enumerating
//! affinely independent subsets, solving the least-norm problem on each
//! affine hull over the rationals and keeping the feasible candidates.
//! That is exponential in the number of weights and meant for states of
//! at most a dozen or so weights.

use crate::combinatorics::combinations;
use crate::elementary_polys::{action_via, theta_tensor, Tensor};
use crate::field_tower::Field;
use crate::matrix::Matrix;
use crate::nu::Nu;
use crate::par::{self, Strategy};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Support of a vector under the diagonal torus: distinct integral weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    n: usize,
    weights: Vec<Vec<i64>>,
}

impl State {
    /// Sorts and deduplicates the weights.
    pub fn new(n: usize, mut weights: Vec<Vec<i64>>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyState);
        }
        if let Some(w) = weights.iter().find(|w| w.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: w.len(),
            });
        }
        weights.sort();
        weights.dedup();
        Ok(State { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }
}

/// The weight of the word `(i₁..i_m)` is `Σ_k e_{i_k}`.
pub fn state_of_tensor<F: Field>(v: &Tensor<F>) -> Result<State> {
    let n = v.n();
    let weights: Vec<Vec<i64>> = v
        .support()
        .map(|(word, _)| {
            let mut w = vec![0i64; n];
            for letter in word {
                w[letter - 1] += 1;
            }
            w
        })
        .collect();
    if weights.is_empty() {
        return Err(Error::ZeroVector);
    }
    State::new(n, weights)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Weights projected to the hyperplane `Σx = 0`.
    #[default]
    Sl,
    Gl,
}

/// Minimum-norm point `q` of the hull together with the face it lies on:
/// `q = Σ barycentric[k] · projected(weights[support[k]])`.
#[derive(Debug, Clone, PartialEq)]
pub struct NearestPoint {
    pub q: Vec<BigRational>,
    pub normsq: BigRational,
    pub support: Vec<usize>,
    pub barycentric: Vec<BigRational>,
}

impl NearestPoint {
    pub fn is_zero(&self) -> bool {
        self.normsq.is_zero()
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Weights as rational points, projected onto `Σx = 0` in SL mode.
pub fn projected_weights(state: &State, mode: Mode) -> Vec<Vec<BigRational>> {
    let n = state.n as i64;
    state
        .weights
        .iter()
        .map(|w| {
            let shift = match mode {
                Mode::Sl => BigRational::new(BigInt::from(w.iter().sum::<i64>()), BigInt::from(n)),
                Mode::Gl => BigRational::zero(),
            };
            w.iter().map(|&x| rat(x) - &shift).collect()
        })
        .collect()
}

/// Solves `A x = b` exactly; `None` if `A` is singular.
fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let k = b.len();
    for col in 0..k {
        let piv = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        b.swap(piv, col);
        let inv = a[col][col].recip();
        let pivot = a[col].clone();
        for r in 0..k {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for (x, y) in a[r][col..].iter_mut().zip(&pivot[col..]) {
                *x -= y * &f;
            }
            let t = &b[col] * &f;
            b[r] -= t;
        }
    }
    Some((0..k).map(|i| &b[i] / &a[i][i]).collect())
}

/// Least-norm point of the affine hull of `points`, if they are affinely
/// independent and the point lies in their convex hull.
fn face_candidate(points: &[&Vec<BigRational>]) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
    let s = points.len();
    // [G 1; 1ᵀ 0] (α, μ) = (0, 1)
    let mut a = vec![vec![BigRational::zero(); s + 1]; s + 1];
    for i in 0..s {
        for j in 0..s {
            a[i][j] = dot(points[i], points[j]);
        }
        a[i][s] = BigRational::one();
        a[s][i] = BigRational::one();
    }
    let mut b = vec![BigRational::zero(); s + 1];
    b[s] = BigRational::one();
    let mut x = solve(a, b)?;
    x.truncate(s);
    if x.iter().any(Signed::is_negative) {
        return None;
    }
    let dim = points[0].len();
    let q = (0..dim)
        .map(|c| points.iter().zip(&x).map(|(p, w)| &p[c] * w).sum())
        .collect();
    Some((q, x))
}

pub fn nearest_point(state: &State, mode: Mode) -> NearestPoint {
    nearest_point_with(state, mode, Strategy::Auto)
}

/// Exact minimum-norm point of the hull of the state's (projected) weights.
///
/// Subsets are enumerated by size, then lexicographically; among optimal
/// faces the first in that order is reported, whatever the strategy.
pub fn nearest_point_with(state: &State, mode: Mode, strategy: Strategy) -> NearestPoint {
    let points = projected_weights(state, mode);
    let max_size = match mode {
        Mode::Sl => state.n,
        Mode::Gl => state.n + 1,
    }
    .min(points.len());
    let subsets: Vec<Vec<usize>> = (1..=max_size)
        .flat_map(|s| combinations(points.len(), s))
        .collect();
    let candidates = par::map(&subsets, strategy, |subset| {
        let pts: Vec<&Vec<BigRational>> = subset.iter().map(|&i| &points[i]).collect();
        face_candidate(&pts).map(|(q, alpha)| {
            let normsq = dot(&q, &q);
            (normsq, q, alpha)
        })
    });
    let (best, (normsq, q, alpha)) = candidates
        .into_iter()
        .enumerate()
        .filter_map(|(k, c)| c.map(|c| (k, c)))
        .min_by(|(ka, a), (kb, b)| a.0.cmp(&b.0).then(ka.cmp(kb)))
        .expect("singletons are always feasible");
    NearestPoint {
        q,
        normsq,
        support: subsets[best].clone(),
        barycentric: alpha,
    }
}

/// Checks the optimality certificate of `np` against every weight of `state`.
///
/// The support combination must reproduce `q` with nonnegative weights
/// summing to one; if `q ≠ 0`, every projected weight must satisfy
/// `⟨q, χ⟩ ≥ ⟨q, q⟩`.
pub fn verify_certificate(state: &State, mode: Mode, np: &NearestPoint) -> bool {
    let points = projected_weights(state, mode);
    let dim = state.n;
    if np.support.len() != np.barycentric.len()
        || np.support.iter().any(|&i| i >= points.len())
        || np.barycentric.iter().any(Signed::is_negative)
        || np.barycentric.iter().sum::<BigRational>() != BigRational::one()
    {
        return false;
    }
    let combo: Vec<BigRational> = (0..dim)
        .map(|c| {
            np.support
                .iter()
                .zip(&np.barycentric)
                .map(|(&i, w)| &points[i][c] * w)
                .sum()
        })
        .collect();
    if combo != np.q || dot(&np.q, &np.q) != np.normsq {
        return false;
    }
    np.is_zero() || points.iter().all(|p| dot(&np.q, p) >= np.normsq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnePsTag {
    Sl,
    Gl,
}

/// A primitive 1-PS `t ↦ diag(t^{e_1}, …, t^{e_n})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePs {
    exponents: Vec<i64>,
    tag: OnePsTag,
}

impl OnePs {
    pub fn new(exponents: Vec<i64>, tag: OnePsTag) -> Result<Self> {
        let g = exponents.iter().fold(0i64, |g, &e| g.gcd(&e));
        if g != 1 {
            return Err(Error::InvalidArgument(
                "1-PS exponents must be primitive".into(),
            ));
        }
        if tag == OnePsTag::Sl && exponents.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidArgument(
                "SL 1-PS exponents must sum to zero".into(),
            ));
        }
        Ok(OnePs { exponents, tag })
    }

    /// Primitive integral vector positively proportional to `q`.
    pub fn from_direction(q: &[BigRational], tag: OnePsTag) -> Result<Self> {
        let lcm = q.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints: Vec<BigInt> = q.iter().map(|x| (x * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        let exps = ints
            .iter()
            .map(|x| {
                (x / &g)
                    .to_i64()
                    .ok_or_else(|| Error::InvalidArgument("exponent overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        OnePs::new(exps, tag)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn tag(&self) -> OnePsTag {
        self.tag
    }

    pub fn normsq(&self) -> i64 {
        self.exponents.iter().map(|e| e * e).sum()
    }

    /// `m(v, λ)` for a vector with the given state.
    pub fn min_pairing(&self, state: &State) -> i64 {
        state
            .weights
            .iter()
            .map(|w| w.iter().zip(&self.exponents).map(|(a, b)| a * b).sum())
            .min()
            .expect("states are nonempty")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Destabilizer {
    pub lambda: OnePs,
    pub m: i64,
    pub normsq: i64,
    pub nearest: NearestPoint,
}

impl Destabilizer {
    pub fn nu(&self) -> Nu {
        Nu::new(self.m, self.normsq)
    }
}

pub fn torus_destabilizer(state: &State) -> Result<Option<Destabilizer>> {
    torus_destabilizer_with(state, Strategy::Auto)
}

/// The optimal 1-PS of the diagonal torus of `SL(n)`, or `None` if the
/// state is torus-semistable.
pub fn torus_destabilizer_with(state: &State, strategy: Strategy) -> Result<Option<Destabilizer>> {
    let nearest = nearest_point_with(state, Mode::Sl, strategy);
    if nearest.is_zero() {
        return Ok(None);
    }
    let lambda = OnePs::from_direction(&nearest.q, OnePsTag::Sl)?;
    let m = lambda.min_pairing(state);
    debug_assert!(m > 0);
    let normsq = lambda.normsq();
    Ok(Some(Destabilizer {
        lambda,
        m,
        normsq,
        nearest,
    }))
}

/// Block-upper-triangular parabolic `P(λ)`: `perm[k]` is the coordinate at
/// sorted position `k` (exponents descending, stable), `blocks` the sizes of
/// the runs of equal exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicDescriptor {
    pub perm: Vec<usize>,
    pub blocks: Vec<usize>,
}

pub fn parabolic_of(lambda: &OnePs) -> ParabolicDescriptor {
    let e = lambda.exponents();
    let mut perm: Vec<usize> = (0..e.len()).collect();
    perm.sort_by(|&a, &b| e[b].cmp(&e[a]));
    let mut blocks: Vec<usize> = Vec::new();
    for (k, &i) in perm.iter().enumerate() {
        if k > 0 && e[perm[k - 1]] == e[i] {
            *blocks.last_mut().unwrap() += 1;
        } else {
            blocks.push(1);
        }
    }
    ParabolicDescriptor { perm, blocks }
}

/// Best translate found among the candidates. The destabilizer of the
/// original vector is `g⁻¹ λ g`.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateResult<F: Field> {
    pub index: usize,
    pub g: Matrix<F>,
    pub destabilizer: Destabilizer,
}

pub fn best_over_candidates<F: Field>(
    v: &Tensor<F>,
    candidates: &[Matrix<F>],
) -> Result<Option<CandidateResult<F>>> {
    best_over_candidates_with(v, candidates, Strategy::Auto)
}

/// Torus-optimal destabilizers of `g·v` for each candidate `g`, keeping the
/// largest `ν` (first candidate on ties). A lower bound for the true
/// instability measure; only exhaustive when the candidates meet every
/// maximal torus that matters, so a heuristic for `n ≥ 3`.
pub fn best_over_candidates_with<F: Field>(
    v: &Tensor<F>,
    candidates: &[Matrix<F>],
    strategy: Strategy,
) -> Result<Option<CandidateResult<F>>> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let ep = theta_tensor(v);
    let results = par::map(candidates, strategy, |g| -> Result<Option<Destabilizer>> {
        g.check_special()?;
        let moved = action_via(&ep, g)?;
        torus_destabilizer_with(&state_of_tensor(&moved)?, Strategy::Sequential)
    });
    let mut best: Option<(usize, Destabilizer)> = None;
    for (k, r) in results.into_iter().enumerate() {
        if let Some(d) = r? {
            if best.as_ref().is_none_or(|(_, b)| d.nu() > b.nu()) {
                best = Some((k, d));
            }
        }
    }
    Ok(best.map(|(index, destabilizer)| CandidateResult {
        index,
        g: candidates[index].clone(),
        destabilizer,
    }))
}
