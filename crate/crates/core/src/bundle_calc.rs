//! Split vector bundles `⊕ O(d_i)` on the projective line.
//!
//! For split bundles the Harder–Narasimhan filtration is the grouping of the
//! summands by degree, so everything here is sorting and integer arithmetic.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

/// Degrees of the line summands, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingType {
    degrees: Vec<BigInt>,
}

impl SplittingType {
    pub fn new(mut degrees: Vec<BigInt>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidArgument(
                "a bundle has rank at least 1".into(),
            ));
        }
        degrees.sort_by(|a, b| b.cmp(a));
        Ok(SplittingType { degrees })
    }

    pub fn from_i64(degrees: &[i64]) -> Result<Self> {
        Self::new(degrees.iter().map(|&d| BigInt::from(d)).collect())
    }

    pub fn degrees(&self) -> &[BigInt] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self) -> BigInt {
        self.degrees.iter().sum()
    }

    pub fn is_semistable(&self) -> bool {
        self.degrees.first() == self.degrees.last()
    }
}

/// `μ = deg / rk`.
pub fn slope(st: &SplittingType) -> BigRational {
    BigRational::new(st.degree(), BigInt::from(st.rank()))
}

/// One graded piece of the HN filtration: `multiplicity` copies of `O(degree)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnBlock {
    pub degree: BigInt,
    pub multiplicity: usize,
}

impl HnBlock {
    pub fn slope(&self) -> BigRational {
        BigRational::from_integer(self.degree.clone())
    }
}

/// HN quotients in order of strictly decreasing slope.
pub fn hn_filtration(st: &SplittingType) -> Vec<HnBlock> {
    let mut blocks: Vec<HnBlock> = Vec::new();
    for d in &st.degrees {
        match blocks.last_mut() {
            Some(b) if &b.degree == d => b.multiplicity += 1,
            _ => blocks.push(HnBlock {
                degree: d.clone(),
                multiplicity: 1,
            }),
        }
    }
    blocks
}

/// `μ_max − μ_min`; zero iff semistable.
pub fn instability_degree(st: &SplittingType) -> BigInt {
    st.degrees.first().unwrap() - st.degrees.last().unwrap()
}

/// `F^{t*}`: every summand degree times `p^t`.
pub fn frobenius_pullback(st: &SplittingType, p: u64, t: u32) -> SplittingType {
    let factor: BigInt = BigInt::from(p).pow(t);
    SplittingType {
        degrees: st.degrees.iter().map(|d| d * &factor).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Functor {
    TensorWith(SplittingType),
    Wedge(usize),
    Sym(usize),
}

/// The splitting type of `E ⊗ E₂`, `∧^r E` or `S^N E`.
pub fn induced(st: &SplittingType, functor: &Functor) -> Result<SplittingType> {
    let d = &st.degrees;
    let degrees: Vec<BigInt> = match functor {
        Functor::TensorWith(other) => d
            .iter()
            .flat_map(|a| other.degrees.iter().map(move |b| a + b))
            .collect(),
        Functor::Wedge(r) => {
            if *r == 0 || *r > d.len() {
                return Err(Error::InvalidArgument(format!(
                    "wedge power {r} outside 1..={}",
                    d.len()
                )));
            }
            crate::combinatorics::combinations(d.len(), *r)
                .iter()
                .map(|c| c.iter().map(|&i| &d[i]).sum())
                .collect()
        }
        Functor::Sym(big_n) => {
            if *big_n == 0 {
                return Ok(SplittingType {
                    degrees: vec![BigInt::from(0)],
                });
            }
            multisets(d.len(), *big_n)
                .iter()
                .map(|c| c.iter().map(|&i| &d[i]).sum())
                .collect()
        }
    };
    SplittingType::new(degrees)
}

/// Nondecreasing index sequences of length `k` over `0..n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] + 1 < n) else {
            return out;
        };
        let v = cur[i] + 1;
        for slot in &mut cur[i..] {
            *slot = v;
        }
    }
}

/// Slope as a reduced `(num, den)` pair.
pub fn fraction_parts(q: &BigRational) -> (BigInt, BigInt) {
    (q.numer().clone(), q.denom().clone())
}
