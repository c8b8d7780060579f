use crate::combinatorics::combinations;
use crate::field_tower::Field;
use crate::{Error, Result};

/// A vector of `V^{⊗m}`, `dim V = n`, in the word basis `X_{i₁}⊗…⊗X_{i_m}`
/// ordered lexicographically (`X₁X₁, X₁X₂, X₂X₁, X₂X₂` for `n = m = 2`).
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<F: Field> {
    n: usize,
    m: usize,
    coeffs: Vec<F>,
}

/// Position of a 1-based word in the lexicographic basis.
pub fn word_index(word: &[usize], n: usize) -> Result<usize> {
    word.iter().try_fold(0usize, |acc, &letter| {
        if letter == 0 || letter > n {
            Err(Error::IndexOutOfRange {
                index: letter,
                max: n,
            })
        } else {
            Ok(acc * n + letter - 1)
        }
    })
}

/// The 1-based word at `index`.
pub fn word_at(index: usize, n: usize, m: usize) -> Vec<usize> {
    let mut w = vec![0; m];
    let mut k = index;
    for slot in w.iter_mut().rev() {
        *slot = k % n + 1;
        k /= n;
    }
    w
}

pub(crate) fn check_shape(n: usize, m: usize) -> Result<usize> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("n and m must be positive".into()));
    }
    (n as u32)
        .checked_pow(m as u32)
        .map(|d| d as usize)
        .filter(|&d| d <= 1 << 20)
        .ok_or_else(|| Error::InvalidArgument("n^m is too large".into()))
}

impl<F: Field> Tensor<F> {
    pub fn new(n: usize, m: usize, coeffs: Vec<F>) -> Result<Self> {
        let dim = check_shape(n, m)?;
        if coeffs.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: coeffs.len(),
            });
        }
        Ok(Tensor { n, m, coeffs })
    }

    pub fn zero(n: usize, m: usize, template: &F) -> Result<Self> {
        let dim = check_shape(n, m)?;
        Ok(Tensor {
            n,
            m,
            coeffs: vec![template.zero_like(); dim],
        })
    }

    /// Sums `coeff · word` over the pairs; repeated words accumulate.
    pub fn from_words(n: usize, m: usize, pairs: &[(Vec<usize>, F)], template: &F) -> Result<Self> {
        let mut t = Tensor::zero(n, m, template)?;
        for (word, c) in pairs {
            if word.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    got: word.len(),
                });
            }
            let k = word_index(word, n)?;
            t.coeffs[k] = t.coeffs[k].add(c);
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    /// Nonzero `(1-based word, coefficient)` pairs in basis order.
    pub fn support(&self) -> impl Iterator<Item = (Vec<usize>, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (word_at(k, self.n, self.m), c))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if (self.n, self.m) != (rhs.n, rhs.m) {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                got: rhs.coeffs.len(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Tensor { coeffs, ..*self })
    }

    pub fn scale(&self, c: &F) -> Self {
        Tensor {
            n: self.n,
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }
}

/// A vector of `∧^r(V^{⊗m})` in the basis `w_{k₁}∧…∧w_{k_r}`, `k₁ < … < k_r`,
/// ordered lexicographically over the word order.
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeVector<F: Field> {
    n: usize,
    m: usize,
    r: usize,
    coeffs: Vec<F>,
}

impl<F: Field> WedgeVector<F> {
    pub fn new(n: usize, m: usize, r: usize, coeffs: Vec<F>) -> Result<Self> {
        let dim = wedge_dimension(n, m, r)?;
        if coeffs.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: coeffs.len(),
            });
        }
        Ok(WedgeVector { n, m, r, coeffs })
    }

    /// Sums `coeff · (word₁ ∧ … ∧ word_r)`; factors are sorted with the
    /// matching sign, repeated factors give zero.
    pub fn from_wedges(
        n: usize,
        m: usize,
        r: usize,
        pairs: &[(Vec<Vec<usize>>, F)],
        template: &F,
    ) -> Result<Self> {
        let dim = wedge_dimension(n, m, r)?;
        let basis = combinations(n.pow(m as u32), r);
        let mut coeffs = vec![template.zero_like(); dim];
        for (words, c) in pairs {
            if words.len() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    got: words.len(),
                });
            }
            let mut idx = Vec::with_capacity(r);
            for w in words {
                if w.len() != m {
                    return Err(Error::DimensionMismatch {
                        expected: m,
                        got: w.len(),
                    });
                }
                idx.push(word_index(w, n)?);
            }
            let mut odd = false;
            for i in 0..idx.len() {
                for j in i + 1..idx.len() {
                    if idx[i] > idx[j] {
                        odd = !odd;
                    }
                }
            }
            idx.sort_unstable();
            if idx.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let k = basis
                .binary_search(&idx)
                .expect("sorted subset is a basis element");
            let c = if odd { c.neg() } else { c.clone() };
            coeffs[k] = coeffs[k].add(&c);
        }
        Ok(WedgeVector { n, m, r, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }
}

/// `C(n^m, r)`, erroring when `r` is outside `1..=n^m`.
pub fn wedge_dimension(n: usize, m: usize, r: usize) -> Result<usize> {
    let big_m = check_shape(n, m)?;
    if r == 0 || r > big_m {
        return Err(Error::InvalidArgument(format!(
            "r = {r} outside 1..={big_m}"
        )));
    }
    let mut c: u128 = 1;
    for i in 0..r {
        c = c * (big_m - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(c)
        .ok()
        .filter(|&c| c <= 1 << 20)
        .ok_or_else(|| Error::InvalidArgument("wedge dimension is too large".into()))
}
