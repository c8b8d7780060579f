//! Small dense square matrices over a [`Field`].

use crate::field_tower::Field;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    n: usize,
    entries: Vec<F>,
}

impl<F: Field> Matrix<F> {
    /// Row-major entries; `entries.len()` must be `n²`.
    pub fn new(n: usize, entries: Vec<F>) -> Result<Self> {
        if entries.len() != n * n || n == 0 {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        Matrix::new(n, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize, template: &F) -> Self {
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    template.one_like()
                } else {
                    template.zero_like()
                }
            })
            .collect();
        Matrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<F>> {
        self.entries.chunks(self.n).map(<[F]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        Matrix { n, entries }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: rhs.n,
            });
        }
        let n = self.n;
        let entries = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                (0..n).fold(self.get(0, 0).zero_like(), |acc, t| {
                    acc.add(&self.get(i, t).mul(rhs.get(t, j)))
                })
            })
            .collect();
        Ok(Matrix { n, entries })
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> F {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = a[0].one_like();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return a[0].zero_like();
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = det.neg();
            }
            let pivot = a[col * n + col].clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = a[r * n + col].mul(&inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a[col * n + j].mul(&factor);
                    a[r * n + j] = a[r * n + j].sub(&v);
                }
            }
        }
        det
    }

    /// Errors unless the determinant is exactly one.
    pub fn check_special(&self) -> Result<()> {
        let d = self.det();
        if d.is_zero() {
            Err(Error::SingularMatrix)
        } else if !d.is_one() {
            Err(Error::DeterminantNotOne)
        } else {
            Ok(())
        }
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let zero = self.entries[0].zero_like();
        let mut a = self.entries.clone();
        let mut b = Matrix::identity(n, &zero).entries;
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
                b.swap(piv * n + j, col * n + j);
            }
            let inv = a[col * n + col].inv().unwrap();
            for j in 0..n {
                a[col * n + j] = a[col * n + j].mul(&inv);
                b[col * n + j] = b[col * n + j].mul(&inv);
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for j in 0..n {
                    a[r * n + j] = a[r * n + j].sub(&a[col * n + j].mul(&f));
                    b[r * n + j] = b[r * n + j].sub(&b[col * n + j].mul(&f));
                }
            }
        }
        Ok(Matrix { n, entries: b })
    }
}
