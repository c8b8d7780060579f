use super::Field;

/// Dense univariate polynomial over a [`Field`], coefficients stored from the
/// constant term upward with no trailing zeros.
///
/// The `zero` template fixes the coefficient field even for the zero
/// polynomial.
#[derive(Clone, Debug)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
    zero: F,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>, template: &F) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            zero: template.zero_like(),
        }
    }

    pub fn zero(template: &F) -> Self {
        Poly {
            coeffs: Vec::new(),
            zero: template.zero_like(),
        }
    }

    pub fn constant(c: F) -> Self {
        let zero = c.zero_like();
        Poly::new(vec![c], &zero)
    }

    pub fn one(template: &F) -> Self {
        Poly::constant(template.one_like())
    }

    /// `c · X^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero.clone(); k];
        coeffs.push(c);
        Poly::new(coeffs, &zero)
    }

    /// The linear polynomial `X - root`.
    pub fn linear_root(root: &F) -> Self {
        Poly::new(vec![root.neg(), root.one_like()], root)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn template(&self) -> &F {
        &self.zero
    }

    /// Coefficient of `X^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Poly::new(c, &self.zero)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Poly::new(c, &self.zero)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(F::neg).collect(), &self.zero)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.zero);
        }
        let mut out = vec![self.zero.clone(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out, &self.zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), &self.zero)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.zero);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; `None` when `rhs` is zero.
    pub fn div_rem(&self, rhs: &Self) -> Option<(Self, Self)> {
        let d = rhs.degree()?;
        let lc_inv = rhs.coeffs[d].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Some((Poly::zero(&self.zero), self.clone()));
        }
        let mut quot = vec![self.zero.clone(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].mul(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(b));
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Some((Poly::new(quot, &self.zero), Poly::new(rem, &self.zero)))
    }

    /// Exact quotient; `None` if `rhs` is zero or does not divide `self`.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(F::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.mul(&a.int_like(i as i64)))
            .collect();
        Poly::new(c, &self.zero)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(self.zero.clone(), |acc, c| acc.mul(x).add(c))
    }

    /// Composition with `X^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![self.zero.clone(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Poly::new(out, &self.zero)
    }

    /// Returns `g` with `self = g(X^k)` if only exponents divisible by `k` occur.
    pub fn decimate(&self, k: usize) -> Option<Self> {
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| i % k != 0 && !c.is_zero())
        {
            return None;
        }
        let c = self.coeffs.iter().step_by(k).cloned().collect();
        Some(Poly::new(c, &self.zero))
    }

    /// Applies `f` coefficientwise.
    pub fn map_coeffs<G: Field>(&self, template: &G, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect(), template)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Fp;

    fn p7(c: &[i64]) -> Poly<Fp> {
        let z = Fp::new(0, 7);
        Poly::new(c.iter().map(|&v| Fp::new(v, 7)).collect(), &z)
    }

    #[test]
    fn division_and_gcd() {
        // (X-1)(X-2) and (X-1)(X+3)
        let a = p7(&[-1, 1]).mul(&p7(&[-2, 1]));
        let b = p7(&[-1, 1]).mul(&p7(&[3, 1]));
        assert_eq!(a.gcd(&b), p7(&[-1, 1]));
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(a.div_rem(&Poly::zero(&Fp::new(0, 7))).is_none());
    }

    #[test]
    fn derivative_in_char_p() {
        let f = p7(&[3, 0, 0, 0, 0, 0, 0, 1]); // X^7 + 3
        assert!(f.derivative().is_zero());
        assert_eq!(f.decimate(7), Some(p7(&[3, 1])));
        assert_eq!(p7(&[3, 1]).compose_power(7), f);
        assert_eq!(p7(&[0, 1, 1]).decimate(7), None);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p7(&[1, 0, 7, 14]).degree(), Some(0));
        assert!(p7(&[0, 7]).is_zero());
    }
}
