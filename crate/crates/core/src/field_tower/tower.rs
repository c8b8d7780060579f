use super::{is_prime, Field, Fp, Poly};
use crate::{Error, Result};
use std::fmt;

/// An element of `F_p(s)^{1/p^level} = F_p(u)` with `s = u^{p^level}`.
///
/// Stored as `num / den` in `F_p[u]` with `den` monic and the fraction
/// reduced. The level is kept as constructed; [`TowerElement::descend`]
/// computes the minimal one.
#[derive(Clone, Debug)]
pub struct TowerElement {
    p: u64,
    level: u32,
    num: Poly<Fp>,
    den: Poly<Fp>,
}

/// Binary operation selector for [`TowerElement::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Div,
}

impl TowerElement {
    fn fp_zero(p: u64) -> Fp {
        Fp::new(0, p)
    }

    /// Builds `num / den` at `level` and reduces it.
    pub fn from_parts(p: u64, level: u32, num: Poly<Fp>, den: Poly<Fp>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(p, level, num, den))
    }

    fn reduced(p: u64, level: u32, num: Poly<Fp>, den: Poly<Fp>) -> Self {
        if num.is_zero() {
            return TowerElement {
                p,
                level,
                num,
                den: Poly::one(&Self::fp_zero(p)),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.leading().copied().unwrap();
        if !lc.is_one() {
            let inv = lc.inv().unwrap();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        TowerElement { p, level, num, den }
    }

    /// Integer constant reduced mod `p`, at level 0.
    pub fn from_int(n: i64, p: u64) -> Self {
        Self::from_fp(Fp::new(n, p))
    }

    pub fn from_fp(c: Fp) -> Self {
        let p = c.modulus();
        TowerElement {
            p,
            level: 0,
            num: Poly::constant(c),
            den: Poly::one(&c),
        }
    }

    /// The transcendental `s` of `F_p(s)`.
    pub fn s(p: u64) -> Self {
        Self::generator(p, 0)
    }

    /// The generator `u = s^{1/p^level}`.
    pub fn generator(p: u64, level: u32) -> Self {
        let one = Fp::new(1, p);
        TowerElement {
            p,
            level,
            num: Poly::monomial(one, 1),
            den: Poly::one(&one),
        }
    }

    /// A polynomial in `s` with coefficients in `F_p`, at level 0.
    pub fn from_poly(poly: Poly<Fp>) -> Self {
        let p = poly.template().modulus();
        TowerElement {
            p,
            level: 0,
            num: poly,
            den: Poly::one(&Self::fp_zero(p)),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn num(&self) -> &Poly<Fp> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Fp> {
        &self.den
    }

    /// True if the element lies in `F_p` (a constant).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The same element written at a higher level (`u ↦ u^{p^Δ}`).
    pub fn lift(&self, level: u32) -> Self {
        assert!(level >= self.level, "cannot lift to a lower level");
        if level == self.level {
            return self.clone();
        }
        let k = (self.p as usize).pow(level - self.level);
        TowerElement {
            p: self.p,
            level,
            num: self.num.compose_power(k),
            den: self.den.compose_power(k),
        }
    }

    fn lifted_pair(&self, rhs: &Self) -> Result<(Self, Self)> {
        if self.p != rhs.p {
            return Err(Error::CharacteristicMismatch(self.p, rhs.p));
        }
        let level = self.level.max(rhs.level);
        Ok((self.lift(level), rhs.lift(level)))
    }

    /// Field operation at the larger of the two levels.
    pub fn arith(&self, rhs: &Self, op: ArithOp) -> Result<Self> {
        let (a, b) = self.lifted_pair(rhs)?;
        let (num, den) = match op {
            ArithOp::Add => (a.num.mul(&b.den).add(&b.num.mul(&a.den)), a.den.mul(&b.den)),
            ArithOp::Mul => (a.num.mul(&b.num), a.den.mul(&b.den)),
            ArithOp::Div => {
                if b.num.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                (a.num.mul(&b.den), a.den.mul(&b.num))
            }
        };
        Ok(Self::reduced(a.p, a.level, num, den))
    }

    /// `x^p`, computed as `u ↦ u^p` on numerator and denominator (the
    /// coefficients are fixed by Frobenius).
    pub fn frobenius(&self) -> Self {
        let p = self.p as usize;
        TowerElement {
            p: self.p,
            level: self.level,
            num: self.num.compose_power(p),
            den: self.den.compose_power(p),
        }
    }

    /// The `p`-th root at the same level, if one exists there.
    pub fn pth_root(&self) -> Option<Self> {
        let p = self.p as usize;
        Some(TowerElement {
            p: self.p,
            level: self.level,
            num: self.num.decimate(p)?,
            den: self.den.decimate(p)?,
        })
    }

    /// The `p^e`-th root, which always exists `e` levels higher: the same
    /// numerator and denominator read in the new generator.
    pub fn pe_root(&self, e: u32) -> Self {
        TowerElement {
            level: self.level + e,
            ..self.clone()
        }
    }

    /// The same element at the smallest level that contains it.
    pub fn descend(&self) -> Self {
        let mut x = self.clone();
        while x.level > 0 {
            match x.pth_root() {
                Some(r) => {
                    x = TowerElement {
                        level: x.level - 1,
                        ..r
                    }
                }
                None => break,
            }
        }
        x
    }

    /// Minimal `e` with the element in `K^{1/p^e}`.
    pub fn insep_exponent(&self) -> u32 {
        self.descend().level
    }
}

impl PartialEq for TowerElement {
    fn eq(&self, other: &Self) -> bool {
        match self.lifted_pair(other) {
            Ok((a, b)) => a.num == b.num && a.den == b.den,
            Err(_) => false,
        }
    }
}

impl Eq for TowerElement {}

impl Field for TowerElement {
    fn zero_like(&self) -> Self {
        let z = Self::fp_zero(self.p);
        TowerElement {
            p: self.p,
            level: self.level,
            num: Poly::zero(&z),
            den: Poly::one(&z),
        }
    }

    fn one_like(&self) -> Self {
        self.int_like(1)
    }

    fn int_like(&self, n: i64) -> Self {
        TowerElement {
            level: self.level,
            ..Self::from_int(n, self.p)
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.arith(rhs, ArithOp::Add)
            .expect("characteristic mismatch")
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.arith(rhs, ArithOp::Mul)
            .expect("characteristic mismatch")
    }

    fn neg(&self) -> Self {
        TowerElement {
            num: self.num.neg(),
            ..self.clone()
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduced(
            self.p,
            self.level,
            self.den.clone(),
            self.num.clone(),
        ))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_element(self))
    }
}
