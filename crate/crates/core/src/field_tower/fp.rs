use super::Field;
use crate::{Error, Result};
use std::fmt;

/// Trial-division primality test; the characteristics used here are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of the prime field `F_p`, stored as its canonical
/// representative in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    /// Reduces `value` modulo `p`. `p` must be prime; see [`Fp::try_new`].
    pub fn new(value: i64, p: u64) -> Self {
        let r = value.rem_euclid(p as i64) as u64;
        Fp { value: r, p }
    }

    pub fn try_new(value: i64, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::new(value, p))
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(self) -> i64 {
        if self.value > self.p / 2 {
            self.value as i64 - self.p as i64
        } else {
            self.value as i64
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp {
            value: 0,
            p: self.p,
        }
    }

    fn one_like(&self) -> Self {
        Fp {
            value: 1 % self.p,
            p: self.p,
        }
    }

    fn int_like(&self, n: i64) -> Self {
        Fp::new(n, self.p)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.value + rhs.value;
        Fp {
            value: if s >= self.p { s - self.p } else { s },
            p: self.p,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.p - rhs.value
        };
        Fp {
            value: v,
            p: self.p,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let v = (self.value as u128 * rhs.value as u128 % self.p as u128) as u64;
        Fp {
            value: v,
            p: self.p,
        }
    }

    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp {
                value: self.p - self.value,
                p: self.p,
            }
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on (value, p)
        let (mut r0, mut r1) = (self.p as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        let v = t0.rem_euclid(self.p as i128) as u64;
        Some(Fp {
            value: v,
            p: self.p,
        })
    }

    fn characteristic(&self) -> u64 {
        self.p
    }
}
