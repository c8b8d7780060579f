//! Exact arithmetic in `F_p`, `K = F_p(s)` and the purely inseparable tower
//! `K ⊂ K^{1/p} ⊂ K^{1/p²} ⊂ …`.
//!
//! Every field of the tower is itself a rational function field `F_p(u)` with
//! `s = u^{p^e}`, so a [`TowerElement`] is a reduced fraction of polynomials in
//! `u` tagged with its level `e`.

mod fp;
mod poly;
mod text;
mod tower;

pub use fp::{is_prime, Fp};
pub use poly::Poly;
pub use text::{parse_element, TowerJson};
pub use tower::TowerElement;

use std::fmt::Debug;

/// A field element that carries its own context (the characteristic, and for
/// tower elements the level), so constants are created relative to an
/// existing element.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn characteristic(&self) -> u64;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}
