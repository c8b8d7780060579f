//! Generators and brute-force oracles shared by the integration tests.
//! Nothing here calls into the code paths it is used to check.
#![allow(dead_code)]

use instability_core::binary_forms::{RootClass, SepPart};
use instability_core::kempf_torus::State;
use instability_core::{Field, Fp, Matrix, Nu, Poly, TowerElement};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random polynomial in `s` of degree at most `max_deg`, as a level-0 element.
pub fn random_in_fp_s(rng: &mut StdRng, p: u64, max_deg: usize) -> TowerElement {
    let z = Fp::new(0, p);
    let coeffs = (0..=max_deg)
        .map(|_| Fp::new(rng.gen_range(0..p) as i64, p))
        .collect();
    TowerElement::from_poly(Poly::new(coeffs, &z))
}

pub fn random_nonzero_in_fp_s(rng: &mut StdRng, p: u64, max_deg: usize) -> TowerElement {
    loop {
        let x = random_in_fp_s(rng, p, max_deg);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Monic polynomial in `X` of exact degree `deg` over `F_p[s]`.
pub fn random_monic(rng: &mut StdRng, p: u64, deg: usize, coeff_deg: usize) -> Poly<TowerElement> {
    let mut coeffs: Vec<TowerElement> = (0..deg)
        .map(|_| random_in_fp_s(rng, p, coeff_deg))
        .collect();
    coeffs.push(TowerElement::from_int(1, p));
    Poly::new(coeffs, &TowerElement::from_int(0, p))
}

/// `lc · ∏ h(X^{p^e})^{mult/p^e}`.
pub fn reconstruct(lc: &TowerElement, classes: &[RootClass]) -> Poly<TowerElement> {
    let p = lc.p();
    classes.iter().fold(Poly::constant(lc.clone()), |acc, c| {
        let q = p.pow(c.insep_exp);
        assert_eq!(c.mult % q, 0, "p^e must divide the multiplicity");
        match &c.sep_part {
            SepPart::Affine(h) => acc.mul(&h.compose_power(q as usize).pow(c.mult / q)),
            SepPart::AtInfinity => panic!("affine profiles have no point at infinity"),
        }
    })
}

pub fn random_fp_matrix(rng: &mut StdRng, p: u64, n: usize) -> Matrix<Fp> {
    Matrix::new(
        n,
        (0..n * n)
            .map(|_| Fp::new(rng.gen_range(0..p) as i64, p))
            .collect(),
    )
    .unwrap()
}

pub fn random_gl(rng: &mut StdRng, p: u64, n: usize) -> Matrix<Fp> {
    loop {
        let g = random_fp_matrix(rng, p, n);
        if !g.det().is_zero() {
            return g;
        }
    }
}

/// Random element of `SL(2, F_p)` as constant tower elements.
pub fn random_sl2(rng: &mut StdRng, p: u64) -> Matrix<TowerElement> {
    loop {
        let e: Vec<i64> = (0..4).map(|_| rng.gen_range(0..p) as i64).collect();
        if (e[0] * e[3] - e[1] * e[2]).rem_euclid(p as i64) == 1 {
            let t = e
                .into_iter()
                .map(|v| TowerElement::from_int(v, p))
                .collect();
            return Matrix::new(2, t).unwrap();
        }
    }
}

pub fn random_state(rng: &mut StdRng, n: usize, max_weights: usize, bound: i64) -> State {
    let k = rng.gen_range(1..=max_weights);
    let weights = (0..k)
        .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    State::new(n, weights).unwrap()
}

/// All nonzero zero-sum integral vectors in `[-bound, bound]^n`.
pub fn zero_sum_box(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let side = (2 * bound + 1) as usize;
    let total = side.pow(n as u32 - 1);
    for k in 0..total {
        let mut rest = k;
        let mut v: Vec<i64> = (0..n - 1)
            .map(|_| {
                let d = (rest % side) as i64 - bound;
                rest /= side;
                d
            })
            .collect();
        let last = -v.iter().sum::<i64>();
        if last.abs() > bound {
            continue;
        }
        v.push(last);
        if v.iter().any(|&x| x != 0) {
            out.push(v);
        }
    }
    out
}

/// `max ν(λ, v)` over the given 1-PS exponent vectors.
pub fn grid_nu_max(state: &State, lambdas: &[Vec<i64>]) -> Nu {
    lambdas
        .iter()
        .map(|l| {
            let m = state
                .weights()
                .iter()
                .map(|w| w.iter().zip(l).map(|(a, b)| a * b).sum::<i64>())
                .min()
                .unwrap();
            Nu::new(m, l.iter().map(|x| x * x).sum())
        })
        .max()
        .unwrap()
}

/// Largest multiplicity of an `F_p`-rational point of `P¹` as a root of the
/// binary form with constant coefficients `a_0..a_N`, by repeated synthetic
/// division.
pub fn max_rational_root_mult(coeffs: &[i64], p: i64) -> u64 {
    let n = coeffs.len() - 1;
    // point at infinity: multiplicity of Y is N - deg
    let deg = coeffs.iter().rposition(|&c| c.rem_euclid(p) != 0).unwrap();
    let mut best = (n - deg) as u64;
    for a in 0..p {
        let mut poly: Vec<i64> = coeffs[..=deg].iter().map(|c| c.rem_euclid(p)).collect();
        let mut mult = 0;
        loop {
            // divide by (X - a)
            let k = poly.len() - 1;
            if k == 0 {
                break;
            }
            let mut q = vec![0i64; k];
            let mut carry = 0i64;
            for i in (0..=k).rev() {
                let v = (poly[i] + carry * a).rem_euclid(p);
                if i == 0 {
                    carry = v;
                } else {
                    q[i - 1] = v;
                    carry = v;
                }
            }
            if carry != 0 {
                break;
            }
            mult += 1;
            poly = q;
        }
        best = best.max(mult);
    }
    best
}
