//! Instability of binary forms under `SL(2)`.
//!
//! A form `f = Σ a_i X^i Y^{N-i}` is unstable iff it has a root on the
//! projective line of multiplicity `T > N/2`. That root is then unique; moving
//! it to the factor `X` makes `diag(t, t⁻¹)` an optimal destabilizer, with
//! `m = 2T - N`. The root lives in `K^{1/p^e}` for the inseparability
//! exponent `e` of its class, and `p^e` divides `T`.
//!
//! Group elements act on forms by substitution,
//! `(g·f)(X, Y) = f(g₀₀X + g₀₁Y, g₁₀X + g₁₁Y)`, so the roots of `g·f` are the
//! images of the roots of `f` under `g⁻¹`.

mod profile;

pub use profile::{format_upoly, multiplicity_profile, RootClass, SepPart};

use crate::field_tower::{Field, Fp, Poly, TowerElement};
use crate::matrix::Matrix;
use crate::nu::Nu;
use crate::par::{self, Strategy};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A nonzero binary form of degree `N ≥ 1`, coefficients `a_0..a_N` with
/// `a_i` the coefficient of `X^i Y^{N-i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm {
    coeffs: Vec<TowerElement>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<TowerElement>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument(
                "a binary form needs degree N >= 1".into(),
            ));
        }
        let p = coeffs[0].p();
        if let Some(c) = coeffs.iter().find(|c| c.p() != p) {
            return Err(Error::CharacteristicMismatch(p, c.p()));
        }
        if coeffs.iter().all(Field::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(BinaryForm { coeffs })
    }

    /// Coefficients listed from `a_N` (of `X^N`) down to `a_0`.
    pub fn from_descending(mut coeffs: Vec<TowerElement>) -> Result<Self> {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn p(&self) -> u64 {
        self.coeffs[0].p()
    }

    pub fn coeffs(&self) -> &[TowerElement] {
        &self.coeffs
    }

    /// `f(X, 1)` as a univariate polynomial.
    pub fn dehomogenize(&self) -> Poly<TowerElement> {
        Poly::new(self.coeffs.clone(), &self.coeffs[0])
    }

    /// `f(g₀₀X + g₀₁Y, g₁₀X + g₁₁Y)`.
    pub fn substitute(&self, g: &Matrix<TowerElement>) -> Result<BinaryForm> {
        if g.size() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: g.size(),
            });
        }
        let zero = self.coeffs[0].zero_like();
        // X-image and Y-image as polynomials in X with Y implicit
        let x_img = Poly::new(vec![g.get(0, 1).clone(), g.get(0, 0).clone()], &zero);
        let y_img = Poly::new(vec![g.get(1, 1).clone(), g.get(1, 0).clone()], &zero);
        let n = self.degree();
        let mut acc = Poly::zero(&zero);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = x_img.pow(i as u64).mul(&y_img.pow((n - i) as u64)).scale(a);
            acc = acc.add(&term);
        }
        let coeffs = (0..=n).map(|i| acc.coeff(i)).collect();
        BinaryForm::new(coeffs).map_err(|_| Error::SingularMatrix)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mut mono = Vec::new();
                for (var, e) in [("X", i), ("Y", n - i)] {
                    match e {
                        0 => {}
                        1 => mono.push(var.to_string()),
                        e => mono.push(format!("{var}^{e}")),
                    }
                }
                let mono = mono.join("*");
                let ct = c.to_string();
                match (c.is_one(), ct.contains(' ')) {
                    (true, _) => mono,
                    (false, true) => format!("({ct})*{mono}"),
                    (false, false) => format!("{ct}*{mono}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// A point `[x : y]` of the projective line, normalised to `[β : 1]` or `[1 : 0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    pub x: TowerElement,
    pub y: TowerElement,
}

impl ProjectivePoint {
    pub fn affine(beta: TowerElement) -> Self {
        let y = beta.one_like();
        ProjectivePoint { x: beta, y }
    }

    pub fn infinity(p: u64) -> Self {
        ProjectivePoint {
            x: TowerElement::from_int(1, p),
            y: TowerElement::from_int(0, p),
        }
    }

    pub fn normalized(&self) -> Self {
        if self.y.is_zero() {
            return Self::infinity(self.x.p());
        }
        Self::affine(self.x.div(&self.y).expect("nonzero y").descend())
    }

    /// The column vector `g·(x, y)ᵀ`, normalised.
    pub fn transform(&self, g: &Matrix<TowerElement>) -> Self {
        let x = g.get(0, 0).mul(&self.x).add(&g.get(0, 1).mul(&self.y));
        let y = g.get(1, 0).mul(&self.x).add(&g.get(1, 1).mul(&self.y));
        ProjectivePoint { x, y }.normalized()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Semistable,
    Unstable,
}

/// An instability 1-PS `g⁻¹ diag(t^a, t^b) g` presented by the conjugating
/// matrix `g` and the diagonal exponents.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjugatedOnePs {
    pub conjugator: Matrix<TowerElement>,
    pub exponents: [i64; 2],
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstabilityReport {
    pub status: Status,
    /// Largest multiplicity `T` of a root over the algebraic closure.
    pub dominant_mult: u64,
    pub nu: Nu,
    pub dominant_root: Option<ProjectivePoint>,
    /// Minimal `t` with the instability parabolic defined over `K^{1/p^t}`.
    pub field_exponent: Option<u32>,
    pub one_ps: Option<ConjugatedOnePs>,
    /// The parabolic is the stabilizer of this point.
    pub parabolic: Option<ProjectivePoint>,
    pub profile: Vec<RootClass>,
}

/// Root classes of the form, including the point at infinity.
pub fn form_profile(form: &BinaryForm) -> Result<Vec<RootClass>> {
    let affine = form.dehomogenize();
    let deg = affine.degree().ok_or(Error::ZeroPolynomial)?;
    let mut classes = multiplicity_profile(&affine)?;
    let at_infinity = (form.degree() - deg) as u64;
    if at_infinity > 0 {
        classes.push(RootClass {
            sep_part: SepPart::AtInfinity,
            mult: at_infinity,
            insep_exp: 0,
        });
        profile::sort_classes(&mut classes);
    }
    Ok(classes)
}

/// Full instability analysis of a binary form.
pub fn analyze(form: &BinaryForm) -> Result<InstabilityReport> {
    let n = form.degree() as u64;
    let p = form.p();
    let profile = form_profile(form)?;
    let t = profile.iter().map(|c| c.mult).max().unwrap_or(0);
    let nu = Nu::new(2 * t as i64 - n as i64, 2);
    if 2 * t <= n {
        return Ok(InstabilityReport {
            status: Status::Semistable,
            dominant_mult: t,
            nu,
            dominant_root: None,
            field_exponent: None,
            one_ps: None,
            parabolic: None,
            profile,
        });
    }
    let dominant = profile
        .iter()
        .find(|c| c.mult == t)
        .expect("maximum is attained");
    let zero = TowerElement::from_int(0, p);
    let one = TowerElement::from_int(1, p);
    let (root, conjugator) = match &dominant.sep_part {
        SepPart::AtInfinity => {
            let swap =
                Matrix::from_rows(vec![vec![zero.clone(), one.neg()], vec![one.clone(), zero]])?;
            (ProjectivePoint::infinity(p), swap)
        }
        SepPart::Affine(h) => {
            debug_assert_eq!(
                h.degree(),
                Some(1),
                "a root of multiplicity > N/2 is unique"
            );
            let delta = h.coeff(0).neg();
            let beta = delta.pe_root(dominant.insep_exp).descend();
            let translate = Matrix::from_rows(vec![
                vec![beta.one_like(), beta.clone()],
                vec![beta.zero_like(), beta.one_like()],
            ])?;
            (ProjectivePoint::affine(beta), translate)
        }
    };
    let field_exponent = root.x.insep_exponent();
    Ok(InstabilityReport {
        status: Status::Unstable,
        dominant_mult: t,
        nu,
        dominant_root: Some(root.clone()),
        field_exponent: Some(field_exponent),
        one_ps: Some(ConjugatedOnePs {
            conjugator,
            exponents: [1, -1],
        }),
        parabolic: Some(root),
        profile,
    })
}

/// `m(g·f, λ_a)` for `λ_a = diag(t^a, t^{-a})`, where `X^i Y^j` has weight `a(i - j)`.
pub fn hm_weight(form: &BinaryForm, g: &Matrix<TowerElement>, a: i64) -> Result<i64> {
    if a <= 0 {
        return Err(Error::InvalidArgument(
            "the 1-PS exponent must be positive".into(),
        ));
    }
    g.check_special()?;
    let moved = form.substitute(g)?;
    let n = moved.degree() as i64;
    let i = moved
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("translates of nonzero forms are nonzero") as i64;
    Ok(a * (2 * i - n))
}

/// Best `ν` reachable with `λ = diag(t, t⁻¹)` after translating by a candidate.
pub fn oracle_nu_max(form: &BinaryForm, candidates: &[Matrix<TowerElement>]) -> Result<Nu> {
    oracle_nu_max_with(form, candidates, Strategy::Auto)
}

pub fn oracle_nu_max_with(
    form: &BinaryForm,
    candidates: &[Matrix<TowerElement>],
    strategy: Strategy,
) -> Result<Nu> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let weights = par::map(candidates, strategy, |g| hm_weight(form, g, 1));
    let mut best = i64::MIN;
    for w in weights {
        best = best.max(w?);
    }
    Ok(Nu::new(best, 2))
}

/// All of `SL(2, F_p)` as constant tower matrices, in lexicographic order
/// of `(a, b, c, d)`.
pub fn special_linear_2(p: u64) -> Vec<Matrix<TowerElement>> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c % p) % p != 1 {
                        continue;
                    }
                    let e = |v: u64| TowerElement::from_fp(Fp::new(v as i64, p));
                    out.push(Matrix::new(2, vec![e(a), e(b), e(c), e(d)]).unwrap());
                }
            }
        }
    }
    out
}
