//! Root-multiplicity structure of a univariate polynomial over the imperfect
//! field `K = F_p(s)` (or any level of its tower).

use crate::field_tower::{Field, Poly, TowerElement};
use crate::{Error, Result};
use std::fmt;

/// Separable part of a root class: a monic squarefree polynomial, or the
/// point `[1:0]` of the projective line.
#[derive(Debug, Clone, PartialEq)]
pub enum SepPart {
    Affine(Poly<TowerElement>),
    AtInfinity,
}

impl SepPart {
    /// Number of distinct roots over the algebraic closure.
    pub fn root_count(&self) -> usize {
        match self {
            SepPart::Affine(h) => h.degree().unwrap_or(0),
            SepPart::AtInfinity => 1,
        }
    }
}

/// The roots `{δ^{1/p^e} : h(δ) = 0}`, each of multiplicity `mult`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootClass {
    pub sep_part: SepPart,
    pub mult: u64,
    pub insep_exp: u32,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.sep_part {
            SepPart::AtInfinity => write!(f, "([1:0], {}, {})", self.mult, self.insep_exp),
            SepPart::Affine(h) => {
                write!(
                    f,
                    "({}, {}, {})",
                    format_upoly(h, "X"),
                    self.mult,
                    self.insep_exp
                )
            }
        }
    }
}

/// Renders a polynomial over the tower with the given variable name.
pub fn format_upoly(h: &Poly<TowerElement>, var: &str) -> String {
    if h.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = h
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                k => format!("{var}^{k}"),
            };
            let ct = c.to_string();
            match (mono.is_empty(), c.is_one()) {
                (true, _) => ct,
                (false, true) => mono,
                (false, false) if ct.contains(' ') => format!("({ct})*{mono}"),
                (false, false) => format!("{ct}*{mono}"),
            }
        })
        .collect();
    terms.join(" + ")
}

/// Decomposes the roots of `f` over the algebraic closure into classes.
///
/// Separable multiplicity layers come from the `gcd(f, f')` chain; whatever
/// is left has zero derivative, hence is `g(X^p)` with `g` over the same
/// field, and is handled recursively with `(h, m, e) ↦ (h, m·p, e+1)`.
/// Classes are sorted by decreasing multiplicity.
pub fn multiplicity_profile(f: &Poly<TowerElement>) -> Result<Vec<RootClass>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut classes: Vec<RootClass> = profile_monic(&f.monic())
        .into_iter()
        .map(|(h, mult, insep_exp)| RootClass {
            sep_part: SepPart::Affine(h),
            mult,
            insep_exp,
        })
        .collect();
    sort_classes(&mut classes);
    Ok(classes)
}

pub(crate) fn sort_classes(classes: &mut [RootClass]) {
    classes.sort_by(|a, b| {
        b.mult
            .cmp(&a.mult)
            .then(a.insep_exp.cmp(&b.insep_exp))
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
}

fn profile_monic(f: &Poly<TowerElement>) -> Vec<(Poly<TowerElement>, u64, u32)> {
    if f.is_constant() {
        return Vec::new();
    }
    let p = f.template().p();
    let df = f.derivative();
    if df.is_zero() {
        let g = f
            .decimate(p as usize)
            .expect("zero derivative means only p-divisible exponents");
        return profile_monic(&g)
            .into_iter()
            .map(|(h, m, e)| (h, m * p, e + 1))
            .collect();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c).unwrap();
    let mut i = 1u64;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.exact_div(&y).unwrap();
        if !z.is_constant() {
            out.push((z.monic(), i, 0));
        }
        i += 1;
        c = c.exact_div(&y).unwrap();
        w = y;
    }
    if !c.is_constant() {
        debug_assert!(c.derivative().is_zero());
        out.extend(profile_monic(&c.monic()));
    }
    out
}
