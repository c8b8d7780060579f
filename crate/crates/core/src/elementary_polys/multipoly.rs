use crate::field_tower::{Field, Fp, TowerElement};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then the earlier variable with the larger exponent wins).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficients that know how to print themselves inside a polynomial.
pub trait CoeffText {
    /// `(negative, magnitude)`; a leading minus is pulled out when natural.
    fn signed_text(&self) -> (bool, String);
}

impl CoeffText for Fp {
    fn signed_text(&self) -> (bool, String) {
        let v = self.symmetric();
        (v < 0, v.unsigned_abs().to_string())
    }
}

impl CoeffText for TowerElement {
    fn signed_text(&self) -> (bool, String) {
        let t = self.to_string();
        if t.contains(' ') || t.contains('/') {
            (false, format!("({t})"))
        } else {
            (false, t)
        }
    }
}

/// Sparse polynomial in `nvars` commuting variables.
#[derive(Debug, Clone)]
pub struct MultiPoly<F: Field> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
    zero: F,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize, template: &F) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
            zero: template.zero_like(),
        }
    }

    pub fn term(nvars: usize, mono: Monomial, c: F) -> Self {
        assert_eq!(mono.0.len(), nvars);
        let mut p = MultiPoly::zero(nvars, &c);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        MultiPoly::term(nvars, Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, index: usize, template: &F) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        MultiPoly::term(nvars, Monomial(e), template.one_like())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn template(&self) -> &F {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter().rev()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn add_term(&mut self, mono: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = MultiPoly::zero(self.nvars, &self.zero);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.mul(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::zero(self.nvars, &self.zero);
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.mul(mb), a.mul(b));
            }
        }
        out
    }

    /// Substitutes `point[i]` for variable `i`.
    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars);
        self.terms.iter().fold(self.zero.clone(), |acc, (m, c)| {
            let v =
                m.0.iter()
                    .zip(point)
                    .filter(|(e, _)| **e > 0)
                    .fold(c.clone(), |t, (e, x)| t.mul(&x.pow(*e as u64)));
            acc.add(&v)
        })
    }
}

impl<F: Field + CoeffText> MultiPoly<F> {
    /// Canonical text with the given variable names, e.g. `G11^2 + G11*G21`.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, mag) = c.signed_text();
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| {
                        if *e == 1 {
                            names[i].clone()
                        } else {
                            format!("{}^{e}", names[i])
                        }
                    })
                    .collect();
            let body = match (vars.is_empty(), mag.as_str()) {
                (true, _) => mag,
                (false, "1") => vars.join("*"),
                (false, _) => format!("{mag}*{}", vars.join("*")),
            };
            match (k, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

/// `G11, G12, …` for the entries of an `n×n` matrix (`G1_10` style once `n ≥ 10`).
pub fn matrix_var_names(n: usize) -> Vec<String> {
    (0..n * n)
        .map(|k| {
            let (i, j) = (k / n + 1, k % n + 1);
            if n < 10 {
                format!("G{i}{j}")
            } else {
                format!("G{i}_{j}")
            }
        })
        .collect()
}

impl<F: Field + CoeffText> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = (self.nvars as f64).sqrt() as usize;
        let names = if n * n == self.nvars {
            matrix_var_names(n)
        } else {
            (0..self.nvars).map(|i| format!("x{i}")).collect()
        };
        f.write_str(&self.format_with(&names))
    }
}
