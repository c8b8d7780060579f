//! Elementary polynomials: the coefficients of `g·v`, as polynomials in the
//! matrix indeterminates `G_ij`, in a fixed ordered basis.
//!
//! `θ` substitutes `X_i ↦ Σ_j G_ij X_j`. Plain substitution of a matrix into
//! these polynomials composes as a right action, so [`action`] substitutes
//! the transpose: `action(g, X_i) = Σ_k g_ki X_k`, and
//! `action(g, action(h, v)) = action(gh, v)`.

mod multipoly;
mod tensor;

pub use multipoly::{matrix_var_names, CoeffText, Monomial, MultiPoly};
pub use tensor::{wedge_dimension, word_at, word_index, Tensor, WedgeVector};

use crate::combinatorics::{combinations, signed_permutations};
use crate::field_tower::Field;
use crate::matrix::Matrix;
use crate::par::{self, Strategy};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpKind {
    Tensor {
        n: usize,
        m: usize,
    },
    Wedge {
        n: usize,
        m: usize,
        r: usize,
    },
    /// `F_k(g) / det(g)^det_exponent` is the true coefficient.
    General {
        n: usize,
        det_exponent: u32,
    },
}

/// Ordered elementary polynomials of one vector.
#[derive(Debug, Clone, PartialEq)]
pub struct EpSet<F: Field> {
    pub kind: EpKind,
    pub polys: Vec<MultiPoly<F>>,
}

impl<F: Field> EpSet<F> {
    /// Size of the matrices the set is evaluated at.
    pub fn n(&self) -> usize {
        match self.kind {
            EpKind::Tensor { n, .. } | EpKind::Wedge { n, .. } | EpKind::General { n, .. } => n,
        }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn det_exponent(&self) -> u32 {
        match self.kind {
            EpKind::General { det_exponent, .. } => det_exponent,
            _ => 0,
        }
    }
}

fn var_index(n: usize, row: usize, col: usize) -> usize {
    row * n + col
}

/// `∏_k G_{i_k j_k}` for 0-based word positions.
fn word_monomial(n: usize, m: usize, from: usize, to: usize) -> Monomial {
    let (a, b) = (word_at(from, n, m), word_at(to, n, m));
    let mut e = vec![0u32; n * n];
    for (i, j) in a.iter().zip(&b) {
        e[var_index(n, i - 1, j - 1)] += 1;
    }
    Monomial(e)
}

/// `EP_v` for `v ∈ V^{⊗m}`: one polynomial per target word, each homogeneous
/// of degree `m` (or zero).
pub fn theta_tensor<F: Field>(v: &Tensor<F>) -> EpSet<F> {
    theta_tensor_with(v, Strategy::Auto)
}

pub fn theta_tensor_with<F: Field>(v: &Tensor<F>, strategy: Strategy) -> EpSet<F> {
    let (n, m) = (v.n(), v.m());
    let nvars = n * n;
    let template = v.coeffs()[0].zero_like();
    let support: Vec<(usize, F)> = v
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect();
    let polys = par::map_range(v.coeffs().len(), strategy, |target| {
        let mut poly = MultiPoly::zero(nvars, &template);
        for (src, c) in &support {
            poly.add_term(word_monomial(n, m, *src, target), c.clone());
        }
        poly
    });
    EpSet {
        kind: EpKind::Tensor { n, m },
        polys,
    }
}

fn minor<F: Field>(
    n: usize,
    m: usize,
    rows: &[usize],
    cols: &[usize],
    perms: &[(Vec<usize>, bool)],
    template: &F,
) -> MultiPoly<F> {
    let mut out = MultiPoly::zero(n * n, template);
    for (perm, odd) in perms {
        let mono = rows
            .iter()
            .zip(perm)
            .map(|(&r, &k)| word_monomial(n, m, r, cols[k]))
            .fold(Monomial::one(n * n), |acc, x| acc.mul(&x));
        let c = if *odd {
            template.one_like().neg()
        } else {
            template.one_like()
        };
        out.add_term(mono, c);
    }
    out
}

/// `EP_v` for `v ∈ ∧^r(V^{⊗m})`: signed sums of `r×r` minors of the word
/// action matrix; every member is homogeneous of degree `rm` (or zero).
///
/// Minors are expanded over all `r!` permutations, fine for the small `r`
/// this is meant for.
pub fn theta_wedge<F: Field>(v: &WedgeVector<F>) -> EpSet<F> {
    theta_wedge_with(v, Strategy::Auto)
}

pub fn theta_wedge_with<F: Field>(v: &WedgeVector<F>, strategy: Strategy) -> EpSet<F> {
    let (n, m, r) = (v.n(), v.m(), v.r());
    let template = v.coeffs()[0].zero_like();
    let basis = combinations(n.pow(m as u32), r);
    let perms = signed_permutations(r);
    let support: Vec<(&Vec<usize>, &F)> = basis
        .iter()
        .zip(v.coeffs())
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let polys = par::map(&basis, strategy, |cols| {
        support
            .iter()
            .fold(MultiPoly::zero(n * n, &template), |acc, (rows, c)| {
                acc.add(&minor(n, m, rows, cols, &perms, &template).scale(c))
            })
    });
    EpSet {
        kind: EpKind::Wedge { n, m, r },
        polys,
    }
}

/// `F_k = Σ_i f_{ki} b_i` for a representation given by polynomial matrix
/// entries `f_{ki}` over `G_ij` with a `det^{-a}` twist.
pub fn general_ep<F: Field>(
    rep_matrix: &[Vec<MultiPoly<F>>],
    det_exponent: u32,
    b: &[F],
) -> Result<EpSet<F>> {
    let dim = rep_matrix.len();
    if dim == 0 {
        return Err(Error::InvalidArgument("empty representation matrix".into()));
    }
    if let Some(row) = rep_matrix.iter().find(|row| row.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: row.len(),
        });
    }
    if b.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: b.len(),
        });
    }
    let nvars = rep_matrix[0][0].nvars();
    let n = (1..=nvars).find(|k| k * k >= nvars).unwrap_or(0);
    if n * n != nvars || rep_matrix.iter().flatten().any(|f| f.nvars() != nvars) {
        return Err(Error::InvalidArgument(
            "entries must be polynomials in n² variables".into(),
        ));
    }
    let polys = rep_matrix
        .iter()
        .map(|row| {
            row.iter()
                .zip(b)
                .fold(MultiPoly::zero(nvars, &b[0]), |acc, (f, bi)| {
                    acc.add(&f.scale(bi))
                })
        })
        .collect();
    Ok(EpSet {
        kind: EpKind::General { n, det_exponent },
        polys,
    })
}

/// Substitutes `G_ij = g_ij` into every member.
pub fn evaluate<F: Field>(ep: &EpSet<F>, g: &Matrix<F>) -> Result<Vec<F>> {
    if g.size() != ep.n() {
        return Err(Error::DimensionMismatch {
            expected: ep.n(),
            got: g.size(),
        });
    }
    Ok(ep.polys.iter().map(|f| f.eval(g.entries())).collect())
}

/// [`evaluate`] divided by `det(g)^a` for general representations.
pub fn evaluate_general<F: Field>(ep: &EpSet<F>, g: &Matrix<F>) -> Result<Vec<F>> {
    let values = evaluate(ep, g)?;
    let a = ep.det_exponent();
    if a == 0 {
        return Ok(values);
    }
    let d = g.det().pow(a as u64).inv().ok_or(Error::SingularMatrix)?;
    Ok(values.into_iter().map(|x| x.mul(&d)).collect())
}

/// Left action of `g` on `V^{⊗m}`.
pub fn action<F: Field>(g: &Matrix<F>, v: &Tensor<F>) -> Result<Tensor<F>> {
    action_via(&theta_tensor(v), g)
}

/// Left action using precomputed elementary polynomials of `v`.
pub fn action_via<F: Field>(ep: &EpSet<F>, g: &Matrix<F>) -> Result<Tensor<F>> {
    let EpKind::Tensor { n, m } = ep.kind else {
        return Err(Error::InvalidArgument(
            "tensor elementary polynomials expected".into(),
        ));
    };
    Tensor::new(n, m, evaluate(ep, &g.transpose())?)
}

/// Left action of `g` on `∧^r(V^{⊗m})`.
pub fn wedge_action<F: Field>(g: &Matrix<F>, v: &WedgeVector<F>) -> Result<WedgeVector<F>> {
    let ep = theta_wedge(v);
    WedgeVector::new(v.n(), v.m(), v.r(), evaluate(&ep, &g.transpose())?)
}

/// Indices (0-based) of members vanishing resp. not vanishing at `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingPattern {
    pub vanishing: Vec<usize>,
    pub nonvanishing: Vec<usize>,
}

pub fn vanishing_pattern<F: Field>(ep: &EpSet<F>, g: &Matrix<F>) -> Result<VanishingPattern> {
    let values = evaluate(ep, g)?;
    let (vanishing, nonvanishing) = (0..values.len()).partition(|&k| values[k].is_zero());
    Ok(VanishingPattern {
        vanishing,
        nonvanishing,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVariant {
    /// Degree of the product polynomial: a sum of degrees.
    AsStated,
    /// Bézout: the product of the degrees.
    BezoutProduct,
}

/// Degree bound for the field extension cut out by the vanishing members
/// together with the defining equations of the group.
pub fn extension_degree_bound(
    vanishing_degrees: &[u64],
    defining_eq_degrees: &[u64],
    variant: BoundVariant,
) -> BigUint {
    let all = vanishing_degrees.iter().chain(defining_eq_degrees);
    match variant {
        BoundVariant::AsStated => all.map(|&d| BigUint::from(d)).sum(),
        BoundVariant::BezoutProduct => all.fold(BigUint::one(), |acc, &d| acc * d),
    }
}
