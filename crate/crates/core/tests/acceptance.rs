//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p instability-core --test acceptance`.

mod common;

use common::*;
use instability_core::binary_forms::{self, BinaryForm, ProjectivePoint, Status};
use instability_core::bounds;
use instability_core::bundle_calc::{frobenius_pullback, instability_degree, SplittingType};
use instability_core::elementary_polys::{action, theta_tensor, Monomial, MultiPoly, Tensor};
use instability_core::kempf_torus::{nearest_point, torus_destabilizer, verify_certificate, Mode};
use instability_core::{binary_forms::multiplicity_profile, Field, Fp, Poly, TowerElement};
use num_bigint::BigUint;
use rand::Rng;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The four polynomials printed for `v = X₁² + X₁X₂`, rebuilt from their
/// monomials (variables G11, G12, G21, G22 are indices 0..4).
fn printed_example() -> Vec<MultiPoly<Fp>> {
    let mono = |e: [u32; 4]| MultiPoly::term(4, Monomial(e.to_vec()), Fp::new(1, 7));
    vec![
        mono([2, 0, 0, 0]).add(&mono([1, 0, 1, 0])),
        mono([1, 1, 0, 0]).add(&mono([1, 0, 0, 1])),
        mono([1, 1, 0, 0]).add(&mono([0, 1, 1, 0])),
        mono([0, 2, 0, 0]).add(&mono([0, 1, 0, 1])),
    ]
}

fn ac1_worked_example() -> Result<String, String> {
    let one = Fp::new(1, 7);
    let v = Tensor::from_words(2, 2, &[(vec![1, 1], one), (vec![1, 2], one)], &one)
        .map_err(|e| e.to_string())?;
    let ep = theta_tensor(&v);
    ensure(ep.polys == printed_example(), || {
        format!("polynomials differ: {:?}", ep.polys)
    })?;
    let texts: Vec<String> = ep.polys.iter().map(|p| p.to_string()).collect();
    let expected = [
        "G11^2 + G11*G21",
        "G11*G12 + G11*G22",
        "G11*G12 + G12*G21",
        "G12^2 + G12*G22",
    ];
    ensure(texts == expected, || {
        format!("canonical text differs: {texts:?}")
    })?;
    Ok("4/4 polynomials match".into())
}

fn ac2_sl2_oracle() -> Result<String, String> {
    let p = 3u64;
    let group = binary_forms::special_linear_2(p);
    ensure(group.len() == 24, || format!("|SL(2,3)| = {}", group.len()))?;
    let (mut forms, mut status_ok, mut nu_ok, mut irrational) = (0, 0, 0, 0);
    let mut first_mismatch = None;
    for code in 1..3usize.pow(5) {
        let a: Vec<i64> = (0..5)
            .map(|i| ((code / 3usize.pow(i)) % 3) as i64)
            .collect();
        let form = BinaryForm::new(a.iter().map(|&c| TowerElement::from_int(c, p)).collect())
            .map_err(|e| e.to_string())?;
        let report = binary_forms::analyze(&form).map_err(|e| e.to_string())?;
        let oracle = binary_forms::oracle_nu_max(&form, &group).map_err(|e| e.to_string())?;
        forms += 1;
        let oracle_status = if oracle.m > 0 {
            Status::Unstable
        } else {
            Status::Semistable
        };
        status_ok += usize::from(report.status == oracle_status);
        if report.nu.same_pair(oracle) {
            nu_ok += 1;
        } else {
            // independent count of the best F_3-rational root multiplicity
            if max_rational_root_mult(&a, p as i64) < report.dominant_mult {
                irrational += 1;
            }
            first_mismatch.get_or_insert_with(|| {
                let (a, b) = (report.nu, oracle);
                format!(
                    "{form}: nu ({}, {}) vs oracle ({}, {})",
                    a.m, a.normsq, b.m, b.normsq
                )
            });
        }
    }
    let summary = format!("{forms} nonzero forms: status {status_ok}/{forms}, nu {nu_ok}/{forms}");
    if status_ok == forms && nu_ok == forms {
        return Ok(summary);
    }
    Err(format!(
        "{summary}; {irrational} mismatches have their dominant root only over F_9, \
         which no element of SL(2, F_3) reaches (e.g. {})",
        first_mismatch.unwrap_or_default()
    ))
}

fn ac3_inseparable_family() -> Result<String, String> {
    for p in [2u64, 3, 5] {
        let mut coeffs = vec![TowerElement::s(p).neg()];
        coeffs.extend((1..p).map(|_| TowerElement::from_int(0, p)));
        coeffs.push(TowerElement::from_int(1, p));
        let form = BinaryForm::new(coeffs).map_err(|e| e.to_string())?;
        let r = binary_forms::analyze(&form).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Unstable, || {
            format!("p={p}: not unstable")
        })?;
        ensure(r.dominant_mult == p, || {
            format!("p={p}: T = {}", r.dominant_mult)
        })?;
        let root = ProjectivePoint::affine(TowerElement::generator(p, 1));
        ensure(r.dominant_root.as_ref() == Some(&root), || {
            format!("p={p}: root {:?}", r.dominant_root)
        })?;
        ensure(r.field_exponent == Some(1), || {
            format!("p={p}: t = {:?}", r.field_exponent)
        })?;
        let digits = bounds::padic_digits(&BigUint::from(p), p).map_err(|e| e.to_string())?;
        ensure(digits == vec![0, 1], || format!("p={p}: digits {digits:?}"))?;
        let top = bounds::sl2_symmetric_t(p, p).map_err(|e| e.to_string())?;
        ensure(r.field_exponent == Some(top), || {
            format!("p={p}: digit bound {top}")
        })?;
    }
    Ok("p = 2, 3, 5: T = p, root [s^(1/p):1], t = 1 = top digit index".into())
}

fn ac4_kempf_certificates() -> Result<String, String> {
    let mut rng = rng(0x4b454d5046);
    let box12 = zero_sum_box(3, 12);
    let mut unstable = 0;
    for k in 0..500 {
        let state = random_state(&mut rng, 3, 6, 3);
        let np = nearest_point(&state, Mode::Sl);
        ensure(verify_certificate(&state, Mode::Sl, &np), || {
            format!("state {k}: certificate fails")
        })?;
        let grid = grid_nu_max(&state, &box12);
        match torus_destabilizer(&state).map_err(|e| e.to_string())? {
            Some(d) => {
                unstable += 1;
                ensure(grid <= d.nu(), || {
                    format!("state {k}: grid {grid:?} beats {:?}", d.nu())
                })?;
            }
            None => ensure(grid.m <= 0, || {
                format!("state {k}: grid finds m = {}", grid.m)
            })?,
        }
    }
    Ok(format!(
        "500 states ({unstable} unstable), {} box 1-PS each",
        box12.len()
    ))
}

fn ac5_bounds_table() -> Result<String, String> {
    let err = |e: instability_core::Error| e.to_string();
    let t = bounds::tensor_t(2, 2, 5).map_err(err)?;
    ensure(t.t == 2 && t.n_raw == BigUint::from(8u32), || {
        format!("tensor {t:?}")
    })?;
    let w = bounds::wedge_t(2, 2, 5).map_err(err)?;
    ensure(w.t == 2 && w.n_raw == BigUint::from(24u32), || {
        format!("wedge {w:?}")
    })?;
    ensure(bounds::sl2_symmetric_t(5, 5).map_err(err)? == 1, || {
        "sl2(5,5)".into()
    })?;
    ensure(bounds::sl2_symmetric_t(7, 2).map_err(err)? == 2, || {
        "sl2(7,2)".into()
    })?;
    let j = bounds::jh_t(2, 2, 5).map_err(err)?;
    ensure(j.t == 2 && j.n_raw == BigUint::from(24u32), || {
        format!("jh {j:?}")
    })?;
    Ok("tensor 8→2, wedge 24→2, sl2(5,5)=1, sl2(7,2)=2, jh 24→2".into())
}

fn ac6_reconstruction() -> Result<String, String> {
    let mut rng = rng(0x5245434f);
    for k in 0..1000 {
        let p = [2u64, 3, 5][k % 3];
        let mut f = Poly::constant(random_nonzero_in_fp_s(&mut rng, p, 1));
        for _ in 0..rng.gen_range(1..=3) {
            let e = rng.gen_range(0..=if p == 2 { 2 } else { 1 });
            let deg = rng.gen_range(1..=2);
            let base = random_monic(&mut rng, p, deg, 2);
            let factor = base.compose_power(p.pow(e) as usize);
            f = f.mul(&factor.pow(rng.gen_range(1..=3)));
        }
        let classes = multiplicity_profile(&f).map_err(|e| e.to_string())?;
        let lc = f.leading().unwrap().clone();
        ensure(reconstruct(&lc, &classes) == f, || {
            format!("case {k}: reconstruction fails")
        })?;
        let total: u64 = classes
            .iter()
            .map(|c| c.sep_part.root_count() as u64 * c.mult)
            .sum();
        ensure(total == f.degree().unwrap() as u64, || {
            format!("case {k}: degree {total}")
        })?;
    }
    Ok("1000 products over F_p(s), p ∈ {2,3,5}".into())
}

fn ac7_frobenius_scaling() -> Result<String, String> {
    let mut rng = rng(0x46524f42);
    for k in 0..2000 {
        let rank = rng.gen_range(1..=6);
        let degs: Vec<i64> = (0..rank).map(|_| rng.gen_range(-20..=20)).collect();
        let st = SplittingType::from_i64(&degs).map_err(|e| e.to_string())?;
        let p = [2u64, 3, 5, 7, 11][rng.gen_range(0..5)];
        let t = rng.gen_range(0..6u32);
        let lhs = instability_degree(&frobenius_pullback(&st, p, t));
        let rhs = instability_degree(&st) * num_bigint::BigInt::from(p.pow(t));
        ensure(lhs == rhs, || format!("case {k}: {degs:?} p={p} t={t}"))?;
    }
    Ok("2000 splitting types".into())
}

fn ac8_action_law() -> Result<String, String> {
    let mut rng = rng(0x4143544e);
    let p = 5;
    for k in 0..200 {
        let g = random_gl(&mut rng, p, 2);
        let h = random_gl(&mut rng, p, 2);
        let coeffs = (0..4).map(|_| Fp::new(rng.gen_range(0..5), p)).collect();
        let v = Tensor::new(2, 2, coeffs).map_err(|e| e.to_string())?;
        let lhs =
            action(&g, &action(&h, &v).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let rhs = action(&g.mul(&h).map_err(|e| e.to_string())?, &v).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("case {k}: action law fails"))?;
    }
    Ok("200 random (g, h, v) over F_5".into())
}

fn main() {
    let criteria: [(&str, &str, Check, Duration); 8] = [
        (
            "AC1",
            "worked elementary-polynomial example",
            ac1_worked_example,
            Duration::from_secs(1),
        ),
        (
            "AC2",
            "SL(2) oracle equivalence, degree 4 over F_3",
            ac2_sl2_oracle,
            Duration::from_secs(60),
        ),
        (
            "AC3",
            "inseparable family X^p - sY^p",
            ac3_inseparable_family,
            Duration::from_secs(1),
        ),
        (
            "AC4",
            "Kempf certificate soundness",
            ac4_kempf_certificates,
            Duration::from_secs(300),
        ),
        (
            "AC5",
            "bounds table",
            ac5_bounds_table,
            Duration::from_secs(1),
        ),
        (
            "AC6",
            "multiplicity profile reconstruction",
            ac6_reconstruction,
            Duration::from_secs(60),
        ),
        (
            "AC7",
            "Frobenius degree scaling",
            ac7_frobenius_scaling,
            Duration::from_secs(1),
        ),
        (
            "AC8",
            "left action law",
            ac8_action_law,
            Duration::from_secs(10),
        ),
    ];
    let mut failed = 0;
    for (id, name, check, budget) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= budget {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:.2?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name} ({elapsed:.2?}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {name} ({elapsed:.2?}): {detail}");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
