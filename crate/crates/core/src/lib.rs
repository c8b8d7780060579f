//! Exact instability computations for torus and `SL(2)` actions in positive
//! characteristic.
//!
//! The crate is organised bottom-up:
//!
//! * [`field_tower`] – `F_p`, `F_p(s)` and its purely inseparable tower.
//! * [`binary_forms`] – root-multiplicity profiles and instability of binary forms.
//! * [`kempf_torus`] – weight states, exact minimum-norm points and optimal 1-PS.
//! * [`elementary_polys`] – coefficient polynomials of `g·v` in the matrix indeterminates.
//! * [`bounds`] – closed-form Frobenius thresholds.
//! * [`bundle_calc`] – split bundles on the projective line.
//!
//! Everything is exact: there is no floating point anywhere in the crate.
//!
//! ```
//! use instability_core::binary_forms::{analyze, BinaryForm, Status};
//! use instability_core::field_tower::parse_element;
//!
//! // X^5 - s·Y^5 over F_5(s): a single root s^(1/5) of multiplicity 5
//! let coeffs = ["1", "0", "0", "0", "0", "-s"].map(|c| parse_element(c, 5).unwrap());
//! let report = analyze(&BinaryForm::from_descending(coeffs.to_vec()).unwrap()).unwrap();
//! assert_eq!(report.status, Status::Unstable);
//! assert_eq!(report.dominant_root.unwrap().to_string(), "[s^(1/5):1]");
//! assert_eq!(report.field_exponent, Some(1));
//! ```

pub mod binary_forms;
pub mod bounds;
pub mod bundle_calc;
mod combinatorics;
pub mod elementary_polys;
mod error;
pub mod field_tower;
pub mod kempf_torus;
pub mod matrix;
pub mod nu;
pub mod par;

pub use error::{Error, Result};
pub use field_tower::{Field, Fp, Poly, TowerElement};
pub use matrix::Matrix;
pub use nu::Nu;
pub use par::Strategy;
