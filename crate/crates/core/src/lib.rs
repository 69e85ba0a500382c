//! Theta functions with rational characteristics and the algebraic identities
//! among their values.
//!
//! The crate covers exact arithmetic on characteristics and Göpel groups,
//! numerically controlled evaluation of theta functions and theta-nulls,
//! period matrices and Thomae's formula for real hyperelliptic curves,
//! generated quadratic and quartic theta identities, and detection of
//! automorphism groups of genus-3 curves from vanishing theta-nulls.
//!
//! Numerical code is generic over [`scalar::Real`] (`f32` or `f64`). The
//! `*64` and `*32` aliases fix the scalar type.
//!
//! ```
//! use theta_core::{Characteristic, EvalConfig, RiemannMatrix64, theta_null};
//! use num_complex::Complex;
//!
//! let tau = RiemannMatrix64::new(vec![vec![Complex::new(0.0, 1.0)]]).unwrap();
//! let odd = Characteristic::new(1, 2, &[1], &[1]).unwrap();
//! let v = theta_null(&odd, &tau, &EvalConfig::default()).unwrap();
//! assert!(v.norm() < 1e-12);
//! ```

// Index loops mirror the matrix formulas; negated comparisons deliberately treat NaN as failure.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod characteristics;
pub mod error;
pub mod genus3;
pub mod hyperelliptic;
pub mod identities;
pub mod linalg;
pub mod quadrature;
pub mod random;
pub mod scalar;
pub mod theta;

pub use characteristics::{Characteristic, GoepelGroup, HalfChar, SubgroupType};
pub use error::{Error, Result};
pub use genus3::{detect_all, detect_case, CaseId, DetectionReport, Detector, InvolutionWitness};
pub use hyperelliptic::{period_matrix, BranchSet, CurveData, Subset};
pub use identities::{generate_identity, verify_identity, Identity, IdentityKind};
pub use scalar::Real;
pub use theta::{
    theta_char, theta_null, EvalConfig, NullGrid, RiemannMatrix, VanishThresholds, VanishingOrder,
};

pub type RiemannMatrix64 = RiemannMatrix<f64>;
pub type RiemannMatrix32 = RiemannMatrix<f32>;
pub type BranchSet64 = BranchSet<f64>;
pub type BranchSet32 = BranchSet<f32>;
pub type CurveData64 = CurveData<f64>;
pub type CurveData32 = CurveData<f32>;
pub type NullGrid64 = NullGrid<f64>;
pub type NullGrid32 = NullGrid<f32>;
pub type Complex64 = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;
