//! Frobenius' theta identity:
//! `sum_{j in S ∪ {∞}} eps_U(j) prod_{i=1}^{4} theta[b_i + epsilon(j)](z_i) = 0`
//! whenever `b_1 + ... + b_4 = 0` and `z_1 + ... + z_4 = 0`, with
//! `eps_U(j) = 1` for `j ∈ U` and `-1` otherwise.
//!
//! The characteristic sum must vanish exactly, not just mod 1, so `b_4` is
//! lifted to `-(b_1 + b_2 + b_3)` before evaluation.

use num_complex::Complex;
use rand::Rng;
use serde::Serialize;

use super::{epsilon, BranchIndex, CurveData};
use crate::characteristics::HalfChar;
use crate::error::{Error, Result};
use crate::random::{random_argument, rng};
use crate::scalar::Real;
use crate::theta::{theta_raw, EvalConfig};

fn half_vectors<T: Real>(m: HalfChar) -> (Vec<T>, Vec<T>) {
    let g = m.genus();
    let h = T::lit(0.5);
    (
        (0..g).map(|i| h * T::from_u8(m.top(i)).unwrap()).collect(),
        (0..g).map(|i| h * T::from_u8(m.bottom(i)).unwrap()).collect(),
    )
}

/// The Frobenius sum; approximately zero when the identity holds.
pub fn frobenius_sum<T: Real>(
    b: &[HalfChar; 4],
    z: &[Vec<Complex<T>>; 4],
    curve: &CurveData<T>,
    cfg: &EvalConfig,
) -> Result<Complex<T>> {
    let g = curve.branch.genus();
    if let Some(m) = b.iter().find(|m| m.genus() != g) {
        return Err(Error::GenusMismatch {
            expected: g,
            found: m.genus(),
        });
    }
    if !b.iter().fold(HalfChar::zero(g), |s, m| s.xor(*m)).is_zero() {
        return Err(Error::ConstraintViolation("characteristics do not sum to zero".into()));
    }
    if let Some(v) = z.iter().find(|v| v.len() != g) {
        return Err(Error::GenusMismatch {
            expected: g,
            found: v.len(),
        });
    }
    let scale = z.iter().flatten().fold(T::one(), |m, x| m.max(x.norm()));
    for k in 0..g {
        let s = z.iter().fold(Complex::new(T::zero(), T::zero()), |acc, v| acc + v[k]);
        if s.norm() > T::lit(1e-12) * scale {
            return Err(Error::ConstraintViolation("arguments do not sum to zero".into()));
        }
    }

    let mut lifted: Vec<(Vec<T>, Vec<T>)> = b[..3].iter().map(|m| half_vectors(*m)).collect();
    let last = (0..2)
        .map(|side| {
            (0..g)
                .map(|i| {
                    -lifted.iter().fold(T::zero(), |s, v| s + if side == 0 { v.0[i] } else { v.1[i] })
                })
                .collect::<Vec<T>>()
        })
        .collect::<Vec<_>>();
    lifted.push((last[0].clone(), last[1].clone()));

    let u = curve.branch.odd_indices();
    let indices = (1..=2 * g + 1)
        .map(BranchIndex::Finite)
        .chain(std::iter::once(BranchIndex::Infinity));
    let mut total = Complex::new(T::zero(), T::zero());
    for j in indices {
        let sign = match j {
            BranchIndex::Finite(k) if u.contains(k) => T::one(),
            _ => -T::one(),
        };
        let (ea, eb) = half_vectors::<T>(epsilon(j, g)?);
        let mut prod = Complex::new(sign, T::zero());
        for (i, (a, bb)) in lifted.iter().enumerate() {
            let a2: Vec<T> = a.iter().zip(&ea).map(|(x, y)| *x + *y).collect();
            let b2: Vec<T> = bb.iter().zip(&eb).map(|(x, y)| *x + *y).collect();
            prod = prod * theta_raw(&a2, &b2, &z[i], &curve.tau, cfg)?;
        }
        total = total + prod;
    }
    Ok(total)
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusCase {
    pub characteristics: [HalfChar; 4],
    pub zero_arguments: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusReport {
    /// Largest `|sum|`; the identity predicts zero.
    pub max_rel_err: f64,
    pub worst_case: Option<FrobeniusCase>,
    pub tolerance: f64,
    pub pass: bool,
    pub samples: usize,
    pub seed: u64,
}

/// Random admissible quadruples; odd samples use random arguments with `z_4 = -(z_1+z_2+z_3)`.
pub fn verify_frobenius<T: Real>(
    curve: &CurveData<T>,
    samples: usize,
    seed: u64,
    tolerance: f64,
    cfg: &EvalConfig,
) -> Result<FrobeniusReport> {
    let g = curve.branch.genus();
    let mut r = rng(seed);
    let mut worst = 0.0f64;
    let mut worst_case = None;
    for s in 0..samples {
        let mut b = [HalfChar::zero(g); 4];
        for m in b.iter_mut().take(3) {
            *m = HalfChar::from_code(g, r.gen_range(0..1 << (2 * g)));
        }
        b[3] = b[0].xor(b[1]).xor(b[2]);
        let zero_arguments = s % 2 == 0;
        let z: [Vec<Complex<T>>; 4] = if zero_arguments {
            std::array::from_fn(|_| vec![Complex::new(T::zero(), T::zero()); g])
        } else {
            let mut z: [Vec<Complex<T>>; 4] = std::array::from_fn(|_| random_argument(g, 0.3, &mut r));
            z[3] = (0..g).map(|k| -(z[0][k] + z[1][k] + z[2][k])).collect();
            z
        };
        let res = frobenius_sum(&b, &z, curve, cfg)?.norm().to_f64().unwrap();
        if !(res <= worst) {
            worst = res;
            worst_case = Some(FrobeniusCase {
                characteristics: b,
                zero_arguments,
            });
        }
    }
    Ok(FrobeniusReport {
        max_rel_err: worst,
        worst_case,
        tolerance,
        pass: worst < tolerance,
        samples,
        seed,
    })
}
