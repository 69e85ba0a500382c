//! Period matrices of real hyperelliptic curves.
//!
//! With `e_1 < ... < e_{2g+1}` and `f(x) = prod (x - e_k)`, the gap integrals
//! `I_k^{(j)} = int_{e_k}^{e_{k+1}} x^j dx / sqrt|f(x)|` become smooth
//! Chebyshev-weighted integrals under `x = c + h t`. On gap `k` the function `f`
//! has sign `(-1)^{2g+1-k}`, so `y = i^{2g+1-k} sqrt|f|` there, and the loop
//! around `e_k, e_{k+1}` has period `-2 I_k / i^{2g+1-k}`.
//!
//! Cycles: `A_i` is the loop around gap `2i - 1`; `B_i` is the sum of the loops
//! around gaps `2i, 2i+2, ..., 2g`, which encircles `e_{2i}, ..., e_{2g+1}`.
//! This is the basis in which the vanishing criterion on subsets holds.

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use super::{epsilon_t, is_vanishing, BranchSet, Subset};
use crate::characteristics::{Characteristic, HalfChar};
use crate::error::{Error, Result};
use crate::linalg::{complex_solve, Square};
use crate::quadrature::integrate_doubling;
use crate::scalar::Real;
use crate::theta::{EvalConfig, NullGrid, RiemannMatrix, VanishThresholds};

/// Relative asymmetry tolerated in the computed `tau` before symmetrizing.
pub const PERIOD_SYMMETRY_TOL: f64 = 1e-9;

/// Relative convergence target for the gap integrals.
pub const QUADRATURE_TOL: f64 = 1e-11;

#[derive(Clone, Debug)]
pub struct CurveData<T: Real = f64> {
    pub branch: BranchSet<T>,
    pub tau: RiemannMatrix<T>,
    /// `a_periods[j][i] = int_{A_i} x^j dx / y`, so `tau = a_periods^{-1} b_periods`.
    pub a_periods: Square<Complex<T>>,
    pub b_periods: Square<Complex<T>>,
    /// Largest node count used by any gap integral.
    pub quadrature_nodes: usize,
}

fn gap_integrals<T: Real>(e: &[T], k: usize, genus: usize) -> Result<(Vec<T>, usize)> {
    let two = T::lit(2.0);
    let c = (e[k] + e[k + 1]) / two;
    let h = (e[k + 1] - e[k]) / two;
    integrate_doubling(genus, T::lit(QUADRATURE_TOL), |t| {
        let x = c + h * t;
        let rest = e
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k && m != k + 1)
            .fold(T::one(), |p, (_, &em)| p * (x - em));
        let w = T::one() / rest.abs().sqrt();
        (0..genus).map(|j| x.powi(j as i32) * w).collect()
    })
}

/// Period matrix of `y^2 = prod (x - e_k)` for real, strictly increasing branch points.
pub fn period_matrix<T: Real>(branch: &BranchSet<T>) -> Result<CurveData<T>> {
    if !branch.is_real_sorted() {
        return Err(Error::NotRealSorted);
    }
    let g = branch.genus();
    let e: Vec<T> = branch.points().iter().map(|p| p.re).collect();
    let gaps: Vec<(Vec<T>, usize)> = (0..2 * g)
        .into_par_iter()
        .map(|k| gap_integrals(&e, k, g))
        .collect::<Result<_>>()?;
    let nodes = gaps.iter().map(|(_, n)| *n).max().unwrap_or(0);

    // loop period for 0-based gap k (1-based k+1)
    let i_unit = Complex::new(T::zero(), T::one());
    let loop_period = |k: usize, j: usize| -> Complex<T> {
        let phase = i_unit.powi((2 * g - k) as i32);
        Complex::new(T::lit(-2.0) * gaps[k].0[j], T::zero()) / phase
    };
    let zero = Complex::new(T::zero(), T::zero());
    let mut a = Square {
        n: g,
        data: vec![zero; g * g],
    };
    let mut b = a.clone();
    for i in 0..g {
        for j in 0..g {
            a.set(j, i, loop_period(2 * i, j));
            let bij = (i..g).fold(zero, |s, k| s + loop_period(2 * k + 1, j));
            b.set(j, i, bij);
        }
    }
    let tau = complex_solve(&a, &b)
        .ok_or_else(|| Error::MalformedMatrix("A-period matrix is singular".into()))?;
    let tau = RiemannMatrix::symmetrized(tau.rows(), T::lit(PERIOD_SYMMETRY_TOL))?;
    Ok(CurveData {
        branch: branch.clone(),
        tau,
        a_periods: a,
        b_periods: b,
        quadrature_nodes: nodes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VanishingObservation {
    pub characteristic: HalfChar,
    pub subset: Subset,
    pub predicted: bool,
    pub observed: bool,
    /// `|theta|` relative to the largest even theta-null.
    pub relative_modulus: f64,
}

/// Observed versus predicted vanishing of every even theta-null.
#[derive(Clone, Debug, Serialize)]
pub struct VanishingCheck {
    pub genus: usize,
    pub threshold: f64,
    pub rows: Vec<VanishingObservation>,
    pub mismatches: usize,
}

impl VanishingCheck {
    pub fn pass(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compares the subset criterion with numerically computed theta-nulls at `curve.tau`.
pub fn check_vanishing_pattern<T: Real>(
    curve: &CurveData<T>,
    thresholds: VanishThresholds,
    cfg: &EvalConfig,
) -> Result<VanishingCheck> {
    let g = curve.branch.genus();
    let grid = NullGrid::compute(&curve.tau, 2, cfg)?;
    let modulus = |m: HalfChar| grid.get(&Characteristic::from_half(m)).unwrap().norm();
    let scale = HalfChar::all(g)
        .filter(|m| m.is_even())
        .map(modulus)
        .fold(T::zero(), T::max);
    let mut rows = Vec::new();
    for t in Subset::all_even(g) {
        let m = epsilon_t(&t);
        if !m.is_even() {
            continue;
        }
        let rel = (modulus(m) / scale).to_f64().unwrap();
        rows.push(VanishingObservation {
            characteristic: m,
            subset: t,
            predicted: is_vanishing(&t)?,
            observed: rel < thresholds.value,
            relative_modulus: rel,
        });
    }
    rows.sort_by_key(|r| r.characteristic);
    let mismatches = rows.iter().filter(|r| r.predicted != r.observed).count();
    Ok(VanishingCheck {
        genus: g,
        threshold: thresholds.value,
        rows,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::theta_null;

    fn agm(mut a: f64, mut b: f64) -> f64 {
        while (a - b).abs() > 1e-15 * a {
            (a, b) = ((a + b) / 2.0, (a * b).sqrt());
        }
        a
    }

    #[test]
    fn genus_one_matches_agm() {
        for e in [[0.0f64, 1.0, 2.0], [0.0, 1.0, 3.0], [-2.0, 0.5, 7.0]] {
            let curve = period_matrix(&BranchSet::from_reals(&e).unwrap()).unwrap();
            let t = curve.tau.entry(0, 0);
            let pi = std::f64::consts::PI;
            let i1 = pi / agm((e[2] - e[0]).sqrt(), (e[2] - e[1]).sqrt());
            let i2 = pi / agm((e[2] - e[0]).sqrt(), (e[1] - e[0]).sqrt());
            assert!(t.re.abs() < 1e-12);
            assert!((t.im - i2 / i1).abs() < 1e-10, "{e:?}: {t} vs {}", i2 / i1);
        }
    }

    #[test]
    fn lambda_round_trip() {
        let cfg = EvalConfig::default();
        for lambda in [2.0f64, 3.0, 5.5] {
            let curve = period_matrix(&BranchSet::from_reals(&[0.0, 1.0, lambda]).unwrap()).unwrap();
            let n = |s: &str| {
                theta_null(&Characteristic::from_half(s.parse().unwrap()), &curve.tau, &cfg)
                    .unwrap()
                    .powi(4)
            };
            let got = n("0/0") / n("1/0");
            assert!((got.re - lambda).abs() < 1e-8 * lambda && got.im.abs() < 1e-8);
        }
    }

    #[test]
    fn genus_three_pipeline_has_one_vanishing_even_null() {
        for e in [
            [0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0],
            [-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0],
            [0.0, 1.0, 2.5, 3.0, 4.2, 7.0, 9.0],
        ] {
            let curve = period_matrix(&BranchSet::from_reals(&e).unwrap()).unwrap();
            let check =
                check_vanishing_pattern(&curve, VanishThresholds::default(), &EvalConfig::default())
                    .unwrap();
            assert!(check.pass(), "{e:?}");
            assert_eq!(check.rows.iter().filter(|r| r.observed).count(), 1);
        }
    }

    #[test]
    fn tau_is_a_periods_inverse_times_b_periods() {
        let curve = period_matrix(&BranchSet::from_reals(&[0.0, 1.0, 2.0, 3.0, 5.0]).unwrap()).unwrap();
        let prod = complex_solve(&curve.a_periods, &curve.b_periods).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((prod.get(i, j) - curve.tau.entry(i, j)).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn rejects_unsorted_or_complex() {
        let b = BranchSet::from_reals(&[1.0, 0.0, 2.0]).unwrap();
        assert!(matches!(period_matrix(&b), Err(Error::NotRealSorted)));
        let c = BranchSet::new(vec![
            Complex::new(0.0, 0.0),
            Complex::new(1.0, 1.0),
            Complex::new(2.0, 0.0),
        ])
        .unwrap();
        assert!(matches!(period_matrix(&c), Err(Error::NotRealSorted)));
    }
}
