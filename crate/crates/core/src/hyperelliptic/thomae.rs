//! Thomae's formula: `theta[epsilon_T](0)^4 = A * P(T)` for non-vanishing `T`, where
//! `P(T) = prod_{i<j in T△U} (alpha_i - alpha_j) * prod_{i<j not in T△U} (alpha_i - alpha_j)`.
//!
//! Only ratios are computed, so the constant `A` cancels. No extra sign
//! `(-1)^{#(T ∩ U)}` enters: with it the genus-one ratios contradict Jacobi's
//! quartic identity (see the tests).

use num_complex::Complex;
use rand::seq::SliceRandom;
use serde::Serialize;

use super::{epsilon_t, is_vanishing, BranchSet, CurveData, Subset};
use crate::characteristics::Characteristic;
use crate::error::{Error, Result};
use crate::random::rng;
use crate::scalar::Real;
use crate::theta::{theta_null, EvalConfig};

/// `P(T)` for an even subset `T ⊆ S`.
pub fn thomae_product<T: Real>(t: &Subset, branch: &BranchSet<T>) -> Result<Complex<T>> {
    if t.genus() != branch.genus() {
        return Err(Error::GenusMismatch {
            expected: branch.genus(),
            found: t.genus(),
        });
    }
    if !t.is_even() {
        return Err(Error::OddSubset(t.len()));
    }
    let side = t.symmetric_difference(&branch.odd_indices());
    let n = branch.points().len();
    let mut p = Complex::new(T::one(), T::zero());
    for i in 1..=n {
        for j in i + 1..=n {
            if side.contains(i) == side.contains(j) {
                p = p * (branch.point(i) - branch.point(j));
            }
        }
    }
    Ok(p)
}

fn admissible(t: &Subset) -> Result<()> {
    if is_vanishing(t)? {
        return Err(Error::VanishingCharacteristic(t.to_string()));
    }
    Ok(())
}

/// `P(T1) / P(T2)`, predicting `theta[epsilon_T1](0)^4 / theta[epsilon_T2](0)^4`.
pub fn thomae_ratio<T: Real>(t1: &Subset, t2: &Subset, branch: &BranchSet<T>) -> Result<Complex<T>> {
    admissible(t1)?;
    admissible(t2)?;
    if t1 == t2 {
        return Ok(Complex::new(T::one(), T::zero()));
    }
    Ok(thomae_product(t1, branch)? / thomae_product(t2, branch)?)
}

/// Even subsets `T ⊆ S` with `#(T △ U) = g + 1`.
pub fn admissible_subsets(genus: usize) -> Vec<Subset> {
    Subset::all_even(genus)
        .filter(|t| !is_vanishing(t).expect("even subset"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub eval: EvalConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            samples: 10,
            seed: 0,
            tolerance: 1e-5,
            eval: EvalConfig::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ThomaeReport {
    pub max_rel_err: f64,
    /// The pair `(T1, T2)` attaining `max_rel_err`.
    pub worst_case: Option<(Subset, Subset)>,
    pub tolerance: f64,
    pub pass: bool,
    pub samples: usize,
    pub seed: u64,
}

/// Compares fourth-power theta-null ratios with Thomae ratios on random admissible pairs.
pub fn verify_thomae<T: Real>(curve: &CurveData<T>, opts: &VerifyOptions) -> Result<ThomaeReport> {
    let g = curve.branch.genus();
    let subsets = admissible_subsets(g);
    let mut pairs: Vec<(Subset, Subset)> = subsets
        .iter()
        .flat_map(|a| subsets.iter().filter(move |b| a < *b).map(move |b| (*a, *b)))
        .collect();
    pairs.shuffle(&mut rng(opts.seed));
    pairs.truncate(opts.samples);

    let fourth = |t: &Subset| -> Result<Complex<T>> {
        let c = Characteristic::from_half(epsilon_t(t));
        Ok(theta_null(&c, &curve.tau, &opts.eval)?.powi(4))
    };
    let mut max_rel_err = 0.0f64;
    let mut worst_case = None;
    for (t1, t2) in &pairs {
        let predicted = thomae_ratio(t1, t2, &curve.branch)?;
        let measured = fourth(t1)? / fourth(t2)?;
        let err = ((measured - predicted).norm() / predicted.norm()).to_f64().unwrap();
        if !(err <= max_rel_err) {
            max_rel_err = err;
            worst_case = Some((*t1, *t2));
        }
    }
    Ok(ThomaeReport {
        max_rel_err,
        worst_case,
        tolerance: opts.tolerance,
        pass: max_rel_err < opts.tolerance,
        samples: pairs.len(),
        seed: opts.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperelliptic::period_matrix;

    fn s(g: usize, idx: &[usize]) -> Subset {
        Subset::new(g, idx).unwrap()
    }

    #[test]
    fn trivial_and_reciprocal() {
        let b = BranchSet::from_reals(&[0.0, 1.0, 3.0, 4.5, 6.0]).unwrap();
        let subsets = admissible_subsets(2);
        assert_eq!(subsets.len(), 10);
        let (t1, t2) = (subsets[1], subsets[4]);
        assert_eq!(thomae_ratio(&t1, &t1, &b).unwrap(), Complex::new(1.0, 0.0));
        let r = thomae_ratio(&t1, &t2, &b).unwrap() * thomae_ratio(&t2, &t1, &b).unwrap();
        assert!((r - 1.0).norm() < 1e-14);
    }

    #[test]
    fn rejects_vanishing_and_odd_subsets() {
        let b = BranchSet::from_reals(&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        let u = Subset::odd_indices(3);
        let ok = Subset::empty(3);
        assert!(matches!(thomae_ratio(&u, &ok, &b), Err(Error::VanishingCharacteristic(_))));
        assert!(matches!(thomae_ratio(&s(3, &[1]), &ok, &b), Err(Error::OddSubset(1))));
    }

    #[test]
    fn products_satisfy_jacobi_only_without_alternating_sign() {
        // genus 1, branch {0, 1, 3}: epsilon of {}, {1,2}, {2,3} is [0;0], [0;1/2], [1/2;0],
        // and theta00^4 = theta01^4 + theta10^4 forces P({}) = P({1,2}) + P({2,3}).
        let b = BranchSet::from_reals(&[0.0, 1.0, 3.0]).unwrap();
        let (t0, t1, t2) = (Subset::empty(1), s(1, &[1, 2]), s(1, &[2, 3]));
        let p = |t: &Subset| thomae_product(t, &b).unwrap().re;
        assert_eq!((p(&t0), p(&t1), p(&t2)), (-3.0, -2.0, -1.0));
        assert_eq!(p(&t0), p(&t1) + p(&t2));
        let u = Subset::odd_indices(1);
        let signed = |t: &Subset| (-1f64).powi(t.intersection(&u).len() as i32) * p(t);
        assert_ne!(signed(&t0), signed(&t1) + signed(&t2));
    }

    #[test]
    fn genus_one_and_two_reports() {
        let opts = VerifyOptions {
            samples: 5,
            tolerance: 1e-6,
            ..Default::default()
        };
        let c1 = period_matrix(&BranchSet::from_reals(&[0.0, 1.0, 3.0]).unwrap()).unwrap();
        let r1 = verify_thomae(&c1, &opts).unwrap();
        assert!(r1.pass, "{r1:?}");
        assert_eq!(r1.samples, 3);
        let c2 = period_matrix(&BranchSet::from_reals(&[0.0, 1.0, 2.0, 3.0, 5.0]).unwrap()).unwrap();
        let r2 = verify_thomae(&c2, &VerifyOptions { samples: 10, ..Default::default() }).unwrap();
        assert!(r2.pass && r2.samples == 10, "{r2:?}");
    }
}
