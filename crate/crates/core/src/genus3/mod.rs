//! Automorphisms of genus-3 curves read off from vanishing theta-nulls at
//! half, quarter and sixth periods.
//!
//! A rational characteristic `[a; b]` stands for the point `tau a + b` of the
//! Jacobian, and "`f` is a theta-null" means `theta[f](0, tau) = 0`. Quarter
//! and sixth periods are points of exact order 4 and 6.
//!
//! Pairing conditions between half periods are written multiplicatively in
//! the classical statements: `|x, y| = 1` there means the exponent
//! `pairing(x, y)` is 0 (syzygetic).

mod detect;
mod involution;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use detect::{
    detect_all, detect_case, is_involution_pair, CaseId, CaseReport, DetectionReport, Detector, Witness,
    IMPLICATIONS, WITNESS_CAP,
};
pub use involution::{
    build_involution_witness, commuting_half_groups, commuting_involutions, involution_groups,
    InvolutionWitness,
};

use crate::characteristics::Characteristic;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::theta::{NullGrid, VanishingOrder, VanishingProbe};

pub const GENUS: usize = 3;

/// A vanishing theta-null at a rational period.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeriodPoint {
    pub characteristic: Characteristic,
    /// `|theta[c](0)|` relative to the largest even half-characteristic theta-null.
    pub relative_modulus: f64,
    /// Gradient norm at `z = 0`, on the same relative scale.
    pub relative_gradient: f64,
    pub order: VanishingOrder,
}

impl PeriodPoint {
    pub fn order_of_point(&self) -> u32 {
        self.characteristic.order()
    }
}

pub(crate) fn require_genus_three(genus: usize) -> Result<()> {
    if genus != GENUS {
        return Err(Error::GenusMismatch {
            expected: GENUS,
            found: genus,
        });
    }
    Ok(())
}

/// Characteristics over `denom` whose theta-null vanishes, in canonical order.
pub fn vanishing_periods<T: Real>(probe: &VanishingProbe<'_, T>, denom: u32) -> Result<Vec<PeriodPoint>> {
    let tau = probe.tau();
    require_genus_three(tau.genus())?;
    if ![2, 4, 6].contains(&denom) {
        return Err(Error::InvalidConfig(format!(
            "period search supports denominators 2, 4 and 6, got {denom}"
        )));
    }
    let grid = NullGrid::compute(tau, denom, probe.config())?;
    let zeros: Vec<(Characteristic, T)> = grid
        .iter()
        .filter(|(_, v)| probe.is_zero_value(v.norm()))
        .map(|(c, v)| (c, v.norm()))
        .collect();
    zeros
        .into_par_iter()
        .map(|(c, m)| {
            let grad = probe.gradient_norm(&c)?;
            Ok(PeriodPoint {
                relative_modulus: (m / probe.scale()).to_f64().unwrap(),
                relative_gradient: (grad / probe.scale()).to_f64().unwrap(),
                order: probe.order_from_gradient(grad),
                characteristic: c,
            })
        })
        .collect()
}

/// Whether any even half characteristic has a vanishing theta-null.
pub fn is_hyperelliptic(half_vanishers: &[PeriodPoint]) -> bool {
    half_vanishers
        .iter()
        .any(|p| p.characteristic.to_half().is_some_and(|h| h.is_even()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_tau, rng};
    use crate::theta::{EvalConfig, RiemannMatrix, VanishThresholds};

    #[test]
    fn generic_half_vanishers_are_the_odd_ones() {
        let t: RiemannMatrix<f64> = random_tau(3, &mut rng(1)).unwrap();
        let probe = VanishingProbe::new(&t, VanishThresholds::default(), EvalConfig::default()).unwrap();
        let v = vanishing_periods(&probe, 2).unwrap();
        assert_eq!(v.len(), 28);
        assert!(v.iter().all(|p| !p.characteristic.to_half().unwrap().is_even()));
        assert!(v.iter().all(|p| p.order == VanishingOrder::One));
        assert!(!is_hyperelliptic(&v));
        assert!(v.windows(2).all(|w| w[0].characteristic.code_over(2) < w[1].characteristic.code_over(2)));
    }

    #[test]
    fn rejects_other_genera() {
        let t: RiemannMatrix<f64> = random_tau(2, &mut rng(1)).unwrap();
        let probe = VanishingProbe::new(&t, VanishThresholds::default(), EvalConfig::default()).unwrap();
        assert!(matches!(vanishing_periods(&probe, 2), Err(Error::GenusMismatch { .. })));
    }
}
