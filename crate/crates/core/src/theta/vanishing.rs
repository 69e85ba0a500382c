//! Deciding whether a theta-null vanishes, and to what order.

use serde::{Deserialize, Serialize};

use super::{theta_gradient, theta_null, EvalConfig, NullGrid, RiemannMatrix};
use crate::characteristics::{Characteristic, HalfChar};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Thresholds relative to the largest even half-characteristic theta-null modulus.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VanishThresholds {
    pub value: f64,
    pub gradient: f64,
}

impl Default for VanishThresholds {
    fn default() -> Self {
        Self {
            value: 1e-6,
            gradient: 1e-5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VanishingOrder {
    Zero,
    One,
    AtLeastTwo,
}

impl VanishingOrder {
    pub fn vanishes(self) -> bool {
        self != VanishingOrder::Zero
    }
}

/// `max |theta[m](0, tau)|` over even half characteristics `m`.
pub fn max_even_null<T: Real>(tau: &RiemannMatrix<T>, cfg: &EvalConfig) -> Result<T> {
    let grid = NullGrid::compute(tau, 2, cfg)?;
    Ok(HalfChar::all(tau.genus())
        .filter(|m| m.is_even())
        .map(|m| grid.values()[m.code() as usize].norm())
        .fold(T::zero(), T::max))
}

/// Vanishing tests against a fixed `tau`, with the scale computed once.
#[derive(Clone, Debug)]
pub struct VanishingProbe<'a, T: Real = f64> {
    tau: &'a RiemannMatrix<T>,
    cfg: EvalConfig,
    thresholds: VanishThresholds,
    scale: T,
}

impl<'a, T: Real> VanishingProbe<'a, T> {
    pub fn new(tau: &'a RiemannMatrix<T>, thresholds: VanishThresholds, cfg: EvalConfig) -> Result<Self> {
        let scale = max_even_null(tau, &cfg)?;
        if !(scale > T::zero()) {
            return Err(Error::ThetaNullTestFailed("all even theta-nulls vanish".into()));
        }
        Ok(Self {
            tau,
            cfg,
            thresholds,
            scale,
        })
    }

    pub fn scale(&self) -> T {
        self.scale
    }

    pub fn tau(&self) -> &RiemannMatrix<T> {
        self.tau
    }

    pub fn config(&self) -> &EvalConfig {
        &self.cfg
    }

    pub fn thresholds(&self) -> VanishThresholds {
        self.thresholds
    }

    /// Whether a theta-null of modulus `modulus` counts as zero.
    pub fn is_zero_value(&self, modulus: T) -> bool {
        modulus < T::lit(self.thresholds.value) * self.scale
    }

    pub fn order(&self, c: &Characteristic) -> Result<VanishingOrder> {
        let value = theta_null(c, self.tau, &self.cfg)?;
        if !self.is_zero_value(value.norm()) {
            return Ok(VanishingOrder::Zero);
        }
        self.order_given_zero(c)
    }

    /// Order for a characteristic already known to have a vanishing theta-null.
    pub fn order_given_zero(&self, c: &Characteristic) -> Result<VanishingOrder> {
        let norm = self.gradient_norm(c)?;
        Ok(self.order_from_gradient(norm))
    }

    /// Euclidean norm of the gradient of `theta[c](z)` at `z = 0`.
    pub fn gradient_norm(&self, c: &Characteristic) -> Result<T> {
        let zero = vec![num_complex::Complex::new(T::zero(), T::zero()); self.tau.genus()];
        let grad = theta_gradient(c, &zero, self.tau, &self.cfg)?;
        Ok(grad.iter().fold(T::zero(), |acc, x| acc + x.norm_sqr()).sqrt())
    }

    /// Order of a vanishing theta-null whose gradient at zero has norm `norm`.
    pub fn order_from_gradient(&self, norm: T) -> VanishingOrder {
        if norm < T::lit(self.thresholds.gradient) * self.scale {
            VanishingOrder::AtLeastTwo
        } else {
            VanishingOrder::One
        }
    }
}

/// Vanishing order of `theta[c](z, tau)` at `z = 0`.
pub fn vanishing_order_at<T: Real>(
    c: &Characteristic,
    tau: &RiemannMatrix<T>,
    thresholds: VanishThresholds,
    cfg: &EvalConfig,
) -> Result<VanishingOrder> {
    VanishingProbe::new(tau, thresholds, *cfg)?.order(c)
}
