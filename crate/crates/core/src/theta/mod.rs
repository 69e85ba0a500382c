//! Riemann theta functions with rational characteristics.
//!
//! Every evaluation is a truncated lattice sum
//! `sum_u exp(pi i ((u+a)^T tau (u+a) + 2 (u+a)^T (z+b)))`. Writing `Y = Im tau`
//! and `y = Im z`, the modulus of a term is
//! `E(z) * exp(-pi (v - c)^T Y (v - c))` with `c = -Y^{-1} y` and the envelope
//! `E(z) = exp(pi y^T Y^{-1} y)`. The box of integer points is centred on the
//! rounded peak and its radius is the smallest one whose Gaussian tail bound
//! is below `tol`, plus a margin of two. The tolerance is therefore absolute
//! relative to `E(z)`, which is 1 for theta-nulls.

mod checks;
mod grid;
mod matrix;
mod vanishing;

pub use checks::{parity_residual, quasi_periodicity_residuals, QuasiResiduals};
pub use grid::NullGrid;
pub use matrix::{validate_period_matrix, RiemannMatrix, SYMMETRY_TOL};
pub use vanishing::{
    max_even_null, vanishing_order_at, VanishThresholds, VanishingOrder, VanishingProbe,
};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::characteristics::Characteristic;
use crate::error::{Error, Result};
use crate::scalar::{cis, Real};

/// Extra lattice layers added on top of the certified radius.
pub const RADIUS_MARGIN: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Absolute target for the tail bound, relative to the envelope `E(z)`.
    pub tol: f64,
    pub radius_cap: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            radius_cap: 60,
        }
    }
}

impl EvalConfig {
    pub fn new(tol: f64, radius_cap: usize) -> Result<Self> {
        let cfg = Self { tol, radius_cap };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidConfig(format!("tol must be positive, got {}", self.tol)));
        }
        if self.radius_cap < 1 {
            return Err(Error::InvalidConfig("radius cap must be at least 1".into()));
        }
        Ok(())
    }

    fn effective_tol<T: Real>(&self) -> T {
        T::lit(self.tol).max(T::tol_floor())
    }
}

/// Upper bound on `sum exp(-pi lambda |u - c|^2)` over integer points outside
/// the box `round(c) + [-r, r]^g`, uniformly in `c`.
pub fn tail_bound<T: Real>(genus: usize, lambda: T, radius: usize) -> T {
    let pi = T::PI();
    let two = T::lit(2.0);
    let rho = T::from_usize(radius).unwrap() + T::lit(0.5);
    let one_dim = two * (-pi * lambda * rho * rho).exp() * (T::one() + T::one() / (two * pi * lambda * rho));
    let others = (T::one() + T::one() / lambda.sqrt()).powi(genus as i32 - 1);
    T::from_usize(genus).unwrap() * one_dim * others
}

/// Radius (margin included) needed for `tol`, or `RadiusOverflow`.
pub fn truncation_radius<T: Real>(tau: &RiemannMatrix<T>, cfg: &EvalConfig) -> Result<usize> {
    cfg.validate()?;
    let tol = cfg.effective_tol::<T>();
    let lambda = tau.lambda_min();
    let mut r = 0usize;
    while tail_bound(tau.genus(), lambda, r) > tol {
        r += 1;
        if r > cfg.radius_cap + 1 {
            break;
        }
    }
    let needed = r + RADIUS_MARGIN;
    if needed > cfg.radius_cap {
        return Err(Error::RadiusOverflow {
            needed,
            cap: cfg.radius_cap,
        });
    }
    Ok(needed)
}

/// `E(z) = exp(pi Im(z)^T Y^{-1} Im(z))`, the largest possible term modulus scale.
pub fn envelope<T: Real>(z: &[Complex<T>], tau: &RiemannMatrix<T>) -> T {
    let y: Vec<T> = z.iter().map(|c| c.im).collect();
    let s = tau.y_inv_apply(&y);
    let q = y.iter().zip(&s).fold(T::zero(), |acc, (a, b)| acc + *a * *b);
    (T::PI() * q).exp()
}

/// Calls `f` on every point of `center + [-r, r]^g`.
pub(crate) fn for_each_box_point(center: &[i64], r: i64, mut f: impl FnMut(&[i64])) {
    let g = center.len();
    let mut u: Vec<i64> = center.iter().map(|c| c - r).collect();
    loop {
        f(&u);
        let mut k = 0;
        loop {
            if k == g {
                return;
            }
            if u[k] < center[k] + r {
                u[k] += 1;
                break;
            }
            u[k] = center[k] - r;
            k += 1;
        }
    }
}

fn check_argument<T: Real>(z: &[Complex<T>], genus: usize) -> Result<()> {
    if z.len() != genus {
        return Err(Error::GenusMismatch {
            expected: genus,
            found: z.len(),
        });
    }
    if z.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::InvalidConfig("argument has non-finite entries".into()));
    }
    Ok(())
}

/// Envelope-scaled lattice sum and optional gradient, for real characteristic vectors.
struct ShiftedSum<'a, T: Real> {
    tau: &'a RiemannMatrix<T>,
    a: &'a [T],
    lin: Vec<T>,
    peak: Vec<T>,
}

impl<'a, T: Real> ShiftedSum<'a, T> {
    fn new(tau: &'a RiemannMatrix<T>, a: &'a [T], b: &[T], z: &[Complex<T>]) -> Self {
        let y: Vec<T> = z.iter().map(|c| c.im).collect();
        let peak = tau.y_inv_apply(&y);
        let lin = z.iter().zip(b).map(|(c, &bi)| c.re + bi).collect();
        Self { tau, a, lin, peak }
    }

    fn center(&self) -> Vec<i64> {
        self.a
            .iter()
            .zip(&self.peak)
            .map(|(&a, &p)| (-a - p).round().to_i64().unwrap_or(0))
            .collect()
    }

    /// Term divided by the envelope, and `v = u + a`.
    fn term(&self, u: &[i64], v: &mut [T], w: &mut [T]) -> Complex<T> {
        let g = u.len();
        for k in 0..g {
            v[k] = T::from_i64(u[k]).unwrap() + self.a[k];
            w[k] = v[k] + self.peak[k];
        }
        let (mut q_im, mut q_re) = (T::zero(), T::zero());
        for i in 0..g {
            let mut ri = T::zero();
            let mut ii = T::zero();
            for j in 0..g {
                let t = self.tau.entry(i, j);
                ri = ri + t.re * v[j];
                ii = ii + t.im * w[j];
            }
            q_re = q_re + v[i] * ri;
            q_im = q_im + w[i] * ii;
        }
        let lin = v.iter().zip(&self.lin).fold(T::zero(), |acc, (a, b)| acc + *a * *b);
        let pi = T::PI();
        cis(pi * (q_re + T::lit(2.0) * lin)) * (-pi * q_im).exp()
    }

    fn value(&self, radius: usize) -> Complex<T> {
        let g = self.a.len();
        let (mut v, mut w) = (vec![T::zero(); g], vec![T::zero(); g]);
        let mut acc = Complex::new(T::zero(), T::zero());
        for_each_box_point(&self.center(), radius as i64, |u| {
            acc = acc + self.term(u, &mut v, &mut w);
        });
        acc
    }

    fn gradient(&self, radius: usize) -> Vec<Complex<T>> {
        let g = self.a.len();
        let (mut v, mut w) = (vec![T::zero(); g], vec![T::zero(); g]);
        let mut acc = vec![Complex::new(T::zero(), T::zero()); g];
        for_each_box_point(&self.center(), radius as i64, |u| {
            let t = self.term(u, &mut v, &mut w);
            for k in 0..g {
                acc[k] = acc[k] + t * v[k];
            }
        });
        let two_pi_i = Complex::new(T::zero(), T::lit(2.0) * T::PI());
        acc.into_iter().map(|x| x * two_pi_i).collect()
    }
}

/// Theta with arbitrary real characteristic vectors `a`, `b` (not reduced mod 1).
pub fn theta_raw<T: Real>(
    a: &[T],
    b: &[T],
    z: &[Complex<T>],
    tau: &RiemannMatrix<T>,
    cfg: &EvalConfig,
) -> Result<Complex<T>> {
    let radius = truncation_radius(tau, cfg)?;
    theta_raw_at_radius(a, b, z, tau, radius)
}

/// As [`theta_raw`] with an explicit box radius; no tail certification.
pub fn theta_raw_at_radius<T: Real>(
    a: &[T],
    b: &[T],
    z: &[Complex<T>],
    tau: &RiemannMatrix<T>,
    radius: usize,
) -> Result<Complex<T>> {
    let g = tau.genus();
    check_argument(z, g)?;
    for v in [a, b] {
        if v.len() != g {
            return Err(Error::GenusMismatch {
                expected: g,
                found: v.len(),
            });
        }
    }
    let sum = ShiftedSum::new(tau, a, b, z);
    Ok(sum.value(radius) * envelope(z, tau))
}

/// Riemann's theta function `theta(z, tau)`.
pub fn theta_base<T: Real>(z: &[Complex<T>], tau: &RiemannMatrix<T>, cfg: &EvalConfig) -> Result<Complex<T>> {
    let zero = vec![T::zero(); tau.genus()];
    theta_raw(&zero, &zero, z, tau, cfg)
}

fn char_vectors<T: Real>(c: &Characteristic, tau: &RiemannMatrix<T>) -> Result<(Vec<T>, Vec<T>)> {
    if c.genus() != tau.genus() {
        return Err(Error::GenusMismatch {
            expected: tau.genus(),
            found: c.genus(),
        });
    }
    Ok((c.a(), c.b()))
}

/// `theta[a; b](z, tau)` for a rational characteristic.
pub fn theta_char<T: Real>(
    c: &Characteristic,
    z: &[Complex<T>],
    tau: &RiemannMatrix<T>,
    cfg: &EvalConfig,
) -> Result<Complex<T>> {
    let (a, b) = char_vectors(c, tau)?;
    theta_raw(&a, &b, z, tau, cfg)
}

/// `theta[a; b](0, tau)`.
pub fn theta_null<T: Real>(c: &Characteristic, tau: &RiemannMatrix<T>, cfg: &EvalConfig) -> Result<Complex<T>> {
    let zero = vec![Complex::new(T::zero(), T::zero()); tau.genus()];
    theta_char(c, &zero, tau, cfg)
}

/// Gradient of `theta[a; b](z, tau)` in `z`, by the term-wise differentiated series.
pub fn theta_gradient<T: Real>(
    c: &Characteristic,
    z: &[Complex<T>],
    tau: &RiemannMatrix<T>,
    cfg: &EvalConfig,
) -> Result<Vec<Complex<T>>> {
    let (a, b) = char_vectors(c, tau)?;
    check_argument(z, tau.genus())?;
    let radius = truncation_radius(tau, cfg)?;
    let scale = envelope(z, tau);
    Ok(ShiftedSum::new(tau, &a, &b, z)
        .gradient(radius)
        .into_iter()
        .map(|x| x * scale)
        .collect())
}

#[cfg(test)]
mod tests;
