//! Residuals of the quasi-periodicity and parity laws, for diagnostics and tests.

use num_complex::Complex;
use serde::Serialize;

use super::{envelope, theta_char, theta_raw, EvalConfig, RiemannMatrix};
use crate::characteristics::{Characteristic, HalfChar};
use crate::error::{Error, Result};
use crate::scalar::{cis, Real};

/// Each residual is `|lhs - rhs| / E`, with `E` the envelope at the shifted argument.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuasiResiduals<T> {
    /// `theta[a+n; b+m](z) = e^{2 pi i a^T m} theta[a; b](z)`
    pub char_shift: T,
    /// `theta[a; b](z+m) = e^{2 pi i a^T m} theta[a; b](z)`
    pub real_shift: T,
    /// `theta[a; b](z + tau m) = e^{pi i (-2 b^T m - m^T tau m - 2 m^T z)} theta[a; b](z)`
    pub tau_shift: T,
}

impl<T: Real> QuasiResiduals<T> {
    pub fn max(&self) -> T {
        self.char_shift.max(self.real_shift).max(self.tau_shift)
    }
}

pub fn quasi_periodicity_residuals<T: Real>(
    c: &Characteristic,
    z: &[Complex<T>],
    n: &[i64],
    m: &[i64],
    tau: &RiemannMatrix<T>,
    cfg: &EvalConfig,
) -> Result<QuasiResiduals<T>> {
    let g = tau.genus();
    if n.len() != g || m.len() != g {
        return Err(Error::GenusMismatch {
            expected: g,
            found: n.len().min(m.len()),
        });
    }
    let a: Vec<T> = c.a();
    let b: Vec<T> = c.b();
    let int = |x: i64| T::from_i64(x).unwrap();
    let pi = T::PI();
    let two = T::lit(2.0);
    let base = theta_char(c, z, tau, cfg)?;
    let am = a.iter().zip(m).fold(T::zero(), |s, (x, &y)| s + *x * int(y));

    let an: Vec<T> = a.iter().zip(n).map(|(x, &k)| *x + int(k)).collect();
    let bm: Vec<T> = b.iter().zip(m).map(|(x, &k)| *x + int(k)).collect();
    let lhs1 = theta_raw(&an, &bm, z, tau, cfg)?;
    let char_shift = (lhs1 - base * cis(two * pi * am)).norm() / envelope(z, tau);

    let zm: Vec<Complex<T>> = z.iter().zip(m).map(|(x, &k)| *x + int(k)).collect();
    let lhs2 = theta_char(c, &zm, tau, cfg)?;
    let real_shift = (lhs2 - base * cis(two * pi * am)).norm() / envelope(&zm, tau);

    let tm = tau.apply_int(m);
    let zt: Vec<Complex<T>> = z.iter().zip(&tm).map(|(x, y)| *x + *y).collect();
    let lhs3 = theta_char(c, &zt, tau, cfg)?;
    let bm_dot = b.iter().zip(m).fold(T::zero(), |s, (x, &y)| s + *x * int(y));
    let mtm = m
        .iter()
        .zip(&tm)
        .fold(Complex::new(T::zero(), T::zero()), |s, (&k, y)| s + *y * int(k));
    let mz = m
        .iter()
        .zip(z)
        .fold(Complex::new(T::zero(), T::zero()), |s, (&k, y)| s + *y * int(k));
    let expo = (mtm + mz * two + Complex::new(two * bm_dot, T::zero())) * Complex::new(T::zero(), -pi);
    let tau_shift = (lhs3 - base * expo.exp()).norm() / envelope(&zt, tau);

    Ok(QuasiResiduals {
        char_shift,
        real_shift,
        tau_shift,
    })
}

/// `|theta[m](-z) - e(m) theta[m](z)| / E(z)`.
pub fn parity_residual<T: Real>(
    m: HalfChar,
    z: &[Complex<T>],
    tau: &RiemannMatrix<T>,
    cfg: &EvalConfig,
) -> Result<T> {
    let c = Characteristic::from_half(m);
    let neg: Vec<Complex<T>> = z.iter().map(|x| -*x).collect();
    let lhs = theta_char(&c, &neg, tau, cfg)?;
    let rhs = theta_char(&c, z, tau, cfg)? * T::from_i8(m.parity()).unwrap();
    Ok((lhs - rhs).norm() / envelope(z, tau))
}
