//! All theta-nulls `theta[j/N; k/N](0, tau)` at once.
//!
//! For a fixed top row the lattice weights `exp(pi i v^T tau v)` are folded into
//! bins by `u mod N`; each bottom row is then a short discrete Fourier sum
//! over the bins.

use num_complex::Complex;
use rayon::prelude::*;

use super::{for_each_box_point, truncation_radius, EvalConfig, RiemannMatrix};
use crate::characteristics::{char_from_code, Characteristic, SUPPORTED_DENOMS};
use crate::error::{Error, Result};
use crate::scalar::{cis, ratio, Real};

/// Theta-nulls for every characteristic with denominator dividing `denom`,
/// indexed by the canonical code over `denom`.
#[derive(Clone, Debug)]
pub struct NullGrid<T: Real = f64> {
    genus: usize,
    denom: u32,
    values: Vec<Complex<T>>,
}

fn digits(mut code: usize, n: usize, len: usize) -> Vec<i64> {
    let mut d = vec![0i64; len];
    for x in d.iter_mut().rev() {
        *x = (code % n) as i64;
        code /= n;
    }
    d
}

impl<T: Real> NullGrid<T> {
    pub fn compute(tau: &RiemannMatrix<T>, denom: u32, cfg: &EvalConfig) -> Result<Self> {
        if !SUPPORTED_DENOMS.contains(&denom) {
            return Err(Error::InvalidCharacteristic(format!(
                "denominator {denom} does not divide 12"
            )));
        }
        let g = tau.genus();
        let n = denom as usize;
        let side = n
            .checked_pow(g as u32)
            .filter(|s| s.saturating_mul(*s) as u64 <= crate::characteristics::ENUMERATION_LIMIT)
            .ok_or_else(|| Error::GuardExceeded(format!("{n}^{} theta-nulls", 2 * g)))?;
        let radius = truncation_radius(tau, cfg)? as i64;
        let pi = T::PI();
        let nn = T::from_usize(n).unwrap();
        let rows: Vec<Vec<Complex<T>>> = (0..side)
            .into_par_iter()
            .map(|top| {
                let j = digits(top, n, g);
                let a: Vec<T> = j.iter().map(|&x| ratio(x, n as i64)).collect();
                let center: Vec<i64> = a.iter().map(|&x| (-x).round().to_i64().unwrap()).collect();
                let mut bins = vec![Complex::new(T::zero(), T::zero()); side];
                let mut v = vec![T::zero(); g];
                for_each_box_point(&center, radius, |u| {
                    for k in 0..g {
                        v[k] = T::from_i64(u[k]).unwrap() + a[k];
                    }
                    let (mut re, mut im) = (T::zero(), T::zero());
                    for i in 0..g {
                        for l in 0..g {
                            let t = tau.entry(i, l);
                            re = re + v[i] * t.re * v[l];
                            im = im + v[i] * t.im * v[l];
                        }
                    }
                    let bin = u
                        .iter()
                        .fold(0usize, |acc, &x| acc * n + x.rem_euclid(n as i64) as usize);
                    bins[bin] = bins[bin] + cis(pi * re) * (-pi * im).exp();
                });
                let residues: Vec<Vec<i64>> = (0..side).map(|r| digits(r, n, g)).collect();
                (0..side)
                    .map(|bottom| {
                        let k = digits(bottom, n, g);
                        let jk: i64 = j.iter().zip(&k).map(|(x, y)| x * y).sum();
                        let lead = cis(T::lit(2.0) * pi * T::from_i64(jk).unwrap() / (nn * nn));
                        let mut s = Complex::new(T::zero(), T::zero());
                        for (r, w) in residues.iter().zip(&bins) {
                            let rk: i64 = r.iter().zip(&k).map(|(x, y)| x * y).sum::<i64>() % n as i64;
                            s = s + *w * cis(T::lit(2.0) * pi * T::from_i64(rk).unwrap() / nn);
                        }
                        s * lead
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            genus: g,
            denom,
            values: rows.into_iter().flatten().collect(),
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    /// Value for `c`, if its denominator divides the grid's.
    pub fn get(&self, c: &Characteristic) -> Option<Complex<T>> {
        if c.genus() != self.genus {
            return None;
        }
        c.code_over(self.denom).map(|code| self.values[code as usize])
    }

    /// Values in canonical order together with their characteristics.
    pub fn iter(&self) -> impl Iterator<Item = (Characteristic, Complex<T>)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| (char_from_code(self.genus, self.denom, i as u64), *v))
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }
}
