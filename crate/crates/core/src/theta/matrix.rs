//! Validated points of the Siegel upper half space.

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{spd_inverse, symmetric_eigenvalues, Square};
use crate::scalar::Real;

/// Largest tolerated entrywise asymmetry, relative to `max(1, max |tau_ij|)`.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// A symmetric complex `g x g` matrix with positive definite imaginary part.
///
/// Construction caches `Y^{-1}` and the smallest eigenvalue of `Y = Im tau`,
/// both needed by every lattice sum.
#[derive(Clone, Debug, PartialEq)]
pub struct RiemannMatrix<T: Real = f64> {
    tau: Square<Complex<T>>,
    y_inv: Square<T>,
    lambda_min: T,
}

fn asymmetry<T: Real>(rows: &[Vec<Complex<T>>]) -> (T, T) {
    let g = rows.len();
    let mut scale = T::one();
    let mut worst = T::zero();
    for i in 0..g {
        for j in 0..g {
            scale = scale.max(rows[i][j].norm());
            worst = worst.max((rows[i][j] - rows[j][i]).norm());
        }
    }
    (worst, scale)
}

impl<T: Real> RiemannMatrix<T> {
    /// Validates symmetry and positivity; asymmetric input is rejected, never repaired.
    pub fn new(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let g = rows.len();
        if g == 0 {
            return Err(Error::MalformedMatrix("empty matrix".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != g) {
            return Err(Error::MalformedMatrix(format!(
                "expected {g} columns, found a row with {}",
                r.len()
            )));
        }
        if rows.iter().flatten().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::MalformedMatrix("non-finite entry".into()));
        }
        let (worst, scale) = asymmetry(&rows);
        let tol = T::lit(SYMMETRY_TOL).max(T::lit(16.0) * T::epsilon());
        if worst > tol * scale {
            return Err(Error::NotSymmetric {
                asymmetry: worst.to_f64().unwrap_or(f64::INFINITY),
            });
        }
        let tau = Square::from_rows(&rows).expect("square checked");
        let y = Square {
            n: g,
            data: tau.data.iter().map(|c| c.im).collect(),
        };
        let y_inv = spd_inverse(&y).ok_or(Error::NotPositiveDefinite)?;
        let lambda_min = symmetric_eigenvalues(&y)[0];
        if lambda_min <= T::zero() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(Self {
            tau,
            y_inv,
            lambda_min,
        })
    }

    /// Accepts asymmetry up to `rel_tol` (relative to the largest entry), then averages
    /// `tau` with its transpose before validation.
    pub fn symmetrized(rows: Vec<Vec<Complex<T>>>, rel_tol: T) -> Result<Self> {
        let g = rows.len();
        if rows.iter().any(|r| r.len() != g) || g == 0 {
            return Err(Error::MalformedMatrix("not square".into()));
        }
        let (worst, scale) = asymmetry(&rows);
        if !(worst <= rel_tol * scale) {
            return Err(Error::NotSymmetric {
                asymmetry: worst.to_f64().unwrap_or(f64::INFINITY),
            });
        }
        let half = T::lit(0.5);
        let sym = (0..g)
            .map(|i| (0..g).map(|j| (rows[i][j] + rows[j][i]) * half).collect())
            .collect();
        Self::new(sym)
    }

    pub fn genus(&self) -> usize {
        self.tau.n
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> Complex<T> {
        self.tau.get(i, j)
    }

    pub fn rows(&self) -> Vec<Vec<Complex<T>>> {
        self.tau.rows()
    }

    /// Smallest eigenvalue of `Im tau`.
    pub fn lambda_min(&self) -> T {
        self.lambda_min
    }

    pub fn im_inverse(&self) -> &Square<T> {
        &self.y_inv
    }

    pub(crate) fn y_inv_apply(&self, y: &[T]) -> Vec<T> {
        let g = self.genus();
        (0..g)
            .map(|i| (0..g).fold(T::zero(), |acc, j| acc + self.y_inv.get(i, j) * y[j]))
            .collect()
    }

    /// `tau * m` for an integer vector `m`.
    pub fn apply_int(&self, m: &[i64]) -> Vec<Complex<T>> {
        let g = self.genus();
        (0..g)
            .map(|i| {
                (0..g).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
                    acc + self.entry(i, j) * T::from_i64(m[j]).unwrap()
                })
            })
            .collect()
    }

    /// Converts to another scalar type, revalidating.
    pub fn cast<U: Real>(&self) -> Result<RiemannMatrix<U>> {
        RiemannMatrix::new(
            self.rows()
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|c| {
                            Complex::new(
                                U::lit(c.re.to_f64().unwrap()),
                                U::lit(c.im.to_f64().unwrap()),
                            )
                        })
                        .collect()
                })
                .collect(),
        )
    }
}

/// Validates a raw complex matrix as a period matrix.
pub fn validate_period_matrix<T: Real>(rows: Vec<Vec<Complex<T>>>) -> Result<RiemannMatrix<T>> {
    RiemannMatrix::new(rows)
}

#[derive(Serialize, Deserialize)]
struct Entry {
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct Repr {
    genus: usize,
    entries: Vec<Vec<Entry>>,
}

impl<T: Real> Serialize for RiemannMatrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            genus: self.genus(),
            entries: self
                .rows()
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|c| Entry {
                            re: c.re.to_f64().unwrap(),
                            im: c.im.to_f64().unwrap(),
                        })
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for RiemannMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        if r.entries.len() != r.genus {
            return Err(D::Error::custom(format!(
                "genus {} but {} rows",
                r.genus,
                r.entries.len()
            )));
        }
        let rows = r
            .entries
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| Complex::new(T::lit(e.re), T::lit(e.im)))
                    .collect()
            })
            .collect();
        RiemannMatrix::new(rows).map_err(D::Error::custom)
    }
}
