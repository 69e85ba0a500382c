//! Seeded random inputs: points of the Siegel upper half space and arguments.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::scalar::Real;
use crate::theta::RiemannMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `tau = X + i (M M^T + I)` with entries of `M` and of the symmetric `X` uniform in `[-1/2, 1/2]`.
///
/// A larger diagonal shift makes `Im tau` tall, and quarter- and sixth-period
/// theta-nulls then decay below any fixed relative vanishing threshold
/// (around `3e-8` of the largest even null at `3 I` in genus 3, against `3e-4` here).
pub fn random_tau<T: Real, R: Rng>(genus: usize, rng: &mut R) -> Result<RiemannMatrix<T>> {
    let mut m = vec![vec![0.0f64; genus]; genus];
    let mut x = vec![vec![0.0f64; genus]; genus];
    for i in 0..genus {
        for j in 0..genus {
            m[i][j] = rng.gen_range(-0.5..0.5);
        }
        for j in i..genus {
            let v = rng.gen_range(-0.5..0.5);
            x[i][j] = v;
            x[j][i] = v;
        }
    }
    let rows = (0..genus)
        .map(|i| {
            (0..genus)
                .map(|j| {
                    let mut y: f64 = (0..genus).map(|k| m[i][k] * m[j][k]).sum();
                    if i == j {
                        y += 1.0;
                    }
                    Complex::new(T::lit(x[i][j]), T::lit(y))
                })
                .collect()
        })
        .collect();
    RiemannMatrix::new(rows)
}

/// A vector with real and imaginary parts uniform in `[-scale, scale]`.
pub fn random_argument<T: Real, R: Rng>(genus: usize, scale: f64, rng: &mut R) -> Vec<Complex<T>> {
    (0..genus)
        .map(|_| {
            Complex::new(
                T::lit(rng.gen_range(-scale..scale)),
                T::lit(rng.gen_range(-scale..scale)),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_a_seed() {
        let a: RiemannMatrix<f64> = random_tau(3, &mut rng(7)).unwrap();
        let b: RiemannMatrix<f64> = random_tau(3, &mut rng(7)).unwrap();
        assert_eq!(a, b);
        assert!(a.lambda_min() >= 1.0 - 1e-12);
    }
}
