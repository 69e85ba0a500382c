//! Gauss-Chebyshev quadrature for integrals with inverse-square-root endpoint singularities.

use crate::error::{Error, Result};
use crate::scalar::Real;

pub const START_NODES: usize = 16;
pub const MAX_NODES: usize = 1 << 14;

/// `int_{-1}^{1} F(t) / sqrt(1 - t^2) dt` with `n` nodes, for vector-valued `F`.
pub fn gauss_chebyshev<T: Real>(n: usize, dim: usize, f: &impl Fn(T) -> Vec<T>) -> Vec<T> {
    let nn = T::from_usize(n).unwrap();
    let mut acc = vec![T::zero(); dim];
    for k in 1..=n {
        let theta = T::from_usize(2 * k - 1).unwrap() * T::PI() / (T::lit(2.0) * nn);
        for (a, v) in acc.iter_mut().zip(f(theta.cos())) {
            *a = *a + v;
        }
    }
    acc.into_iter().map(|a| a * T::PI() / nn).collect()
}

/// Doubles the node count from [`START_NODES`] until every component changes by less than
/// `rel_tol` relative to the largest component. Returns the estimate and the node count used.
pub fn integrate_doubling<T: Real>(
    dim: usize,
    rel_tol: T,
    f: impl Fn(T) -> Vec<T>,
) -> Result<(Vec<T>, usize)> {
    let mut n = START_NODES;
    let mut prev = gauss_chebyshev(n, dim, &f);
    while n < MAX_NODES {
        n *= 2;
        let next = gauss_chebyshev(n, dim, &f);
        let scale = next.iter().fold(T::zero(), |m, x| m.max(x.abs()));
        let change = next
            .iter()
            .zip(&prev)
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()));
        if change <= rel_tol * scale {
            return Ok((next, n));
        }
        prev = next;
    }
    Err(Error::QuadratureNonConvergence { nodes: MAX_NODES })
}
