//! Hyperelliptic curves `y^2 = prod (x - alpha_i)` with `2g + 1` finite branch points.
//!
//! Branch points are indexed `1..=2g+1` with infinity as the extra point. The
//! map [`epsilon`] sends each of them to a half characteristic; sums over subsets
//! give every half characteristic, and the ones attached to subsets `T` with
//! `#(T △ U) = g + 1` (where `U` is the set of odd indices) are exactly the
//! non-vanishing even theta-nulls.

mod curve_file;
mod frobenius;
mod periods;
mod thomae;

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

pub use frobenius::{frobenius_sum, verify_frobenius, FrobeniusCase, FrobeniusReport};
pub use periods::{
    check_vanishing_pattern, period_matrix, CurveData, VanishingCheck, VanishingObservation,
    PERIOD_SYMMETRY_TOL,
};
pub use thomae::{admissible_subsets, thomae_product, thomae_ratio, verify_thomae, ThomaeReport, VerifyOptions};

use crate::characteristics::HalfChar;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Relative separation below which two branch points count as colliding.
pub const SEPARATION_TOL: f64 = 1e-9;

/// Branch points `alpha_1, ..., alpha_{2g+1}`; infinity is implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchSet<T: Real = f64> {
    points: Vec<Complex<T>>,
}

impl<T: Real> BranchSet<T> {
    pub fn new(points: Vec<Complex<T>>) -> Result<Self> {
        let n = points.len();
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::InvalidBranchSet(format!(
                "need an odd number of at least 3 branch points, got {n}"
            )));
        }
        if n > 2 * crate::characteristics::MAX_HALF_GENUS + 1 {
            return Err(Error::InvalidBranchSet(format!("{n} branch points is too many")));
        }
        if points.iter().any(|p| !p.re.is_finite() || !p.im.is_finite()) {
            return Err(Error::InvalidBranchSet("non-finite branch point".into()));
        }
        let scale = points.iter().fold(T::one(), |m, p| m.max(p.norm()));
        let tol = T::lit(SEPARATION_TOL) * scale;
        for i in 0..n {
            for j in i + 1..n {
                if (points[i] - points[j]).norm() <= tol {
                    return Err(Error::InvalidBranchSet(format!(
                        "branch points {} and {} collide",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn from_reals(points: &[T]) -> Result<Self> {
        Self::new(points.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    pub fn genus(&self) -> usize {
        (self.points.len() - 1) / 2
    }

    pub fn points(&self) -> &[Complex<T>] {
        &self.points
    }

    /// `alpha_i` for a 1-based index.
    pub fn point(&self, i: usize) -> Complex<T> {
        self.points[i - 1]
    }

    /// All points real and strictly increasing, as period computation requires.
    pub fn is_real_sorted(&self) -> bool {
        self.points.iter().all(|p| p.im == T::zero())
            && self.points.windows(2).all(|w| w[0].re < w[1].re)
    }

    /// The set `U` of odd indices.
    pub fn odd_indices(&self) -> Subset {
        Subset::odd_indices(self.genus())
    }
}

/// A point of `S ∪ {∞}` with `S = {1, ..., 2g+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchIndex {
    Finite(usize),
    Infinity,
}

impl fmt::Display for BranchIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchIndex::Finite(i) => write!(f, "{i}"),
            BranchIndex::Infinity => f.write_str("inf"),
        }
    }
}

/// `epsilon(2i-1)` has top 1/2 at column `i` and bottom 1/2 at columns `1..i-1`;
/// `epsilon(2i)` has top 1/2 at column `i` and bottom 1/2 at columns `1..=i`;
/// `epsilon(2g+1)` has bottom 1/2 everywhere; `epsilon(∞) = 0`.
pub fn epsilon(index: BranchIndex, genus: usize) -> Result<HalfChar> {
    let k = match index {
        BranchIndex::Infinity => return Ok(HalfChar::zero(genus)),
        BranchIndex::Finite(k) => k,
    };
    if k == 0 || k > 2 * genus + 1 {
        return Err(Error::IndexOutOfRange { index: k, genus });
    }
    let i = k.div_ceil(2);
    let mut top = vec![false; genus];
    if i <= genus {
        top[i - 1] = true;
    }
    let ones = if k % 2 == 1 { i - 1 } else { i };
    let bottom: Vec<bool> = (0..genus).map(|c| c < ones).collect();
    Ok(HalfChar::new(&top, &bottom))
}

/// A subset `T ⊆ S = {1, ..., 2g+1}`, stored as a bit mask (bit `i-1` for index `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subset {
    genus: usize,
    mask: u32,
}

impl Subset {
    pub fn new(genus: usize, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > 2 * genus + 1 {
                return Err(Error::IndexOutOfRange { index: i, genus });
            }
            mask |= 1 << (i - 1);
        }
        Ok(Self { genus, mask })
    }

    pub fn from_mask(genus: usize, mask: u32) -> Self {
        assert!(mask < 1 << (2 * genus + 1), "mask out of range");
        Self { genus, mask }
    }

    pub fn empty(genus: usize) -> Self {
        Self { genus, mask: 0 }
    }

    pub fn odd_indices(genus: usize) -> Self {
        let mask = (0..=genus).fold(0u32, |m, k| m | 1 << (2 * k));
        Self { genus, mask }
    }

    /// All of `S`.
    pub fn full(genus: usize) -> Self {
        Self {
            genus,
            mask: (1 << (2 * genus + 1)) - 1,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= 2 * self.genus + 1 && self.mask >> (i - 1) & 1 == 1
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..=2 * self.genus + 1).filter(|&i| self.contains(i)).collect()
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        Self {
            genus: self.genus,
            mask: self.mask ^ other.mask,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            genus: self.genus,
            mask: self.mask & other.mask,
        }
    }

    /// Complement within `S`.
    pub fn complement(&self) -> Self {
        self.symmetric_difference(&Self::full(self.genus))
    }

    /// Every subset of `S` of even cardinality, in mask order.
    pub fn all_even(genus: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << (2 * genus + 1))
            .filter(|m| m.count_ones() % 2 == 0)
            .map(move |mask| Subset { genus, mask })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(s)
    }
}

/// `epsilon_T = sum_{k in T} epsilon(k)`.
pub fn epsilon_t(t: &Subset) -> HalfChar {
    t.indices()
        .into_iter()
        .map(|k| epsilon(BranchIndex::Finite(k), t.genus).expect("index in range"))
        .fold(HalfChar::zero(t.genus), HalfChar::xor)
}

/// `theta[epsilon_T](0) = 0` iff `#(T △ U) != g + 1`, for `#T` even.
pub fn is_vanishing(t: &Subset) -> Result<bool> {
    if !t.is_even() {
        return Err(Error::OddSubset(t.len()));
    }
    let u = Subset::odd_indices(t.genus);
    Ok(t.symmetric_difference(&u).len() != t.genus + 1)
}

/// One even half characteristic with its subset and the predicted vanishing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VanishingRow {
    pub characteristic: HalfChar,
    pub subset: Subset,
    pub vanishing: bool,
}

pub const VANISHING_TABLE_GENUS_LIMIT: usize = 4;

/// Every even half characteristic once, through the even subsets of `S`.
pub fn vanishing_table(genus: usize) -> Result<Vec<VanishingRow>> {
    if genus == 0 || genus > VANISHING_TABLE_GENUS_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "vanishing table supports genus 1..={VANISHING_TABLE_GENUS_LIMIT}, got {genus}"
        )));
    }
    let mut rows: Vec<VanishingRow> = Subset::all_even(genus)
        .map(|t| (epsilon_t(&t), t))
        .filter(|(m, _)| m.is_even())
        .map(|(characteristic, subset)| VanishingRow {
            characteristic,
            subset,
            vanishing: is_vanishing(&subset).expect("even subset"),
        })
        .collect();
    rows.sort_by_key(|r| r.characteristic);
    let distinct: BTreeSet<_> = rows.iter().map(|r| r.characteristic).collect();
    debug_assert_eq!(distinct.len(), rows.len());
    Ok(rows)
}

/// `2^{g-1}(2^g+1) - C(2g+1, g)`, the number of vanishing even theta-nulls.
pub fn predicted_vanishing_count(genus: usize) -> u64 {
    let even = (1u64 << (genus - 1)) * ((1u64 << genus) + 1);
    let binom = (0..genus as u64).fold(1u64, |acc, k| acc * (2 * genus as u64 + 1 - k) / (k + 1));
    even - binom
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characteristics::Characteristic;

    fn h(s: &str) -> HalfChar {
        s.parse().unwrap()
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(BranchIndex::Finite(1), 2).unwrap(), h("10/00"));
        assert_eq!(epsilon(BranchIndex::Finite(2), 2).unwrap(), h("10/10"));
        assert_eq!(epsilon(BranchIndex::Finite(5), 2).unwrap(), h("00/11"));
        assert!(epsilon(BranchIndex::Infinity, 3).unwrap().is_zero());
        assert!(matches!(
            epsilon(BranchIndex::Finite(6), 2),
            Err(Error::IndexOutOfRange { index: 6, genus: 2 })
        ));
    }

    #[test]
    fn epsilon_is_injective() {
        for g in 2..=4 {
            let mut seen = BTreeSet::new();
            for k in 1..=2 * g + 1 {
                assert!(seen.insert(epsilon(BranchIndex::Finite(k), g).unwrap()));
            }
            assert!(seen.insert(epsilon(BranchIndex::Infinity, g).unwrap()));
        }
    }

    #[test]
    fn epsilon_t_basics() {
        for g in 1..=3 {
            assert!(epsilon_t(&Subset::empty(g)).is_zero());
            assert!(epsilon_t(&Subset::full(g)).is_zero());
            for t in Subset::all_even(g) {
                assert_eq!(epsilon_t(&t), epsilon_t(&t.complement()));
            }
        }
        let (t, r) = (Subset::new(3, &[1, 4]).unwrap(), Subset::new(3, &[2, 4, 5, 7]).unwrap());
        assert_eq!(epsilon_t(&t.symmetric_difference(&r)), epsilon_t(&t).xor(epsilon_t(&r)));
    }

    #[test]
    fn even_subsets_biject_onto_half_characteristics() {
        for g in 1..=3 {
            let images: BTreeSet<_> = Subset::all_even(g).map(|t| epsilon_t(&t)).collect();
            assert_eq!(images.len(), 1 << (2 * g));
        }
    }

    #[test]
    fn vanishing_examples() {
        assert!(!is_vanishing(&Subset::empty(2)).unwrap());
        assert!(matches!(is_vanishing(&Subset::new(2, &[1]).unwrap()), Err(Error::OddSubset(1))));
        let u = Subset::odd_indices(3);
        assert_eq!(u.indices(), vec![1, 3, 5, 7]);
        assert!(is_vanishing(&u).unwrap());
    }

    #[test]
    fn vanishing_table_counts() {
        for (g, rows, vanishing) in [(1, 3, 0), (2, 10, 0), (3, 36, 1), (4, 136, 10)] {
            let table = vanishing_table(g).unwrap();
            assert_eq!(table.len(), rows);
            assert_eq!(table.iter().filter(|r| r.vanishing).count(), vanishing);
            assert_eq!(predicted_vanishing_count(g), vanishing as u64);
        }
        assert!(vanishing_table(5).is_err());
    }

    #[test]
    fn genus_three_vanisher() {
        let table = vanishing_table(3).unwrap();
        let v: Vec<_> = table.iter().filter(|r| r.vanishing).collect();
        assert_eq!(v[0].subset, Subset::odd_indices(3));
        assert_eq!(
            Characteristic::from_half(v[0].characteristic),
            Characteristic::from_half(epsilon_t(&Subset::odd_indices(3)))
        );
    }

    #[test]
    fn branch_set_validation() {
        assert!(BranchSet::from_reals(&[0.0, 1.0]).is_err());
        assert!(BranchSet::from_reals(&[0.0, 1.0, 1.0 + 1e-12]).is_err());
        let b = BranchSet::from_reals(&[0.0, 1.0, 2.0]).unwrap();
        assert_eq!(b.genus(), 1);
        assert!(b.is_real_sorted());
        assert!(!BranchSet::from_reals(&[1.0, 0.0, 2.0]).unwrap().is_real_sorted());
    }
}
