//! Exact algebra of rational theta characteristics.
//!
//! A [`Characteristic`] is a point `[a; b]` of `(Q/Z)^{2g}` with `a = top/N`
//! and `b = bottom/N`, always kept in lowest terms so that structural
//! equality is equality of points. The half-integer case has its own packed
//! type, [`HalfChar`], which is what parity, the symplectic pairing and the
//! Göpel machinery work with.
//!
//! Pairing values are exposed as exponents in `{0, 1}`: the multiplicative
//! value is `(-1)^exponent`.

mod goepel;
mod group_type;
mod serde_impl;

use std::fmt;
use std::str::FromStr;

pub use goepel::{
    enumerate_goepel_groups, goepel_group_count, goepel_systems, system_census, GoepelGroup,
    GoepelSystem, SystemCensus, SystemTag,
};
pub use group_type::{group_type, span, SubgroupType};

use crate::error::{Error, Result};
use crate::scalar::{ratio, Real};

/// Denominators accepted for rational characteristics: the divisors of 12.
pub const SUPPORTED_DENOMS: [u32; 6] = [1, 2, 3, 4, 6, 12];

/// Largest candidate space `enumerate_chars` will materialize.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A rational theta characteristic `[top/denom; bottom/denom]` in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Characteristic {
    genus: usize,
    denom: u32,
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Characteristic {
    /// Builds `[top/denom; bottom/denom]`, reducing entries mod `denom` and then to lowest terms.
    pub fn new(genus: usize, denom: u32, top: &[i64], bottom: &[i64]) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidCharacteristic("genus must be at least 1".into()));
        }
        if !SUPPORTED_DENOMS.contains(&denom) {
            return Err(Error::InvalidCharacteristic(format!(
                "denominator {denom} does not divide 12"
            )));
        }
        if top.len() != genus || bottom.len() != genus {
            return Err(Error::InvalidCharacteristic(format!(
                "expected rows of length {genus}, got {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        let n = denom as i64;
        let red = |v: &[i64]| v.iter().map(|x| x.rem_euclid(n) as u32).collect::<Vec<_>>();
        Ok(Self::normalized(genus, denom, red(top), red(bottom)))
    }

    fn normalized(genus: usize, denom: u32, mut top: Vec<u32>, mut bottom: Vec<u32>) -> Self {
        let mut d = denom as u64;
        for &x in top.iter().chain(bottom.iter()) {
            d = gcd(d, x as u64);
        }
        // all entries zero gives d == denom
        let d = d as u32;
        if d > 1 {
            top.iter_mut().for_each(|x| *x /= d);
            bottom.iter_mut().for_each(|x| *x /= d);
        }
        Self {
            genus,
            denom: denom / d,
            top,
            bottom,
        }
    }

    pub fn zero(genus: usize) -> Self {
        Self {
            genus,
            denom: 1,
            top: vec![0; genus],
            bottom: vec![0; genus],
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Denominator in lowest terms, which is also the order of the point in `(Q/Z)^{2g}`.
    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn order(&self) -> u32 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.denom == 1
    }

    /// Numerators over `n`, if `n` is a multiple of the reduced denominator.
    pub fn numerators_over(&self, n: u32) -> Option<(Vec<i64>, Vec<i64>)> {
        if n == 0 || !n.is_multiple_of(self.denom) {
            return None;
        }
        let k = (n / self.denom) as i64;
        let f = |v: &[u32]| v.iter().map(|&x| x as i64 * k).collect();
        Some((f(&self.top), f(&self.bottom)))
    }

    /// Position of this characteristic in the canonical enumeration over `n`.
    pub fn code_over(&self, n: u32) -> Option<u64> {
        let (t, b) = self.numerators_over(n)?;
        Some(
            t.iter()
                .chain(b.iter())
                .fold(0u64, |acc, &d| acc * n as u64 + d as u64),
        )
    }

    /// Componentwise sum in `(Q/Z)^{2g}`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.genus != other.genus {
            return Err(Error::IncompatibleCharacteristics(format!(
                "genus {} vs genus {}",
                self.genus, other.genus
            )));
        }
        let n = lcm(self.denom as u64, other.denom as u64) as u32;
        let (t1, b1) = self.numerators_over(n).unwrap();
        let (t2, b2) = other.numerators_over(n).unwrap();
        let sum = |x: &[i64], y: &[i64]| {
            x.iter()
                .zip(y)
                .map(|(p, q)| ((p + q) % n as i64) as u32)
                .collect::<Vec<_>>()
        };
        Ok(Self::normalized(self.genus, n, sum(&t1, &t2), sum(&b1, &b2)))
    }

    pub fn negate(&self) -> Self {
        let n = self.denom;
        let neg = |v: &[u32]| v.iter().map(|&x| (n - x) % n).collect();
        Self {
            genus: self.genus,
            denom: n,
            top: neg(&self.top),
            bottom: neg(&self.bottom),
        }
    }

    /// `k` times this point.
    pub fn scale(&self, k: i64) -> Self {
        let n = self.denom as i64;
        let s = |v: &[u32]| v.iter().map(|&x| (x as i64 * k).rem_euclid(n) as u32).collect();
        Self::normalized(self.genus, self.denom, s(&self.top), s(&self.bottom))
    }

    pub fn to_half(&self) -> Option<HalfChar> {
        let (t, b) = self.numerators_over(2)?;
        let bits = |v: &[i64]| v.iter().map(|&x| x == 1).collect::<Vec<_>>();
        Some(HalfChar::new(&bits(&t), &bits(&b)))
    }

    pub fn from_half(h: HalfChar) -> Self {
        let g = h.genus();
        let t: Vec<i64> = (0..g).map(|i| h.top(i) as i64).collect();
        let b: Vec<i64> = (0..g).map(|i| h.bottom(i) as i64).collect();
        Self::new(g, 2, &t, &b).expect("half characteristic is valid")
    }

    /// The vector `a` as reals in `[0, 1)`.
    pub fn a<T: Real>(&self) -> Vec<T> {
        self.top
            .iter()
            .map(|&x| ratio(x as i64, self.denom as i64))
            .collect()
    }

    /// The vector `b` as reals in `[0, 1)`.
    pub fn b<T: Real>(&self) -> Vec<T> {
        self.bottom
            .iter()
            .map(|&x| ratio(x as i64, self.denom as i64))
            .collect()
    }

    /// Parses `"t1..tg/b1..bg"` where each digit is a numerator over `denom`.
    pub fn parse_compact(s: &str, denom: u32) -> Result<Self> {
        let (t, b) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected 'top/bottom' digits, got {s:?}")))?;
        let digits = |part: &str| -> Result<Vec<i64>> {
            part.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as i64)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
                })
                .collect()
        };
        let (t, b) = (digits(t)?, digits(b)?);
        if t.len() != b.len() || t.is_empty() {
            return Err(Error::Parse(format!("rows of {s:?} must be equal and nonempty")));
        }
        if let Some(bad) = t.iter().chain(&b).find(|&&d| d >= denom as i64) {
            return Err(Error::Parse(format!("digit {bad} not below denominator {denom}")));
        }
        Self::new(t.len(), denom, &t, &b)
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[u32]| {
            v.iter()
                .map(|&x| {
                    if x == 0 {
                        "0".to_string()
                    } else {
                        format!("{x}/{}", self.denom)
                    }
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{};{}]", row(&self.top), row(&self.bottom))
    }
}

/// Componentwise sum of two characteristics.
pub fn add(x: &Characteristic, y: &Characteristic) -> Result<Characteristic> {
    x.add(y)
}

pub fn negate(x: &Characteristic) -> Characteristic {
    x.negate()
}

/// Exponent `k` in `{0, ..., n-1}` of the Weil pairing `e_n(x, y) = exp(2 pi i k / n)`.
///
/// With numerators over `n`, `x = [A1/n; B1/n]`, `y = [A2/n; B2/n]`, the exponent is
/// `sum(B1 A2 - A1 B2) mod n`; for `n = 2` this is the half-characteristic pairing.
pub fn weil_exponent(x: &Characteristic, y: &Characteristic, n: u32) -> Result<u32> {
    if x.genus != y.genus {
        return Err(Error::IncompatibleCharacteristics(format!(
            "genus {} vs genus {}",
            x.genus, y.genus
        )));
    }
    let (a1, b1) = x
        .numerators_over(n)
        .ok_or_else(|| Error::InvalidCharacteristic(format!("{x} is not {n}-torsion")))?;
    let (a2, b2) = y
        .numerators_over(n)
        .ok_or_else(|| Error::InvalidCharacteristic(format!("{y} is not {n}-torsion")))?;
    let s: i64 = (0..x.genus).map(|i| b1[i] * a2[i] - a1[i] * b2[i]).sum();
    Ok(s.rem_euclid(n as i64) as u32)
}

/// A half-integer characteristic packed as a `2g`-bit code.
///
/// Reading the code from its most significant bit gives `top_1..top_g, bottom_1..bottom_g`,
/// so numeric order of codes is the canonical enumeration order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HalfChar {
    genus: u8,
    code: u32,
}

pub const MAX_HALF_GENUS: usize = 15;

impl HalfChar {
    pub fn new(top: &[bool], bottom: &[bool]) -> Self {
        assert_eq!(top.len(), bottom.len(), "rows must have equal length");
        let g = top.len();
        assert!((1..=MAX_HALF_GENUS).contains(&g), "genus out of range");
        let code = top
            .iter()
            .chain(bottom)
            .fold(0u32, |acc, &bit| (acc << 1) | bit as u32);
        Self {
            genus: g as u8,
            code,
        }
    }

    pub fn from_code(genus: usize, code: u32) -> Self {
        assert!((1..=MAX_HALF_GENUS).contains(&genus), "genus out of range");
        assert!(code < 1 << (2 * genus), "code out of range");
        Self {
            genus: genus as u8,
            code,
        }
    }

    pub fn zero(genus: usize) -> Self {
        Self::from_code(genus, 0)
    }

    pub fn genus(&self) -> usize {
        self.genus as usize
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    #[inline]
    pub fn top_mask(&self) -> u32 {
        self.code >> self.genus
    }

    #[inline]
    pub fn bottom_mask(&self) -> u32 {
        self.code & ((1 << self.genus) - 1)
    }

    /// Top entry `i` (0-based) as 0/1.
    pub fn top(&self, i: usize) -> u8 {
        ((self.top_mask() >> (self.genus as usize - 1 - i)) & 1) as u8
    }

    pub fn bottom(&self, i: usize) -> u8 {
        ((self.bottom_mask() >> (self.genus as usize - 1 - i)) & 1) as u8
    }

    /// Mod-2 sum; genus equality is the caller's responsibility.
    #[inline]
    pub fn xor(self, other: Self) -> Self {
        debug_assert_eq!(self.genus, other.genus);
        Self {
            genus: self.genus,
            code: self.code ^ other.code,
        }
    }

    /// `|m| = sum m_i m'_i mod 2`; 0 for even characteristics.
    #[inline]
    pub fn parity_exponent(&self) -> u8 {
        ((self.top_mask() & self.bottom_mask()).count_ones() & 1) as u8
    }

    /// `+1` for even, `-1` for odd.
    pub fn parity(&self) -> i8 {
        1 - 2 * self.parity_exponent() as i8
    }

    pub fn is_even(&self) -> bool {
        self.parity_exponent() == 0
    }

    /// `|self, other| mod 2`; genus equality is the caller's responsibility.
    #[inline]
    pub fn pair_with(&self, other: &Self) -> u8 {
        debug_assert_eq!(self.genus, other.genus);
        let s = (self.bottom_mask() & other.top_mask()).count_ones()
            + (self.top_mask() & other.bottom_mask()).count_ones();
        (s & 1) as u8
    }

    /// All `2^{2g}` half characteristics in canonical order.
    pub fn all(genus: usize) -> impl Iterator<Item = HalfChar> {
        (0..1u32 << (2 * genus)).map(move |c| HalfChar::from_code(genus, c))
    }
}

impl fmt::Display for HalfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.genus();
        for i in 0..g {
            write!(f, "{}", self.top(i))?;
        }
        f.write_str("/")?;
        for i in 0..g {
            write!(f, "{}", self.bottom(i))?;
        }
        Ok(())
    }
}

impl FromStr for HalfChar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c = Characteristic::parse_compact(s, 2)?;
        Ok(c.to_half().expect("denominator two"))
    }
}

fn check_genus(m: &HalfChar, a: &HalfChar) -> Result<()> {
    if m.genus != a.genus {
        return Err(Error::IncompatibleCharacteristics(format!(
            "genus {} vs genus {}",
            m.genus, a.genus
        )));
    }
    Ok(())
}

/// Mod-2 sum of half characteristics.
pub fn half_add(m: HalfChar, a: HalfChar) -> Result<HalfChar> {
    check_genus(&m, &a)?;
    Ok(m.xor(a))
}

pub fn parity(m: HalfChar) -> i8 {
    m.parity()
}

/// `|m, a| mod 2`: 0 when syzygetic, 1 when azygetic.
pub fn pairing(m: HalfChar, a: HalfChar) -> Result<u8> {
    check_genus(&m, &a)?;
    Ok(m.pair_with(&a))
}

/// `|m, a, b| = |a, b| + |b, m| + |m, a| mod 2`.
pub fn triple_pairing(m: HalfChar, a: HalfChar, b: HalfChar) -> Result<u8> {
    check_genus(&m, &a)?;
    check_genus(&m, &b)?;
    Ok(a.pair_with(&b) ^ b.pair_with(&m) ^ m.pair_with(&a))
}

/// `(-1)^{sum top(m)_j bottom(a)_j}`.
pub fn binom_sign(m: HalfChar, a: HalfChar) -> Result<i8> {
    check_genus(&m, &a)?;
    Ok(binom_sign_unchecked(m, a))
}

#[inline]
pub(crate) fn binom_sign_unchecked(m: HalfChar, a: HalfChar) -> i8 {
    if (m.top_mask() & a.bottom_mask()).count_ones() & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Every characteristic with denominator dividing `denom`, in canonical order:
/// `(top || bottom)` read as a base-`denom` integer, ascending.
pub fn enumerate_chars(genus: usize, denom: u32) -> Result<Vec<Characteristic>> {
    if genus == 0 {
        return Err(Error::InvalidCharacteristic("genus must be at least 1".into()));
    }
    if !SUPPORTED_DENOMS.contains(&denom) {
        return Err(Error::InvalidCharacteristic(format!(
            "denominator {denom} does not divide 12"
        )));
    }
    let size = (denom as u64)
        .checked_pow(2 * genus as u32)
        .filter(|&s| s <= ENUMERATION_LIMIT)
        .ok_or_else(|| {
            Error::GuardExceeded(format!(
                "{denom}^{} characteristics exceed the limit {ENUMERATION_LIMIT}",
                2 * genus
            ))
        })?;
    Ok((0..size).map(|code| char_from_code(genus, denom, code)).collect())
}

/// Inverse of [`Characteristic::code_over`].
pub fn char_from_code(genus: usize, denom: u32, mut code: u64) -> Characteristic {
    let mut digits = vec![0i64; 2 * genus];
    for d in digits.iter_mut().rev() {
        *d = (code % denom as u64) as i64;
        code /= denom as u64;
    }
    Characteristic::new(genus, denom, &digits[..genus], &digits[genus..])
        .expect("digits are in range")
}

/// `(#even, #odd)` half characteristics in genus `g`, counted by enumeration.
pub fn parity_census(genus: usize) -> (u64, u64) {
    let even = HalfChar::all(genus).filter(|m| m.is_even()).count() as u64;
    (even, (1u64 << (2 * genus)) - even)
}
