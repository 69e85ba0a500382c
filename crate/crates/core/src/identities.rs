//! Theta-null identities among half-integer characteristics.
//!
//! For `h != 0` and `g >= 1`, with sums over representatives `e` of the pairs
//! `{e, e + h}` of even characteristics:
//!
//! * product kind, over `e` with `|a + e, h| = 0`:
//!   `theta^2[a] theta^2[a+h] = 2^{-(g-1)} sum_e (-1)^{|a+e|} (h choose a+e) theta^2[e] theta^2[e+h]`
//! * quartic kind, over `e` with `|h| + |e, h| = 0`, and `s = (-1)^{|a, h|}`:
//!   `theta^4[a] + s theta^4[a+h] = 2^{-(g-1)} sum_e (-1)^{|a+e|} (theta^4[e] + s theta^4[e+h])`
//!
//! All theta values are theta-nulls. The representative kept from each pair is
//! the one with the smaller code.

use num_complex::Complex;
use serde::Serialize;

use crate::characteristics::{binom_sign_unchecked, Characteristic, HalfChar};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::theta::{EvalConfig, NullGrid, RiemannMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    Product,
    Quartic,
}

/// `theta[characteristic](0)^power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub characteristic: HalfChar,
    pub power: u8,
}

/// `sign * prod factors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Monomial {
    pub sign: i8,
    pub factors: Vec<Factor>,
}

/// `coefficient * sum monomials`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: i8,
    pub monomials: Vec<Monomial>,
}

/// `sum lhs = 2^{-scale_exponent} sum rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity {
    pub genus: usize,
    pub kind: IdentityKind,
    pub a: HalfChar,
    pub h: HalfChar,
    pub admissible: Vec<HalfChar>,
    pub scale_exponent: u32,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

/// Representatives `e` for which the identity of `kind` at `(a, h)` has a term.
pub fn admissible_e(a: HalfChar, h: HalfChar, kind: IdentityKind) -> Result<Vec<HalfChar>> {
    if a.genus() != h.genus() {
        return Err(Error::IncompatibleCharacteristics(format!(
            "genus {} vs genus {}",
            a.genus(),
            h.genus()
        )));
    }
    if h.is_zero() {
        return Err(Error::EmptyAdmissibleSet);
    }
    Ok(HalfChar::all(a.genus())
        .filter(|e| {
            let eh = e.xor(h);
            if !e.is_even() || !eh.is_even() || eh < *e {
                return false;
            }
            match kind {
                IdentityKind::Product => a.xor(*e).pair_with(&h) == 0,
                IdentityKind::Quartic => (h.parity_exponent() + e.pair_with(&h)).is_multiple_of(2),
            }
        })
        .collect())
}

fn monomial(sign: i8, chars: &[HalfChar], power: u8) -> Monomial {
    Monomial {
        sign,
        factors: chars
            .iter()
            .map(|&characteristic| Factor {
                characteristic,
                power,
            })
            .collect(),
    }
}

fn sign_of(exponent: u8) -> i8 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn generate_identity(a: HalfChar, h: HalfChar, kind: IdentityKind) -> Result<Identity> {
    let admissible = admissible_e(a, h, kind)?;
    if admissible.is_empty() {
        return Err(Error::EmptyAdmissibleSet);
    }
    let ah = a.xor(h);
    let (lhs, rhs) = match kind {
        IdentityKind::Product => {
            let lhs = Term {
                coefficient: 1,
                monomials: vec![monomial(1, &[a, ah], 2)],
            };
            let rhs = admissible
                .iter()
                .map(|&e| {
                    let ae = a.xor(e);
                    Term {
                        coefficient: sign_of(ae.parity_exponent()) * binom_sign_unchecked(h, ae),
                        monomials: vec![monomial(1, &[e, e.xor(h)], 2)],
                    }
                })
                .collect();
            (vec![lhs], rhs)
        }
        IdentityKind::Quartic => {
            let s = sign_of(a.pair_with(&h));
            let lhs = Term {
                coefficient: 1,
                monomials: vec![monomial(1, &[a], 4), monomial(s, &[ah], 4)],
            };
            let rhs = admissible
                .iter()
                .map(|&e| Term {
                    coefficient: sign_of(a.xor(e).parity_exponent()),
                    monomials: vec![monomial(1, &[e], 4), monomial(s, &[e.xor(h)], 4)],
                })
                .collect();
            (vec![lhs], rhs)
        }
    };
    Ok(Identity {
        genus: a.genus(),
        kind,
        a,
        h,
        admissible,
        scale_exponent: a.genus() as u32 - 1,
        lhs,
        rhs,
    })
}

/// Every identity of `kind` in genus `g` with a nonempty admissible set.
pub fn all_identities(genus: usize, kind: IdentityKind) -> Vec<Identity> {
    HalfChar::all(genus)
        .flat_map(|a| HalfChar::all(genus).map(move |h| (a, h)))
        .filter_map(|(a, h)| generate_identity(a, h, kind).ok())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub absolute: f64,
    /// `absolute` divided by the largest monomial modulus.
    pub relative: f64,
}

struct Evaluated<T> {
    value: Complex<T>,
    max_monomial: T,
}

fn evaluate_side<T: Real>(terms: &[Term], lookup: &impl Fn(HalfChar) -> Complex<T>) -> Evaluated<T> {
    let mut value = Complex::new(T::zero(), T::zero());
    let mut max_monomial = T::zero();
    for t in terms {
        for m in &t.monomials {
            let prod = m.factors.iter().fold(Complex::new(T::one(), T::zero()), |p, f| {
                p * lookup(f.characteristic).powi(f.power as i32)
            });
            max_monomial = max_monomial.max(prod.norm());
            value = value + prod * T::from_i8(t.coefficient * m.sign).unwrap();
        }
    }
    Evaluated { value, max_monomial }
}

impl Identity {
    /// Left and right sides, with the right side already scaled.
    pub fn evaluate<T: Real>(&self, nulls: &NullGrid<T>) -> Result<(Complex<T>, Complex<T>, T)> {
        if nulls.genus() != self.genus || !nulls.denom().is_multiple_of(2) {
            return Err(Error::GenusMismatch {
                expected: self.genus,
                found: nulls.genus(),
            });
        }
        let lookup = |m: HalfChar| nulls.get(&Characteristic::from_half(m)).expect("half grid");
        let l = evaluate_side(&self.lhs, &lookup);
        let r = evaluate_side(&self.rhs, &lookup);
        let scale = T::lit(0.5).powi(self.scale_exponent as i32);
        Ok((
            l.value,
            r.value * scale,
            l.max_monomial.max(r.max_monomial * scale),
        ))
    }

    pub fn residual_with<T: Real>(&self, nulls: &NullGrid<T>) -> Result<Residual> {
        let (l, r, m) = self.evaluate(nulls)?;
        let absolute = (l - r).norm();
        let relative = if m > T::zero() { absolute / m } else { absolute };
        Ok(Residual {
            absolute: absolute.to_f64().unwrap(),
            relative: relative.to_f64().unwrap(),
        })
    }

    /// LaTeX rendering; characteristic entries are written as numerators over 2.
    pub fn to_latex(&self) -> String {
        fn chr(m: HalfChar) -> String {
            let g = m.genus();
            let top: Vec<String> = (0..g).map(|i| m.top(i).to_string()).collect();
            let bot: Vec<String> = (0..g).map(|i| m.bottom(i).to_string()).collect();
            format!(
                "\\begin{{bmatrix}} {} \\\\ {} \\end{{bmatrix}}",
                top.join(" & "),
                bot.join(" & ")
            )
        }
        fn side(terms: &[Term]) -> String {
            let mut out = String::new();
            for (k, t) in terms.iter().enumerate() {
                let body: Vec<String> = t
                    .monomials
                    .iter()
                    .enumerate()
                    .map(|(j, m)| {
                        let f: String = m
                            .factors
                            .iter()
                            .map(|f| format!("\\theta^{{{}}}{}", f.power, chr(f.characteristic)))
                            .collect::<Vec<_>>()
                            .join(" ");
                        match (j, m.sign) {
                            (0, 1) => f,
                            (0, _) => format!("-{f}"),
                            (_, 1) => format!(" + {f}"),
                            _ => format!(" - {f}"),
                        }
                    })
                    .collect();
                let inner = if t.monomials.len() > 1 {
                    format!("\\left({}\\right)", body.concat())
                } else {
                    body.concat()
                };
                match (k, t.coefficient) {
                    (0, 1) => out.push_str(&inner),
                    (0, _) => out.push_str(&format!("-{inner}")),
                    (_, 1) => out.push_str(&format!(" + {inner}")),
                    _ => out.push_str(&format!(" - {inner}")),
                }
            }
            out
        }
        let lhs = if self.lhs.len() == 1 && self.lhs[0].monomials.len() > 1 {
            // drop the parentheses around a lone left-hand sum
            let s = side(&self.lhs);
            s.trim_start_matches("\\left(").trim_end_matches("\\right)").to_string()
        } else {
            side(&self.lhs)
        };
        let scale = match self.scale_exponent {
            0 => String::new(),
            1 => "\\frac{1}{2}\\left(".to_string(),
            k => format!("\\frac{{1}}{{2^{{{k}}}}}\\left("),
        };
        let close = if self.scale_exponent == 0 { "" } else { "\\right)" };
        format!("{lhs} = {scale}{}{close}", side(&self.rhs))
    }
}

/// `|lhs - rhs|` with theta-nulls evaluated at `tau`.
pub fn verify_identity<T: Real>(id: &Identity, tau: &RiemannMatrix<T>, cfg: &EvalConfig) -> Result<Residual> {
    if tau.genus() != id.genus {
        return Err(Error::GenusMismatch {
            expected: id.genus,
            found: tau.genus(),
        });
    }
    id.residual_with(&NullGrid::compute(tau, 2, cfg)?)
}
