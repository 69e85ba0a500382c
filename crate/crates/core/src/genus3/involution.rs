//! Involution witnesses: a rank-two subgroup of quarter periods sitting, up to a
//! half-period shift, inside the theta-null divisor.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::require_genus_three;
use crate::characteristics::Characteristic;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::theta::VanishingProbe;

/// Data attached to a candidate involution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvolutionWitness {
    pub f1: Characteristic,
    pub f2: Characteristic,
    /// Half period `p` with `theta[p + h](0) = 0` for every `h` in the quarter group.
    pub offset: Characteristic,
    /// `2 <f1, f2>`, four half periods.
    pub half_group: Vec<Characteristic>,
    /// `<f1, f2>`, sixteen points.
    pub quarter_group: Vec<Characteristic>,
}

impl InvolutionWitness {
    /// The twelve elements of exact order four.
    pub fn order_four(&self) -> Vec<Characteristic> {
        self.quarter_group.iter().filter(|c| c.order() == 4).cloned().collect()
    }
}

fn check_quarter(c: &Characteristic) -> Result<()> {
    require_genus_three(c.genus())?;
    if c.order() != 4 {
        return Err(Error::InvalidGroup(format!("{c} is not a quarter period")));
    }
    Ok(())
}

/// `(2<f1, f2>, <f1, f2>)` for quarter periods generating a copy of `C4 x C4`.
pub fn involution_groups(
    f1: &Characteristic,
    f2: &Characteristic,
) -> Result<(Vec<Characteristic>, Vec<Characteristic>)> {
    check_quarter(f1)?;
    check_quarter(f2)?;
    let mut quarter = BTreeSet::new();
    for i in 0..4 {
        for j in 0..4 {
            quarter.insert(f1.scale(i).add(&f2.scale(j))?);
        }
    }
    if quarter.len() != 16 {
        return Err(Error::InvalidGroup(format!(
            "<{f1}> and <{f2}> intersect nontrivially"
        )));
    }
    let half: BTreeSet<_> = quarter.iter().map(|c| c.scale(2)).collect();
    Ok((half.into_iter().collect(), quarter.into_iter().collect()))
}

/// Half periods `p` such that `p + <f1, f2>` lies in `vanishing`.
pub(crate) fn coset_offsets<'v>(
    quarter_group: &[Characteristic],
    half_candidates: impl IntoIterator<Item = &'v Characteristic>,
    vanishing: &BTreeSet<Characteristic>,
) -> Vec<Characteristic> {
    half_candidates
        .into_iter()
        .filter(|p| {
            quarter_group
                .iter()
                .all(|h| p.add(h).is_ok_and(|x| vanishing.contains(&x)))
        })
        .cloned()
        .collect()
}

/// Verifies numerically that `<f1, f2>` shifted by some half period consists of theta-nulls.
pub fn build_involution_witness<T: Real>(
    f1: &Characteristic,
    f2: &Characteristic,
    probe: &VanishingProbe<'_, T>,
) -> Result<InvolutionWitness> {
    require_genus_three(probe.tau().genus())?;
    let (half_group, quarter_group) = involution_groups(f1, f2)?;
    let halves = crate::characteristics::enumerate_chars(3, 2)?;
    for p in &halves {
        let mut all = true;
        for h in &quarter_group {
            if !probe.order(&p.add(h)?)?.vanishes() {
                all = false;
                break;
            }
        }
        if all {
            return Ok(InvolutionWitness {
                f1: f1.clone(),
                f2: f2.clone(),
                offset: p.clone(),
                half_group,
                quarter_group,
            });
        }
    }
    Err(Error::ThetaNullTestFailed(format!(
        "no half-period translate of <{f1}, {f2}> consists of theta-nulls"
    )))
}

/// Two involutions commute when their half-period groups share exactly one nonzero point.
pub fn commuting_involutions(w1: &InvolutionWitness, w2: &InvolutionWitness) -> bool {
    commuting_half_groups(&w1.half_group, &w2.half_group)
}

/// As [`commuting_involutions`], on the half-period groups alone (zero may be omitted).
pub fn commuting_half_groups(j1: &[Characteristic], j2: &[Characteristic]) -> bool {
    let a: BTreeSet<_> = j1.iter().filter(|c| !c.is_zero()).collect();
    j2.iter().filter(|c| !c.is_zero() && a.contains(c)).count() == 1
}
