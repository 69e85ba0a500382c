//! Göpel groups (isotropic subgroups of the half-period group) and their cosets.

use std::collections::BTreeSet;

use serde::Serialize;

use super::HalfChar;
use crate::error::{Error, Result};

/// Largest genus for which groups are enumerated exhaustively.
pub const GOEPEL_GENUS_LIMIT: usize = 3;

/// A subgroup of `2^r` pairwise syzygetic half characteristics.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GoepelGroup {
    genus: usize,
    rank: usize,
    elements: Vec<HalfChar>,
}

impl GoepelGroup {
    /// Validates closure, pairwise syzygy and cardinality.
    pub fn from_elements(elements: impl IntoIterator<Item = HalfChar>) -> Result<Self> {
        let set: BTreeSet<HalfChar> = elements.into_iter().collect();
        let first = *set
            .iter()
            .next()
            .ok_or_else(|| Error::InvalidGroup("no elements".into()))?;
        let genus = first.genus();
        if set.iter().any(|m| m.genus() != genus) {
            return Err(Error::InvalidGroup("elements of different genus".into()));
        }
        if !set.len().is_power_of_two() {
            return Err(Error::InvalidGroup(format!("order {} is not a power of two", set.len())));
        }
        let rank = set.len().trailing_zeros() as usize;
        if rank > genus {
            return Err(Error::InvalidGroup(format!("rank {rank} exceeds genus {genus}")));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&a.xor(*b)) {
                    return Err(Error::InvalidGroup(format!("{a} + {b} is missing")));
                }
                if a.pair_with(b) != 0 {
                    return Err(Error::InvalidGroup(format!("{a} and {b} are azygetic")));
                }
            }
        }
        Ok(Self {
            genus,
            rank,
            elements: set.into_iter().collect(),
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Elements in ascending code order; the first is always zero.
    pub fn elements(&self) -> &[HalfChar] {
        &self.elements
    }

    pub fn contains(&self, m: &HalfChar) -> bool {
        self.elements.binary_search(m).is_ok()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SystemTag {
    AllEven,
    AllOdd,
    Mixed,
}

/// A coset `m + G` of a Göpel group.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GoepelSystem {
    pub base: GoepelGroup,
    /// Smallest element of the coset.
    pub representative: HalfChar,
    pub tag: SystemTag,
}

impl GoepelSystem {
    pub fn elements(&self) -> impl Iterator<Item = HalfChar> + '_ {
        self.base.elements.iter().map(|a| a.xor(self.representative))
    }
}

/// Number of Göpel groups of order `2^r` in genus `g`, by the closed form.
pub fn goepel_group_count(genus: usize, rank: usize) -> u64 {
    let num: u64 = (0..rank).map(|i| (1u64 << (2 * genus - 2 * i)) - 1).product();
    let den: u64 = (1..=rank).map(|i| (1u64 << i) - 1).product();
    num / den
}

/// All Göpel groups of order `2^r` in genus `g`, ordered by their sorted element codes.
pub fn enumerate_goepel_groups(genus: usize, rank: usize) -> Result<Vec<GoepelGroup>> {
    if genus == 0 || genus > GOEPEL_GENUS_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "Göpel enumeration supports genus 1..={GOEPEL_GENUS_LIMIT}, got {genus}"
        )));
    }
    if rank > genus {
        return Err(Error::InvalidConfig(format!("rank {rank} exceeds genus {genus}")));
    }
    let mut level: BTreeSet<Vec<HalfChar>> = BTreeSet::from([vec![HalfChar::zero(genus)]]);
    for _ in 0..rank {
        let mut next = BTreeSet::new();
        for group in &level {
            for v in HalfChar::all(genus) {
                if group.binary_search(&v).is_ok() || group.iter().any(|a| a.pair_with(&v) != 0) {
                    continue;
                }
                let mut set: BTreeSet<HalfChar> = group.iter().copied().collect();
                set.extend(group.iter().map(|a| a.xor(v)));
                next.insert(set.into_iter().collect::<Vec<_>>());
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|elements| GoepelGroup {
            genus,
            rank,
            elements,
        })
        .collect())
}

/// The `2^{2g-r}` cosets of `group`, ordered by representative.
pub fn goepel_systems(group: &GoepelGroup) -> Vec<GoepelSystem> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for m in HalfChar::all(group.genus) {
        if seen.contains(&m) {
            continue;
        }
        let coset: Vec<HalfChar> = group.elements.iter().map(|a| a.xor(m)).collect();
        let even = coset.iter().filter(|c| c.is_even()).count();
        let tag = match even {
            e if e == coset.len() => SystemTag::AllEven,
            0 => SystemTag::AllOdd,
            _ => SystemTag::Mixed,
        };
        seen.extend(coset);
        out.push(GoepelSystem {
            base: group.clone(),
            representative: m,
            tag,
        });
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct SystemCensus {
    pub all_even: u64,
    pub all_odd: u64,
    pub mixed: u64,
}

impl SystemCensus {
    pub fn of(systems: &[GoepelSystem]) -> Self {
        let mut c = Self::default();
        for s in systems {
            match s.tag {
                SystemTag::AllEven => c.all_even += 1,
                SystemTag::AllOdd => c.all_odd += 1,
                SystemTag::Mixed => c.mixed += 1,
            }
        }
        c
    }

    /// Closed-form census for a group of order `2^r` in genus `g`, with `s = g - r`.
    pub fn predicted(genus: usize, rank: usize) -> Self {
        let s = (genus - rank) as u32;
        let p = |k: u32| 1u64 << k;
        let (all_even, all_odd) = if s == 0 {
            (1, 0)
        } else {
            (p(s - 1) * (p(s) + 1), p(s - 1) * (p(s) - 1))
        };
        Self {
            all_even,
            all_odd,
            mixed: p(2 * s) * (p(rank as u32) - 1),
        }
    }
}

/// Census of the cosets of `group`.
pub fn system_census(group: &GoepelGroup) -> SystemCensus {
    SystemCensus::of(&goepel_systems(group))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characteristics::triple_pairing;

    #[test]
    fn closed_form_values() {
        assert_eq!(goepel_group_count(1, 1), 3);
        assert_eq!(goepel_group_count(2, 1), 15);
        assert_eq!(goepel_group_count(2, 2), 15);
        assert_eq!(goepel_group_count(3, 3), 135);
    }

    #[test]
    fn enumeration_matches_closed_form() {
        for g in 1..=3 {
            for r in 0..=g {
                let groups = enumerate_goepel_groups(g, r).unwrap();
                assert_eq!(groups.len() as u64, goepel_group_count(g, r), "g={g} r={r}");
                for grp in &groups {
                    let again = GoepelGroup::from_elements(grp.elements().iter().copied()).unwrap();
                    assert_eq!(&again, grp);
                    assert_eq!(grp.elements().len(), 1 << r);
                }
            }
        }
    }

    #[test]
    fn genus_one_brute_force() {
        // every nonzero half characteristic generates a Göpel group of order 2
        let groups = enumerate_goepel_groups(1, 1).unwrap();
        let gens: Vec<u32> = groups.iter().map(|g| g.elements()[1].code()).collect();
        assert_eq!(gens, vec![1, 2, 3]);
    }

    #[test]
    fn guards() {
        assert!(matches!(enumerate_goepel_groups(4, 1), Err(Error::GuardExceeded(_))));
        assert!(enumerate_goepel_groups(2, 3).is_err());
    }

    #[test]
    fn census_examples() {
        assert_eq!(
            SystemCensus::predicted(2, 2),
            SystemCensus { all_even: 1, all_odd: 0, mixed: 3 }
        );
        assert_eq!(
            SystemCensus::predicted(2, 1),
            SystemCensus { all_even: 3, all_odd: 1, mixed: 4 }
        );
    }

    #[test]
    fn census_matches_for_every_group() {
        for g in 1..=3 {
            for r in 0..=g {
                let want = SystemCensus::predicted(g, r);
                for grp in enumerate_goepel_groups(g, r).unwrap() {
                    let systems = goepel_systems(&grp);
                    assert_eq!(systems.len(), 1 << (2 * g - r));
                    assert_eq!(SystemCensus::of(&systems), want, "g={g} r={r}");
                    for s in systems.iter().filter(|s| s.tag == SystemTag::Mixed) {
                        let even = s.elements().filter(|m| m.is_even()).count();
                        assert_eq!(2 * even, 1 << r);
                    }
                }
            }
        }
    }

    #[test]
    fn three_members_of_a_system_are_syzygetic() {
        for grp in enumerate_goepel_groups(2, 2).unwrap() {
            for s in goepel_systems(&grp) {
                let el: Vec<_> = s.elements().collect();
                for &a in &el {
                    for &b in &el {
                        for &c in &el {
                            assert_eq!(triple_pairing(a, b, c).unwrap(), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn from_elements_rejects_azygetic_sets() {
        let a: HalfChar = "1/0".parse().unwrap();
        let b: HalfChar = "0/1".parse().unwrap();
        let z = HalfChar::zero(1);
        let err = GoepelGroup::from_elements([z, a, b, a.xor(b)]).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup(_)));
    }
}
