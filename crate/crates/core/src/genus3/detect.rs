//! Case-by-case detection of automorphism groups from vanishing theta-nulls.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::involution::{coset_offsets, involution_groups, InvolutionWitness};
use super::{is_hyperelliptic, require_genus_three, vanishing_periods, PeriodPoint, GENUS};
use crate::characteristics::{group_type, weil_exponent, Characteristic, HalfChar, SubgroupType};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::theta::{EvalConfig, RiemannMatrix, VanishThresholds, VanishingOrder, VanishingProbe};

/// Witnesses kept per case; the count keeps running past this.
pub const WITNESS_CAP: usize = 64;

/// Groups whose embedding into the automorphism group is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseId {
    C2,
    V4Hyperelliptic,
    V4NonHyperelliptic,
    C3,
    C2Cubed,
    S3,
    D4,
    S4,
    C4SquaredS3,
    L32,
}

impl CaseId {
    pub const ALL: [CaseId; 10] = [
        CaseId::C2,
        CaseId::V4Hyperelliptic,
        CaseId::V4NonHyperelliptic,
        CaseId::C3,
        CaseId::C2Cubed,
        CaseId::S3,
        CaseId::D4,
        CaseId::S4,
        CaseId::C4SquaredS3,
        CaseId::L32,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::C2 => "c2",
            CaseId::V4Hyperelliptic => "v4_hyperelliptic",
            CaseId::V4NonHyperelliptic => "v4_non_hyperelliptic",
            CaseId::C3 => "c3",
            CaseId::C2Cubed => "c2_cubed",
            CaseId::S3 => "s3",
            CaseId::D4 => "d4",
            CaseId::S4 => "s4",
            CaseId::C4SquaredS3 => "c4_squared_s3",
            CaseId::L32 => "l3_2",
        }
    }

    /// Group-theoretic label for tables.
    pub fn label(self) -> &'static str {
        match self {
            CaseId::C2 => "C2",
            CaseId::V4Hyperelliptic => "V4 (hyperelliptic)",
            CaseId::V4NonHyperelliptic => "V4 (non-hyperelliptic)",
            CaseId::C3 => "C3",
            CaseId::C2Cubed => "C2^3",
            CaseId::S3 => "S3",
            CaseId::D4 => "D4",
            CaseId::S4 => "S4",
            CaseId::C4SquaredS3 => "C4^2 x| S3",
            CaseId::L32 => "L3(2)",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .trim()
            .to_ascii_lowercase()
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect();
        let found = match key.as_str() {
            "c2" => CaseId::C2,
            "v4hyperelliptic" | "v4h" => CaseId::V4Hyperelliptic,
            "v4nonhyperelliptic" | "v4nh" => CaseId::V4NonHyperelliptic,
            "c3" => CaseId::C3,
            "c2cubed" | "c23" => CaseId::C2Cubed,
            "s3" => CaseId::S3,
            "d4" => CaseId::D4,
            "s4" => CaseId::S4,
            "c4squareds3" | "c42s3" | "c42xs3" => CaseId::C4SquaredS3,
            "l32" => CaseId::L32,
            _ => return Err(Error::Parse(format!("unknown case `{s}`"))),
        };
        Ok(found)
    }
}

/// Periods realising one instance of a case.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub points: Vec<Characteristic>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub half_period: Option<Characteristic>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub group_types: Vec<SubgroupType>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: CaseId,
    pub detected: bool,
    pub witness_count: usize,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CaseReport {
    fn new(case: CaseId) -> Self {
        Self {
            case,
            detected: false,
            witness_count: 0,
            witnesses: Vec::new(),
            note: None,
        }
    }

    fn push(&mut self, w: Witness) {
        self.detected = true;
        self.witness_count += 1;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(w);
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

/// Everything the detector found at one period matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetectionReport {
    pub genus: usize,
    pub thresholds: VanishThresholds,
    pub hyperelliptic: bool,
    pub even_half_vanishers: Vec<Characteristic>,
    pub order_two_half_periods: Vec<Characteristic>,
    pub quarter_vanishers: Vec<PeriodPoint>,
    pub sixth_vanishers: Vec<PeriodPoint>,
    pub cases: Vec<CaseReport>,
    /// Quarter subgroups `<f1, f2> = C4 x C4` with a half-period translate made of theta-nulls.
    pub c2_subgroups: Vec<InvolutionWitness>,
    pub c2_subgroup_count: usize,
    /// Whether the pair criterion and the subgroup criterion for an involution agree.
    pub c2_criteria_agree: bool,
    pub inconsistencies: Vec<String>,
}

impl DetectionReport {
    pub fn case(&self, id: CaseId) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.case == id)
    }

    pub fn detected(&self, id: CaseId) -> bool {
        self.case(id).is_some_and(|c| c.detected)
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }
}

/// Group implications that any correct detection must respect.
pub const IMPLICATIONS: [(CaseId, CaseId); 8] = [
    (CaseId::S4, CaseId::D4),
    (CaseId::D4, CaseId::C2),
    (CaseId::S3, CaseId::C2),
    (CaseId::V4Hyperelliptic, CaseId::C2),
    (CaseId::V4NonHyperelliptic, CaseId::C2),
    (CaseId::C4SquaredS3, CaseId::S4),
    (CaseId::L32, CaseId::S3),
    (CaseId::L32, CaseId::D4),
];

fn half(c: &Characteristic) -> HalfChar {
    c.to_half().expect("half period")
}

fn half_pairing(x: &Characteristic, y: &Characteristic) -> u8 {
    half(x).pair_with(&half(y))
}

/// Vanishing data at one genus-3 period matrix, ready for case queries.
pub struct Detector<'a, T: Real = f64> {
    probe: VanishingProbe<'a, T>,
    halves: Vec<PeriodPoint>,
    quarters: Vec<PeriodPoint>,
    sixths: Vec<PeriodPoint>,
    vanishing: BTreeSet<Characteristic>,
    /// Index pairs `(i, j)`, `i < j`, into `quarters` meeting the involution criterion.
    pairs: Vec<(usize, usize)>,
}

impl<'a, T: Real> Detector<'a, T> {
    pub fn new(tau: &'a RiemannMatrix<T>, thresholds: VanishThresholds, cfg: EvalConfig) -> Result<Self> {
        require_genus_three(tau.genus())?;
        let probe = VanishingProbe::new(tau, thresholds, cfg)?;
        let at_four = vanishing_periods(&probe, 4)?;
        let sixths: Vec<PeriodPoint> = vanishing_periods(&probe, 6)?
            .into_iter()
            .filter(|p| p.characteristic.order() == 6)
            .collect();
        let vanishing = at_four.iter().map(|p| p.characteristic.clone()).collect();
        let (halves, quarters): (Vec<_>, Vec<_>) =
            at_four.into_iter().partition(|p| p.characteristic.order() <= 2);
        let mut d = Self {
            probe,
            halves,
            quarters,
            sixths,
            vanishing,
            pairs: Vec::new(),
        };
        d.pairs = d.involution_pairs();
        Ok(d)
    }

    pub fn probe(&self) -> &VanishingProbe<'a, T> {
        &self.probe
    }

    pub fn half_vanishers(&self) -> &[PeriodPoint] {
        &self.halves
    }

    pub fn quarter_vanishers(&self) -> &[PeriodPoint] {
        &self.quarters
    }

    pub fn sixth_vanishers(&self) -> &[PeriodPoint] {
        &self.sixths
    }

    pub fn is_hyperelliptic(&self) -> bool {
        is_hyperelliptic(&self.halves)
    }

    fn q(&self, i: usize) -> &Characteristic {
        &self.quarters[i].characteristic
    }

    /// Half periods where the theta function vanishes to order at least two.
    pub fn order_two_half_periods(&self) -> Vec<Characteristic> {
        self.halves
            .iter()
            .filter(|p| p.order == VanishingOrder::AtLeastTwo)
            .map(|p| p.characteristic.clone())
            .collect()
    }

    fn involution_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.quarters.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if is_involution_pair(self.q(i), self.q(j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Quarter vanishers grouped by their double.
    fn by_double(&self, only_simple: bool) -> BTreeMap<Characteristic, Vec<usize>> {
        let mut m: BTreeMap<Characteristic, Vec<usize>> = BTreeMap::new();
        for (i, p) in self.quarters.iter().enumerate() {
            if !only_simple || p.order == VanishingOrder::One {
                m.entry(p.characteristic.scale(2)).or_default().push(i);
            }
        }
        m
    }

    fn pair_generators(&self, (i, j): (usize, usize)) -> [HalfChar; 2] {
        let (f1, f2) = (self.q(i), self.q(j));
        [half(&f1.scale(2)), half(&f1.add(f2).expect("same genus"))]
    }

    fn pair_type(&self, a: (usize, usize), b: (usize, usize)) -> SubgroupType {
        let g: Vec<HalfChar> = self.pair_generators(a).into_iter().chain(self.pair_generators(b)).collect();
        group_type(&g).expect("same genus")
    }

    fn pair_points(&self, pairs: &[(usize, usize)]) -> Vec<Characteristic> {
        pairs
            .iter()
            .flat_map(|&(i, j)| [self.q(i).clone(), self.q(j).clone()])
            .collect()
    }

    pub fn detect(&self, case: CaseId) -> CaseReport {
        match case {
            CaseId::C2 => self.case_c2(),
            CaseId::V4Hyperelliptic => self.case_v4_hyperelliptic(),
            CaseId::V4NonHyperelliptic => self.case_v4_non_hyperelliptic(),
            CaseId::C3 => self.case_c3(),
            CaseId::C2Cubed => self.case_c2_cubed(),
            CaseId::S3 => self.case_two_pairs(CaseId::S3, SubgroupType { rank: 4, m: 0, n: 2 }),
            CaseId::D4 => self.case_two_pairs(CaseId::D4, SubgroupType { rank: 4, m: 2, n: 1 }),
            CaseId::S4 => self.case_s4(),
            CaseId::C4SquaredS3 => self.case_three_pairs(CaseId::C4SquaredS3, SubgroupType { rank: 4, m: 2, n: 1 }),
            CaseId::L32 => self.case_three_pairs(CaseId::L32, SubgroupType { rank: 4, m: 0, n: 2 }),
        }
    }

    fn case_c2(&self) -> CaseReport {
        let mut r = CaseReport::new(CaseId::C2);
        for &(i, j) in &self.pairs {
            r.push(Witness {
                points: vec![self.q(i).clone(), self.q(j).clone()],
                half_period: None,
                group_types: Vec::new(),
            });
        }
        r
    }

    fn case_v4_hyperelliptic(&self) -> CaseReport {
        let mut r = CaseReport::new(CaseId::V4Hyperelliptic);
        if !self.is_hyperelliptic() {
            return r.with_note("not hyperelliptic");
        }
        for idx in self.by_double(false).values() {
            for_triples(idx, |a, b, c| {
                r.push(Witness {
                    points: vec![self.q(a).clone(), self.q(b).clone(), self.q(c).clone()],
                    half_period: None,
                    group_types: Vec::new(),
                })
            });
        }
        r
    }

    fn case_v4_non_hyperelliptic(&self) -> CaseReport {
        let mut r = CaseReport::new(CaseId::V4NonHyperelliptic);
        if self.is_hyperelliptic() {
            return r.with_note("hyperelliptic");
        }
        for p in self.order_two_half_periods() {
            for &(i, j) in &self.pairs {
                r.push(Witness {
                    points: vec![self.q(i).clone(), self.q(j).clone()],
                    half_period: Some(p.clone()),
                    group_types: Vec::new(),
                });
            }
        }
        r
    }

    fn case_c3(&self) -> CaseReport {
        let mut r = CaseReport::new(CaseId::C3);
        let n = self.sixths.len();
        for i in 0..n {
            for j in i + 1..n {
                let (f1, f2) = (&self.sixths[i].characteristic, &self.sixths[j].characteristic);
                if f1.scale(3) != f2.scale(3) || *f2 == f1.negate() {
                    continue;
                }
                let sum = f1.add(f2).expect("same genus");
                if weil_exponent(&f1.scale(2), &sum, 3) == Ok(0) {
                    r.push(Witness {
                        points: vec![f1.clone(), f2.clone()],
                        half_period: None,
                        group_types: Vec::new(),
                    });
                }
            }
        }
        r
    }

    fn case_c2_cubed(&self) -> CaseReport {
        let mut r = CaseReport::new(CaseId::C2Cubed)
            .with_note("necessary condition only; a positive result does not certify the subgroup");
        let groups = self.by_double(true);
        for p in self.order_two_half_periods() {
            for idx in groups.values() {
                for_triples(idx, |a, b, c| {
                    r.push(Witness {
                        points: vec![self.q(a).clone(), self.q(b).clone(), self.q(c).clone()],
                        half_period: Some(p.clone()),
                        group_types: Vec::new(),
                    })
                });
            }
        }
        r
    }

    fn case_two_pairs(&self, case: CaseId, want: SubgroupType) -> CaseReport {
        let mut r = CaseReport::new(case);
        for (k, &a) in self.pairs.iter().enumerate() {
            for &b in &self.pairs[k + 1..] {
                if self.q(a.0).scale(2) == self.q(b.0).scale(2) {
                    continue;
                }
                let t = self.pair_type(a, b);
                if t == want {
                    r.push(Witness {
                        points: self.pair_points(&[a, b]),
                        half_period: None,
                        group_types: vec![t],
                    });
                }
            }
        }
        r
    }

    fn case_s4(&self) -> CaseReport {
        let mut r = CaseReport::new(CaseId::S4);
        let (t21, t02) = (SubgroupType { rank: 4, m: 2, n: 1 }, SubgroupType { rank: 4, m: 0, n: 2 });
        // partners of each h1 under the involution criterion
        let mut partners: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(i, j) in &self.pairs {
            partners.entry(i).or_default().push(j);
            partners.entry(j).or_default().push(i);
        }
        for &f in &self.pairs {
            for (&h1, hs) in &partners {
                for (k, &h2) in hs.iter().enumerate() {
                    for &h3 in &hs[k + 1..] {
                        let (x, y) = (self.pair_type(f, (h1, h2)), self.pair_type(f, (h1, h3)));
                        let matched = if x == t21 && y == t02 {
                            Some((h2, h3, x, y))
                        } else if y == t21 && x == t02 {
                            Some((h3, h2, y, x))
                        } else {
                            None
                        };
                        if let Some((h2, h3, x, y)) = matched {
                            r.push(Witness {
                                points: vec![
                                    self.q(f.0).clone(),
                                    self.q(f.1).clone(),
                                    self.q(h1).clone(),
                                    self.q(h2).clone(),
                                    self.q(h3).clone(),
                                ],
                                half_period: None,
                                group_types: vec![x, y],
                            });
                        }
                    }
                }
            }
        }
        r
    }

    fn case_three_pairs(&self, case: CaseId, want_m: SubgroupType) -> CaseReport {
        let mut r = CaseReport::new(case);
        let t21 = SubgroupType { rank: 4, m: 2, n: 1 };
        for (k, &a) in self.pairs.iter().enumerate() {
            for &b in &self.pairs[k + 1..] {
                if self.pair_type(a, b) != t21 {
                    continue;
                }
                let h_gens: Vec<HalfChar> =
                    self.pair_generators(a).into_iter().chain(self.pair_generators(b)).collect();
                let radical = radical(&h_gens);
                for &c in &self.pairs {
                    if c == a || c == b {
                        continue;
                    }
                    let c_gens = self.pair_generators(c);
                    let all: Vec<HalfChar> = h_gens.iter().copied().chain(c_gens).collect();
                    let full = group_type(&all).expect("same genus");
                    if full.rank != 2 * GENUS {
                        continue;
                    }
                    let m_gens: Vec<HalfChar> = radical.iter().copied().chain(c_gens).collect();
                    let m = group_type(&m_gens).expect("same genus");
                    if m == want_m {
                        r.push(Witness {
                            points: self.pair_points(&[a, b, c]),
                            half_period: None,
                            group_types: vec![t21, full, m],
                        });
                    }
                }
            }
        }
        r
    }

    /// Searches for `C4 x C4` subgroups of quarter periods with a half-period
    /// translate inside the theta-null divisor. Returns the stored witnesses and the total count.
    pub fn c2_subgroups(&self) -> (Vec<InvolutionWitness>, usize) {
        let offsets: Vec<&Characteristic> = self.halves.iter().map(|p| &p.characteristic).collect();
        let mut seen: BTreeSet<Vec<Characteristic>> = BTreeSet::new();
        let mut stored = Vec::new();
        for p in &offsets {
            let shifted: Vec<Characteristic> = self
                .vanishing
                .iter()
                .map(|v| v.add(p).expect("same genus"))
                .filter(|c| c.order() == 4)
                .collect();
            for (k, f1) in shifted.iter().enumerate() {
                for f2 in &shifted[k + 1..] {
                    if f1.scale(2) == f2.scale(2) {
                        continue;
                    }
                    let Ok((half_group, quarter_group)) = involution_groups(f1, f2) else {
                        continue;
                    };
                    if seen.contains(&quarter_group) {
                        continue;
                    }
                    if coset_offsets(&quarter_group, [*p], &self.vanishing).is_empty() {
                        continue;
                    }
                    seen.insert(quarter_group.clone());
                    if stored.len() < WITNESS_CAP {
                        stored.push(InvolutionWitness {
                            f1: f1.clone(),
                            f2: f2.clone(),
                            offset: (*p).clone(),
                            half_group,
                            quarter_group,
                        });
                    }
                }
            }
        }
        (stored, seen.len())
    }

    /// Full report, including any violated implications.
    pub fn report(&self) -> DetectionReport {
        let cases: Vec<CaseReport> = CaseId::ALL.iter().map(|&c| self.detect(c)).collect();
        let (c2_subgroups, c2_subgroup_count) = self.c2_subgroups();
        let detected = |id: CaseId| cases.iter().any(|c| c.case == id && c.detected);
        let mut inconsistencies: Vec<String> = IMPLICATIONS
            .iter()
            .filter(|(a, b)| detected(*a) && !detected(*b))
            .map(|(a, b)| format!("{} detected without {}", a.label(), b.label()))
            .collect();
        let c2_criteria_agree = detected(CaseId::C2) == (c2_subgroup_count > 0);
        if !c2_criteria_agree {
            inconsistencies.push(format!(
                "involution criteria disagree: {} pairs, {} subgroups",
                cases[0].witness_count, c2_subgroup_count
            ));
        }
        DetectionReport {
            genus: GENUS,
            thresholds: self.probe.thresholds(),
            hyperelliptic: self.is_hyperelliptic(),
            even_half_vanishers: self
                .halves
                .iter()
                .filter(|p| half(&p.characteristic).is_even())
                .map(|p| p.characteristic.clone())
                .collect(),
            order_two_half_periods: self.order_two_half_periods(),
            quarter_vanishers: self.quarters.clone(),
            sixth_vanishers: self.sixths.clone(),
            cases,
            c2_subgroups,
            c2_subgroup_count,
            c2_criteria_agree,
            inconsistencies,
        }
    }
}

/// `f1 != +-f2`, `2 f1 = 2 f2`, and `2 f1` syzygetic to `f1 + f2`.
pub fn is_involution_pair(f1: &Characteristic, f2: &Characteristic) -> bool {
    if f1.order() != 4 || f2.order() != 4 || f1 == f2 || *f2 == f1.negate() {
        return false;
    }
    let d = f1.scale(2);
    if d != f2.scale(2) {
        return false;
    }
    half_pairing(&d, &f1.add(f2).expect("same genus")) == 0
}

/// Elements of the span of `gens` pairing trivially with the whole span, as a basis-free list.
fn radical(gens: &[HalfChar]) -> Vec<HalfChar> {
    let span = crate::characteristics::span(gens).expect("same genus");
    span.iter()
        .copied()
        .filter(|y| !y.is_zero() && span.iter().all(|x| x.pair_with(y) == 0))
        .collect()
}

fn for_triples(idx: &[usize], mut f: impl FnMut(usize, usize, usize)) {
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            for c in b + 1..idx.len() {
                f(idx[a], idx[b], idx[c]);
            }
        }
    }
}

/// Runs one case at `tau`.
pub fn detect_case<T: Real>(
    tau: &RiemannMatrix<T>,
    case: CaseId,
    thresholds: VanishThresholds,
    cfg: EvalConfig,
) -> Result<CaseReport> {
    Ok(Detector::new(tau, thresholds, cfg)?.detect(case))
}

/// Runs every case; a report violating a known group implication is an error.
pub fn detect_all<T: Real>(
    tau: &RiemannMatrix<T>,
    thresholds: VanishThresholds,
    cfg: EvalConfig,
) -> Result<DetectionReport> {
    let report = Detector::new(tau, thresholds, cfg)?.report();
    if !report.is_consistent() {
        return Err(Error::InconsistentDetection(report.inconsistencies.join("; ")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_tau, rng};

    fn c(denom: u32, top: [i64; 3], bottom: [i64; 3]) -> Characteristic {
        Characteristic::new(3, denom, &top, &bottom).unwrap()
    }

    #[test]
    fn case_names_round_trip() {
        for id in CaseId::ALL {
            assert_eq!(id.name().parse::<CaseId>().unwrap(), id);
            assert_eq!(id.label().parse::<CaseId>().unwrap(), id);
            let js = serde_json::to_string(&id).unwrap();
            assert_eq!(serde_json::from_str::<CaseId>(&js).unwrap(), id);
        }
        assert!("a5".parse::<CaseId>().is_err());
    }

    #[test]
    fn involution_pair_rule() {
        let f1 = c(4, [1, 0, 0], [0, 0, 0]);
        assert!(is_involution_pair(&f1, &c(4, [1, 2, 0], [0, 0, 0])));
        // azygetic shift
        assert!(!is_involution_pair(&f1, &c(4, [1, 0, 0], [2, 0, 0])));
        // negatives and different doubles
        assert!(!is_involution_pair(&f1, &f1.negate()));
        assert!(!is_involution_pair(&f1, &f1));
        assert!(!is_involution_pair(&f1, &c(4, [0, 1, 0], [0, 0, 0])));
        assert!(!is_involution_pair(&f1, &c(2, [1, 0, 0], [0, 0, 0])));
    }

    #[test]
    fn radical_of_degenerate_group() {
        let g = [
            HalfChar::from_code(3, 0b100_000),
            HalfChar::from_code(3, 0b010_000),
            HalfChar::from_code(3, 0b001_000),
            HalfChar::from_code(3, 0b000_001),
        ];
        assert_eq!(group_type(&g).unwrap(), SubgroupType { rank: 4, m: 2, n: 1 });
        let r = radical(&g);
        assert_eq!(r.len(), 3);
        assert_eq!(group_type(&r).unwrap().rank, 2);
    }

    #[test]
    fn generic_matrix_has_no_automorphisms() {
        let t: RiemannMatrix<f64> = random_tau(3, &mut rng(11)).unwrap();
        let r = detect_all(&t, VanishThresholds::default(), EvalConfig::default()).unwrap();
        assert!(!r.hyperelliptic);
        assert!(r.quarter_vanishers.is_empty());
        assert!(r.cases.iter().all(|c| !c.detected && c.witness_count == 0));
        assert_eq!(r.c2_subgroup_count, 0);
        assert!(r.c2_criteria_agree);
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<DetectionReport>(&js).unwrap(), r);
    }

    #[test]
    fn rejects_genus_two() {
        let t: RiemannMatrix<f64> = random_tau(2, &mut rng(2)).unwrap();
        assert!(matches!(
            detect_case(&t, CaseId::C2, VanishThresholds::default(), EvalConfig::default()),
            Err(Error::GenusMismatch { .. })
        ));
    }
}
