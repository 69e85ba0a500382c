//! Rank and type `(m, n)` of subgroups of half periods.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::HalfChar;
use crate::error::{Error, Result};

/// Order `2^rank`; `m` is the dimension of the radical of the pairing, `2n` its rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SubgroupType {
    pub rank: usize,
    pub m: usize,
    pub n: usize,
}

/// Every element of the subgroup generated by `generators`, in code order.
pub fn span(generators: &[HalfChar]) -> Result<Vec<HalfChar>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let genus = first.genus();
    if let Some(bad) = generators.iter().find(|m| m.genus() != genus) {
        return Err(Error::IncompatibleCharacteristics(format!(
            "generator {bad} is not of genus {genus}"
        )));
    }
    let mut out = BTreeSet::from([HalfChar::zero(genus)]);
    for &v in generators {
        if !out.contains(&v) {
            let shifted: Vec<_> = out.iter().map(|m| m.xor(v)).collect();
            out.extend(shifted);
        }
    }
    Ok(out.into_iter().collect())
}

/// Row-reduces codes over GF(2), keeping independent vectors.
fn basis(vectors: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut pivots: Vec<u32> = Vec::new();
    let mut kept = Vec::new();
    for v in vectors {
        let mut r = v;
        for &p in &pivots {
            r = r.min(r ^ p);
        }
        if r != 0 {
            pivots.push(r);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
            kept.push(v);
        }
    }
    kept
}

fn gf2_rank(rows: &[u32]) -> usize {
    basis(rows.iter().copied()).len()
}

/// Rank and type of the subgroup generated by `generators`; the empty list gives the trivial group.
pub fn group_type(generators: &[HalfChar]) -> Result<SubgroupType> {
    let Some(first) = generators.first() else {
        return Ok(SubgroupType { rank: 0, m: 0, n: 0 });
    };
    let genus = first.genus();
    if let Some(bad) = generators.iter().find(|m| m.genus() != genus) {
        return Err(Error::IncompatibleCharacteristics(format!(
            "generator {bad} is not of genus {genus}"
        )));
    }
    let b: Vec<HalfChar> = basis(generators.iter().map(|m| m.code()))
        .into_iter()
        .map(|c| HalfChar::from_code(genus, c))
        .collect();
    let gram: Vec<u32> = b
        .iter()
        .map(|x| {
            b.iter()
                .enumerate()
                .fold(0u32, |row, (j, y)| row | ((x.pair_with(y) as u32) << j))
        })
        .collect();
    let rank = b.len();
    let form_rank = gf2_rank(&gram);
    Ok(SubgroupType {
        rank,
        m: rank - form_rank,
        n: form_rank / 2,
    })
}
