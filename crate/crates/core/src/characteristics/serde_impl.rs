//! JSON forms: `{"genus","denom","top","bottom"}`, or `"t/b"` digits for half characteristics.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Characteristic, HalfChar};

#[derive(Serialize)]
struct Repr<'a> {
    genus: usize,
    denom: u32,
    top: &'a [u32],
    bottom: &'a [u32],
}

#[derive(Deserialize)]
struct OwnedRepr {
    genus: usize,
    denom: u32,
    top: Vec<i64>,
    bottom: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Wire {
    Compact(String),
    Full(OwnedRepr),
}

impl Serialize for Characteristic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            genus: self.genus,
            denom: self.denom,
            top: &self.top,
            bottom: &self.bottom,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Characteristic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Wire::deserialize(d)? {
            Wire::Compact(s) => Characteristic::parse_compact(&s, 2).map_err(D::Error::custom),
            Wire::Full(r) => {
                if r.top.iter().chain(&r.bottom).any(|&x| x < 0 || x >= r.denom as i64) {
                    return Err(D::Error::custom(format!(
                        "entries must lie in [0, {})",
                        r.denom
                    )));
                }
                Characteristic::new(r.genus, r.denom, &r.top, &r.bottom).map_err(D::Error::custom)
            }
        }
    }
}

impl Serialize for HalfChar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Characteristic::from_half(*self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfChar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let c = Characteristic::deserialize(d)?;
        c.to_half()
            .ok_or_else(|| D::Error::custom(format!("{c} is not a half characteristic")))
    }
}
