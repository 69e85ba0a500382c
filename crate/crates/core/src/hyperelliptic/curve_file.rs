//! Curve files: `{"genus": g, "branch_points": [x, {"re": x, "im": y}, ...]}`.

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::BranchSet;
use crate::scalar::Real;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Real(f64),
    Complex { re: f64, im: f64 },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveRepr {
    genus: usize,
    branch_points: Vec<PointRepr>,
}

impl<T: Real> Serialize for BranchSet<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let branch_points = self
            .points()
            .iter()
            .map(|p| {
                let (re, im) = (p.re.to_f64().unwrap(), p.im.to_f64().unwrap());
                if im == 0.0 {
                    PointRepr::Real(re)
                } else {
                    PointRepr::Complex { re, im }
                }
            })
            .collect();
        CurveRepr {
            genus: self.genus(),
            branch_points,
        }
        .serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for BranchSet<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CurveRepr::deserialize(d)?;
        if repr.branch_points.len() != 2 * repr.genus + 1 {
            return Err(D::Error::custom(format!(
                "genus {} needs {} branch points, got {}",
                repr.genus,
                2 * repr.genus + 1,
                repr.branch_points.len()
            )));
        }
        let points = repr
            .branch_points
            .into_iter()
            .map(|p| match p {
                PointRepr::Real(x) => Complex::new(T::lit(x), T::zero()),
                PointRepr::Complex { re, im } => Complex::new(T::lit(re), T::lit(im)),
            })
            .collect();
        BranchSet::new(points).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_and_complex_points() {
        let b: BranchSet<f64> =
            serde_json::from_str(r#"{"genus":1,"branch_points":[0,1.5,{"re":2,"im":0.5}]}"#).unwrap();
        assert_eq!(b.genus(), 1);
        assert_eq!(b.point(3), Complex::new(2.0, 0.5));
        let back: BranchSet<f64> = serde_json::from_str(&serde_json::to_string(&b).unwrap()).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn genus_must_match_count() {
        assert!(serde_json::from_str::<BranchSet<f64>>(r#"{"genus":2,"branch_points":[0,1,2]}"#).is_err());
        assert!(serde_json::from_str::<BranchSet<f64>>(r#"{"genus":1,"branch_points":[0,0,2]}"#).is_err());
    }
}
