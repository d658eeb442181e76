//! Fixed nine-decimal float rendering shared by every report format.

use serde::Serializer;
use serde_json::value::RawValue;

pub const DECIMALS: usize = 9;

/// `x` with exactly nine decimals; negative zero prints as zero.
pub fn fmt9(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.DECIMALS$}")
}

/// serde helper: emits the float as a JSON number with nine decimals.
pub fn fixed9<S: Serializer>(x: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    if !x.is_finite() {
        return serializer.serialize_none();
    }
    let raw = RawValue::from_string(fmt9(*x)).map_err(serde::ser::Error::custom)?;
    serde::Serialize::serialize(&raw, serializer)
}

pub fn fixed9_vec<S: Serializer>(xs: &[f64], serializer: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&Fixed9(*x))?;
    }
    seq.end()
}

/// Wrapper that serializes through [`fixed9`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fixed9(pub f64);

impl serde::Serialize for Fixed9 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        fixed9(&self.0, serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_decimals() {
        assert_eq!(fmt9(1.0), "1.000000000");
        assert_eq!(fmt9(-0.0), "0.000000000");
        assert_eq!(fmt9(-0.25230479513), "-0.252304795");
    }

    #[test]
    fn json_keeps_fixed_digits() {
        #[derive(serde::Serialize)]
        struct S {
            #[serde(serialize_with = "fixed9")]
            x: f64,
            #[serde(serialize_with = "fixed9_vec")]
            v: Vec<f64>,
        }
        let s = S {
            x: 0.5,
            v: vec![1.0, 2.25],
        };
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"x":0.500000000,"v":[1.000000000,2.250000000]}"#
        );
    }
}
