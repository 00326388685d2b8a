//! JSON helpers shared by every serialized output.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// A float that serializes with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F17(pub f64);

impl F17 {
    pub fn format(x: f64) -> String {
        if x.is_finite() {
            format!("{x:.16e}")
        } else {
            "null".to_string()
        }
    }
}

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(F17::format(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

/// `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexPair(pub F17, pub F17);

impl From<num_complex::Complex64> for ComplexPair {
    fn from(z: num_complex::Complex64) -> Self {
        ComplexPair(F17(z.re), F17(z.im))
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        let s = serde_json::to_string(&F17(std::f64::consts::FRAC_PI_2)).unwrap();
        assert_eq!(s, "1.5707963267948966e0");
        let back: f64 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, std::f64::consts::FRAC_PI_2);
        assert_eq!(serde_json::to_string(&F17(-0.125)).unwrap(), "-1.2500000000000000e-1");
        assert_eq!(serde_json::to_string(&ComplexPair(F17(1.0), F17(0.0))).unwrap(), "[1.0000000000000000e0,0.0000000000000000e0]");
    }
}
