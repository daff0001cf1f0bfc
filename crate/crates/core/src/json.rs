//! Serialization helpers shared by the report types.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serializer;

/// Writes an integer as a JSON number when it fits in 128 bits, otherwise as
/// a decimal string.
pub fn serialize_bigint<S: Serializer>(n: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    if let Some(small) = n.to_i64() {
        serializer.serialize_i64(small)
    } else if let Some(wide) = n.to_i128() {
        serializer.serialize_i128(wide)
    } else {
        serializer.serialize_str(&n.to_string())
    }
}

pub fn serialize_bigint_slice<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&Big(v))?;
    }
    seq.end()
}

/// Borrowed wrapper giving a `BigInt` the number-or-string encoding.
pub struct Big<'a>(pub &'a BigInt);

impl serde::Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_bigint(self.0, serializer)
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types always serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_are_numbers_and_huge_values_are_strings() {
        let small = BigInt::from(-42);
        assert_eq!(serde_json::to_string(&Big(&small)).unwrap(), "-42");
        let wide = BigInt::from(i64::MAX) * 4;
        assert_eq!(
            serde_json::to_string(&Big(&wide)).unwrap(),
            (i128::from(i64::MAX) * 4).to_string()
        );
        let huge: BigInt = BigInt::from(10).pow(50);
        assert_eq!(serde_json::to_string(&Big(&huge)).unwrap(), format!("\"{huge}\""));
    }
}
