//! Serde adapters encoding `BigInt` fields as plain JSON integers.
//!
//! serde_json's `arbitrary_precision` feature carries the full digit string
//! through `serde_json::Number`, so values never pass through a fixed-width
//! integer or a float. Non-integer numeric tokens are rejected on input.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

pub fn serialize<S: Serializer>(value: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
    let number: serde_json::Number =
        serde_json::from_str(&value.to_string()).map_err(serde::ser::Error::custom)?;
    number.serialize(ser)
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigInt, D::Error> {
    let number = serde_json::Number::deserialize(de)?;
    BigInt::from_str(&number.to_string())
        .map_err(|_| D::Error::custom(format!("expected an integer, got {number}")))
}

/// Same encoding for `Option<BigInt>`, with `None` as JSON null.
pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<BigInt>, ser: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => super::serialize(v, ser),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<BigInt>, D::Error> {
        let number = Option::<serde_json::Number>::deserialize(de)?;
        match number {
            None => Ok(None),
            Some(n) => BigInt::from_str(&n.to_string())
                .map(Some)
                .map_err(|_| D::Error::custom(format!("expected an integer, got {n}"))),
        }
    }
}
