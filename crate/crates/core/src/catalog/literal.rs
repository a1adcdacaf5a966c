//! The `re+imi` complex literal used in argv, JSON and CSV.
//!
//! Accepted forms: `0.3`, `-2.5e-3`, `0.3+0.1i`, `0.3-1e-4i`, `2i`, `-i`.
//! Formatting always writes both parts with Rust's shortest round-trip
//! representation, so `parse(format(z)) == z` bit for bit.

use serde::{Deserialize, Deserializer, Serializer};

use crate::arith::Complex;
use crate::error::{Error, Result};

pub fn format(z: Complex) -> String {
    let sign = if z.im.is_sign_negative() && !z.im.is_nan() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

fn number(s: &str, whole: &str) -> Result<f64> {
    s.parse::<f64>()
        .map_err(|_| Error::InvalidParameter(format!("malformed complex literal {whole:?}")))
}

pub fn parse(s: &str) -> Result<Complex> {
    let t = s.trim();
    let bad = || Error::InvalidParameter(format!("malformed complex literal {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex::new(number(t, s)?, 0.0));
    };
    // split before the last sign that is neither leading nor part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (number(&body[..k], s)?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => number(other, s)?,
    };
    Ok(Complex::new(re, im))
}

pub fn serialize<S: Serializer>(z: &Complex, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format(*z))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Complex, D::Error> {
    let s = String::deserialize(d)?;
    parse(&s).map_err(serde::de::Error::custom)
}

/// Serde adapter for `Option<Complex>`.
pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(z: &Option<Complex>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match z {
            Some(z) => s.serialize_some(&format(*z)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Complex>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Serde adapter for a parameter point.
pub mod point {
    use super::*;
    use crate::catalog::Point;
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(p: &Point, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(p.iter().map(|(k, z)| (k, format(*z))))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Point, D::Error> {
        BTreeMap::<String, String>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| parse(&v).map(|z| (k, z)).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// `a=0.5+0i;x=-0.25+0i`, the compact form used in CSV cells.
pub fn format_point(p: &crate::catalog::Point) -> String {
    p.iter().map(|(k, z)| format!("{k}={}", format(*z))).collect::<Vec<_>>().join(";")
}
