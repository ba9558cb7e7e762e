//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision exact rational.
pub type Q = BigRational;

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qu(n: u64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `base^exp` for a nonnegative exponent, with `0^0 = 1`.
pub fn pow(base: &Q, exp: u64) -> Q {
    let mut acc = Q::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

/// `1 / 2^k`.
pub fn half_pow(k: u64) -> Q {
    pow(&q(1, 2), k)
}

/// Formats as `p/q` in lowest terms, sign carried on `p`. Integers keep the `/1`.
pub fn fmt(x: &Q) -> String {
    // BigRational is always kept reduced with a positive denominator.
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q` or a bare integer `p`. Rejects a zero or signed denominator.
pub fn parse(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = n
        .parse()
        .map_err(|_| format!("invalid rational numerator in {s:?}"))?;
    let denom: BigInt = match d {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(format!("sign must be on the numerator in {s:?}"));
            }
            d.parse()
                .map_err(|_| format!("invalid rational denominator in {s:?}"))?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Q::new(numer, denom))
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

/// Serde adapter: a single rational as a `"p/q"` string.
pub mod serde_q {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: a list of rationals as `"p/q"` strings.
pub mod serde_q_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&fmt(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod serde_q_map {
    use super::*;
    use std::collections::BTreeMap;

    pub fn serialize<K: Serialize + Ord, S: Serializer>(m: &BTreeMap<K, Q>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k, fmt(v))))
    }

    pub fn deserialize<'de, K, D>(d: D) -> Result<BTreeMap<K, Q>, D::Error>
    where
        K: Deserialize<'de> + Ord,
        D: Deserializer<'de>,
    {
        let raw = BTreeMap::<K, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, s)| parse(&s).map(|v| (k, v)).map_err(serde::de::Error::custom))
            .collect()
    }
}
