//! Arbitrary-precision rational scalars.
//!
//! All arithmetic in the crate happens over [`Rat`]. Values are kept in
//! lowest terms with a positive denominator by `num-rational`, and they are
//! written out as `"p/q"` strings wherever they cross a text boundary.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

/// Exact rational number.
pub type Rat = BigRational;

/// Builds `n/d` from machine integers. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical text form: always `num/den`, e.g. `3/1`, `-1/2`, `0/1`.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Compact text form: `3`, `-1/2`.
pub fn format_rat_short(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_rat(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal `{}`", self.0)
    }
}

impl std::error::Error for ParseRatError {}

/// Parses `n`, `-n`, `n/d` or `-n/d` (whitespace around the parts allowed).
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let err = || ParseRatError(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(n, d))
}

/// Square root of a rational, if it is the square of a rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Integer fifth root of a rational, if exact.
pub fn rat_nth_root(r: &Rat, n: u32) -> Option<Rat> {
    let neg = r.is_negative();
    if neg && n % 2 == 0 {
        return None;
    }
    let num = r.numer().abs().nth_root(n);
    let den = r.denom().nth_root(n);
    let cand = Rat::new(if neg { -num } else { num }, den);
    if num_traits::pow(cand.clone(), n as usize) == *r {
        Some(cand)
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Scales a vector of rationals to coprime integers whose first nonzero entry
/// is positive. The zero vector is returned unchanged.
pub fn primitive_integer_vector(values: &[Rat]) -> Vec<BigInt> {
    let den = common_denominator(values);
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|r| (r * Rat::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    let sign_flip = ints.iter().find(|v| !v.is_zero()).map_or(false, |v| v.is_negative());
    for v in &mut ints {
        *v = &*v / &g;
        if sign_flip {
            *v = -&*v;
        }
    }
    ints
}

/// Serde adapter writing a [`Rat`] as a `"p/q"` string.
pub mod serde_rat {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let text = RatLiteral::deserialize(d)?;
        text.into_rat().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rat>`.
pub mod serde_rat_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rat(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let raw = Vec::<RatLiteral>::deserialize(d)?;
        raw.into_iter()
            .map(|t| t.into_rat().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// A rational as it may appear in input JSON: `"p/q"` or a bare integer.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RatLiteral {
    Text(String),
    Int(i64),
}

impl RatLiteral {
    pub fn into_rat(self) -> Result<Rat, ParseRatError> {
        match self {
            RatLiteral::Text(s) => parse_rat(&s),
            RatLiteral::Int(n) => Ok(int(n)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat(" 7 ").unwrap(), int(7));
        assert_eq!(format_rat(&int(3)), "3/1");
        assert_eq!(format_rat(&rat(2, -4)), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-1, 1)), None);
        assert_eq!(rat_nth_root(&rat(-32, 243), 5), Some(rat(-2, 3)));
        assert_eq!(rat_nth_root(&rat(3, 1), 5), None);
    }

    #[test]
    fn primitive_vectors() {
        let v = primitive_integer_vector(&[rat(0, 1), rat(-1, 2), rat(3, 4)]);
        assert_eq!(v, vec![BigInt::from(0), BigInt::from(2), BigInt::from(-3)]);
    }
}
