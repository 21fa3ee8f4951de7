//! Exact rationals for δ and every `P(k)/k` ratio.
//!
//! A thin wrapper over `num_rational::BigRational` which keeps values in
//! lowest terms with a positive denominator. Comparison goes through
//! cross-multiplication; no floating point is involved anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// `numerator / denominator`, reduced.
    ///
    /// # Panics
    ///
    /// Panics if `denominator` is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Decimal rendering rounded half away from zero to `places` digits.
    /// Presentation only.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10).pow(places as u32);
        let num = self.numerator() * &scale;
        let den = self.denominator();
        let (q, r) = num.abs().div_rem(den);
        let q = if r * 2 >= *den { q + 1 } else { q };
        let sign = if self.0.is_negative() && !q.is_zero() { "-" } else { "" };
        let digits = q.to_string();
        if places == 0 {
            return format!("{sign}{digits}");
        }
        let padded = format!("{digits:0>width$}", width = places + 1);
        let (int, frac) = padded.split_at(padded.len() - places);
        format!("{sign}{int}.{frac}")
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(n)
    }
}

/// Always `num/den`, integers included.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `num/den` or a bare integer.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || domain(format!("malformed rational {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::new(n, d))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = Rational::new(10, 4);
        assert_eq!(r.numerator(), &BigInt::from(5));
        assert_eq!(r.denominator(), &BigInt::from(2));
        let r = Rational::new(3, -6);
        assert_eq!(r.to_string(), "-1/2");
        assert_eq!(Rational::from(2u64).to_string(), "2/1");
    }

    #[test]
    fn exact_ordering() {
        assert!(Rational::new(40, 13) > Rational::from(3u64));
        assert!(Rational::new(10, 4) < Rational::new(40, 13));
        assert_eq!(Rational::new(10, 5), Rational::from(2u64));
        // Differ beyond f64 precision.
        let big: BigInt = BigInt::from(1u64) << 80usize;
        let a = Rational::new(big.clone(), big.clone() + 1);
        let b = Rational::new(big.clone() + 1, big + 2);
        assert!(a < b);
    }

    #[test]
    fn ceil_floor() {
        assert_eq!(Rational::new(5, 2).ceil(), BigInt::from(3));
        assert_eq!(Rational::new(40, 13).ceil(), BigInt::from(4));
        assert_eq!(Rational::from(2u64).ceil(), BigInt::from(2));
        assert_eq!(Rational::new(5, 2).floor(), BigInt::from(2));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Rational::new(40, 13).to_decimal(6), "3.076923");
        assert_eq!(Rational::new(5, 2).to_decimal(6), "2.500000");
        assert_eq!(Rational::new(2, 3).to_decimal(6), "0.666667");
        assert_eq!(Rational::new(1, 3).to_decimal(0), "0");
        assert_eq!(Rational::new(-1, 8).to_decimal(2), "-0.13");
        assert_eq!(Rational::new(1, 1000).to_decimal(2), "0.00");
    }

    #[test]
    fn parse() {
        assert_eq!("5/2".parse::<Rational>().unwrap(), Rational::new(5, 2));
        assert_eq!("10/4".parse::<Rational>().unwrap(), Rational::new(5, 2));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from(7u64));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn json_is_a_string() {
        let s = serde_json::to_string(&Rational::new(640, 193)).unwrap();
        assert_eq!(s, "\"640/193\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, Rational::new(640, 193));
    }
}
