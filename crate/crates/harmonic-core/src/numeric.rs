//! Exact rational arithmetic and harmonic numbers.
//!
//! Every quantity the crate computes is a [`Rational`]: an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. There is no floating point anywhere in the pipeline, so
//! equality checks downstream are exact.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
///
/// The text form is `p/q` in lowest terms, plain `p` for integers and `0`
/// for zero; [`fmt::Display`] and [`FromStr`] round-trip exactly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`, reduced. Fails on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Exact division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({self})")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason| Error::InvalidRational {
            input: s.to_owned(),
            reason,
        };
        let mut parts = s.splitn(3, '/');
        let numer = parts
            .next()
            .filter(|p| !p.is_empty())
            .and_then(|p| BigInt::from_str(p).ok())
            .ok_or_else(|| invalid("expected an integer numerator"))?;
        let denom = match parts.next() {
            None => BigInt::one(),
            Some(p) => BigInt::from_str(p)
                .ok()
                .ok_or_else(|| invalid("expected an integer denominator"))?,
        };
        if parts.next().is_some() {
            return Err(invalid("too many `/` separators"));
        }
        if denom.is_zero() {
            return Err(invalid("denominator is zero"));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like integer division; use `checked_div` to
// get an error instead.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self == &Rational::from_integer(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.partial_cmp(&Rational::from_integer(*other))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

// Memo table for H_1..H_n; verification sweeps reuse the same prefix
// heavily. Concurrent reads, serialized extension.
static HARMONIC: LazyLock<RwLock<Vec<Rational>>> =
    LazyLock::new(|| RwLock::new(vec![Rational::zero()]));

/// The n-th harmonic number `H_n = 1 + 1/2 + ... + 1/n`, exactly.
///
/// `H_0 = 0` (empty sum).
pub fn harmonic_number(n: usize) -> Rational {
    {
        let cache = HARMONIC.read().expect("harmonic cache poisoned");
        if n < cache.len() {
            return cache[n].clone();
        }
    }
    let mut cache = HARMONIC.write().expect("harmonic cache poisoned");
    while cache.len() <= n {
        let k = cache.len();
        let term = Rational::new(1, k as i64).expect("k >= 1");
        let next = &cache[k - 1] + term;
        cache.push(next);
    }
    cache[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().expect("test literal")
    }

    #[test]
    fn harmonic_base_cases() {
        assert_eq!(harmonic_number(0), Rational::zero());
        assert_eq!(harmonic_number(1), Rational::one());
        assert_eq!(harmonic_number(4), q("25/12"));
    }

    #[test]
    fn harmonic_difference_is_reciprocal() {
        for n in 1..=80usize {
            let diff = harmonic_number(n) - harmonic_number(n - 1);
            assert_eq!(diff, Rational::new(1, n as i64).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn harmonic_strictly_increasing() {
        let mut prev = harmonic_number(0);
        for n in 1..=60usize {
            let cur = harmonic_number(n);
            assert!(cur > prev, "H_{n} should exceed H_{}", n - 1);
            prev = cur;
        }
    }

    #[test]
    fn field_ops() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("10/3").checked_div(&q("5")).unwrap(), q("2/3"));
        assert!(q("29/42") < q("5/6"));
        assert_eq!(q("1/2") * q("2/3"), q("1/3"));
        assert_eq!(q("1/2") - q("3/4"), q("-1/4"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = Rational::one().checked_div(&Rational::zero()).unwrap_err();
        assert!(matches!(err, Error::DivisionByZero));
        assert!(matches!(Rational::new(1, 0), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_canonical_form() {
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("5/1").to_string(), "5");
        assert_eq!(q("0/7").to_string(), "0");
        assert_eq!(q("3/-6").to_string(), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "a", "1/", "/2", "1/0", "1/2/3", "1.5"] {
            assert!(bad.parse::<Rational>().is_err(), "accepted {bad:?}");
        }
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in -1_000_000i64..1_000_000, q in 1i64..1_000_000) {
            let x = Rational::new(p, q).unwrap();
            let back: Rational = x.to_string().parse().unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn reduction_is_idempotent(p in -10_000i64..10_000, q in 1i64..10_000) {
            let x = Rational::new(p, q).unwrap();
            let again = Rational::new(x.numer().clone(), x.denom().clone()).unwrap();
            prop_assert_eq!(&again, &x);
            prop_assert!(x.denom() > &num::bigint::BigInt::from(0));
        }
    }
}
