//! Exact rational numbers used for orbifold Euler characteristics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A rational number kept in lowest terms with a positive denominator.
///
/// Displays as `p/q`, always including the denominator (`2/1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        ExactRational(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    /// Reduces `numerator / denominator` in fixed width before promoting.
    pub fn from_i128_ratio(numerator: i128, denominator: i128) -> Self {
        assert!(denominator != 0, "zero denominator");
        let g = num_integer::gcd(numerator, denominator);
        let sign = if denominator < 0 { -1 } else { 1 };
        let (n, d) = (sign * numerator / g, sign * denominator / g);
        ExactRational(BigRational::new_raw(n.into(), d.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
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

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }

    /// `1/self`; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(ExactRational(self.0.recip()))
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        ExactRational(&self.0 * BigRational::from_integer(k.into()))
    }

    /// `1 - 1/order`, the defect of a cone point or twice that of a corner.
    pub(crate) fn defect(order: u32) -> Self {
        ExactRational(BigRational::one() - BigRational::new(1.into(), order.into()))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {0:?}: expected p/q with q > 0")]
pub struct ParseRationalError(String);

impl FromStr for ExactRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if !q.is_positive() {
            return Err(err());
        }
        Ok(ExactRational(BigRational::new(p, q)))
    }
}

impl serde::Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for ExactRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> Self {
        ExactRational(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactRational> for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &'a ExactRational) -> Self {
        ExactRational(self.0 + &rhs.0)
    }
}

impl Sub for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: Self) -> Self {
        ExactRational(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a ExactRational> for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: &'a ExactRational) -> Self {
        ExactRational(self.0 - &rhs.0)
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> Self {
        ExactRational(self.0 * rhs.0)
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> Self {
        ExactRational(-self.0)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_display() {
        assert_eq!(ExactRational::new(2, 4).to_string(), "1/2");
        assert_eq!(ExactRational::new(3, -6).to_string(), "-1/2");
        assert_eq!(ExactRational::from_integer(2).to_string(), "2/1");
        assert_eq!(ExactRational::zero().to_string(), "0/1");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["1/30", "-3/2", "0/1", "2/1"] {
            let r: ExactRational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!(
            "4".parse::<ExactRational>().unwrap(),
            ExactRational::from_integer(4)
        );
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("1/-2".parse::<ExactRational>().is_err());
        assert!("x".parse::<ExactRational>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = ExactRational::new(1, 2) + ExactRational::new(1, 3);
        assert_eq!(a, ExactRational::new(5, 6));
        assert_eq!(a.scale(6).to_i64(), Some(5));
        assert_eq!(
            ExactRational::new(1, 30).recip().unwrap().to_i64(),
            Some(30)
        );
        assert!(ExactRational::zero().recip().is_none());
        assert_eq!(ExactRational::defect(3), ExactRational::new(2, 3));
        assert_eq!(
            ExactRational::from_i128_ratio(-10, -4),
            ExactRational::new(5, 2)
        );
        assert_eq!(ExactRational::from_i128_ratio(0, -7), ExactRational::zero());
    }
}
