//! Exact scalar fields.
//!
//! Every algorithm in the crate is written against [`Field`], which is
//! implemented for `num_rational::Ratio<T>` over any signed integer type.
//! Equality is always exact; there is no tolerance anywhere. Floating-point
//! types deliberately do not implement the trait.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// An exact field of characteristic zero.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// Parses `a`, `-a`, or `a/b` (with `b` nonzero).
    fn parse(s: &str) -> Option<Self>;

    /// Renders as `num/den` even when the denominator is one.
    fn to_fraction_string(&self) -> String;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + FromPrimitive
        + FromStr
        + Debug
        + Display
        + Hash
        + Send
        + Sync
        + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer out of range for scalar type"))
    }

    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = T::from_str(num).ok()?;
        let den = T::from_str(den).ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Ratio::new(num, den))
    }

    fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = Ratio<BigInt>;

    #[test]
    fn parse_forms() {
        assert_eq!(Q::parse("3").unwrap(), Q::from_int(3));
        assert_eq!(Q::parse("-6/4").unwrap(), Q::from_frac(-3, 2));
        assert_eq!(Q::parse(" 0/7 ").unwrap(), Q::zero());
        assert!(Q::parse("1/0").is_none());
        assert!(Q::parse("x").is_none());
        assert!(Q::parse("").is_none());
    }

    #[test]
    fn always_reduced_with_positive_denominator() {
        let q = Q::parse("4/-6").unwrap();
        assert_eq!(q.to_fraction_string(), "-2/3");
        assert_eq!(Q::from_int(5).to_fraction_string(), "5/1");
    }

    #[test]
    fn machine_width_ratio_is_a_field_too() {
        let a = Ratio::<i64>::from_frac(1, 3);
        assert_eq!(a + a + a, Ratio::<i64>::one());
    }
}
